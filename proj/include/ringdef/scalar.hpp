#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ringdef/host.hpp"
#include "ringdef/poly.hpp"
#include "ringdef/rational.hpp"

namespace ringdef {

// First coordinate reaching the max absolute value, scanning left to right.
// Throws std::invalid_argument on an empty vector.
Rational nu_m(const std::vector<Rational>& x, const HostField& host);

// max_i |x_i| as a value class.
ValueClass norm_class(const std::vector<Rational>& x, const HostField& host);

// Homogeneous binary form of the given degree; coeffs[k] multiplies x^(degree-k) y^k.
struct BinaryForm {
  int degree = 0;
  std::vector<Rational> coeffs;

  Rational eval(const Rational& x, const Rational& y) const;
  std::string to_string() const;
  bool operator==(const BinaryForm& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

// x*u + y*v as a form of degree u.degree + 1.
BinaryForm combine_forms(const BinaryForm& u, const BinaryForm& v);

struct Homogenization {
  BinaryForm q;
  BinaryForm u;
  BinaryForm v;
};

// p must be monic of degree >= 1 with no rational root. The rational root
// theorem is applied, and every value in `candidates` is checked as well.
// Throws std::invalid_argument on a violated precondition.
Homogenization homogenize(const Poly& p, const std::vector<Rational>& candidates = {});

enum class UVRegion { U, V, Z };

struct UVValue {
  Rational u;
  Rational v;
  UVRegion region;
};

// Piecewise pair for a valued field: on |x-y| < |x+y| both equal x+y,
// elsewhere u = x-y and v = y-x.
UVValue uv_valued(const Rational& x, const Rational& y, const HostField& host);

const char* region_name(UVRegion r);

// Supplies (u, v) with x*u(x,y) + y*v(x,y) vanishing only at the origin.
class UVProvider {
 public:
  virtual ~UVProvider() = default;
  virtual std::pair<Rational, Rational> uv(const Rational& x, const Rational& y) const = 0;
  virtual bool compatible(const HostField& host) const = 0;
  virtual std::string name() const = 0;
};

// From a root-free monic polynomial. Valid on any host whose field is Q.
class FormProvider : public UVProvider {
 public:
  explicit FormProvider(Homogenization h) : h_(std::move(h)) {}
  std::pair<Rational, Rational> uv(const Rational& x, const Rational& y) const override;
  bool compatible(const HostField& host) const override;
  std::string name() const override;
  const Homogenization& forms() const { return h_; }

 private:
  Homogenization h_;
};

// uv_valued, bound to one p-adic host.
class ValuedProvider : public UVProvider {
 public:
  explicit ValuedProvider(HostField host);
  std::pair<Rational, Rational> uv(const Rational& x, const Rational& y) const override;
  bool compatible(const HostField& host) const override { return host == host_; }
  std::string name() const override { return "uv-valued(" + host_.name() + ")"; }

 private:
  HostField host_;
};

// x^2 + 1 gives q = x^2 + y^2, u = x, v = y.
std::shared_ptr<const UVProvider> sum_of_squares_provider();

struct Gaussian {
  Rational re;
  Rational im;

  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator*(const Gaussian& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string() const;
};

Gaussian conj(const Gaussian& z);

// x*conj(x) + y*conj(y).
Gaussian norm_form(const Gaussian& x, const Gaussian& y);

}  // namespace ringdef
