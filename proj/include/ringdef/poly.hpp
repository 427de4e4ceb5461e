#pragma once

#include <string>
#include <vector>

#include "ringdef/rational.hpp"

namespace ringdef {

// Dense univariate polynomial over Q; coeffs_[i] multiplies x^i, trailing
// zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Single nonzero term a*x^k.
  bool is_monomial() const;

  Rational eval(const Rational& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  // All rational roots, sorted and distinct. Throws std::length_error when the
  // coefficients are too large for divisor enumeration.
  std::vector<Rational> rational_roots() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace ringdef
