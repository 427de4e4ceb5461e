#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringdef/host.hpp"
#include "ringdef/scalar.hpp"

namespace ringdef {

enum class Tri { True, False, Unknown };
const char* tri_name(Tri t);

class PointSetX {
 public:
  // Throws std::invalid_argument if empty or labels repeat.
  explicit PointSetX(std::vector<std::string> labels);
  static PointSetX numbered(std::size_t n);  // x1..xn

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
};

// A function X -> Q, stored in point order.
struct RingElement {
  std::vector<Rational> values;

  static RingElement constant(std::size_t n, const Rational& c);
  // 1 at i, 0 elsewhere.
  static RingElement indicator(std::size_t n, std::size_t i);

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  bool operator==(const RingElement& o) const { return values == o.values; }
  bool operator<(const RingElement& o) const { return values < o.values; }
  std::string to_string() const;
};

using IdealGens = std::vector<RingElement>;

// Indices of the zeros, ascending.
std::vector<std::size_t> zero_set(const RingElement& f);
std::vector<std::string> zero_labels(const PointSetX& x, const RingElement& f);
bool is_unit(const RingElement& f);
// Common zeros of the generators.
std::vector<std::size_t> common_zeros(const IdealGens& gens);
bool zero_subset(const RingElement& f, const RingElement& g);

// f·u(f,g) + g·v(f,g), pointwise. Throws std::invalid_argument when the
// provider does not fit the host.
RingElement combine(const RingElement& f, const RingElement& g, const UVProvider& provider, const HostField& host);
// Left fold of combine over the generators.
RingElement combine_all(const IdealGens& gens, const UVProvider& provider, const HostField& host);

// Membership in the Jacobson radical of the ideal: the maximal ideals of
// Q^X are the kernels of the point evaluations, so g is in the radical iff
// it vanishes at every point where all generators vanish.
bool jac_oracle(const IdealGens& gens, const RingElement& g);
// Direct zero-set inclusion of the common zero set into {g = 0}.
bool zero_set_inclusion(const IdealGens& gens, const RingElement& g);

// For every h in the pool, 1 + h·g must be a unit modulo the ideal.
// Unit modulo I is decided coordinatewise at the common zeros.
Tri jac_unit_criterion(const IdealGens& gens, const RingElement& g, const std::vector<RingElement>& pool);

// Constants in [lo, hi] and the coordinate indicators.
std::vector<RingElement> default_ring_pool(std::size_t n, long lo = -2, long hi = 2);

}  // namespace ringdef
