#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ringdef/rational.hpp"

namespace ringdef {

enum class HostKind { OrderedQ, PAdicQ, GaussianQ };

// |x| for a host field. OrderedQ keeps the usual absolute value, PAdicQ the
// valuation (nullopt is +infinity, i.e. |0|).
struct ValueClass {
  HostKind kind = HostKind::OrderedQ;
  Rational magnitude;
  std::optional<long> val;

  std::string to_string() const;
};

// Negative, zero, positive as |a| <, =, > |b|. Mixing kinds throws.
int compare(const ValueClass& a, const ValueClass& b);
inline bool operator<(const ValueClass& a, const ValueClass& b) { return compare(a, b) < 0; }
inline bool operator<=(const ValueClass& a, const ValueClass& b) { return compare(a, b) <= 0; }
inline bool operator==(const ValueClass& a, const ValueClass& b) { return compare(a, b) == 0; }
ValueClass operator*(const ValueClass& a, const ValueClass& b);

class HostField {
 public:
  static HostField ordered();
  static HostField padic(unsigned long p);
  static HostField gaussian();
  // "ordered-q" or "padic-q:<p>". Throws std::invalid_argument.
  static HostField parse(std::string_view text);

  HostKind kind() const { return kind_; }
  unsigned long prime() const { return prime_; }
  bool is_valued() const { return kind_ == HostKind::PAdicQ; }
  std::string name() const;

  bool in_O(const Rational& x) const;
  ValueClass abs_class(const Rational& x) const;
  int compare_abs(const Rational& a, const Rational& b) const;
  bool abs_le(const Rational& a, const Rational& b) const { return compare_abs(a, b) <= 0; }
  bool abs_lt(const Rational& a, const Rational& b) const { return compare_abs(a, b) < 0; }
  // Valuation for PAdicQ; throws for other kinds.
  std::optional<long> val(const Rational& x) const;

  bool operator==(const HostField& o) const { return kind_ == o.kind_ && prime_ == o.prime_; }
  bool operator!=(const HostField& o) const { return !(*this == o); }

 private:
  HostField(HostKind k, unsigned long p) : kind_(k), prime_(p) {}
  HostKind kind_;
  unsigned long prime_;
};

}  // namespace ringdef
