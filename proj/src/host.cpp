#include "ringdef/host.hpp"

#include <stdexcept>

namespace ringdef {

std::string ValueClass::to_string() const {
  if (kind == HostKind::PAdicQ) return val ? "v=" + std::to_string(*val) : "v=inf";
  return ringdef::to_string(magnitude);
}

int compare(const ValueClass& a, const ValueClass& b) {
  if (a.kind != b.kind) throw std::invalid_argument("value classes of different hosts");
  if (a.kind == HostKind::PAdicQ) {
    // larger valuation means smaller absolute value; +inf is the bottom
    if (!a.val && !b.val) return 0;
    if (!a.val) return -1;
    if (!b.val) return 1;
    if (*a.val == *b.val) return 0;
    return *a.val > *b.val ? -1 : 1;
  }
  return cmp(a.magnitude, b.magnitude);
}

ValueClass operator*(const ValueClass& a, const ValueClass& b) {
  if (a.kind != b.kind) throw std::invalid_argument("value classes of different hosts");
  ValueClass r;
  r.kind = a.kind;
  if (a.kind == HostKind::PAdicQ) {
    if (a.val && b.val) r.val = *a.val + *b.val;
  } else {
    r.magnitude = a.magnitude * b.magnitude;
  }
  return r;
}

HostField HostField::ordered() { return HostField(HostKind::OrderedQ, 0); }

HostField HostField::padic(unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("padic host needs a prime, got " + std::to_string(p));
  return HostField(HostKind::PAdicQ, p);
}

HostField HostField::gaussian() { return HostField(HostKind::GaussianQ, 0); }

HostField HostField::parse(std::string_view text) {
  if (text == "ordered-q") return ordered();
  const std::string_view prefix = "padic-q:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad host: " + std::string(text));
    return padic(std::stoul(digits));
  }
  throw std::invalid_argument("unknown host: " + std::string(text));
}

std::string HostField::name() const {
  switch (kind_) {
    case HostKind::OrderedQ: return "ordered-q";
    case HostKind::PAdicQ: return "padic-q:" + std::to_string(prime_);
    case HostKind::GaussianQ: return "gaussian-q";
  }
  return "?";
}

bool HostField::in_O(const Rational& x) const {
  switch (kind_) {
    case HostKind::OrderedQ: return x >= -1 && x <= 1;
    case HostKind::PAdicQ: {
      auto v = valuation(x, prime_);
      return !v || *v >= 0;
    }
    case HostKind::GaussianQ: break;
  }
  throw std::logic_error("gaussian host has no valuation ring");
}

ValueClass HostField::abs_class(const Rational& x) const {
  ValueClass c;
  c.kind = kind_;
  switch (kind_) {
    case HostKind::OrderedQ: c.magnitude = abs(x); return c;
    case HostKind::PAdicQ: c.val = valuation(x, prime_); return c;
    case HostKind::GaussianQ: break;
  }
  throw std::logic_error("gaussian host has no absolute value");
}

int HostField::compare_abs(const Rational& a, const Rational& b) const {
  return compare(abs_class(a), abs_class(b));
}

std::optional<long> HostField::val(const Rational& x) const {
  if (kind_ != HostKind::PAdicQ) throw std::logic_error("valuation requested on " + name());
  return valuation(x, prime_);
}

}  // namespace ringdef
