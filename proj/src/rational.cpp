#include "ringdef/rational.hpp"

#include <stdexcept>

namespace ringdef {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("bad rational literal: " + s);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<long> valuation(const Rational& q, unsigned long p) {
  if (q == 0) return std::nullopt;
  mpz_class prime(p), rest;
  long v = 0;
  v += static_cast<long>(mpz_remove(rest.get_mpz_t(), q.get_num_mpz_t(), prime.get_mpz_t()));
  v -= static_cast<long>(mpz_remove(rest.get_mpz_t(), q.get_den_mpz_t(), prime.get_mpz_t()));
  return v;
}

Rational pow_int(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    return pow_int(Rational(1) / base, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace ringdef
