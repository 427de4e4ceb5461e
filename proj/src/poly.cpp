#include "ringdef/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ringdef {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }
Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

bool Poly::is_monomial() const {
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }) == 1;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Rational> r = coeffs_;
  for (auto& c : r) c = -c;
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(r));
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  static const mpz_class kLimit("1000000000000");
  if (n > kLimit) throw std::length_error("coefficient too large for rational root search");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> Poly::rational_roots() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has every root");
  std::set<Rational> roots;
  // strip x^m
  std::size_t low = 0;
  while (coeffs_[low] == 0) ++low;
  if (low > 0) roots.insert(0);
  std::vector<Rational> rest(coeffs_.begin() + static_cast<long>(low), coeffs_.end());
  Poly q(rest);
  if (q.degree() >= 1) {
    if (q.degree() == 1) {
      roots.insert(-q.coeff(0) / q.coeff(1));
    } else {
      mpz_class lcm = 1;
      for (const auto& c : rest) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
      mpz_class a0 = Rational(rest.front() * lcm).get_num();
      mpz_class an = Rational(rest.back() * lcm).get_num();
      auto ps = positive_divisors(a0);
      auto qs = positive_divisors(an);
      for (const auto& pn : ps)
        for (const auto& qd : qs)
          for (int sign : {1, -1}) {
            Rational cand(sign * pn, qd);
            cand.canonicalize();
            if (q.eval(cand) == 0) roots.insert(cand);
          }
    }
  }
  return {roots.begin(), roots.end()};
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0 || (c != 1 && c != -1)) term = ringdef::to_string(abs(c));
    if (i > 0) {
      if (!term.empty()) term += "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace ringdef
