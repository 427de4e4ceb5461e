#include "ringdef/scalar.hpp"

#include <stdexcept>

namespace ringdef {

Rational nu_m(const std::vector<Rational>& x, const HostField& host) {
  if (x.empty()) throw std::invalid_argument("nu_m of an empty vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (host.compare_abs(x[i], x[best]) > 0) best = i;
  return x[best];
}

ValueClass norm_class(const std::vector<Rational>& x, const HostField& host) {
  return host.abs_class(nu_m(x, host));
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (int k = 0; k <= degree; ++k) {
    if (coeffs[k] == 0) continue;
    acc += coeffs[k] * pow_int(x, degree - k) * pow_int(y, k);
  }
  return acc;
}

std::string BinaryForm::to_string() const {
  std::string out;
  for (int k = 0; k <= degree; ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    std::string mono;
    auto power = [](const char* var, int e) {
      if (e == 0) return std::string();
      return std::string(var) + (e > 1 ? "^" + std::to_string(e) : "");
    };
    std::string xs = power("x", degree - k), ys = power("y", k);
    mono = xs + (xs.empty() || ys.empty() ? "" : "*") + ys;
    std::string coef = ringdef::to_string(abs(c));
    if (mono.empty()) mono = coef;
    else if (c != 1 && c != -1) mono = coef + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + mono;
    else out += (c < 0 ? " - " : " + ") + mono;
  }
  return out.empty() ? "0" : out;
}

BinaryForm combine_forms(const BinaryForm& u, const BinaryForm& v) {
  if (u.degree != v.degree) throw std::invalid_argument("u and v must share a degree");
  BinaryForm q;
  q.degree = u.degree + 1;
  q.coeffs.assign(q.degree + 1, 0);
  for (int k = 0; k <= u.degree; ++k) {
    q.coeffs[k] += u.coeffs[k];      // x * x^(d-1-k) y^k
    q.coeffs[k + 1] += v.coeffs[k];  // y * x^(d-1-k) y^k
  }
  return q;
}

Homogenization homogenize(const Poly& p, const std::vector<Rational>& candidates) {
  if (p.degree() < 1) throw std::invalid_argument("homogenize needs degree >= 1");
  if (!p.is_monic()) throw std::invalid_argument("homogenize needs a monic polynomial");
  for (const auto& c : candidates)
    if (p.eval(c) == 0) throw std::invalid_argument("polynomial has the root " + to_string(c));
  if (!p.rational_roots().empty())
    throw std::invalid_argument("polynomial has the root " + to_string(p.rational_roots().front()));
  const int d = p.degree();
  Homogenization h;
  h.q.degree = d;
  for (int j = 0; j <= d; ++j) h.q.coeffs.push_back(p.coeff(d - j));
  h.u.degree = d - 1;
  h.u.coeffs.assign(d, 0);
  h.u.coeffs[0] = 1;
  h.v.degree = d - 1;
  for (int k = 0; k < d; ++k) h.v.coeffs.push_back(p.coeff(d - 1 - k));
  return h;
}

UVValue uv_valued(const Rational& x, const Rational& y, const HostField& host) {
  Rational plus = x + y, minus = x - y;
  if (plus == 0 && minus == 0) return {minus, -minus, UVRegion::Z};
  if (host.compare_abs(minus, plus) < 0) return {plus, plus, UVRegion::U};
  return {minus, -minus, UVRegion::V};
}

const char* region_name(UVRegion r) {
  switch (r) {
    case UVRegion::U: return "U";
    case UVRegion::V: return "V";
    case UVRegion::Z: return "Z";
  }
  return "?";
}

std::pair<Rational, Rational> FormProvider::uv(const Rational& x, const Rational& y) const {
  return {h_.u.eval(x, y), h_.v.eval(x, y)};
}

bool FormProvider::compatible(const HostField& host) const {
  return host.kind() == HostKind::OrderedQ || host.kind() == HostKind::PAdicQ;
}

std::string FormProvider::name() const { return "form(" + h_.q.to_string() + ")"; }

ValuedProvider::ValuedProvider(HostField host) : host_(host) {
  if (!host_.is_valued()) throw std::invalid_argument("uv-valued needs a p-adic host");
}

std::pair<Rational, Rational> ValuedProvider::uv(const Rational& x, const Rational& y) const {
  auto r = uv_valued(x, y, host_);
  return {r.u, r.v};
}

std::shared_ptr<const UVProvider> sum_of_squares_provider() {
  static const auto provider =
      std::make_shared<const FormProvider>(homogenize(Poly({Rational(1), Rational(0), Rational(1)})));
  return provider;
}

std::string Gaussian::to_string() const {
  return ringdef::to_string(re) + (im < 0 ? "-" : "+") + ringdef::to_string(abs(im)) + "i";
}

Gaussian conj(const Gaussian& z) { return {z.re, -z.im}; }

Gaussian norm_form(const Gaussian& x, const Gaussian& y) { return x * conj(x) + y * conj(y); }

}  // namespace ringdef
