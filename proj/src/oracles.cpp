#include "ringdef/oracles.hpp"

#include <stdexcept>

namespace ringdef {

std::optional<long> tau_exponent(const Rational& x, const Rational& tau, const HostField& host) {
  if (tau == 0 || host.compare_abs(tau, Rational(1)) >= 0)
    throw std::invalid_argument("need 0 < |tau| < 1, got tau = " + to_string(tau) + " on " + host.name());
  if (x == 0) return std::nullopt;
  long k = 0;
  if (host.is_valued()) {
    long vt = *host.val(tau), vx = *host.val(x);
    if (vx % vt != 0) return std::nullopt;
    k = vx / vt;
  } else {
    // |tau|^k = |x| with |tau| < 1
    Rational a = abs(x), t = abs(tau), cur = 1;
    if (a <= 1) {
      while (cur > a) {
        cur *= t;
        ++k;
      }
    } else {
      while (cur < a) {
        cur /= t;
        --k;
      }
    }
    if (cur != a) return std::nullopt;
  }
  if (pow_int(tau, k) != x) return std::nullopt;
  return k;
}

bool oracle_int_times(const Rational& h_p0, const Rational& tau, const HostField& host) {
  return tau_exponent(h_p0, tau, host).has_value();
}

bool oracle_int_times(const Value& h, const SymbolicGermModel& m) {
  return oracle_int_times(m.at_p0(h), m.tau(), m.host());
}

ZInterp oracle_z_interp(const Rational& f_p0, const Rational& g_p0, const Rational& tau, const HostField& host) {
  auto sf = tau_exponent(f_p0, tau, host), sg = tau_exponent(g_p0, tau, host);
  if (!sf || !sg) throw std::invalid_argument("f(p0) and g(p0) must lie in tau^Z");
  ZInterp z;
  z.sigma_f = *sf;
  z.sigma_g = *sg;
  z.sum = *tau_exponent(Rational(f_p0 * g_p0), tau, host);
  z.order = z.sigma_f >= z.sigma_g;
  z.abs_order = host.abs_le(f_p0, g_p0);
  z.divides = z.sigma_g == 0 ? z.sigma_f == 0 : z.sigma_f % z.sigma_g == 0;
  return z;
}

Tri pointwise_lift_oracle(const Formula& phi, const FiniteRingModel& m, const std::map<std::string, RingElement>& h,
                          const RingElement& s, const EvalOptions& opt) {
  ScalarModel k(m.host());
  Tri out = Tri::True;
  for (auto x : zero_set(s)) {
    Env env;
    for (const auto& [name, f] : h) env[name] = Value{f.values.at(x)};
    auto v = eval_bounded(phi, k, env, opt);
    if (v.value == VerdictKind::Fails) return Tri::False;
    if (v.value == VerdictKind::Unknown) out = Tri::Unknown;
  }
  return out;
}

}  // namespace ringdef
