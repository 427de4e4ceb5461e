#pragma once

#include <optional>

#include "ringdef/eval.hpp"
#include "ringdef/function_ring.hpp"
#include "ringdef/model.hpp"

namespace ringdef {

// Exponent k with x = tau^k, nullopt when there is none. Throws
// std::invalid_argument unless 0 < |tau| < 1 on the host.
std::optional<long> tau_exponent(const Rational& x, const Rational& tau, const HostField& host);

// h(p0) in tau^Z, exactly.
bool oracle_int_times(const Rational& h_p0, const Rational& tau, const HostField& host);
bool oracle_int_times(const Value& h, const SymbolicGermModel& m);

struct ZInterp {
  long sigma_f = 0;
  long sigma_g = 0;
  long sum = 0;           // sigma(fg)
  bool order = false;     // sigma(f) >= sigma(g)
  bool abs_order = false; // |f(p0)| <= |g(p0)|
  bool divides = false;   // f(p0) in g(p0)^Z
};

// Throws std::invalid_argument unless f(p0) and g(p0) are powers of tau.
ZInterp oracle_z_interp(const Rational& f_p0, const Rational& g_p0, const Rational& tau, const HostField& host);

// [phi](h, s) read pointwise: phi(h(x)) in K at every zero x of s. `h` assigns
// the free variables of phi. Each point is evaluated by the scalar model.
Tri pointwise_lift_oracle(const Formula& phi, const FiniteRingModel& m, const std::map<std::string, RingElement>& h,
                          const RingElement& s, const EvalOptions& opt = {});

}  // namespace ringdef
