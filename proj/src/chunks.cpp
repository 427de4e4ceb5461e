#include "ringdef/chunks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ringdef {

PreorderedGroup PreorderedGroup::integers() { return {GroupKind::Integers, HostField::ordered()}; }
PreorderedGroup PreorderedGroup::rationals() { return {GroupKind::Rationals, HostField::ordered()}; }
PreorderedGroup PreorderedGroup::multiplicative(const HostField& host) {
  if (!host.is_valued()) throw std::invalid_argument("multiplicative chunks need a p-adic host");
  return {GroupKind::Multiplicative, host};
}

std::string PreorderedGroup::name() const {
  switch (kind_) {
    case GroupKind::Integers: return "(Z,+,<=)";
    case GroupKind::Rationals: return "(Q,+,<=)";
    case GroupKind::Multiplicative: return "(Q^x,*,<=_O) " + host_.name();
  }
  return "?";
}

bool PreorderedGroup::contains(const Rational& x) const {
  switch (kind_) {
    case GroupKind::Integers: return x.get_den() == 1;
    case GroupKind::Rationals: return true;
    case GroupKind::Multiplicative: return x != 0;
  }
  return false;
}

Rational PreorderedGroup::op(const Rational& a, const Rational& b) const {
  return additive() ? Rational(a + b) : Rational(a * b);
}

Rational PreorderedGroup::identity() const { return additive() ? 0 : 1; }

Rational PreorderedGroup::inverse(const Rational& a) const {
  if (additive()) return -a;
  if (a == 0) throw std::invalid_argument("0 is not in the multiplicative group");
  return 1 / a;
}

bool PreorderedGroup::le(const Rational& a, const Rational& b) const {
  return additive() ? a <= b : host_.abs_le(a, b);
}

bool PreorderedGroup::valid_tau(const Rational& tau) const {
  if (!contains(tau)) return false;
  return additive() ? tau > 0 : host_.abs_lt(tau, 1);
}

ChunkCandidate make_candidate(std::vector<Rational> T, const Rational& tau) {
  std::sort(T.begin(), T.end());
  T.erase(std::unique(T.begin(), T.end()), T.end());
  return {std::move(T), tau};
}

std::string to_string(const ChunkCandidate& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.T.size(); ++i) out += (i ? "," : "") + to_string(c.T[i]);
  return out + "} tau=" + to_string(c.tau);
}

namespace {

bool in_interval(const PreorderedGroup& g, const Rational& x, const Rational& gamma) {
  return g.le(g.inverse(gamma), x) && g.le(x, gamma);
}

// clause 3 cell: xi <= u < xi + tau, or |xi tau| < |u| <= |xi|
bool in_cell(const PreorderedGroup& g, const Rational& xi, const Rational& u, const Rational& tau) {
  if (g.additive()) return g.le(xi, u) && g.lt(u, g.op(xi, tau));
  return g.lt(g.op(xi, tau), u) && g.le(u, xi);
}

std::vector<Rational> clause3_points(const PreorderedGroup& g, const std::vector<Rational>& T, const Rational& tau,
                                     const Rational& gamma) {
  std::vector<Rational> out;
  switch (g.kind()) {
    case GroupKind::Integers: {
      if (gamma < 0) return out;
      if (gamma > 1000000) throw std::length_error("clause 3 interval too large");
      long m = gamma.get_num().get_si();
      for (long u = -m; u <= m; ++u) out.push_back(u);
      return out;
    }
    case GroupKind::Rationals: {
      if (gamma < 0) return out;
      std::set<Rational> cuts{-gamma, gamma};
      for (const auto& xi : T)
        for (const Rational& b : {Rational(xi), Rational(xi + tau)})
          if (-gamma <= b && b <= gamma) cuts.insert(b);
      // the number of cells containing u is constant between consecutive cuts
      std::vector<Rational> sorted(cuts.begin(), cuts.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        out.push_back(sorted[i]);
        if (i + 1 < sorted.size()) out.push_back((sorted[i] + sorted[i + 1]) / 2);
      }
      return out;
    }
    case GroupKind::Multiplicative: {
      long v = *g.host().val(gamma);
      Rational p = static_cast<long>(g.host().prime());
      // only |u| matters to the clause; two units per valuation keep that honest
      for (long e = v; e <= -v; ++e)
        for (const Rational& unit : {Rational(1), Rational(p + 1)}) out.push_back(pow_int(p, e) * unit);
      return out;
    }
  }
  return out;
}

ChunkCheck fail(int clause, std::string detail) { return {false, clause, std::move(detail)}; }

}  // namespace

ChunkCheck is_chunk(const ChunkCandidate& c, const PreorderedGroup& g) {
  std::set<Rational> T(c.T.begin(), c.T.end());
  if (!T.count(c.tau)) throw std::invalid_argument("tau is not in T");
  if (!g.valid_tau(c.tau)) throw std::invalid_argument("tau is not positive in " + g.name());
  for (const auto& a : T)
    if (!g.contains(a)) throw std::invalid_argument(to_string(a) + " is not in " + g.name());

  for (const auto& a : T)
    if (!T.count(g.inverse(a))) return fail(1, "inverse of " + to_string(a) + " missing");
  for (const auto& a : T)
    for (const auto& b : T) {
      Rational s = g.op(a, b);
      if (T.count(s)) continue;
      for (const auto& gamma : T)
        if (in_interval(g, s, gamma))
          return fail(2, to_string(a) + " op " + to_string(b) + " lies in the interval of " + to_string(gamma) +
                             " but not in T");
    }
  for (const auto& gamma : T)
    for (const auto& u : clause3_points(g, c.T, c.tau, gamma)) {
      std::size_t cells = 0;
      for (const auto& xi : T) cells += in_cell(g, xi, u, c.tau);
      if (cells != 1)
        return fail(3, "u=" + to_string(u) + " lies in " + std::to_string(cells) + " cells (gamma=" +
                           to_string(gamma) + ")");
    }
  return {};
}

std::optional<long> classify_finite_chunk(const ChunkCandidate& c, const PreorderedGroup& g) {
  if (!g.valid_tau(c.tau)) return std::nullopt;
  if (std::find(c.T.begin(), c.T.end(), c.tau) == c.T.end()) return std::nullopt;
  for (const auto& a : c.T)
    if (!g.contains(a)) return std::nullopt;
  if (!is_chunk(c, g).ok) return std::nullopt;
  if (c.T.size() % 2 == 0) throw std::logic_error("finite chunk of even size: " + to_string(c));
  long n = static_cast<long>(c.T.size() / 2);
  std::set<Rational> want;
  for (long k = -n; k <= n; ++k)
    want.insert(g.additive() ? Rational(c.tau * k) : pow_int(c.tau, k));
  if (want != std::set<Rational>(c.T.begin(), c.T.end()))
    throw std::logic_error("finite chunk is not a symmetric interval: " + to_string(c));
  return n;
}

ChunkEnumeration enumerate_chunks(long n, const PreorderedGroup& g, const Rational& tau, long max_bound) {
  if (n < 0) throw std::invalid_argument("negative bound");
  if (n > max_bound) throw std::length_error("enumeration bound " + std::to_string(n) + " exceeds " +
                                             std::to_string(max_bound));
  if (!g.valid_tau(tau)) throw std::invalid_argument("tau is not positive in " + g.name());
  std::vector<Rational> others;
  for (long k = -n; k <= n; ++k)
    if (k != 1) others.push_back(g.additive() ? Rational(tau * k) : pow_int(tau, k));
  ChunkEnumeration out;
  const std::size_t total = std::size_t{1} << others.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<Rational> T{tau};
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1) T.push_back(others[i]);
    ChunkCandidate c = make_candidate(std::move(T), tau);
    ++out.examined;
    if (is_chunk(c, g).ok) out.chunks.push_back(std::move(c));
  }
  std::sort(out.chunks.begin(), out.chunks.end(),
            [](const ChunkCandidate& a, const ChunkCandidate& b) { return a.T.size() < b.T.size(); });
  return out;
}

ChunkCandidate to_value_group(const ChunkCandidate& c, const PreorderedGroup& g) {
  if (g.kind() != GroupKind::Multiplicative) throw std::invalid_argument("valuation transport needs the multiplicative group");
  std::vector<Rational> vs;
  for (const auto& t : c.T) vs.push_back(*g.host().val(t));
  ChunkCandidate out = make_candidate(vs, *g.host().val(c.tau));
  if (out.T.size() != c.T.size()) throw std::invalid_argument("valuation is not injective on T");
  return out;
}

}  // namespace ringdef
