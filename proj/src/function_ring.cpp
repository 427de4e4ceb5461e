#include "ringdef/function_ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ringdef {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

PointSetX::PointSetX(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("point set must be nonempty");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw std::invalid_argument("point labels must be distinct");
}

PointSetX PointSetX::numbered(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= n; ++i) l.push_back("x" + std::to_string(i));
  return PointSetX(l);
}

std::optional<std::size_t> PointSetX::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

RingElement RingElement::constant(std::size_t n, const Rational& c) { return {std::vector<Rational>(n, c)}; }

RingElement RingElement::indicator(std::size_t n, std::size_t i) {
  RingElement r = constant(n, 0);
  r.values.at(i) = 1;
  return r;
}

namespace {

void same_size(const RingElement& a, const RingElement& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("ring elements over different point sets");
}

}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
  same_size(*this, o);
  RingElement r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& x : r.values) x = -x;
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
  same_size(*this, o);
  RingElement r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] *= o.values[i];
  return r;
}

std::string RingElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += ringdef::to_string(values[i]);
  }
  return out + ")";
}

std::vector<std::size_t> zero_set(const RingElement& f) {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] == 0) z.push_back(i);
  return z;
}

std::vector<std::string> zero_labels(const PointSetX& x, const RingElement& f) {
  if (f.values.size() != x.size()) throw std::invalid_argument("element does not match the point set");
  std::vector<std::string> out;
  for (auto i : zero_set(f)) out.push_back(x.label(i));
  return out;
}

bool is_unit(const RingElement& f) { return zero_set(f).empty(); }

std::vector<std::size_t> common_zeros(const IdealGens& gens) {
  if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.front().values.size(); ++i) {
    bool all = std::all_of(gens.begin(), gens.end(), [&](const RingElement& f) {
      same_size(f, gens.front());
      return f.values[i] == 0;
    });
    if (all) out.push_back(i);
  }
  return out;
}

bool zero_subset(const RingElement& f, const RingElement& g) {
  same_size(f, g);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] == 0 && g.values[i] != 0) return false;
  return true;
}

RingElement combine(const RingElement& f, const RingElement& g, const UVProvider& provider, const HostField& host) {
  if (!provider.compatible(host)) throw std::invalid_argument(provider.name() + " does not fit host " + host.name());
  same_size(f, g);
  RingElement h = f;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    auto [u, v] = provider.uv(f.values[i], g.values[i]);
    h.values[i] = f.values[i] * u + g.values[i] * v;
  }
  return h;
}

RingElement combine_all(const IdealGens& gens, const UVProvider& provider, const HostField& host) {
  if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator");
  RingElement acc = gens.front();
  for (std::size_t i = 1; i < gens.size(); ++i) acc = combine(acc, gens[i], provider, host);
  return acc;
}

bool jac_oracle(const IdealGens& gens, const RingElement& g) {
  // each maximal ideal containing I is the kernel at a common zero x
  for (auto x : common_zeros(gens))
    if (g.values.at(x) != 0) return false;
  return true;
}

bool zero_set_inclusion(const IdealGens& gens, const RingElement& g) {
  auto common = common_zeros(gens);
  auto zg = zero_set(g);
  return std::includes(zg.begin(), zg.end(), common.begin(), common.end());
}

Tri jac_unit_criterion(const IdealGens& gens, const RingElement& g, const std::vector<RingElement>& pool) {
  auto common = common_zeros(gens);
  if (common.empty()) return Tri::True;  // the ideal is the whole ring
  if (pool.empty()) return Tri::Unknown;
  // 1 + h·g is a unit mod I iff it has no zero among the common zeros
  for (const auto& h : pool) {
    same_size(h, g);
    for (auto x : common)
      if (1 + h.values[x] * g.values[x] == 0) return Tri::False;
  }
  // The pool did not refute. If g vanishes on the common zeros every
  // 1 + h·g is 1 there, so the universal claim holds for all h.
  for (auto x : common)
    if (g.values[x] != 0) return Tri::Unknown;
  return Tri::True;
}

std::vector<RingElement> default_ring_pool(std::size_t n, long lo, long hi) {
  std::vector<RingElement> pool;
  for (long c = lo; c <= hi; ++c) pool.push_back(RingElement::constant(n, c));
  for (std::size_t i = 0; i < n; ++i) pool.push_back(RingElement::indicator(n, i));
  return pool;
}

}  // namespace ringdef
