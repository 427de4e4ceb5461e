#include "ringdef/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "ringdef/chunks.hpp"

namespace ringdef {

std::string ZeroInfo::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::All: return "all";
    case Kind::Unknown: return "unknown";
    case Kind::Germ: {
      std::string out = "{p0";
      for (auto b : branches) out += ",S" + std::to_string(b + 1);
      return out + "}";
    }
  }
  return "?";
}

ZeroInfo zero_union(const ZeroInfo& a, const ZeroInfo& b) {
  using K = ZeroInfo::Kind;
  if (a.kind == K::All || b.kind == K::All) return ZeroInfo::all();
  if (a.kind == K::Unknown || b.kind == K::Unknown) return ZeroInfo::unknown();
  if (a.kind == K::Empty) return b;
  if (b.kind == K::Empty) return a;
  std::set<std::size_t> u = a.branches;
  u.insert(b.branches.begin(), b.branches.end());
  return ZeroInfo::germ(std::move(u));
}

ZeroInfo zero_intersection(const ZeroInfo& a, const ZeroInfo& b) {
  using K = ZeroInfo::Kind;
  if (a.kind == K::Empty || b.kind == K::Empty) return ZeroInfo::empty();
  if (a.kind == K::Unknown || b.kind == K::Unknown) return ZeroInfo::unknown();
  if (a.kind == K::All) return b;
  if (b.kind == K::All) return a;
  std::set<std::size_t> i;
  std::set_intersection(a.branches.begin(), a.branches.end(), b.branches.begin(), b.branches.end(),
                        std::inserter(i, i.begin()));
  return ZeroInfo::germ(std::move(i));
}

std::optional<bool> zero_subset(const ZeroInfo& a, const ZeroInfo& b) {
  using K = ZeroInfo::Kind;
  if (a.kind == K::Empty) return true;
  if (b.kind == K::All) return true;
  if (a.kind == K::Unknown || b.kind == K::Unknown) return std::nullopt;
  if (b.kind == K::Empty) return false;
  if (a.kind == K::All) return false;
  return std::includes(b.branches.begin(), b.branches.end(), a.branches.begin(), a.branches.end());
}

const char* macro_name(MacroKind k) {
  switch (k) {
    case MacroKind::Sq: return "sq";
    case MacroKind::Unit: return "unit";
    case MacroKind::Point: return "point";
    case MacroKind::Inter: return "inter";
    case MacroKind::LeqS: return "leq-s";
    case MacroKind::LtS: return "lt-s";
    case MacroKind::PrecS: return "prec-s";
    case MacroKind::PrecStrictS: return "prec-strict-s";
    case MacroKind::StrongOrder: return "strong-order";
    case MacroKind::Limit: return "limit";
    case MacroKind::LimBChTimes: return "limbch-times";
    case MacroKind::LimBChPlus: return "limbch-plus";
  }
  return "?";
}

Tri Model::in_O(const Value&) const { throw std::invalid_argument("in-O is not an atom of " + describe()); }
Tri Model::in_B(const Value&) const { throw std::invalid_argument("in-B is not an atom of " + describe()); }
std::optional<Tri> Model::macro(MacroKind, const std::vector<Value>&) const { return std::nullopt; }

namespace {

Tri tri(bool b) { return b ? Tri::True : Tri::False; }

}  // namespace

// ---- scalar field

std::string ScalarModel::describe() const { return "field " + host_.name(); }

Tri ScalarModel::eq(const Value& a, const Value& b) const { return tri(a.scalar() == b.scalar()); }

Tri ScalarModel::in_O(const Value& a) const { return tri(host_.in_O(a.scalar())); }

std::vector<Value> ScalarModel::pool() const {
  std::vector<Value> out;
  for (long c = -2; c <= 2; ++c) out.push_back({Rational(c)});
  out.push_back({Rational(1, 2)});
  out.push_back({Rational(3)});
  return out;
}

// ---- finite ring

std::string FiniteRingModel::describe() const {
  return "K^X " + host_.name() + " |X|=" + std::to_string(size());
}

Value FiniteRingModel::element(std::vector<Rational> values) const {
  if (values.size() != size()) throw std::invalid_argument("element has the wrong number of values");
  return {RingElement{std::move(values)}};
}

Tri FiniteRingModel::eq(const Value& a, const Value& b) const { return tri(a.ring() == b.ring()); }

Tri FiniteRingModel::in_B(const Value& a) const {
  for (const auto& v : a.ring().values)
    if (!host_.in_O(v)) return Tri::False;
  return Tri::True;
}

std::vector<Value> FiniteRingModel::zero_set_representatives() const {
  std::vector<Value> out;
  const std::size_t n = size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? 0 : 1;
    out.push_back({RingElement{std::move(v)}});
  }
  return out;
}

std::vector<Value> FiniteRingModel::pool() const {
  std::vector<Value> out;
  for (auto& e : default_ring_pool(size())) out.push_back({std::move(e)});
  return out;
}

std::optional<Tri> FiniteRingModel::macro(MacroKind k, const std::vector<Value>& args) const {
  auto Z = [&](std::size_t i) {
    auto z = zero_set(args[i].ring());
    return std::set<std::size_t>(z.begin(), z.end());
  };
  auto at_zeros = [&](std::size_t s, auto pred) {
    for (auto x : Z(s))
      if (!pred(args[0].ring().values[x], args[1].ring().values[x])) return Tri::False;
    return Tri::True;
  };
  switch (k) {
    case MacroKind::Sq: return tri(zero_subset(args[0].ring(), args[1].ring()));
    case MacroKind::Unit: return tri(Z(0).empty());
    case MacroKind::Point: return tri(Z(0).size() == 1);
    case MacroKind::Inter: {
      auto f = Z(0), g = Z(1);
      std::set<std::size_t> both;
      std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::inserter(both, both.begin()));
      return tri(both == Z(2));
    }
    case MacroKind::LeqS:
      return at_zeros(2, [&](const Rational& a, const Rational& b) { return host_.abs_le(a, b); });
    case MacroKind::LtS:
      return at_zeros(2, [&](const Rational& a, const Rational& b) { return host_.abs_lt(a, b); });
    // every nonnegative rational is a sum of four rational squares
    case MacroKind::PrecS: return at_zeros(2, [](const Rational& a, const Rational& b) { return a <= b; });
    case MacroKind::PrecStrictS: return at_zeros(2, [](const Rational& a, const Rational& b) { return a < b; });
    case MacroKind::StrongOrder: {
      // g ⋐ f: for all h, Z(f) ⊆ Z(g) ∪ Z(h) implies Z(g) ⊆ Z(h)
      auto f = Z(0), g = Z(1);
      const std::size_t n = size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        auto in_h = [&](std::size_t x) { return (mask >> x & 1) != 0; };
        bool premise = std::all_of(f.begin(), f.end(), [&](std::size_t x) { return g.count(x) || in_h(x); });
        bool concl = std::all_of(g.begin(), g.end(), in_h);
        if (premise && !concl) return Tri::False;
      }
      return Tri::True;
    }
    default: return std::nullopt;
  }
}

// ---- symbolic germs

SymbolicGermModel::SymbolicGermModel(GermWitness w, Rational tau, int depth)
    : Model(w.host), w_(std::move(w)), tau_(std::move(tau)), plan_(make_sample_plan(w_, depth)) {}

std::string SymbolicGermModel::describe() const {
  return "germs " + host_.name() + " at " + point_string(w_.p0) + " k=" + std::to_string(w_.k) +
         " tau=" + to_string(tau_);
}

Value SymbolicGermModel::function(FnRef fn, ZeroInfo zero) const {
  auto g = std::make_shared<GermFn>();
  g->fn = std::move(fn);
  g->zero = std::move(zero);
  return {GermRef(g)};
}

Value SymbolicGermModel::constant(const Rational& c) const {
  auto g = std::make_shared<GermFn>();
  g->fn = make_fn(to_string(c), w_.p0.size(), host_, e_const(c));
  g->zero = c == 0 ? ZeroInfo::all() : ZeroInfo::empty();
  g->constant = c;
  return {GermRef(g)};
}

Value SymbolicGermModel::add(const Value& a, const Value& b) const {
  const auto &x = a.germ(), &y = b.germ();
  if (x->constant && y->constant) return constant(*x->constant + *y->constant);
  if (x->constant && *x->constant == 0) return b;
  if (y->constant && *y->constant == 0) return a;
  const std::size_t m = w_.p0.size();
  return function(make_fn("(" + x->fn->name() + "+" + y->fn->name() + ")", m, host_,
                          e_add(e_apply(x->fn, m), e_apply(y->fn, m))),
                  ZeroInfo::unknown());
}

Value SymbolicGermModel::neg(const Value& a) const {
  const auto& x = a.germ();
  if (x->constant) return constant(-*x->constant);
  const std::size_t m = w_.p0.size();
  return function(make_fn("-" + x->fn->name(), m, host_, e_neg(e_apply(x->fn, m))), x->zero);
}

Value SymbolicGermModel::mul(const Value& a, const Value& b) const {
  const auto &x = a.germ(), &y = b.germ();
  if (x->constant && y->constant) return constant(*x->constant * *y->constant);
  if ((x->constant && *x->constant == 0) || (y->constant && *y->constant == 0)) return constant(0);
  if (x->constant && *x->constant == 1) return b;
  if (y->constant && *y->constant == 1) return a;
  const std::size_t m = w_.p0.size();
  return function(make_fn(x->fn->name() + "*" + y->fn->name(), m, host_,
                          e_mul(e_apply(x->fn, m), e_apply(y->fn, m))),
                  zero_union(x->zero, y->zero));
}

std::vector<Point> SymbolicGermModel::sample_points() const {
  std::vector<Point> out{w_.p0};
  for (const auto& b : plan_.branch)
    for (const auto& s : b) out.push_back(s.x);
  for (const auto& s : plan_.off) out.push_back(s.x);
  return out;
}

Rational SymbolicGermModel::at_p0(const Value& a) const { return (*a.germ()->fn)(w_.p0); }

Tri SymbolicGermModel::eq(const Value& a, const Value& b) const {
  const auto &x = a.germ(), &y = b.germ();
  if (x->constant && y->constant) return tri(*x->constant == *y->constant);
  for (const auto& pt : sample_points())
    if ((*x->fn)(pt) != (*y->fn)(pt)) return Tri::False;
  return Tri::True;
}

Tri SymbolicGermModel::in_B(const Value& a) const {
  const auto& x = a.germ();
  if (x->constant) return tri(host_.in_O(*x->constant));
  for (const auto& pt : sample_points())
    if (!host_.in_O((*x->fn)(pt))) return Tri::False;
  return Tri::True;
}

Value SymbolicGermModel::at_point() const {
  return function(make_fn("p", w_.p0.size(), host_, e_nu(e_shift(w_.p0))), ZeroInfo::point());
}

Value SymbolicGermModel::s(std::size_t i) const { return function(w_.s_list.at(i), ZeroInfo::germ({i})); }

Value SymbolicGermModel::delta(std::size_t i) const { return function(w_.delta_list.at(i), ZeroInfo::unknown()); }

Value SymbolicGermModel::s_all() const {
  Value out = s(0);
  for (std::size_t i = 1; i < w_.k; ++i) out = mul(out, s(i));
  return out;
}

std::vector<Value> SymbolicGermModel::pool() const {
  std::vector<Value> out;
  for (long c = -2; c <= 2; ++c) out.push_back(constant(c));
  out.push_back(tau_star());
  out.push_back(at_point());
  out.push_back(s_all());
  for (std::size_t i = 0; i < std::min<std::size_t>(w_.k, 3); ++i) {
    out.push_back(s(i));
    out.push_back(delta(i));
  }
  return out;
}

std::string SymbolicGermModel::show(const Value& a) const {
  const auto& x = a.germ();
  return x->constant ? to_string(*x->constant) : x->fn->name();
}

std::optional<std::set<Rational>> SymbolicGermModel::limit_set(const Value& f, const Value& g,
                                                               const Value& s) const {
  const ZeroInfo& z = s.germ()->zero;
  if (z.kind == ZeroInfo::Kind::Empty) return std::set<Rational>{};
  if (z.kind != ZeroInfo::Kind::Germ) return std::nullopt;
  std::set<Rational> out;
  for (auto i : z.branches) {
    const auto& samples = plan_.branch.at(i);
    if (samples.empty()) return std::nullopt;
    std::optional<Rational> value;
    for (const auto& smp : samples) {
      Rational gv = (*g.germ()->fn)(smp.x);
      if (gv == 0) return std::nullopt;
      Rational r = (*f.germ()->fn)(smp.x) / gv;
      if (value && *value != r) return std::nullopt;
      value = r;
    }
    out.insert(*value);
  }
  return out;
}

Tri SymbolicGermModel::chi(const Value& g, const Value& s, const Value& p) const {
  using K = ZeroInfo::Kind;
  const ZeroInfo &zp = p.germ()->zero, &zs = s.germ()->zero, &zg = g.germ()->zero;
  if (!zp.known()) return Tri::Unknown;
  if (!(zp == ZeroInfo::point())) return Tri::False;
  // Isol(s,p): p0 is a zero of s and isolated among its zeros
  if (!zs.known()) return Tri::Unknown;
  bool isolated = zs.kind == K::Germ && zs.branches.empty();
  if (isolated) return Tri::False;
  ZeroInfo both = zero_intersection(zg, zs);
  if (!both.known()) return Tri::Unknown;
  return tri(both == ZeroInfo::point() || both == ZeroInfo::empty());
}

std::optional<Tri> SymbolicGermModel::macro(MacroKind k, const std::vector<Value>& args) const {
  using K = ZeroInfo::Kind;
  auto zero_of = [&](std::size_t i) -> const ZeroInfo& { return args[i].germ()->zero; };
  auto val = [&](std::size_t i, const Point& x) { return (*args[i].germ()->fn)(x); };
  // points of Z(s) that the model can see: p0 and the branch samples
  auto zero_points = [&](std::size_t i) -> std::optional<std::vector<Point>> {
    const ZeroInfo& z = zero_of(i);
    if (z.kind == K::Empty) return std::vector<Point>{};
    if (z.kind == K::Unknown) return std::nullopt;
    if (z.kind == K::All) return sample_points();
    std::vector<Point> pts{w_.p0};
    for (auto b : z.branches)
      for (const auto& smp : plan_.branch.at(b)) pts.push_back(smp.x);
    return pts;
  };
  auto pointwise = [&](auto pred) -> Tri {
    auto pts = zero_points(2);
    if (!pts) return Tri::Unknown;
    for (const auto& x : *pts)
      if (!pred(val(0, x), val(1, x))) return Tri::False;
    return Tri::True;
  };
  switch (k) {
    case MacroKind::Sq: {
      if (auto sub = zero_subset(zero_of(0), zero_of(1))) return tri(*sub);
      auto pts = zero_points(0);
      if (!pts) {
        if (val(0, w_.p0) == 0 && val(1, w_.p0) != 0) return Tri::False;
        return Tri::Unknown;
      }
      for (const auto& x : *pts)
        if (val(1, x) != 0) return Tri::False;
      return Tri::True;
    }
    case MacroKind::Unit: {
      const ZeroInfo& z = zero_of(0);
      if (z.kind == K::Empty) return Tri::True;
      if (z.known()) return Tri::False;
      if (val(0, w_.p0) == 0) return Tri::False;
      return Tri::Unknown;
    }
    case MacroKind::Point: {
      const ZeroInfo& z = zero_of(0);
      if (!z.known()) return Tri::Unknown;
      return tri(z == ZeroInfo::point());
    }
    case MacroKind::Inter: {
      ZeroInfo both = zero_intersection(zero_of(0), zero_of(1));
      if (!both.known() || !zero_of(2).known()) return Tri::Unknown;
      return tri(both == zero_of(2));
    }
    case MacroKind::LeqS: return pointwise([&](const Rational& a, const Rational& b) { return host_.abs_le(a, b); });
    case MacroKind::LtS: return pointwise([&](const Rational& a, const Rational& b) { return host_.abs_lt(a, b); });
    case MacroKind::PrecS: return pointwise([](const Rational& a, const Rational& b) { return a <= b; });
    case MacroKind::PrecStrictS: return pointwise([](const Rational& a, const Rational& b) { return a < b; });
    case MacroKind::Limit: {
      // f, g, h, s, p
      Tri c = chi(args[1], args[3], args[4]);
      if (c != Tri::True) return c;
      auto L = limit_set(args[0], args[1], args[3]);
      if (!L) return Tri::Unknown;
      return tri(L->count(at_p0(args[2])) > 0);
    }
    case MacroKind::LimBChTimes:
    case MacroKind::LimBChPlus: {
      // f, g, s, p, tau*
      Tri c = chi(args[1], args[2], args[3]);
      if (c != Tri::True) return c;
      auto L = limit_set(args[0], args[1], args[2]);
      if (!L) return Tri::Unknown;
      Rational t = at_p0(args[4]);
      bool times = k == MacroKind::LimBChTimes;
      if (times && !host_.is_valued()) return Tri::Unknown;
      PreorderedGroup g = times ? PreorderedGroup::multiplicative(host_) : PreorderedGroup::rationals();
      if (!g.valid_tau(t) || !L->count(t)) return Tri::False;
      for (const auto& l : *L)
        if (!g.contains(l)) return Tri::Unknown;
      // a finite set of limit values is bounded
      return tri(is_chunk(make_candidate({L->begin(), L->end()}, t), g).ok);
    }
    case MacroKind::StrongOrder: return Tri::Unknown;
    default: return std::nullopt;
  }
}

}  // namespace ringdef
