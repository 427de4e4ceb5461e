#include "ringdef/germs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "ringdef/scalar.hpp"

namespace ringdef {

namespace {

Expr node(ExprKind k, std::vector<Expr> args = {}) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->args = std::move(args);
  return n;
}

void require_ordered(const HostField& host, const char* what) {
  if (host.is_valued()) throw EvalError(std::string(what) + " is not available on a valued host");
}

}  // namespace

Expr e_const(const Rational& c) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Const;
  n->c = c;
  return n;
}
Expr e_coord(std::size_t i) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Coord;
  n->index = i;
  return n;
}
Expr e_add(Expr a, Expr b) { return node(ExprKind::Add, {std::move(a), std::move(b)}); }
Expr e_sub(Expr a, Expr b) { return node(ExprKind::Sub, {std::move(a), std::move(b)}); }
Expr e_mul(Expr a, Expr b) { return node(ExprKind::Mul, {std::move(a), std::move(b)}); }
Expr e_div(Expr a, Expr b) { return node(ExprKind::Div, {std::move(a), std::move(b)}); }
Expr e_neg(Expr a) { return node(ExprKind::Neg, {std::move(a)}); }
Expr e_nu(std::vector<Expr> args) {
  if (args.empty()) throw std::invalid_argument("nu of no arguments");
  return node(ExprKind::NuM, std::move(args));
}
Expr e_min(Expr a, Expr b) { return node(ExprKind::Min, {std::move(a), std::move(b)}); }
Expr e_max(Expr a, Expr b) { return node(ExprKind::Max, {std::move(a), std::move(b)}); }
Expr e_abs(Expr a) { return node(ExprKind::Abs, {std::move(a)}); }
Expr e_indicator(Region r) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Indicator;
  n->region = std::move(r);
  return n;
}
Expr e_call(FnRef fn, std::vector<Expr> args) {
  if (args.size() != fn->dim()) throw std::invalid_argument("call of " + fn->name() + " with wrong arity");
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Call;
  n->fn = std::move(fn);
  n->args = std::move(args);
  return n;
}
Expr e_apply(FnRef fn, std::size_t dim) {
  std::vector<Expr> args;
  for (std::size_t i = 0; i < dim; ++i) args.push_back(e_coord(i));
  return e_call(std::move(fn), std::move(args));
}
std::vector<Expr> e_shift(const Point& a) {
  std::vector<Expr> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] == 0 ? e_coord(i) : e_sub(e_coord(i), e_const(a[i])));
  return out;
}

Rational eval(const Expr& e, const Point& x, const HostField& host) {
  switch (e->kind) {
    case ExprKind::Const: return e->c;
    case ExprKind::Coord:
      if (e->index >= x.size()) throw std::invalid_argument("coordinate out of range");
      return x[e->index];
    case ExprKind::Add: return eval(e->args[0], x, host) + eval(e->args[1], x, host);
    case ExprKind::Sub: return eval(e->args[0], x, host) - eval(e->args[1], x, host);
    case ExprKind::Mul: {
      Rational a = eval(e->args[0], x, host);
      if (a == 0) return 0;
      return a * eval(e->args[1], x, host);
    }
    case ExprKind::Div: {
      Rational d = eval(e->args[1], x, host);
      if (d == 0) throw EvalError("division by zero at " + point_string(x));
      return eval(e->args[0], x, host) / d;
    }
    case ExprKind::Neg: return -eval(e->args[0], x, host);
    case ExprKind::NuM: {
      std::vector<Rational> vals;
      for (const auto& a : e->args) vals.push_back(eval(a, x, host));
      return nu_m(vals, host);
    }
    case ExprKind::Min:
    case ExprKind::Max: {
      require_ordered(host, "min/max");
      Rational a = eval(e->args[0], x, host), b = eval(e->args[1], x, host);
      return e->kind == ExprKind::Min ? (a < b ? a : b) : (a < b ? b : a);
    }
    case ExprKind::Abs: require_ordered(host, "abs"); return abs(eval(e->args[0], x, host));
    case ExprKind::Indicator: return contains(e->region, x, host) ? 1 : 0;
    case ExprKind::Call: {
      Point y;
      for (const auto& a : e->args) y.push_back(eval(a, x, host));
      return (*e->fn)(y);
    }
  }
  throw std::logic_error("unreachable");
}

PiecewiseFn::PiecewiseFn(std::string name, std::size_t dim, HostField host,
                         std::vector<std::pair<Region, Expr>> cases, Expr fallback)
    : name_(std::move(name)), dim_(dim), host_(host), cases_(std::move(cases)), fallback_(std::move(fallback)) {
  if (!fallback_) throw std::invalid_argument("piecewise function needs a default expression");
}

std::size_t PiecewiseFn::firing_case(const Point& x) const {
  if (x.size() != dim_) throw std::invalid_argument(name_ + " evaluated at a point of the wrong dimension");
  for (std::size_t i = 0; i < cases_.size(); ++i)
    if (contains(cases_[i].first, x, host_)) return i;
  return cases_.size();
}

Rational PiecewiseFn::operator()(const Point& x) const {
  std::size_t i = firing_case(x);
  return eval(i < cases_.size() ? cases_[i].second : fallback_, x, host_);
}

FnRef make_fn(std::string name, std::size_t dim, HostField host, std::vector<std::pair<Region, Expr>> cases,
              Expr fallback) {
  return std::make_shared<const PiecewiseFn>(std::move(name), dim, host, std::move(cases), std::move(fallback));
}

FnRef make_fn(std::string name, std::size_t dim, HostField host, Expr body) {
  return make_fn(std::move(name), dim, host, {}, std::move(body));
}

DiracFunctions dirac_functions(const Point& a, const Rational& r_b, const Rational& r_0, const HostField& host) {
  if (r_b == 0 || r_0 == 0) throw std::invalid_argument("ball radii must be nonzero");
  if (!host.abs_lt(r_b, r_0)) throw std::invalid_argument("closed ball B is not inside the open ball B0");
  const std::size_t m = a.size();
  Expr nu = e_nu(e_shift(a));
  DiracFunctions d;
  d.at_point = make_fn("delta_a", m, host, nu);
  Region B = closed_ball(a, r_b), B0 = open_ball(a, r_0);
  if (host.is_valued()) {
    d.ball = make_fn("delta_B", m, host, e_indicator(complement(B)));
    d.outside = make_fn("delta_B0c", m, host, e_indicator(B0));
    // {= 1} has to be B itself, so the plateau is the indicator of B
    d.plateau = make_fn("delta_B_B0", m, host, e_indicator(B));
  } else {
    Rational rb = abs(r_b), r0 = abs(r_0);
    Expr norm = e_abs(nu);
    d.ball = make_fn("delta_B", m, host, e_max(e_const(0), e_sub(norm, e_const(rb))));
    d.outside = make_fn("delta_B0c", m, host, e_max(e_const(0), e_sub(e_const(r0), norm)));
    d.plateau = make_fn("delta_B_B0", m, host,
                        e_max(e_const(0), e_min(e_const(1), e_div(e_sub(e_const(r0), norm), e_const(r0 - rb)))));
  }
  return d;
}

GermWitness germs_open_affine(std::size_t k, const Point& p0, const HostField& host, AffineVariant variant) {
  const std::size_t r = p0.size();
  if (r < 2) throw std::invalid_argument("open affine germs need dimension r >= 2");
  if (k < 1) throw std::invalid_argument("need at least one germ");
  GermWitness w;
  w.p0 = p0;
  w.host = host;
  w.k = k;
  const std::size_t last = r - 1;
  Expr height = e_sub(e_coord(last), e_const(p0[last]));
  // σ_i(x) = p0 + ((x_r - p0_r)/i)·(e_1 + i·e_r)
  auto sigma = [&](std::size_t i) {
    std::vector<Expr> y;
    Expr t = e_div(height, e_const(Rational(static_cast<long>(i))));
    for (std::size_t c = 0; c < r; ++c) {
      if (c == 0) y.push_back(e_add(e_const(p0[0]), t));
      else if (c == last) y.push_back(e_coord(last));
      else y.push_back(e_const(p0[c]));
    }
    return y;
  };
  for (std::size_t i = 1; i <= k; ++i) {
    auto sg = sigma(i);
    std::vector<Expr> comps;
    for (std::size_t c = 0; c < r; ++c) comps.push_back(e_sub(e_coord(c), sg[c]));
    w.s_list.push_back(make_fn("s" + std::to_string(i), r, host, e_nu(comps)));
    Point dir(r, 0);
    dir[0] = 1;
    dir[last] = static_cast<long>(i);
    w.branches.push_back({dir, 0, 1});
    w.branch_sets.push_back(intersection({affine_piece(p0, {dir}), complement(singleton(p0))}));
  }
  std::vector<Point> h_dirs;
  for (std::size_t c = 0; c < last; ++c) {
    Point e(r, 0);
    e[c] = 1;
    h_dirs.push_back(e);
  }
  Region H = affine_piece(p0, h_dirs);
  for (std::size_t i = 0; i < k; ++i) {
    Expr prod = e_const(1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      Expr si = e_apply(w.s_list[i], r), sj = e_apply(w.s_list[j], r);
      Expr ratio;
      if (variant == AffineVariant::AsPrinted) {
        ratio = e_div(sj, e_call(w.s_list[j], sigma(i + 1)));
      } else if (host.is_valued()) {
        ratio = e_div(sj, e_nu({si, sj}));
      } else {
        ratio = e_div(e_abs(sj), e_max(e_abs(si), e_abs(sj)));
      }
      prod = j == (i == 0 ? 1 : 0) ? ratio : e_mul(prod, ratio);
    }
    std::vector<std::pair<Region, Expr>> cases{{singleton(p0), e_const(0)}};
    if (variant == AffineVariant::AsPrinted) cases.push_back({H, e_const(0)});
    w.delta_list.push_back(make_fn("delta" + std::to_string(i + 1), r, host, cases, prod));
  }
  Point e1(r, 0);
  e1[0] = 1;
  w.off_directions.push_back(e1);
  Point steep = e1;
  steep[last] = static_cast<long>(k + 1);
  w.off_directions.push_back(steep);
  if (r >= 3) {
    Point e2(r, 0);
    e2[1] = 1;
    w.off_directions.push_back(e2);
  }
  return w;
}

GermWitness germs_valued_congruence(std::size_t k, const Rational& p0, const HostField& host) {
  if (!host.is_valued()) throw std::invalid_argument("valuation congruence germs need a p-adic host");
  if (k < 1) throw std::invalid_argument("need at least one germ");
  GermWitness w;
  w.p0 = {p0};
  w.host = host;
  w.k = k;
  Expr dist = e_nu(e_shift(w.p0));
  for (std::size_t i = 1; i <= k; ++i) {
    Region S = val_congruence(w.p0, static_cast<long>(i), static_cast<long>(k), 0);
    w.s_list.push_back(make_fn("s" + std::to_string(i), 1, host, {{S, e_const(0)}}, dist));
    w.delta_list.push_back(make_fn("delta" + std::to_string(i), 1, host, e_indicator(S)));
    w.branches.push_back({{Rational(1)}, static_cast<long>(i), static_cast<long>(k)});
    w.branch_sets.push_back(S);
  }
  return w;
}

Rational scale_value(const HostField& host, long j) {
  if (host.is_valued()) return pow_int(Rational(static_cast<long>(host.prime())), j);
  return pow_int(Rational(1, 2), j);
}

namespace {

std::vector<Rational> units(const HostField& host) {
  if (host.is_valued()) return {Rational(1), Rational(static_cast<long>(host.prime()) + 1)};
  return {Rational(1), Rational(-1)};
}

Point along(const Point& p0, const Point& dir, const Rational& t) {
  Point x = p0;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += t * dir[i];
  return x;
}

}  // namespace

SamplePlan make_sample_plan(const GermWitness& w, int depth) {
  if (depth < 1) throw std::invalid_argument("sampling depth must be positive");
  SamplePlan plan;
  plan.depth = depth;
  plan.branch.resize(w.k);
  auto us = units(w.host);
  for (std::size_t i = 0; i < w.k; ++i) {
    const auto& b = w.branches.at(i);
    for (int n = 0; n < depth; ++n) {
      long j = b.offset + b.stride * n;
      for (const auto& u : us) {
        Sample s{along(w.p0, b.direction, u * scale_value(w.host, j)), j};
        if (w.support && !contains(*w.support, s.x, w.host)) plan.off.push_back(s);
        else plan.branch[i].push_back(s);
      }
    }
  }
  for (const auto& d : w.off_directions)
    for (int n = 0; n < depth; ++n)
      for (const auto& u : us) plan.off.push_back({along(w.p0, d, u * scale_value(w.host, n)), n});
  const std::size_t m = w.p0.size();
  if (m >= 2) {
    // approaches p0 tangentially to the hyperplane of the last coordinate
    for (int n = 0; n < depth; ++n) {
      Rational t = scale_value(w.host, n);
      Point x = w.p0;
      x[0] += t;
      x[m - 1] += t * t;
      plan.off.push_back({x, n});
    }
  } else if (w.host.is_valued()) {
    plan.off.push_back({along(w.p0, {Rational(1)}, scale_value(w.host, -1)), -1});
    plan.off.push_back({along(w.p0, {Rational(2)}, scale_value(w.host, -2)), -2});
  }
  return plan;
}

namespace {

std::optional<Rational> safe_eval(const FnRef& f, const Point& x, std::vector<std::string>& failures) {
  try {
    return (*f)(x);
  } catch (const EvalError& e) {
    failures.push_back(f->name() + ": " + e.what());
    return std::nullopt;
  }
}

}  // namespace

SeparationReport check_separated(const GermWitness& w, const SamplePlan& plan) {
  std::size_t total = plan.off.size();
  for (const auto& b : plan.branch) total += b.size();
  if (total == 0) throw std::invalid_argument("empty sampling plan");
  if (plan.branch.size() != w.k) throw std::invalid_argument("sampling plan does not match the witness");
  SeparationReport rep;
  rep.samples = total;
  std::vector<const Sample*> everything;
  for (const auto& b : plan.branch)
    for (const auto& s : b) everything.push_back(&s);
  for (const auto& s : plan.off) everything.push_back(&s);

  rep.s1 = true;
  for (const Sample* s : everything) {
    std::size_t zeros = 0;
    for (const auto& f : w.s_list) {
      auto v = safe_eval(f, s->x, rep.failures);
      if (v && *v == 0) ++zeros;
    }
    if (zeros > 1) {
      rep.s1 = false;
      rep.failures.push_back("S1: " + point_string(s->x) + " lies on " + std::to_string(zeros) + " zero sets");
    }
  }

  rep.s2 = true;
  for (std::size_t i = 0; i < w.k; ++i) {
    auto at_p0 = safe_eval(w.s_list[i], w.p0, rep.failures);
    if (!at_p0 || *at_p0 != 0) {
      rep.s2 = false;
      rep.failures.push_back("S2: s" + std::to_string(i + 1) + " does not vanish at p0");
    }
    std::set<long> scales;
    for (const auto& s : plan.branch[i]) {
      auto v = safe_eval(w.s_list[i], s.x, rep.failures);
      if (v && *v == 0) scales.insert(s.scale);
    }
    std::size_t needed = std::min<std::size_t>(static_cast<std::size_t>(plan.depth), plan.branch[i].size());
    if (plan.branch[i].empty() || scales.size() < std::max<std::size_t>(needed / 2, 1) ||
        scales.size() * 2 < plan.branch[i].size()) {
      rep.s2 = false;
      rep.failures.push_back("S2: zeros of s" + std::to_string(i + 1) + " found at only " +
                             std::to_string(scales.size()) + " scales");
    }
  }

  rep.s3 = true;
  for (std::size_t i = 0; i < w.k; ++i)
    for (std::size_t j = 0; j < w.k; ++j)
      for (const auto& s : plan.branch[j]) {
        auto v = safe_eval(w.delta_list[i], s.x, rep.failures);
        Rational want = i == j ? 1 : 0;
        if (!v || *v != want) {
          rep.s3 = false;
          rep.failures.push_back("S3: delta" + std::to_string(i + 1) + " at " + point_string(s.x) + " on branch " +
                                 std::to_string(j + 1) + " is " + (v ? to_string(*v) : std::string("undefined")));
        }
      }

  rep.s4 = true;
  std::vector<long> all_scales;
  for (const Sample* s : everything) all_scales.push_back(s->scale);
  std::sort(all_scales.begin(), all_scales.end());
  long median = all_scales[all_scales.size() / 2];
  std::optional<ValueClass> overall;
  for (std::size_t i = 0; i < w.k; ++i) {
    std::optional<ValueClass> coarse, fine;
    for (const Sample* s : everything) {
      auto v = safe_eval(w.delta_list[i], s->x, rep.failures);
      if (!v) {
        rep.s4 = false;
        continue;
      }
      ValueClass c = w.host.abs_class(*v);
      auto& slot = s->scale < median ? coarse : fine;
      if (!slot || *slot < c) slot = c;
      if (!overall || *overall < c) overall = c;
    }
    if (fine && coarse && *coarse < *fine) {
      rep.s4 = false;
      rep.failures.push_back("S4: delta" + std::to_string(i + 1) + " grows toward p0 (" + coarse->to_string() +
                             " then " + fine->to_string() + ")");
    }
  }
  rep.s4_bound = overall ? overall->to_string() : "none";
  if (!rep.failures.empty() && rep.s1 && rep.s2 && rep.s3 && rep.s4) rep.s4 = false;
  return rep;
}

GermWitness mutate_delta(const GermWitness& w, std::size_t i, std::size_t j, const Rational& value) {
  if (i >= w.k || j >= w.k || w.branch_sets.size() != w.k) throw std::invalid_argument("no such branch");
  GermWitness out = w;
  const FnRef& old = w.delta_list[i];
  out.delta_list[i] = make_fn(old->name() + "~", old->dim(), w.host, {{w.branch_sets[j], e_const(value)}},
                              e_apply(old, old->dim()));
  return out;
}

GermWitness isolate_zero(const GermWitness& w, std::size_t i) {
  if (i >= w.k) throw std::invalid_argument("no such branch");
  GermWitness out = w;
  out.s_list[i] = make_fn("isolated", w.p0.size(), w.host, e_nu(e_shift(w.p0)));
  return out;
}

GermWitness globalize(const GermWitness& w, const Rational& r_b, const Rational& r_0) {
  DiracFunctions d = dirac_functions(w.p0, r_b, r_0, w.host);
  const std::size_t m = w.p0.size();
  Region B = closed_ball(w.p0, r_b), B0 = open_ball(w.p0, r_0);
  GermWitness out = w;
  Expr h = e_apply(d.plateau, m);
  for (std::size_t i = 0; i < w.k; ++i) {
    FnRef u = make_fn("u" + std::to_string(i + 1), m, w.host, {{complement(B0), e_const(0)}},
                      e_mul(h, e_apply(w.s_list[i], m)));
    out.s_list[i] = make_fn(w.s_list[i]->name() + "^", m, w.host, e_nu({e_apply(d.ball, m), e_apply(u, m)}));
    out.delta_list[i] = make_fn(w.delta_list[i]->name() + "^", m, w.host,
                                {{complement(B0), e_const(0)}, {singleton(w.p0), e_const(0)}},
                                e_mul(h, e_apply(w.delta_list[i], m)));
    if (i < out.branch_sets.size()) out.branch_sets[i] = intersection({w.branch_sets[i], B});
  }
  out.support = w.support ? intersection({*w.support, B}) : B;
  return out;
}

LimitPair limit_pair(const GermWitness& w, const std::vector<Rational>& limits) {
  if (limits.size() != w.k) throw std::invalid_argument("need one limit value per germ");
  const std::size_t m = w.p0.size();
  FnRef p = make_fn("p", m, w.host, e_nu(e_shift(w.p0)));
  Expr sum = e_const(0);
  for (std::size_t i = 0; i < w.k; ++i) {
    Expr term = e_mul(e_const(limits[i]), e_mul(e_apply(w.delta_list[i], m), e_apply(p, m)));
    sum = i == 0 ? term : e_add(sum, term);
  }
  FnRef f = make_fn("f", m, w.host, {{singleton(w.p0), e_const(0)}}, sum);
  return {f, p};
}

std::vector<Rational> limit_values(const FnRef& f, const FnRef& g, const GermWitness& w, const SamplePlan& plan) {
  if (plan.branch.size() != w.k) throw std::invalid_argument("sampling plan does not match the witness");
  std::set<Rational> out;
  for (std::size_t i = 0; i < w.k; ++i) {
    if (plan.branch[i].empty()) throw std::invalid_argument("no samples on branch " + std::to_string(i + 1));
    std::optional<Rational> value;
    for (const auto& s : plan.branch[i]) {
      Rational gv = (*g)(s.x);
      if (gv == 0) throw std::invalid_argument("g vanishes at " + point_string(s.x));
      Rational r = (*f)(s.x) / gv;
      if (value && *value != r)
        throw std::invalid_argument("f/g is not constant on branch " + std::to_string(i + 1));
      value = r;
    }
    out.insert(*value);
  }
  return {out.begin(), out.end()};
}

int piece_dim(const Region& piece) {
  switch (piece->kind) {
    case RegionKind::Box: {
      int d = 0;
      for (std::size_t i = 0; i < piece->center.size(); ++i)
        if (piece->center[i] < piece->upper[i]) ++d;
      return d;
    }
    case RegionKind::AffinePiece: return static_cast<int>(rank(piece->directions));
    default: throw std::invalid_argument("dimension oracle supports boxes and affine pieces only");
  }
}

int set_dim(const std::vector<Region>& pieces) {
  int d = -1;
  for (const auto& p : pieces) d = std::max(d, piece_dim(p));
  return d;
}

std::optional<int> local_dim_oracle(const std::vector<Region>& pieces, const Point& x, const HostField& host) {
  // pieces are closed: a small ball around x meets exactly the pieces through x
  std::optional<int> d;
  for (const auto& p : pieces) {
    int pd = piece_dim(p);
    if (contains(p, x, host)) d = std::max(d.value_or(pd), pd);
  }
  return d;
}

std::optional<bool> in_w_k(const std::vector<Region>& pieces, const Point& x, int k, const HostField& host) {
  std::vector<Region> through;
  for (const auto& p : pieces) {
    piece_dim(p);
    if (contains(p, x, host)) through.push_back(p);
  }
  if (through.empty()) return false;
  if (through.size() > 1) return std::nullopt;
  const Region& p = through.front();
  if (piece_dim(p) != k) return false;
  if (p->kind == RegionKind::Box) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      bool degenerate = p->center[i] == p->upper[i];
      if (!degenerate && (x[i] == p->center[i] || x[i] == p->upper[i])) return false;
    }
  }
  return true;
}

std::vector<Region> project_boxes(const std::vector<Region>& pieces, const std::vector<std::size_t>& coords) {
  std::vector<Region> out;
  for (const auto& p : pieces) {
    if (p->kind != RegionKind::Box) throw std::invalid_argument("projection supports boxes only");
    Point lo, hi;
    for (auto c : coords) {
      lo.push_back(p->center.at(c));
      hi.push_back(p->upper.at(c));
    }
    out.push_back(box(lo, hi));
  }
  return out;
}

bool w_k_dense_near(const std::vector<Region>& pieces, const Point& x, int k, int depth) {
  const HostField host = HostField::ordered();
  for (int j = 0; j < depth; ++j) {
    Rational t = scale_value(host, j);
    bool found = false;
    for (const auto& p : pieces) {
      if (!contains(p, x, host) || piece_dim(p) != k) continue;
      Point target;
      if (p->kind == RegionKind::Box) {
        target = p->center;
        for (std::size_t i = 0; i < target.size(); ++i) target[i] = (p->center[i] + p->upper[i]) / 2;
      } else {
        target = x;
        if (!p->directions.empty())
          for (std::size_t i = 0; i < target.size(); ++i) target[i] += p->directions[0][i];
      }
      Point diff(x.size());
      Rational far = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        diff[i] = target[i] - x[i];
        if (abs(diff[i]) > far) far = abs(diff[i]);
      }
      if (far == 0) {
        found = in_w_k(pieces, x, k, host).value_or(false);
      } else {
        // step from x toward the target, staying inside the ball of radius t
        for (Rational step = t / (2 * far); step > t / (1024 * far) && !found; step /= 2) {
          Point y = x;
          for (std::size_t i = 0; i < x.size(); ++i) y[i] += step * diff[i];
          found = in_w_k(pieces, y, k, host).value_or(false);
        }
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

using nlohmann::json;

json region_json(const Region& r) {
  auto pt = [](const Point& x) {
    json a = json::array();
    for (const auto& c : x) a.push_back(to_string(c));
    return a;
  };
  json j;
  switch (r->kind) {
    case RegionKind::All: j["kind"] = "all"; break;
    case RegionKind::ClosedBall:
    case RegionKind::OpenBall:
      j["kind"] = r->kind == RegionKind::ClosedBall ? "closed-ball" : "open-ball";
      j["center"] = pt(r->center);
      j["radius"] = to_string(r->radius);
      break;
    case RegionKind::Complement:
    case RegionKind::Intersection:
    case RegionKind::Union: {
      j["kind"] = r->kind == RegionKind::Complement ? "complement"
                  : r->kind == RegionKind::Intersection ? "intersection"
                                                        : "union";
      json parts = json::array();
      for (const auto& p : r->parts) parts.push_back(region_json(p));
      j["parts"] = parts;
      break;
    }
    case RegionKind::ValCongruence:
      j["kind"] = "val-congruence";
      j["base"] = pt(r->center);
      j["residue"] = r->residue;
      j["modulus"] = r->modulus;
      j["floor"] = r->floor;
      break;
    case RegionKind::AffinePiece: {
      j["kind"] = "affine";
      j["base"] = pt(r->center);
      json dirs = json::array();
      for (const auto& d : r->directions) dirs.push_back(pt(d));
      j["directions"] = dirs;
      break;
    }
    case RegionKind::Singleton:
      j["kind"] = "singleton";
      j["point"] = pt(r->center);
      break;
    case RegionKind::Box:
      j["kind"] = "box";
      j["lo"] = pt(r->center);
      j["hi"] = pt(r->upper);
      break;
  }
  return j;
}

json expr_json(const Expr& e) {
  static const std::map<ExprKind, const char*> names{
      {ExprKind::Const, "const"}, {ExprKind::Coord, "coord"}, {ExprKind::Add, "+"},     {ExprKind::Sub, "-"},
      {ExprKind::Mul, "*"},       {ExprKind::Div, "/"},       {ExprKind::Neg, "neg"},   {ExprKind::NuM, "nu"},
      {ExprKind::Min, "min"},     {ExprKind::Max, "max"},     {ExprKind::Abs, "abs"},   {ExprKind::Indicator, "indicator"},
      {ExprKind::Call, "call"}};
  json j;
  j["op"] = names.at(e->kind);
  if (e->kind == ExprKind::Const) j["value"] = to_string(e->c);
  if (e->kind == ExprKind::Coord) j["index"] = e->index;
  if (e->kind == ExprKind::Indicator) j["region"] = region_json(e->region);
  if (e->kind == ExprKind::Call) j["fn"] = e->fn->name();
  if (!e->args.empty()) {
    json args = json::array();
    for (const auto& a : e->args) args.push_back(expr_json(a));
    j["args"] = args;
  }
  return j;
}

json fn_json(const FnRef& f) {
  json j;
  j["name"] = f->name();
  j["dim"] = f->dim();
  j["host"] = f->host().name();
  json cases = json::array();
  for (const auto& [r, e] : f->cases()) cases.push_back({{"region", region_json(r)}, {"expr", expr_json(e)}});
  j["cases"] = cases;
  j["default"] = expr_json(f->fallback());
  return j;
}

json sample_json(const Sample& s) {
  json pt = json::array();
  for (const auto& c : s.x) pt.push_back(to_string(c));
  return {{"x", pt}, {"scale", s.scale}};
}

}  // namespace

std::string to_json(const GermWitness& w) {
  json j;
  json p0 = json::array();
  for (const auto& c : w.p0) p0.push_back(to_string(c));
  j["p0"] = p0;
  j["host"] = w.host.name();
  j["k"] = w.k;
  json s = json::array(), d = json::array(), b = json::array();
  for (const auto& f : w.s_list) s.push_back(fn_json(f));
  for (const auto& f : w.delta_list) d.push_back(fn_json(f));
  for (const auto& r : w.branch_sets) b.push_back(region_json(r));
  j["s"] = s;
  j["delta"] = d;
  j["branches"] = b;
  if (w.support) j["support"] = region_json(*w.support);
  return j.dump(2);
}

std::string to_json(const SamplePlan& plan) {
  json j;
  j["depth"] = plan.depth;
  json br = json::array();
  for (const auto& b : plan.branch) {
    json one = json::array();
    for (const auto& s : b) one.push_back(sample_json(s));
    br.push_back(one);
  }
  j["branch"] = br;
  json off = json::array();
  for (const auto& s : plan.off) off.push_back(sample_json(s));
  j["off"] = off;
  return j.dump(2);
}

std::string to_json(const SeparationReport& r) {
  json j{{"S1", r.s1}, {"S2", r.s2}, {"S3", r.s3}, {"S4", r.s4}, {"S4_bound", r.s4_bound}, {"samples", r.samples},
         {"failures", r.failures}};
  return j.dump(2);
}

}  // namespace ringdef
