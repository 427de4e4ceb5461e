#include "ringdef/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ringdef/chunks.hpp"
#include "ringdef/eval.hpp"
#include "ringdef/germs.hpp"
#include "ringdef/oracles.hpp"
#include "ringdef/schemas.hpp"

namespace ringdef {

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Agree: return "agree";
    case CaseStatus::Unknown: return "unknown";
    case CaseStatus::Disagree: return "disagree";
    case CaseStatus::Unchecked: return "unchecked";
  }
  return "?";
}

Summary Report::summary() const {
  Summary s;
  for (const auto& c : cases) {
    ++s.cases;
    if (c.verdict == "Holds") ++s.holds;
    else if (c.verdict == "Fails") ++s.fails;
    else ++s.unknown;
    if (c.status == CaseStatus::Agree) ++s.agree;
    bool failed = c.status == CaseStatus::Disagree || (c.strict && c.status == CaseStatus::Unknown);
    if (c.status == CaseStatus::Disagree) ++s.disagree;
    if (c.status == CaseStatus::Disagree && c.from_eval && c.verdict != "Unknown") ++s.soundness_violations;
    else if (failed) ++s.property_failures;
  }
  return s;
}

bool Report::ok() const {
  auto s = summary();
  return s.soundness_violations == 0 && s.property_failures == 0;
}

std::vector<const CaseResult*> cases_with_prefix(const Report& r, const std::string& prefix) {
  std::vector<const CaseResult*> out;
  for (const auto& c : r.cases)
    if (c.id.compare(0, prefix.size(), prefix) == 0) out.push_back(&c);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

const char* verdict_text(bool b) { return b ? "Holds" : "Fails"; }

const char* verdict_text(Tri t) { return t == Tri::True ? "Holds" : t == Tri::False ? "Fails" : "Unknown"; }

void settle(CaseResult& c) {
  if (c.expected.empty() || c.expected == "Unknown") c.status = CaseStatus::Unchecked;
  else if (c.verdict == "Unknown") c.status = CaseStatus::Unknown;
  else c.status = c.verdict == c.expected ? CaseStatus::Agree : CaseStatus::Disagree;
}

class Runner {
 public:
  Runner(const SuiteOptions& opt, std::vector<CaseResult>& out) : opt_(opt), out_(out), rng_(opt.seed) {}

  EvalOptions eval_options() const {
    EvalOptions o;
    o.depth = opt_.depth;
    return o;
  }

  // Runs `fill` and records its case with the elapsed time.
  void add(const std::function<void(CaseResult&)>& fill) {
    CaseResult c;
    auto t0 = Clock::now();
    fill(c);
    if (opt_.timings) c.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    settle(c);
    out_.push_back(std::move(c));
  }

  void property(const std::string& id, const std::string& model, bool ok, const std::string& detail) {
    add([&](CaseResult& c) {
      c.id = id;
      c.model = model;
      c.verdict = verdict_text(ok);
      c.expected = "Holds";
      c.strict = true;
      c.detail = detail;
    });
  }

  void eval_case(CaseResult& c, const Formula& f, const Model& m, const Env& env, const EvalOptions& o) {
    auto v = eval_bounded(f, m, env, o);
    c.verdict = verdict_name(v.value);
    c.from_eval = true;
    c.witness = v.witness;
    c.counterexample = v.counterexample;
    c.detail = "tried " + std::to_string(v.witnesses_tried) + ", depth " + std::to_string(v.depth);
  }

  std::uint64_t draw(std::uint64_t n) { return rng_() % n; }

  void jacobson();
  void combine_suite();
  void origin();
  void chunks_n8();
  void chunks_mult();
  void germs();
  void limits();
  void lifting();
  void int_times();
  void z_interp();

 private:
  const SuiteOptions& opt_;
  std::vector<CaseResult>& out_;
  std::mt19937_64 rng_;
};

const std::vector<HostField>& grid_hosts() {
  static const std::vector<HostField> h{HostField::ordered(), HostField::padic(3)};
  return h;
}

// Every function X -> {-1, 0, 1} for |X| = n, in a fixed order.
std::vector<RingElement> grid(std::size_t n) {
  std::vector<RingElement> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    RingElement e;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) e.values.push_back(Rational(static_cast<long>(c % 3) - 1));
    out.push_back(std::move(e));
  }
  return out;
}

std::string x_name(std::size_t n) { return "X" + std::to_string(n); }

void Runner::jacobson() {
  for (const auto& host : grid_hosts()) {
    for (std::size_t nx = 1; nx <= 3; ++nx) {
      auto g = grid(nx);
      auto pool = default_ring_pool(nx);
      for (int n = 1; n <= 2; ++n) {
        std::size_t total = 0, bad = 0, criterion_bad = 0;
        std::vector<IdealGens> gens_list;
        for (const auto& a : g) {
          if (n == 1) gens_list.push_back({a});
          else
            for (const auto& b : g) gens_list.push_back({a, b});
        }
        for (const auto& gens : gens_list)
          for (const auto& h : g) {
            ++total;
            bool j = jac_oracle(gens, h);
            if (j != zero_set_inclusion(gens, h)) ++bad;
            Tri crit = jac_unit_criterion(gens, h, pool);
            if (crit != Tri::Unknown && (crit == Tri::True) != j) ++criterion_bad;
          }
        property("jacobson/agree/" + host.name() + "/" + x_name(nx) + "/n" + std::to_string(n),
                 "finite " + x_name(nx) + " " + host.name(), bad == 0 && criterion_bad == 0,
                 std::to_string(total) + " instances, " + std::to_string(bad) + " oracle disagreements, " +
                     std::to_string(criterion_bad) + " unit-criterion disagreements");
      }
    }
  }
  // the schemas themselves, by bounded evaluation
  const Schema sq = sqsubseteq();
  const Schema jac2 = jac_membership(2);
  for (const auto& host : grid_hosts()) {
    for (std::size_t nx = 1; nx <= 2; ++nx) {
      FiniteRingModel m(PointSetX::numbered(nx), host);
      auto g = grid(nx);
      for (bool macros : {true, false}) {
        EvalOptions o = eval_options();
        o.macros = macros;
        for (const auto& f : g)
          for (const auto& h : g)
            add([&](CaseResult& c) {
              c.id = "jacobson/sq/" + host.name() + "/" + x_name(nx) + "/" + f.to_string() + "/" + h.to_string() +
                     (macros ? "/macros" : "/raw");
              c.formula = print_formula(sq.body);
              c.model = m.describe() + "; f=" + f.to_string() + " g=" + h.to_string();
              c.expected = verdict_text(jac_oracle({f}, h));
              eval_case(c, sq.body, m, {{"f", Value{f}}, {"g", Value{h}}}, o);
            });
      }
      if (nx == 1) {
        for (const auto& f1 : g)
          for (const auto& f2 : g)
            for (const auto& h : g)
              add([&](CaseResult& c) {
                c.id = "jacobson/jac2/" + host.name() + "/" + f1.to_string() + "/" + f2.to_string() + "/" +
                       h.to_string();
                c.formula = print_formula(jac2.body);
                c.model = m.describe() + "; f1=" + f1.to_string() + " f2=" + f2.to_string() + " g=" + h.to_string();
                c.expected = verdict_text(jac_oracle({f1, f2}, h));
                eval_case(c, jac2.body, m, {{"f1", Value{f1}}, {"f2", Value{f2}}, {"g", Value{h}}}, eval_options());
              });
      }
    }
  }
}

void Runner::combine_suite() {
  struct Setup {
    std::shared_ptr<const UVProvider> provider;
    HostField host;
  };
  std::vector<Setup> setups{{sum_of_squares_provider(), HostField::ordered()},
                            {sum_of_squares_provider(), HostField::padic(3)},
                            {std::make_shared<ValuedProvider>(HostField::padic(3)), HostField::padic(3)}};
  for (const auto& s : setups) {
    for (std::size_t nx = 1; nx <= 3; ++nx) {
      auto g = grid(nx);
      std::size_t total = 0, bad = 0;
      for (const auto& f : g)
        for (const auto& h : g) {
          ++total;
          if (zero_set(combine(f, h, *s.provider, s.host)) != common_zeros({f, h})) ++bad;
        }
      property("combine/" + s.provider->name() + "/" + s.host.name() + "/" + x_name(nx),
               "finite " + x_name(nx) + " " + s.host.name(), bad == 0,
               std::to_string(total) + " pairs, " + std::to_string(bad) + " mismatches");
    }
  }
}

void Runner::origin() {
  std::vector<HostField> hosts{HostField::ordered(), HostField::padic(3), HostField::padic(5)};
  std::vector<std::shared_ptr<const UVProvider>> providers{
      sum_of_squares_provider(),
      std::make_shared<FormProvider>(homogenize(Poly({1, 1, 1}))),
      std::make_shared<FormProvider>(homogenize(Poly({-2, 0, 0, 1}))),
      std::make_shared<ValuedProvider>(HostField::padic(3)),
      std::make_shared<ValuedProvider>(HostField::padic(5))};
  for (const auto& host : hosts)
    for (const auto& p : providers) {
      if (!p->compatible(host)) continue;
      auto form = std::dynamic_pointer_cast<const FormProvider>(p);
      std::size_t total = 0, bad = 0;
      for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
          if (a == 0 && b == 0) continue;
          ++total;
          auto [u, v] = p->uv(a, b);
          bool zero = a * u + b * v == 0;
          if (form && form->forms().q.eval(a, b) == 0) zero = true;
          if (zero) ++bad;
        }
      property("origin/" + p->name() + "/" + host.name(), host.name(), bad == 0,
               std::to_string(total) + " points, " + std::to_string(bad) + " zeros off the origin");
    }
}

std::vector<Rational> symmetric(long k, const PreorderedGroup& g, const Rational& tau) {
  std::vector<Rational> out;
  for (long i = -k; i <= k; ++i) out.push_back(g.additive() ? Rational(i * tau) : pow_int(tau, i));
  std::sort(out.begin(), out.end());
  return out;
}

void chunk_enumeration(Runner& r, const std::string& id, long n, const PreorderedGroup& g, const Rational& tau) {
  auto e = enumerate_chunks(n, g, tau);
  std::set<long> found;
  bool only_intervals = true;
  for (const auto& c : e.chunks) {
    auto k = classify_finite_chunk(c, g);
    bool ok = k && c.T == symmetric(*k, g, tau);
    only_intervals = only_intervals && ok;
    if (k) found.insert(*k);
    r.property(id + "/" + to_string(c), g.name(), ok, k ? "symmetric interval k=" + std::to_string(*k) : "unclassified");
  }
  std::set<long> want;
  for (long k = 1; k <= n; ++k) want.insert(k);
  r.property(id + "/exact", g.name(), only_intervals && found == want && e.chunks.size() == want.size(),
             "examined " + std::to_string(e.examined) + " subsets, found " + std::to_string(e.chunks.size()) +
                 " chunks");
}

void chunk_case(Runner& r, const std::string& id, const ChunkCandidate& c, const PreorderedGroup& g, bool expect,
                int clause) {
  auto chk = is_chunk(c, g);
  r.add([&](CaseResult& out) {
    out.id = id;
    out.formula = to_string(c);
    out.model = g.name();
    out.verdict = verdict_text(chk.ok);
    out.expected = verdict_text(expect);
    out.strict = true;
    out.detail = chk.ok ? "chunk" : "clause " + std::to_string(chk.clause) + ": " + chk.detail;
    if (!expect && chk.clause != clause) out.verdict = "Unknown";
  });
}

void Runner::chunks_n8() {
  auto z = PreorderedGroup::integers();
  chunk_enumeration(*this, "chunks-n8", 8, z, 1);
  chunk_case(*this, "chunks-n8/one-sided", make_candidate({0, 1, 2}, 1), z, false, 1);
  chunk_case(*this, "chunks-n8/gap", make_candidate({-3, -1, 0, 1, 3}, 1), z, false, 2);
  auto q = PreorderedGroup::rationals();
  chunk_case(*this, "chunks-n8/rationals-interval", make_candidate({-2, -1, 0, 1, 2}, 1), q, true, 0);
  chunk_case(*this, "chunks-n8/rationals-halves", make_candidate({-1, Rational(-1, 2), 0, Rational(1, 2), 1}, 1), q,
             false, 3);
}

void Runner::chunks_mult() {
  auto host = HostField::padic(3);
  auto g = PreorderedGroup::multiplicative(host);
  chunk_enumeration(*this, "chunks-mult", 6, g, 3);
  // transport along the valuation
  auto z = PreorderedGroup::integers();
  for (long k = 1; k <= 6; ++k) {
    auto c = make_candidate(symmetric(k, g, 3), 3);
    auto image = to_value_group(c, g);
    auto n = classify_finite_chunk(image, z);
    property("chunks-mult/transport/k" + std::to_string(k), g.name(), n && *n == k,
             "v(T) = " + to_string(image));
  }
}

void separation(Runner& r, const std::string& id, const GermWitness& w, bool expect) {
  r.add([&](CaseResult& c) {
    auto rep = check_separated(w, make_sample_plan(w, 12));
    c.id = id;
    c.model = w.host.name() + " at " + point_string(w.p0) + " k=" + std::to_string(w.k);
    c.verdict = verdict_text(rep.all());
    c.expected = verdict_text(expect);
    c.strict = true;
    std::ostringstream d;
    d << "S1-S4 " << rep.s1 << rep.s2 << rep.s3 << rep.s4 << ", " << rep.samples << " samples";
    if (!rep.failures.empty()) d << "; " << rep.failures.front();
    c.detail = d.str();
  });
}

void Runner::germs() {
  const Point p0{0, 0};
  for (std::size_t k = 1; k <= 8; ++k) {
    const std::string ks = "/k" + std::to_string(k);
    for (const auto& host : grid_hosts()) {
      auto w = germs_open_affine(k, p0, host);
      separation(*this, "germs/affine/" + host.name() + ks, w, true);
      separation(*this, "germs/affine-mutant/" + host.name() + ks, mutate_delta(w, 0, k > 1 ? 1 : 0, Rational(1, 2)),
                 false);
    }
    auto host = HostField::padic(3);
    auto w = germs_valued_congruence(k, 0, host);
    separation(*this, "germs/congruence" + ks, w, true);
    separation(*this, "germs/congruence-mutant" + ks, mutate_delta(w, 0, k > 1 ? 1 : 0, Rational(1, 2)), false);
    separation(*this, "germs/congruence-global" + ks, globalize(w, 9, 1), true);
    // the unbounded quotient shows up as soon as there are two lines
    separation(*this, "germs/affine-as-printed" + ks,
               germs_open_affine(k, p0, HostField::ordered(), AffineVariant::AsPrinted), k == 1);
  }
}

Rational random_limit(Runner& r) {
  long num = static_cast<long>(r.draw(19)) - 9;
  long den = static_cast<long>(r.draw(4)) + 1;
  return make_rational(num, den);
}

void Runner::limits() {
  auto host = HostField::padic(3);
  for (int t = 0; t < 50; ++t) {
    std::size_t k = 1 + draw(5);
    std::vector<Rational> l;
    for (std::size_t i = 0; i < k; ++i) l.push_back(random_limit(*this));
    add([&](CaseResult& c) {
      auto w = germs_valued_congruence(k, 0, host);
      auto plan = make_sample_plan(w, 12);
      auto lp = limit_pair(w, l);
      std::set<Rational> want(l.begin(), l.end());
      auto got = limit_values(lp.f, lp.g, w, plan);
      SymbolicGermModel m(w, 3, 12);
      auto via_model = m.limit_set(m.function(lp.f, ZeroInfo::unknown()), m.function(lp.g, ZeroInfo::point()), m.s_all());
      bool ok = std::set<Rational>(got.begin(), got.end()) == want && got.size() == want.size() && via_model &&
                *via_model == want;
      c.id = "limits/" + std::to_string(t);
      std::string ls;
      for (const auto& x : l) ls += (ls.empty() ? "" : " ") + to_string(x);
      c.formula = "L(f/g) for l = (" + ls + ")";
      c.model = m.describe();
      c.verdict = verdict_text(ok);
      c.expected = "Holds";
      c.strict = true;
      std::string gs;
      for (const auto& x : got) gs += (gs.empty() ? "" : " ") + to_string(x);
      c.detail = "limit values {" + gs + "}";
    });
  }
}

// Random L_ring + O formulas of quantifier depth at most 2.
class FormulaGen {
 public:
  explicit FormulaGen(Runner& r) : r_(r) {}

  Term term(const std::vector<std::string>& vars, int size) {
    if (size <= 1) {
      std::size_t pick = r_.draw(vars.size() + 3);
      if (pick < vars.size()) return var(vars[pick]);
      if (pick == vars.size()) return zero();
      if (pick == vars.size() + 1) return one();
      return numeral(r_.draw(2) ? 2 : -1);
    }
    switch (r_.draw(4)) {
      case 0: return add(term(vars, size / 2), term(vars, size - size / 2));
      case 1: return mul(term(vars, 1), term(vars, size - 1));
      case 2: return sub(term(vars, size / 2), term(vars, size - size / 2));
      default: return neg(term(vars, size - 1));
    }
  }

  Formula atom(const std::vector<std::string>& vars) {
    if (r_.draw(3) == 0) return in_O(term(vars, 1 + static_cast<int>(r_.draw(3))));
    return eq(term(vars, 1 + static_cast<int>(r_.draw(3))), term(vars, 1 + static_cast<int>(r_.draw(2))));
  }

  Formula formula(std::vector<std::string> vars, int qdepth, int size) {
    if (size <= 1) return atom(vars);
    std::size_t choices = qdepth > 0 ? 6 : 4;
    switch (r_.draw(choices)) {
      case 0: return lnot(formula(vars, qdepth, size - 1));
      case 1: return land(formula(vars, qdepth, size / 2), formula(vars, qdepth, size - size / 2));
      case 2: return lor(formula(vars, qdepth, size / 2), formula(vars, qdepth, size - size / 2));
      case 3: return imp(formula(vars, qdepth, size / 2), formula(vars, qdepth, size - size / 2));
      default: {
        std::string v = qdepth == 2 ? "y" : "t";
        bool ex = r_.draw(2) == 0;
        vars.push_back(v);
        Formula body = formula(vars, qdepth - 1, size - 1);
        return ex ? exists(v, body) : forall(v, body);
      }
    }
  }

 private:
  Runner& r_;
};

void Runner::lifting() {
  FormulaGen gen(*this);
  const std::vector<Rational> values{-2, -1, 0, 1, 2, Rational(1, 3), 3};
  for (int t = 0; t < 200; ++t) {
    Formula phi = gen.formula({"a", "b"}, 2, 2 + static_cast<int>(draw(5)));
    std::size_t nx = 1 + draw(3);
    HostField host = grid_hosts()[draw(2)];
    FiniteRingModel m(PointSetX::numbered(nx), host);
    std::map<std::string, RingElement> h;
    for (const char* name : {"a", "b"}) {
      RingElement e;
      for (std::size_t i = 0; i < nx; ++i) e.values.push_back(values[draw(values.size())]);
      h[name] = e;
    }
    RingElement s;
    for (std::size_t i = 0; i < nx; ++i) s.values.push_back(Rational(draw(3) == 0 ? 1 : 0));
    add([&](CaseResult& c) {
      Formula lifted = lift(phi, "s");
      c.id = "lifting/" + std::to_string(t);
      c.formula = print_formula(phi);
      c.model = m.describe() + "; a=" + h["a"].to_string() + " b=" + h["b"].to_string() + " s=" + s.to_string();
      c.expected = verdict_text(pointwise_lift_oracle(phi, m, h, s, eval_options()));
      Env env{{"a", Value{h["a"]}}, {"b", Value{h["b"]}}, {"s", Value{s}}};
      eval_case(c, lifted, m, env, eval_options());
    });
  }
}

void Runner::int_times() {
  const HostField host = HostField::padic(3);
  const Rational tau = 3;
  const Schema schema = int_times_schema();
  auto run = [&](const std::string& id, const Rational& h0, long n) {
    add([&](CaseResult& c) {
      auto w = germs_valued_congruence(static_cast<std::size_t>(2 * n + 1), 0, host);
      SymbolicGermModel m(w, tau, 12);
      std::vector<Rational> limits;
      for (long e = -n; e <= n; ++e) limits.push_back(pow_int(tau, e));
      auto lp = limit_pair(w, limits);
      EvalOptions o = eval_options();
      o.hints["f"] = {m.function(lp.f, ZeroInfo::unknown())};
      o.hints["g"] = {m.function(lp.g, ZeroInfo::point())};
      o.hints["s"] = {m.s_all()};
      o.block_budget = 512;
      Value h = m.constant(h0);
      Env env{{"h", h}, {"p", m.at_point()}, {kTau, m.tau_star()}};
      c.id = id;
      c.formula = "int-times(h, p, tau*)";
      c.model = m.describe() + "; h(p0)=" + to_string(h0);
      bool truth = oracle_int_times(h, m);
      c.expected = verdict_text(truth);
      eval_case(c, schema.body, m, env, o);
      // a true case must be certified by the explicit witnesses
      c.strict = truth;
    });
  };
  for (long e = -9; e <= 10; ++e) run("int-times/true/" + std::to_string(e), pow_int(tau, e), std::max(1L, std::labs(e)));
  const std::vector<Rational> falses{2, 5, 6, 18, Rational(1, 2), Rational(2, 3), -3, -1, -9, 4,
                                     7, 10, 12, 15, Rational(1, 6), Rational(9, 2), 81 * 2, Rational(5, 27), 28, 30};
  for (std::size_t i = 0; i < falses.size(); ++i)
    run("int-times/false/" + to_string(falses[i]), falses[i], 4);
}

void Runner::z_interp() {
  struct Setup {
    HostField host;
    Rational tau;
  };
  for (const auto& s : {Setup{HostField::padic(3), 3}, Setup{HostField::ordered(), Rational(1, 2)}}) {
    for (long k = -6; k <= 6; ++k)
      for (long l = -6; l <= 6; ++l) {
        auto z = oracle_z_interp(pow_int(s.tau, l), pow_int(s.tau, k), s.tau, s.host);
        bool divides = k == 0 ? l == 0 : l % k == 0;
        bool ok = z.sigma_f == l && z.sigma_g == k && z.sum == l + k && z.order == (l >= k) &&
                  z.abs_order == z.order && z.divides == divides;
        property("z-interp/" + s.host.name() + "/l" + std::to_string(l) + "/k" + std::to_string(k),
                 s.host.name() + " tau=" + to_string(s.tau), ok,
                 "sigma " + std::to_string(z.sigma_f) + "," + std::to_string(z.sigma_g) + " sum " +
                     std::to_string(z.sum) + (z.divides ? " divides" : ""));
      }
  }
}

const std::vector<std::pair<std::string, void (Runner::*)()>>& registry() {
  static const std::vector<std::pair<std::string, void (Runner::*)()>> r{
      {"jacobson", &Runner::jacobson},     {"combine", &Runner::combine_suite}, {"origin", &Runner::origin},
      {"chunks-n8", &Runner::chunks_n8},   {"chunks-mult", &Runner::chunks_mult}, {"germs", &Runner::germs},
      {"limits", &Runner::limits},         {"lifting", &Runner::lifting},     {"int-times", &Runner::int_times},
      {"z-interp", &Runner::z_interp},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.push_back("empty");
  out.push_back("all");
  return out;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  Report r{name, opt, {}};
  if (name == "empty") return r;
  bool found = false;
  for (const auto& [n, fn] : registry()) {
    if (name != "all" && name != n) continue;
    found = true;
    // every suite starts from the same seed, so "all" repeats the single runs
    Runner runner(opt, r.cases);
    (runner.*fn)();
  }
  if (!found) throw std::invalid_argument("unknown suite " + name);
  return r;
}

std::string to_json(const Report& r, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.options.seed;
  j["depth"] = r.options.depth;
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) {
    ordered_json e;
    e["id"] = c.id;
    e["formula"] = c.formula;
    e["model"] = c.model;
    e["verdict"] = c.verdict;
    if (!c.expected.empty()) e["expected"] = c.expected;
    e["status"] = status_name(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (r.options.timings) e["millis"] = c.millis;
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  auto s = r.summary();
  j["summary"] = {{"cases", s.cases},
                  {"holds", s.holds},
                  {"fails", s.fails},
                  {"unknown", s.unknown},
                  {"agree", s.agree},
                  {"disagree", s.disagree},
                  {"soundness_violations", s.soundness_violations},
                  {"property_failures", s.property_failures},
                  {"ok", r.ok()}};
  return j.dump(indent) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.cases) {
    if (c.status == CaseStatus::Agree) continue;
    out << status_name(c.status) << " " << c.id << ": " << c.verdict;
    if (!c.expected.empty()) out << " (expected " << c.expected << ")";
    if (!c.detail.empty()) out << " " << c.detail;
    out << "\n";
  }
  auto s = r.summary();
  out << r.suite << " seed=" << r.options.seed << " depth=" << r.options.depth << ": " << s.cases << " cases, "
      << s.agree << " agree, " << s.unknown << " unknown, " << s.soundness_violations << " soundness violations, "
      << s.property_failures << " property failures -> " << (r.ok() ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace ringdef
