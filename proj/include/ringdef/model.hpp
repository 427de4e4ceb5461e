#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ringdef/function_ring.hpp"
#include "ringdef/germs.hpp"

namespace ringdef {

// Zero set of a function near p0. Germ{B} is {p0} together with the branches
// S_i, i in B; Germ{} is the single point p0.
struct ZeroInfo {
  enum class Kind { Empty, Germ, All, Unknown };
  Kind kind = Kind::Unknown;
  std::set<std::size_t> branches;

  static ZeroInfo empty() { return {Kind::Empty, {}}; }
  static ZeroInfo point() { return {Kind::Germ, {}}; }
  static ZeroInfo germ(std::set<std::size_t> b) { return {Kind::Germ, std::move(b)}; }
  static ZeroInfo all() { return {Kind::All, {}}; }
  static ZeroInfo unknown() { return {Kind::Unknown, {}}; }
  bool known() const { return kind != Kind::Unknown; }
  bool operator==(const ZeroInfo& o) const { return kind == o.kind && branches == o.branches; }
  std::string to_string() const;
};

ZeroInfo zero_union(const ZeroInfo& a, const ZeroInfo& b);
ZeroInfo zero_intersection(const ZeroInfo& a, const ZeroInfo& b);
// nullopt when the answer needs more than the annotations.
std::optional<bool> zero_subset(const ZeroInfo& a, const ZeroInfo& b);

struct GermFn {
  FnRef fn;
  ZeroInfo zero;
  std::optional<Rational> constant;
};
using GermRef = std::shared_ptr<const GermFn>;

struct Value {
  std::variant<Rational, RingElement, GermRef> v;

  const Rational& scalar() const { return std::get<Rational>(v); }
  const RingElement& ring() const { return std::get<RingElement>(v); }
  const GermRef& germ() const { return std::get<GermRef>(v); }
};

enum class ModelKind { FiniteRing, SymbolicGerm, Scalar };

enum class MacroKind {
  Sq,
  Unit,
  Point,
  Inter,
  LeqS,
  LtS,
  PrecS,
  PrecStrictS,
  StrongOrder,
  Limit,
  LimBChTimes,
  LimBChPlus
};
const char* macro_name(MacroKind k);

class Model {
 public:
  virtual ~Model() = default;
  virtual ModelKind kind() const = 0;
  virtual std::string describe() const = 0;
  const HostField& host() const { return host_; }

  virtual Value constant(const Rational& c) const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;

  virtual Tri eq(const Value& a, const Value& b) const = 0;
  virtual Tri in_O(const Value& a) const;
  virtual Tri in_B(const Value& a) const;
  // Semantic meaning of a recognized schema instance; nullopt when the model
  // has no meaning for it and the body must be evaluated as written.
  virtual std::optional<Tri> macro(MacroKind k, const std::vector<Value>& args) const;
  // Base witness pool, before sums and products are added.
  virtual std::vector<Value> pool() const = 0;
  virtual std::string show(const Value& a) const = 0;

 protected:
  explicit Model(HostField host) : host_(host) {}
  HostField host_;
};

// K itself, with O as the only predicate; used for the pointwise reading of
// L_ring+O formulas.
class ScalarModel : public Model {
 public:
  explicit ScalarModel(HostField host) : Model(host) {}
  ModelKind kind() const override { return ModelKind::Scalar; }
  std::string describe() const override;
  Value constant(const Rational& c) const override { return {c}; }
  Value add(const Value& a, const Value& b) const override { return {Rational(a.scalar() + b.scalar())}; }
  Value neg(const Value& a) const override { return {Rational(-a.scalar())}; }
  Value mul(const Value& a, const Value& b) const override { return {Rational(a.scalar() * b.scalar())}; }
  Tri eq(const Value& a, const Value& b) const override;
  Tri in_O(const Value& a) const override;
  std::vector<Value> pool() const override;
  std::string show(const Value& a) const override { return to_string(a.scalar()); }
};

// (K^X, B) for a finite discrete X; B is the set of O-valued functions.
class FiniteRingModel : public Model {
 public:
  FiniteRingModel(PointSetX x, HostField host) : Model(host), x_(std::move(x)) {}
  ModelKind kind() const override { return ModelKind::FiniteRing; }
  std::string describe() const override;
  const PointSetX& points() const { return x_; }
  std::size_t size() const { return x_.size(); }

  Value constant(const Rational& c) const override { return {RingElement::constant(size(), c)}; }
  Value add(const Value& a, const Value& b) const override { return {a.ring() + b.ring()}; }
  Value neg(const Value& a) const override { return {-a.ring()}; }
  Value mul(const Value& a, const Value& b) const override { return {a.ring() * b.ring()}; }
  Tri eq(const Value& a, const Value& b) const override;
  Tri in_B(const Value& a) const override;
  std::optional<Tri> macro(MacroKind k, const std::vector<Value>& args) const override;
  std::vector<Value> pool() const override;
  std::string show(const Value& a) const override { return a.ring().to_string(); }

  // One function per subset Z of X: 0 on Z, 1 elsewhere.
  std::vector<Value> zero_set_representatives() const;
  Value element(std::vector<Rational> values) const;

 private:
  PointSetX x_;
};

// Functions on K^m near p0, given by piecewise expressions and zero-set
// annotations. Equality and B-membership are certified at the sampled points
// only; the other atoms go through the annotations.
class SymbolicGermModel : public Model {
 public:
  SymbolicGermModel(GermWitness w, Rational tau, int depth);
  ModelKind kind() const override { return ModelKind::SymbolicGerm; }
  std::string describe() const override;
  const GermWitness& witness() const { return w_; }
  const SamplePlan& plan() const { return plan_; }
  const Rational& tau() const { return tau_; }

  Value constant(const Rational& c) const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Tri eq(const Value& a, const Value& b) const override;
  Tri in_B(const Value& a) const override;
  std::optional<Tri> macro(MacroKind k, const std::vector<Value>& args) const override;
  std::vector<Value> pool() const override;
  std::string show(const Value& a) const override;

  Value function(FnRef fn, ZeroInfo zero) const;
  Value tau_star() const { return constant(tau_); }
  // ν(x - p0): zero exactly at p0.
  Value at_point() const;
  Value s(std::size_t i) const;
  Value delta(std::size_t i) const;
  // Product of all s_i: zero set is p0 and every branch.
  Value s_all() const;
  Rational at_p0(const Value& a) const;
  // Limit values of f/g along the branches in the zero set of s; nullopt when
  // they cannot be read off the samples.
  std::optional<std::set<Rational>> limit_set(const Value& f, const Value& g, const Value& s) const;

 private:
  Tri chi(const Value& g, const Value& s, const Value& p) const;
  std::vector<Point> sample_points() const;

  GermWitness w_;
  Rational tau_;
  SamplePlan plan_;
};

}  // namespace ringdef
