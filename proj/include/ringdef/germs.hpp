#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringdef/host.hpp"
#include "ringdef/region.hpp"

namespace ringdef {

enum class ExprKind { Const, Coord, Add, Sub, Mul, Div, Neg, NuM, Min, Max, Abs, Indicator, Call };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;
class PiecewiseFn;
using FnRef = std::shared_ptr<const PiecewiseFn>;

struct ExprNode {
  ExprKind kind;
  Rational c;
  std::size_t index = 0;
  std::vector<Expr> args;
  Region region;
  FnRef fn;
};

Expr e_const(const Rational& c);
Expr e_coord(std::size_t i);
Expr e_add(Expr a, Expr b);
Expr e_sub(Expr a, Expr b);
Expr e_mul(Expr a, Expr b);
Expr e_div(Expr a, Expr b);
Expr e_neg(Expr a);
Expr e_nu(std::vector<Expr> args);
Expr e_min(Expr a, Expr b);
Expr e_max(Expr a, Expr b);
Expr e_abs(Expr a);
Expr e_indicator(Region r);
// fn evaluated at the point whose coordinates are args
Expr e_call(FnRef fn, std::vector<Expr> args);
// fn at the current point
Expr e_apply(FnRef fn, std::size_t dim);
// x - a, coordinatewise
std::vector<Expr> e_shift(const Point& a);

// Division by zero, or min/max/abs on a valued host.
class EvalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Rational eval(const Expr& e, const Point& x, const HostField& host);

// First-match piecewise function on Q^dim.
class PiecewiseFn {
 public:
  PiecewiseFn(std::string name, std::size_t dim, HostField host, std::vector<std::pair<Region, Expr>> cases,
              Expr fallback);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const HostField& host() const { return host_; }
  const std::vector<std::pair<Region, Expr>>& cases() const { return cases_; }
  const Expr& fallback() const { return fallback_; }

  Rational operator()(const Point& x) const;
  // Index of the firing case, cases().size() for the fallback.
  std::size_t firing_case(const Point& x) const;

 private:
  std::string name_;
  std::size_t dim_;
  HostField host_;
  std::vector<std::pair<Region, Expr>> cases_;
  Expr fallback_;
};

FnRef make_fn(std::string name, std::size_t dim, HostField host, std::vector<std::pair<Region, Expr>> cases,
              Expr fallback);
FnRef make_fn(std::string name, std::size_t dim, HostField host, Expr body);

struct DiracFunctions {
  FnRef at_point;    // zero set {a}
  FnRef ball;        // zero set B
  FnRef outside;     // zero set the complement of B0
  FnRef plateau;     // vanishes off B0, equals 1 exactly on B
};

// B is the closed ball around a of radius r_b, B0 the open ball of radius
// r_0. Throws std::invalid_argument unless B ⊆ B0, i.e. |r_b| < |r_0|.
DiracFunctions dirac_functions(const Point& a, const Rational& r_b, const Rational& r_0, const HostField& host);

// Points p0 + t·direction with t = unit·scale(offset + stride·n).
struct BranchSampler {
  Point direction;
  long offset = 0;
  long stride = 1;
};

struct GermWitness {
  Point p0;
  HostField host = HostField::ordered();
  std::vector<FnRef> s_list;
  std::vector<FnRef> delta_list;
  std::size_t k = 0;
  std::vector<BranchSampler> branches;
  std::vector<Point> off_directions;
  // S_i without p0, as regions.
  std::vector<Region> branch_sets;
  // When set, branch samples outside it are not on the branch.
  std::optional<Region> support;
};

enum class AffineVariant { Bounded, AsPrinted };

// Lines L_i through p0 with direction e_1 + i·e_r and H = {x_r = p0_r}.
// AsPrinted keeps the quotient s_j(x)/s_j(σ_i(x)) (set to 0 on H, where it
// is undefined); Bounded replaces it by a ratio bounded by 1.
GermWitness germs_open_affine(std::size_t k, const Point& p0, const HostField& host = HostField::ordered(),
                              AffineVariant variant = AffineVariant::Bounded);

// S_i = {v(x - p0) ≡ i mod k, v(x - p0) >= 0}.
GermWitness germs_valued_congruence(std::size_t k, const Rational& p0, const HostField& host);

struct Sample {
  Point x;
  long scale = 0;
};

struct SamplePlan {
  int depth = 0;
  std::vector<std::vector<Sample>> branch;  // per branch
  std::vector<Sample> off;
};

Rational scale_value(const HostField& host, long j);
SamplePlan make_sample_plan(const GermWitness& w, int depth);

struct SeparationReport {
  bool s1 = false;
  bool s2 = false;
  bool s3 = false;
  bool s4 = false;
  std::string s4_bound;
  std::vector<std::string> failures;
  std::size_t samples = 0;

  bool all() const { return s1 && s2 && s3 && s4; }
};

// Throws std::invalid_argument on an empty plan.
SeparationReport check_separated(const GermWitness& w, const SamplePlan& plan);

// Returns δ_i with the value `value` forced on branch j.
GermWitness mutate_delta(const GermWitness& w, std::size_t i, std::size_t j, const Rational& value);
// Replaces s_i by a function whose only zero is p0.
GermWitness isolate_zero(const GermWitness& w, std::size_t i);

// Ambient witness from one on a neighbourhood, using the closed ball B of
// radius r_b and open ball B0 of radius r_0 around p0.
GermWitness globalize(const GermWitness& w, const Rational& r_b, const Rational& r_0);

// f = Σ l_i δ_i p and g = p with p the Dirac function of p0.
struct LimitPair {
  FnRef f;
  FnRef g;
};
LimitPair limit_pair(const GermWitness& w, const std::vector<Rational>& limits);

// Sorted distinct values of f/g along the branches. Throws
// std::invalid_argument if g vanishes at a branch sample or f/g is not
// constant on some sampled branch.
std::vector<Rational> limit_values(const FnRef& f, const FnRef& g, const GermWitness& w, const SamplePlan& plan);

// Local dimension of a finite union of boxes and affine pieces; nullopt is
// minus infinity. Throws std::invalid_argument for other region kinds.
std::optional<int> local_dim_oracle(const std::vector<Region>& pieces, const Point& x,
                                    const HostField& host = HostField::ordered());
// Dimension of a piece: nondegenerate sides of a box, rank of an affine piece.
int piece_dim(const Region& piece);
int set_dim(const std::vector<Region>& pieces);
// Whether x has a chart of dimension k. nullopt when several pieces meet at x.
std::optional<bool> in_w_k(const std::vector<Region>& pieces, const Point& x, int k,
                           const HostField& host = HostField::ordered());
// Coordinate projection of boxes.
std::vector<Region> project_boxes(const std::vector<Region>& pieces, const std::vector<std::size_t>& coords);
// For x of local dimension k, looks for W_k points at distances 2^-j, j < depth.
bool w_k_dense_near(const std::vector<Region>& pieces, const Point& x, int k, int depth);

std::string to_json(const GermWitness& w);
std::string to_json(const SamplePlan& plan);
std::string to_json(const SeparationReport& r);

}  // namespace ringdef
