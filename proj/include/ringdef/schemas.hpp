#pragma once

#include <string>
#include <vector>

#include "ringdef/formula.hpp"

namespace ringdef {

struct Schema {
  std::string name;
  std::vector<std::string> params;
  Formula body;
  Language language = Language::Ring;
  std::string note;
};

// Replaces the params by `args` simultaneously, renaming bound variables
// where an argument would be captured. Throws on an arity mismatch.
Formula instantiate(const Schema& s, const std::vector<Term>& args);

// Parameter names of the ring parameters shared by the schemas.
inline const std::string kTau = "tau*";

// ∀x ∃y1..yn ∃z ((1 + x·g)·z = 1 + y1·f1 + ... + yn·fn), params f1..fn, g.
Schema jac_membership(int n);
// f ⊑ g: the n = 1 instance, params f, g.
Schema sqsubseteq();
// ∃w (f·w = 1)
Schema unit_schema();

struct PointInterIsol {
  Schema point;  // f
  Schema inter;  // f, g, h
  Schema isol;   // s, p
};
PointInterIsol point_inter_isol();

// Lifts an L_ring+O formula to [phi](free vars of phi, s). Throws
// std::invalid_argument on an atom outside the two supported shapes or when
// `s` already occurs in phi.
Formula lift(const Formula& phi, const std::string& s = "s");

struct ComparisonPair {
  Schema weak;    // f, g, s
  Schema strict;  // f, g, s
};
// |f| ≤_s |g| and |f| <_s |g|.
ComparisonPair bounded_comparisons();
// f ≼_s g and f ≺_s g for the order given by sums of four squares.
ComparisonPair order_comparisons();

Schema chi_schema();    // g, s, p
Schema limit_schema();  // f, g, h, s, p

Schema psi_sigma();     // f, g, s, p, alpha, alpha', beta, gamma, tau*
Schema limch_times();   // f, g, s, p, tau*
Schema limbch_times();  // f, g, s, p, tau*
Schema int_times_schema();  // h, p, tau*

Schema phi_sigma();     // f, g, s, p, alpha, beta, gamma, tau*
Schema limch_plus();
Schema limbch_plus();
Schema int_plus_schema();   // h, p, tau*

// g ⋐ f, params f, g.
Schema strong_order_schema();

struct ChiPair {
  Schema at_least;  // χ_{≥k}(p)
  Schema exact;     // χ_k(p)
};
ChiPair chi_k_schema(int k);

// Z_k(h, tau*); k >= 1. The additive flag selects Int^+.
Schema z_k_schema(int k, bool additive = false);
// Z_k with tau* replaced by the numeral for tau, leaving h as the only parameter.
Schema z_k_with_numeral(int k, long tau, bool additive = false);

// Domain, equality, addition graph, order, divisibility.
std::vector<Schema> z_interpretation();

// Lookup for the command line; names are case-insensitive. Throws
// std::invalid_argument for an unknown name or a wrong argument count.
Schema schema_by_name(const std::string& name, const std::vector<int>& args);
std::vector<std::string> schema_names();

}  // namespace ringdef
