#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringdef/host.hpp"
#include "ringdef/rational.hpp"

namespace ringdef {

enum class GroupKind { Integers, Rationals, Multiplicative };

// (Z,+,<=), (Q,+,<=), or (K^x, *, <=_O) with x <=_O y iff |x| <= |y| on a
// p-adic host.
class PreorderedGroup {
 public:
  static PreorderedGroup integers();
  static PreorderedGroup rationals();
  static PreorderedGroup multiplicative(const HostField& host);

  GroupKind kind() const { return kind_; }
  const HostField& host() const { return host_; }
  bool additive() const { return kind_ != GroupKind::Multiplicative; }
  std::string name() const;

  bool contains(const Rational& x) const;
  Rational op(const Rational& a, const Rational& b) const;
  Rational identity() const;
  Rational inverse(const Rational& a) const;
  bool le(const Rational& a, const Rational& b) const;
  bool lt(const Rational& a, const Rational& b) const { return le(a, b) && !le(b, a); }
  // tau > 0 additively, |tau| < 1 multiplicatively.
  bool valid_tau(const Rational& tau) const;

 private:
  PreorderedGroup(GroupKind k, HostField h) : kind_(k), host_(h) {}
  GroupKind kind_;
  HostField host_;
};

struct ChunkCandidate {
  std::vector<Rational> T;  // kept sorted and duplicate free
  Rational tau;
};

ChunkCandidate make_candidate(std::vector<Rational> T, const Rational& tau);
std::string to_string(const ChunkCandidate& c);

struct ChunkCheck {
  bool ok = true;
  int clause = 0;  // first failing clause, 0 when ok
  std::string detail;
};

// The u of clause 3 range over a finite faithful set: the integers of
// [-gamma, gamma] for Z, the breakpoints and the gaps between them for Q,
// and p^e * unit for the multiplicative group.
// Throws std::invalid_argument when tau is not in T, tau is not positive or T
// leaves the carrier.
ChunkCheck is_chunk(const ChunkCandidate& c, const PreorderedGroup& g);

// n with T = {-n tau .. n tau} (or {tau^-n .. tau^n}), nullopt when T is not a chunk.
std::optional<long> classify_finite_chunk(const ChunkCandidate& c, const PreorderedGroup& g);

struct ChunkEnumeration {
  std::vector<ChunkCandidate> chunks;
  std::size_t examined = 0;
};

// Every T inside {-n tau .. n tau} (or the powers tau^-n .. tau^n) containing
// tau that is a chunk. Throws std::length_error when n > max_bound.
ChunkEnumeration enumerate_chunks(long n, const PreorderedGroup& g, const Rational& tau, long max_bound = 12);

// v(T) with tau mapped to v(tau) in (Z,+,<=). Throws std::invalid_argument
// when v is not injective on T.
ChunkCandidate to_value_group(const ChunkCandidate& c, const PreorderedGroup& g);

}  // namespace ringdef
