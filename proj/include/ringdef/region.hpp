#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringdef/host.hpp"

namespace ringdef {

using Point = std::vector<Rational>;

std::string point_string(const Point& x);

enum class RegionKind {
  All,
  ClosedBall,    // ‖x - center‖ <= |radius|
  OpenBall,      // ‖x - center‖ < |radius|
  Complement,
  Intersection,
  Union,
  ValCongruence, // x != base, v(‖x - base‖) >= floor, v ≡ residue mod modulus
  AffinePiece,   // base + span(directions)
  Singleton,
  Box,           // lo_i <= x_i <= hi_i, ordered host only
};

struct RegionNode;
using Region = std::shared_ptr<const RegionNode>;

struct RegionNode {
  RegionKind kind;
  Point center;  // balls, congruence base, affine base, singleton, box lo
  Point upper;   // box hi
  Rational radius;
  long residue = 0;
  long modulus = 1;
  long floor = 0;
  std::vector<Point> directions;
  std::vector<Region> parts;
};

Region region_all();
Region closed_ball(Point center, Rational radius);
Region open_ball(Point center, Rational radius);
Region complement(Region r);
Region intersection(std::vector<Region> parts);
Region region_union(std::vector<Region> parts);
Region val_congruence(Point base, long residue, long modulus, long floor);
Region affine_piece(Point base, std::vector<Point> directions);
Region singleton(Point x);
Region box(Point lo, Point hi);

// Exact membership. Throws std::invalid_argument on a dimension mismatch or a
// region kind that does not fit the host.
bool contains(const Region& r, const Point& x, const HostField& host);

std::string describe(const Region& r);

// Rank of a list of rational vectors.
std::size_t rank(const std::vector<Point>& vectors);

}  // namespace ringdef
