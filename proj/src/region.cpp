#include "ringdef/region.hpp"

#include <stdexcept>

#include "ringdef/scalar.hpp"

namespace ringdef {

std::string point_string(const Point& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += to_string(x[i]);
  }
  return out + ")";
}

namespace {

Region make(RegionNode n) { return std::make_shared<const RegionNode>(std::move(n)); }

Point diff(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

}  // namespace

Region region_all() { return make({RegionKind::All, {}, {}, 0, 0, 1, 0, {}, {}}); }

Region closed_ball(Point center, Rational radius) {
  if (radius == 0) throw std::invalid_argument("ball radius must be nonzero");
  RegionNode n{RegionKind::ClosedBall, std::move(center), {}, radius, 0, 1, 0, {}, {}};
  return make(std::move(n));
}

Region open_ball(Point center, Rational radius) {
  if (radius == 0) throw std::invalid_argument("ball radius must be nonzero");
  RegionNode n{RegionKind::OpenBall, std::move(center), {}, radius, 0, 1, 0, {}, {}};
  return make(std::move(n));
}

Region complement(Region r) { return make({RegionKind::Complement, {}, {}, 0, 0, 1, 0, {}, {std::move(r)}}); }

Region intersection(std::vector<Region> parts) {
  return make({RegionKind::Intersection, {}, {}, 0, 0, 1, 0, {}, std::move(parts)});
}

Region region_union(std::vector<Region> parts) {
  return make({RegionKind::Union, {}, {}, 0, 0, 1, 0, {}, std::move(parts)});
}

Region val_congruence(Point base, long residue, long modulus, long floor) {
  if (modulus < 1) throw std::invalid_argument("congruence modulus must be positive");
  long r = ((residue % modulus) + modulus) % modulus;
  return make({RegionKind::ValCongruence, std::move(base), {}, 0, r, modulus, floor, {}, {}});
}

Region affine_piece(Point base, std::vector<Point> directions) {
  for (const auto& d : directions)
    if (d.size() != base.size()) throw std::invalid_argument("direction dimension mismatch");
  return make({RegionKind::AffinePiece, std::move(base), {}, 0, 0, 1, 0, std::move(directions), {}});
}

Region singleton(Point x) { return make({RegionKind::Singleton, std::move(x), {}, 0, 0, 1, 0, {}, {}}); }

Region box(Point lo, Point hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("box corners differ in dimension");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("box with empty side");
  return make({RegionKind::Box, std::move(lo), std::move(hi), 0, 0, 1, 0, {}, {}});
}

std::size_t rank(const std::vector<Point>& vectors) {
  std::vector<Point> m = vectors;
  if (m.empty()) return 0;
  std::size_t cols = m.front().size(), r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

bool contains(const Region& r, const Point& x, const HostField& host) {
  switch (r->kind) {
    case RegionKind::All: return true;
    case RegionKind::ClosedBall:
    case RegionKind::OpenBall: {
      Point d = diff(x, r->center);
      int c = compare(norm_class(d, host), host.abs_class(r->radius));
      return r->kind == RegionKind::ClosedBall ? c <= 0 : c < 0;
    }
    case RegionKind::Complement: return !contains(r->parts.at(0), x, host);
    case RegionKind::Intersection:
      for (const auto& p : r->parts)
        if (!contains(p, x, host)) return false;
      return true;
    case RegionKind::Union:
      for (const auto& p : r->parts)
        if (contains(p, x, host)) return true;
      return false;
    case RegionKind::ValCongruence: {
      if (!host.is_valued()) throw std::invalid_argument("valuation congruence needs a valued host");
      Point d = diff(x, r->center);
      auto v = host.val(nu_m(d, host));
      if (!v) return false;
      if (*v < r->floor) return false;
      return ((*v - r->residue) % r->modulus + r->modulus) % r->modulus == 0;
    }
    case RegionKind::AffinePiece: {
      Point d = diff(x, r->center);
      std::vector<Point> with = r->directions;
      std::size_t base = rank(with);
      with.push_back(d);
      return rank(with) == base;
    }
    case RegionKind::Singleton: return diff(x, r->center) == Point(x.size(), 0);
    case RegionKind::Box: {
      if (host.is_valued()) throw std::invalid_argument("boxes need an ordered host");
      if (x.size() != r->center.size()) throw std::invalid_argument("dimension mismatch");
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < r->center[i] || x[i] > r->upper[i]) return false;
      return true;
    }
  }
  return false;
}

std::string describe(const Region& r) {
  auto join = [](const std::vector<Region>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + describe(parts[i]);
    return "(" + out + ")";
  };
  switch (r->kind) {
    case RegionKind::All: return "all";
    case RegionKind::ClosedBall: return "ball[" + point_string(r->center) + ", " + to_string(r->radius) + "]";
    case RegionKind::OpenBall: return "ball(" + point_string(r->center) + ", " + to_string(r->radius) + ")";
    case RegionKind::Complement: return "not " + describe(r->parts.at(0));
    case RegionKind::Intersection: return join(r->parts, " and ");
    case RegionKind::Union: return join(r->parts, " or ");
    case RegionKind::ValCongruence:
      return "v(x-" + point_string(r->center) + ") = " + std::to_string(r->residue) + " mod " +
             std::to_string(r->modulus) + ", >= " + std::to_string(r->floor);
    case RegionKind::AffinePiece: {
      std::string out = point_string(r->center) + " + span{";
      for (std::size_t i = 0; i < r->directions.size(); ++i) out += (i ? ", " : "") + point_string(r->directions[i]);
      return out + "}";
    }
    case RegionKind::Singleton: return "{" + point_string(r->center) + "}";
    case RegionKind::Box: return "box[" + point_string(r->center) + ", " + point_string(r->upper) + "]";
  }
  return "?";
}

}  // namespace ringdef
