#include "updp/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace updp {

const char* to_string(Side s) {
  switch (s) {
    case Side::Right: return "RIGHT";
    case Side::Left: return "LEFT";
    case Side::On: return "ON";
    case Side::OutOfRange: return "OUT_OF_RANGE";
  }
  return "?";
}

int orient(const Point& a, const Point& b, const Point& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

std::vector<Rat> horizontal_crossings(std::span<const Point> polyline, const Rat& y) {
  if (polyline.empty()) return {};
  const Rat& ymin = polyline.front().y;
  const Rat& ymax = polyline.back().y;
  if (y < ymin || y > ymax) return {};
  for (size_t i = 0; i < polyline.size(); ++i) {
    if (polyline[i].y == y) return {polyline[i].x};
    if (i + 1 < polyline.size() && polyline[i].y < y && y < polyline[i + 1].y) {
      const Point& a = polyline[i];
      const Point& b = polyline[i + 1];
      Rat t = (y - a.y) / (b.y - a.y);
      return {a.x + t * (b.x - a.x)};
    }
  }
  return {};
}

bool point_on_segment(const Point& p, const Segment& s) {
  if (orient(s.a, s.b, p) != 0) return false;
  if (s.a.x != s.b.x) {
    const Rat& lo = std::min(s.a.x, s.b.x);
    const Rat& hi = std::max(s.a.x, s.b.x);
    return lo <= p.x && p.x <= hi;
  }
  const Rat& lo = std::min(s.a.y, s.b.y);
  const Rat& hi = std::max(s.a.y, s.b.y);
  return lo <= p.y && p.y <= hi;
}

bool segments_properly_cross(const Segment& s, const Segment& t) {
  const Point &a = s.a, &b = s.b, &c = t.a, &d = t.b;
  int o1 = orient(a, b, c);
  int o2 = orient(a, b, d);
  int o3 = orient(c, d, a);
  int o4 = orient(c, d, b);

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // all four endpoints on one line: crossing iff the overlap is a segment
    bool use_x = !(a.x == b.x && c.x == d.x);
    auto coord = [&](const Point& p) { return use_x ? p.x : p.y; };
    Rat lo1 = std::min(coord(a), coord(b)), hi1 = std::max(coord(a), coord(b));
    Rat lo2 = std::min(coord(c), coord(d)), hi2 = std::max(coord(c), coord(d));
    return std::max(lo1, lo2) < std::min(hi1, hi2);
  }

  return o1 * o2 < 0 && o3 * o4 < 0;
}

Side point_side(const Point& p, std::span<const Point> path) {
  assert(!path.empty());
  if (p.y < path.front().y || p.y > path.back().y) return Side::OutOfRange;
  std::vector<Rat> xs = horizontal_crossings(path, p.y);
  assert(xs.size() == 1);
  if (xs[0] == p.x) return Side::On;
  return xs[0] < p.x ? Side::Right : Side::Left;
}

}  // namespace updp
