#pragma once

#include <span>
#include <vector>

#include "updp/rational.hpp"

namespace updp {

struct Point {
  Rat x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

struct Segment {
  Point a, b;
};

// Classification of a point against a strictly y-monotone path.
enum class Side { Right, Left, On, OutOfRange };

const char* to_string(Side s);

// Sign of (b-a) x (c-a): +1 when c is left of the directed line a->b, -1 when
// right, 0 when collinear.
int orient(const Point& a, const Point& b, const Point& c);

// x-values where the polyline meets the horizontal line at height y, in
// ascending order. The polyline must be strictly y-monotone increasing, so the
// result has at most one element; empty when y lies outside its y-range.
std::vector<Rat> horizontal_crossings(std::span<const Point> polyline, const Rat& y);

// True iff p lies on the closed segment s.
bool point_on_segment(const Point& p, const Segment& s);

// True iff the segments meet in a point interior to both, or overlap in more
// than one point. Sharing a single endpoint is not a crossing, nor is an
// endpoint of one lying in the interior of the other.
bool segments_properly_cross(const Segment& s, const Segment& t);

// Decides p against the open regions right/left of a strictly y-monotone path.
// The y-range of the path is inclusive on both ends.
Side point_side(const Point& p, std::span<const Point> path);

}  // namespace updp
