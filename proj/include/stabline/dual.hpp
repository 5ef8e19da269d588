// Copyright 2026 The stabline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The plane of lines. A non-vertical line y = m*x + b is the point (m, b);
// the lines through a primal point (px, py) form the dual line
// b = -px*m + py; the lines meeting a vertical segment form a strip between
// two parallel dual lines. The transversals of a family are the intersection
// of its strips, a convex polygon.

#ifndef STABLINE_DUAL_HPP
#define STABLINE_DUAL_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "stabline/error.hpp"
#include "stabline/geometry.hpp"
#include "stabline/stabbing.hpp"

namespace stabline {

struct DualPoint {
  Rational m;
  Rational b;

  friend bool operator==(const DualPoint&, const DualPoint&) = default;
  friend auto operator<=>(const DualPoint&, const DualPoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const DualPoint& p) {
    return os << '(' << p.m << ", " << p.b << ')';
  }
};

inline DualPoint line_to_dual(const Line& l) { return {l.m, l.b}; }
inline Line dual_to_line(const DualPoint& p) { return {p.m, p.b}; }

// The dual line holding every line through p.
inline Line point_sheaf_dual(const Point& p) { return {-p.x, p.y}; }

// {(m, b) : lower <= b - slope*m <= upper}, i.e. the region between the dual
// lines b = lower + slope*m and b = upper + slope*m.
struct DualStrip {
  Rational slope;
  Rational lower;
  Rational upper;

  bool contains(const DualPoint& p) const {
    const Rational v = p.b - slope * p.m;
    return lower <= v && v <= upper;
  }
  Line lower_boundary() const { return {slope, lower}; }
  Line upper_boundary() const { return {slope, upper}; }

  friend bool operator==(const DualStrip&, const DualStrip&) = default;
};

inline DualStrip segment_strip(const VerticalSegment& s) {
  return {-s.x(), s.lo(), s.hi()};
}

enum class PolygonKind { Empty, SinglePoint, SegmentShaped, FullDimensional };

inline const char* to_string(PolygonKind k) {
  switch (k) {
    case PolygonKind::Empty: return "empty";
    case PolygonKind::SinglePoint: return "point";
    case PolygonKind::SegmentShaped: return "segment";
    case PolygonKind::FullDimensional: return "polygon";
  }
  return "?";
}

// Convex polygon in the dual plane. Vertices are distinct, listed
// counterclockwise from the lexicographically smallest (m, b), with no
// collinear triples. The kind follows from the vertex count.
class StabPolygon {
 public:
  StabPolygon() = default;

  // Convex hull of an arbitrary point set (duplicates allowed).
  static StabPolygon hull_of(std::vector<DualPoint> points);

  const std::vector<DualPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  PolygonKind kind() const {
    switch (vertices_.size()) {
      case 0: return PolygonKind::Empty;
      case 1: return PolygonKind::SinglePoint;
      case 2: return PolygonKind::SegmentShaped;
      default: return PolygonKind::FullDimensional;
    }
  }

  // Closed containment: boundary points count.
  bool contains(const DualPoint& q) const;

  friend bool operator==(const StabPolygon&, const StabPolygon&) = default;

 private:
  std::vector<DualPoint> vertices_;
};

namespace detail {

inline Rational cross(const DualPoint& o, const DualPoint& a, const DualPoint& c) {
  return (a.m - o.m) * (c.b - o.b) - (a.b - o.b) * (c.m - o.m);
}

}  // namespace detail

inline StabPolygon StabPolygon::hull_of(std::vector<DualPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  StabPolygon out;
  if (points.size() <= 2) {
    out.vertices_ = std::move(points);
    return out;
  }

  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<DualPoint> hull;
  hull.reserve(points.size() + 1);
  for (const auto& p : points) {
    while (hull.size() >= 2 &&
           detail::cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower_size = hull.size();
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (hull.size() > lower_size &&
           detail::cross(hull[hull.size() - 2], hull.back(), *it).sign() <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // the first point again

  out.vertices_ = std::move(hull);
  return out;
}

inline bool StabPolygon::contains(const DualPoint& q) const {
  switch (kind()) {
    case PolygonKind::Empty:
      return false;
    case PolygonKind::SinglePoint:
      return q == vertices_[0];
    case PolygonKind::SegmentShaped: {
      const auto& a = vertices_[0];
      const auto& c = vertices_[1];
      // a < c lexicographically, so q lies between them iff a <= q <= c.
      return detail::cross(a, c, q).is_zero() && a <= q && q <= c;
    }
    case PolygonKind::FullDimensional:
      break;
  }
  const std::size_t n = vertices_.size();
  for (std::size_t k = 0; k < n; ++k)
    if (detail::cross(vertices_[k], vertices_[(k + 1) % n], q).sign() < 0)
      return false;
  return true;
}

// The dual points of AC, AD, BC, BD, where A, B (C, D) are the lower and
// upper endpoints of s1 (s2).
inline StabPolygon two_segment_parallelogram(const VerticalSegment& s1,
                                             const VerticalSegment& s2) {
  std::vector<DualPoint> corners;
  corners.reserve(4);
  for (const Point& p : {s1.lower(), s1.upper()})
    for (const Point& q : {s2.lower(), s2.upper()})
      corners.push_back(line_to_dual(line_through(p, q)));
  return StabPolygon::hull_of(std::move(corners));
}

// All transversals of f as a dual polygon. The candidates are the two
// extreme lines plus every stabbing A_iA_j and B_iB_j; they include every
// vertex of the strip intersection, and the hull keeps exactly those.
inline StabPolygon stabbing_polygon(const SegmentFamily& f) {
  if (f.size() < 2)
    throw InsufficientSegmentsError("stabbing_polygon needs at least two segments");
  ExtremeLine r = extreme_min_ab(f);
  if (!stabs_all(r.line, f)) return {};

  std::vector<DualPoint> candidates;
  candidates.push_back(line_to_dual(r.line));
  candidates.push_back(line_to_dual(extreme_max_ba(f).line));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      Line low = line_through(f[i].lower(), f[j].lower());
      if (stabs_all(low, f)) candidates.push_back(line_to_dual(low));
      Line high = line_through(f[i].upper(), f[j].upper());
      if (stabs_all(high, f)) candidates.push_back(line_to_dual(high));
    }
  }
  return StabPolygon::hull_of(std::move(candidates));
}

// Brute force, independent of the extreme-line machinery: intersect every
// pair of non-parallel strip boundaries and return the first intersection
// point lying in every strip. The strip intersection is bounded (two strips
// of distinct slope already bound it), so it is empty iff no such point
// exists.
inline std::optional<DualPoint> oracle_feasible(const SegmentFamily& f) {
  if (f.size() < 2)
    throw InsufficientSegmentsError("oracle_feasible needs at least two segments");
  std::vector<DualStrip> strips;
  strips.reserve(f.size());
  for (const auto& s : f) strips.push_back(segment_strip(s));

  std::vector<Line> boundaries;
  boundaries.reserve(2 * strips.size());
  for (const auto& st : strips) {
    boundaries.push_back(st.lower_boundary());
    boundaries.push_back(st.upper_boundary());
  }

  auto inside_all = [&](const DualPoint& p) {
    return std::all_of(strips.begin(), strips.end(),
                       [&](const DualStrip& st) { return st.contains(p); });
  };

  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    for (std::size_t j = i + 1; j < boundaries.size(); ++j) {
      const Line& u = boundaries[i];
      const Line& w = boundaries[j];
      if (u.m == w.m) continue;
      // u.m*m + u.b = w.m*m + w.b
      const Rational m = (w.b - u.b) / (u.m - w.m);
      DualPoint p{m, u.m * m + u.b};
      if (inside_all(p)) return p;
    }
  }
  return std::nullopt;
}

// Twice the signed area of a counterclockwise vertex list.
inline Rational shoelace_sum(const std::vector<DualPoint>& v) {
  Rational sum;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& p = v[k];
    const auto& q = v[(k + 1) % v.size()];
    sum += p.m * q.b - q.m * p.b;
  }
  return sum;
}

inline Rational polygon_area(const StabPolygon& p) {
  if (p.kind() != PolygonKind::FullDimensional) return {};
  return abs(shoelace_sum(p.vertices())) / rat(2);
}

}  // namespace stabline

#endif  // STABLINE_DUAL_HPP
