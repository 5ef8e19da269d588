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

// Instance documents: JSON ingestion, reduction of an arbitrary family of
// parallel segments to vertical position, and the end-to-end solve.
//
// Instance schema:
//
//   {
//     "name": "optional label",
//     "direction": [dx, dy],                   // optional, default vertical
//     "segments": [ {"x": R, "lo": R, "hi": R}, // vertical form
//                   {"p": [R, R], "q": [R, R]}  // endpoint form
//                 ]
//   }
//
// R is a JSON integer, a "p/q" string, or a finite decimal string such as
// "-0.25". The vertical form is only accepted when the direction is
// vertical.

#ifndef STABLINE_INSTANCE_HPP
#define STABLINE_INSTANCE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "stabline/dual.hpp"
#include "stabline/error.hpp"
#include "stabline/geometry.hpp"
#include "stabline/rational.hpp"
#include "stabline/selectors.hpp"
#include "stabline/stabbing.hpp"

namespace stabline {

struct Direction {
  Rational dx;
  Rational dy;
  friend bool operator==(const Direction&, const Direction&) = default;
};

struct VerticalSpec {
  Rational x, lo, hi;
  friend bool operator==(const VerticalSpec&, const VerticalSpec&) = default;
};

struct EndpointSpec {
  Point p, q;
  friend bool operator==(const EndpointSpec&, const EndpointSpec&) = default;
};

using RawSegment = std::variant<VerticalSpec, EndpointSpec>;

inline std::pair<Point, Point> endpoints(const RawSegment& s) {
  if (const auto* v = std::get_if<VerticalSpec>(&s))
    return {Point{v->x, v->lo}, Point{v->x, v->hi}};
  const auto& e = std::get<EndpointSpec>(s);
  return {e.p, e.q};
}

struct InstanceDocument {
  std::optional<std::string> name;
  std::optional<Direction> direction;
  std::vector<RawSegment> segments;

  Direction effective_direction() const {
    return direction.value_or(Direction{rat(0), rat(1)});
  }

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

// The line x = c, which has no slope-intercept form.
struct VerticalLine {
  Rational x;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

// A line in the frame of the input document.
using FrameLine = std::variant<Line, VerticalLine>;

inline std::pair<Point, Point> two_points(const FrameLine& l) {
  if (const auto* v = std::get_if<VerticalLine>(&l))
    return {Point{v->x, rat(0)}, Point{v->x, rat(1)}};
  const auto& s = std::get<Line>(l);
  return {Point{rat(0), s.b}, Point{rat(1), s.m + s.b}};
}

inline FrameLine line_through_any(const Point& p, const Point& q) {
  if (p.x == q.x) return VerticalLine{p.x};
  return line_through(p, q);
}

// Does the line meet the closed segment pq?
inline bool meets(const FrameLine& l, const Point& p, const Point& q) {
  const auto [u, w] = two_points(l);
  return phi(u, w, p).sign() * phi(u, w, q).sign() <= 0;
}

// The positive similarity (x, y) -> (dy*x - dx*y, dx*x + dy*y). It sends the
// segment direction (dx, dy) to (0, dx^2 + dy^2), so parallel segments become
// vertical. Incidence, betweenness and the sign of phi are preserved.
class CanonicalMap {
 public:
  CanonicalMap() : dx_(rat(0)), dy_(rat(1)), norm_(rat(1)) {}
  explicit CanonicalMap(const Direction& d)
      : dx_(d.dx), dy_(d.dy), norm_(d.dx * d.dx + d.dy * d.dy) {
    if (norm_.is_zero()) throw ParseError("direction must not be (0, 0)");
  }

  const Rational& dx() const { return dx_; }
  const Rational& dy() const { return dy_; }

  Point forward(const Point& p) const {
    return {dy_ * p.x - dx_ * p.y, dx_ * p.x + dy_ * p.y};
  }
  Point inverse(const Point& p) const {
    return {(dy_ * p.x + dx_ * p.y) / norm_, (dy_ * p.y - dx_ * p.x) / norm_};
  }

  FrameLine forward(const FrameLine& l) const {
    const auto [u, w] = two_points(l);
    return line_through_any(forward(u), forward(w));
  }
  // Canonical line back into the document frame.
  FrameLine inverse(const Line& l) const { return inverse(FrameLine{l}); }
  FrameLine inverse(const FrameLine& l) const {
    const auto [u, w] = two_points(l);
    return line_through_any(inverse(u), inverse(w));
  }

 private:
  Rational dx_, dy_, norm_;
};

// Several segments share an abscissa and their intervals are disjoint: only
// a vertical line can meet them all.
class ColumnConflictError : public NoTransversalError {
 public:
  using NoTransversalError::NoTransversalError;
};

struct Canonical {
  SegmentFamily family;
  CanonicalMap map;
};

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned())
      return Rational(BigInt(v.get<std::uint64_t>()));
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_float())
    throw ParseError(where + ": non-integer JSON number; write it as a string "
                             "(\"0.5\" or \"1/2\") to keep it exact");
  throw ParseError(where + ": expected an integer, \"p/q\" or decimal string");
}

inline Point point_field(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2)
    throw ParseError(where + ": expected a pair [x, y]");
  return {rational_field(v[0], where + "[0]"), rational_field(v[1], where + "[1]")};
}

inline void only_keys(const Json& obj, std::initializer_list<std::string_view> keys,
                      const std::string& where) {
  for (const auto& item : obj.items()) {
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
      throw ParseError(where + ": unknown key \"" + item.key() + "\"");
  }
}

}  // namespace detail

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const Line& l) {
  return Json{{"m", to_json(l.m)}, {"b", to_json(l.b)}};
}

inline Json to_json(const DualPoint& p) {
  return Json{{"m", to_json(p.m)}, {"b", to_json(p.b)}};
}

inline Json to_json(const FrameLine& l) {
  if (const auto* v = std::get_if<VerticalLine>(&l)) return Json{{"x", to_json(v->x)}};
  return to_json(std::get<Line>(l));
}

inline InstanceDocument parse_instance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("instance: expected a JSON object");
  detail::only_keys(root, {"name", "direction", "segments"}, "instance");

  InstanceDocument doc;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw ParseError("name: expected a string");
    doc.name = root["name"].get<std::string>();
  }
  if (root.contains("direction")) {
    const Point d = detail::point_field(root["direction"], "direction");
    if (d.x.is_zero() && d.y.is_zero())
      throw ParseError("direction: must not be (0, 0)");
    doc.direction = Direction{d.x, d.y};
  }
  if (!root.contains("segments") || !root["segments"].is_array())
    throw ParseError("segments: expected an array");

  const Direction dir = doc.effective_direction();
  const bool vertical = dir.dx.is_zero();
  const auto& segs = root["segments"];
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string where = "segments[" + std::to_string(i) + "]";
    const Json& s = segs[i];
    if (!s.is_object()) throw ParseError(where + ": expected an object");
    if (s.contains("x") || s.contains("lo") || s.contains("hi")) {
      detail::only_keys(s, {"x", "lo", "hi"}, where);
      for (const char* key : {"x", "lo", "hi"})
        if (!s.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
      if (!vertical)
        throw ParseError(where + ": the {x, lo, hi} form needs a vertical "
                                 "direction; use {p, q}");
      VerticalSpec v{detail::rational_field(s["x"], where + ".x"),
                     detail::rational_field(s["lo"], where + ".lo"),
                     detail::rational_field(s["hi"], where + ".hi")};
      if (v.hi < v.lo) throw ParseError(where + ": lo exceeds hi");
      doc.segments.emplace_back(std::move(v));
    } else {
      detail::only_keys(s, {"p", "q"}, where);
      if (!s.contains("p") || !s.contains("q"))
        throw ParseError(where + ": expected {x, lo, hi} or {p, q}");
      EndpointSpec e{detail::point_field(s["p"], where + ".p"),
                     detail::point_field(s["q"], where + ".q")};
      const Rational ex = e.q.x - e.p.x, ey = e.q.y - e.p.y;
      if (ex * dir.dy != ey * dir.dx)
        throw ParseError(where + ": segment is not parallel to the direction");
      doc.segments.emplace_back(std::move(e));
    }
  }
  return doc;
}

inline Json to_json(const InstanceDocument& doc) {
  Json root = Json::object();
  if (doc.name) root["name"] = *doc.name;
  if (doc.direction)
    root["direction"] = Json::array({to_json(doc.direction->dx), to_json(doc.direction->dy)});
  Json segs = Json::array();
  for (const auto& s : doc.segments) {
    if (const auto* v = std::get_if<VerticalSpec>(&s)) {
      segs.push_back(Json{{"x", to_json(v->x)}, {"lo", to_json(v->lo)}, {"hi", to_json(v->hi)}});
    } else {
      const auto& e = std::get<EndpointSpec>(s);
      segs.push_back(Json{{"p", Json::array({to_json(e.p.x), to_json(e.p.y)})},
                          {"q", Json::array({to_json(e.q.x), to_json(e.q.y)})}});
    }
  }
  root["segments"] = std::move(segs);
  return root;
}

inline std::string serialize_instance(const InstanceDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Canonical frame

// Maps every segment to vertical position, sorts by abscissa and intersects
// the intervals of segments sharing an abscissa.
inline Canonical canonicalize(const InstanceDocument& doc) {
  if (doc.segments.empty()) throw ParseError("instance has no segments");
  CanonicalMap map(doc.effective_direction());

  std::vector<VerticalSegment> mapped;
  mapped.reserve(doc.segments.size());
  for (const auto& raw : doc.segments) {
    const auto [p, q] = endpoints(raw);
    Point u = map.forward(p), w = map.forward(q);
    if (u.x != w.x) throw ParseError("segment is not parallel to the direction");
    mapped.emplace_back(u.x, min(u.y, w.y), max(u.y, w.y));
  }
  std::stable_sort(mapped.begin(), mapped.end(),
                   [](const auto& a, const auto& b) { return a.x() < b.x(); });

  std::vector<VerticalSegment> merged;
  for (const auto& s : mapped) {
    if (merged.empty() || merged.back().x() != s.x()) {
      merged.push_back(s);
      continue;
    }
    const auto& prev = merged.back();
    Rational lo = max(prev.lo(), s.lo()), hi = min(prev.hi(), s.hi());
    if (hi < lo)
      throw ColumnConflictError(
          "segments at canonical abscissa " + s.x().str() +
          " do not overlap; only a line parallel to the segments meets them all");
    merged.back() = VerticalSegment(s.x(), std::move(lo), std::move(hi));
  }
  return {SegmentFamily(std::move(merged)), map};
}

// ---------------------------------------------------------------------------
// Solve

struct SolveResult {
  bool feasible = false;
  bool unique = false;
  std::optional<FrameLine> witness;
  // Selected transversals in the document frame.
  std::map<SelectorMethod, FrameLine> lines;
  // The same transversals in the canonical frame.
  std::map<SelectorMethod, Line> canonical_lines;
  // All transversals, in canonical dual coordinates.
  StabPolygon polygon;
  Rational area;
  std::optional<SegmentFamily> family;
  CanonicalMap map;
  std::optional<std::string> note;
};

inline SolveResult solve_instance(const InstanceDocument& doc) {
  SolveResult out;
  std::optional<Canonical> canon;
  try {
    canon = canonicalize(doc);
  } catch (const ColumnConflictError& e) {
    out.map = CanonicalMap(doc.effective_direction());
    out.note = e.what();
    return out;
  }
  const SegmentFamily& f = canon->family;
  out.map = canon->map;
  out.family = f;

  const FeasibilityReport report = feasibility(f);
  out.feasible = report.feasible;
  out.unique = report.unique;
  if (!report.feasible) return out;

  out.witness = out.map.inverse(*report.witness);
  if (f.size() >= 2) {
    out.polygon = stabbing_polygon(f);
    out.area = polygon_area(out.polygon);
  } else {
    out.note = "a single segment: every non-vertical line through it is a transversal";
  }
  for (auto method : kAllMethods) {
    Line l = select(f, method);
    out.lines.emplace(method, out.map.inverse(l));
    out.canonical_lines.emplace(method, std::move(l));
  }
  return out;
}

}  // namespace stabline

#endif  // STABLINE_INSTANCE_HPP
