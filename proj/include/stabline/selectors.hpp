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

// Picking one transversal out of the set of all of them. Every selector
// returns a point of the (convex) dual polygon, hence a transversal.

#ifndef STABLINE_SELECTORS_HPP
#define STABLINE_SELECTORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabline/dual.hpp"
#include "stabline/error.hpp"
#include "stabline/stabbing.hpp"

namespace stabline {

enum class SelectorMethod {
  ExtremeMin,
  ExtremeMax,
  Midpoint,
  DiscreteBarycenter,
  ContinuousBarycenter,
};

inline constexpr std::array<SelectorMethod, 5> kAllMethods = {
    SelectorMethod::ExtremeMin, SelectorMethod::ExtremeMax,
    SelectorMethod::Midpoint, SelectorMethod::DiscreteBarycenter,
    SelectorMethod::ContinuousBarycenter};

// Command-line spelling.
inline constexpr std::string_view method_name(SelectorMethod m) {
  switch (m) {
    case SelectorMethod::ExtremeMin: return "extreme-min";
    case SelectorMethod::ExtremeMax: return "extreme-max";
    case SelectorMethod::Midpoint: return "midpoint";
    case SelectorMethod::DiscreteBarycenter: return "discrete";
    case SelectorMethod::ContinuousBarycenter: return "centroid";
  }
  return "?";
}

inline std::optional<SelectorMethod> parse_method(std::string_view name) {
  for (auto m : kAllMethods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

namespace detail {

inline void require_transversal(const SegmentFamily& f, const char* what) {
  if (f.size() < 2) return;
  if (!stabs_all(extreme_min_ab(f).line, f))
    throw NoTransversalError(std::string(what) +
                             ": the family has no transversal");
}

inline DualPoint midpoint(const DualPoint& a, const DualPoint& b) {
  return {(a.m + b.m) / rat(2), (a.b + b.b) / rat(2)};
}

inline DualPoint vertex_mean(const std::vector<DualPoint>& v) {
  Rational m, b;
  for (const auto& p : v) {
    m += p.m;
    b += p.b;
  }
  const Rational n(static_cast<std::int64_t>(v.size()));
  return {m / n, b / n};
}

// Area centroid of a full-dimensional polygon:
//   c = 1/(6A) * sum (p_k + p_{k+1}) * cross(p_k, p_{k+1})
// with A the signed area.
inline DualPoint area_centroid(const std::vector<DualPoint>& v) {
  Rational twice_area, cm, cb;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& p = v[k];
    const auto& q = v[(k + 1) % v.size()];
    const Rational c = p.m * q.b - q.m * p.b;
    twice_area += c;
    cm += (p.m + q.m) * c;
    cb += (p.b + q.b) * c;
  }
  const Rational six_area = rat(3) * twice_area;
  return {cm / six_area, cb / six_area};
}

// The one-segment family has no polygon; its only canonical choice is the
// horizontal line through the midpoint.
inline std::optional<Line> single_segment_line(const SegmentFamily& f) {
  if (f.size() != 1) return std::nullopt;
  return feasibility(f).witness;
}

}  // namespace detail

/// Dual midpoint of A_sB_t and B_uA_v.
inline Line select_midpoint(const SegmentFamily& f) {
  detail::require_transversal(f, "select_midpoint");
  if (auto l = detail::single_segment_line(f)) return *l;
  return dual_to_line(detail::midpoint(line_to_dual(extreme_min_ab(f).line),
                                       line_to_dual(extreme_max_ba(f).line)));
}

/// Mean of the vertices of the transversal polygon.
inline Line select_discrete_barycenter(const SegmentFamily& f) {
  detail::require_transversal(f, "select_discrete_barycenter");
  if (auto l = detail::single_segment_line(f)) return *l;
  return dual_to_line(detail::vertex_mean(stabbing_polygon(f).vertices()));
}

/// Area centroid of the transversal polygon. A degenerate polygon uses the
/// centroid of its lower-dimensional measure: the point itself, or the
/// midpoint of the segment.
inline Line select_continuous_barycenter(const SegmentFamily& f) {
  detail::require_transversal(f, "select_continuous_barycenter");
  if (auto l = detail::single_segment_line(f)) return *l;
  const StabPolygon poly = stabbing_polygon(f);
  const auto& v = poly.vertices();
  switch (poly.kind()) {
    case PolygonKind::SinglePoint: return dual_to_line(v[0]);
    case PolygonKind::SegmentShaped: return dual_to_line(detail::midpoint(v[0], v[1]));
    case PolygonKind::FullDimensional: return dual_to_line(detail::area_centroid(v));
    case PolygonKind::Empty: break;
  }
  throw NoTransversalError("select_continuous_barycenter: empty polygon");
}

inline Line select(const SegmentFamily& f, SelectorMethod method) {
  switch (method) {
    case SelectorMethod::ExtremeMin:
    case SelectorMethod::ExtremeMax: {
      detail::require_transversal(f, "select");
      if (auto l = detail::single_segment_line(f)) return *l;
      return method == SelectorMethod::ExtremeMin ? extreme_min_ab(f).line
                                                  : extreme_max_ba(f).line;
    }
    case SelectorMethod::Midpoint: return select_midpoint(f);
    case SelectorMethod::DiscreteBarycenter: return select_discrete_barycenter(f);
    case SelectorMethod::ContinuousBarycenter: return select_continuous_barycenter(f);
  }
  throw Error("select: unknown method");
}

}  // namespace stabline

#endif  // STABLINE_SELECTORS_HPP
