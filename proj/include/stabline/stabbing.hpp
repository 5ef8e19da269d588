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

// Transversal existence for families of vertical segments.
//
// Write A_i = (x_i, lo_i) and B_i = (x_i, hi_i) for the endpoints of the i-th
// segment. Among the lines A_iB_j (i < j) the one of least slope, A_sB_t, is
// a transversal iff any transversal exists, and in that case it is the
// transversal of greatest slope. Symmetrically the line B_uA_v of greatest
// slope among the B_iA_j (i < j) is the transversal of least slope. The
// family has exactly one transversal iff the two lines coincide.

#ifndef STABLINE_STABBING_HPP
#define STABLINE_STABBING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "stabline/error.hpp"
#include "stabline/geometry.hpp"

namespace stabline {

// A line through endpoints of two segments of a family. i and j are 1-based
// positions in the family with i < j.
struct ExtremeLine {
  Line line;
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const ExtremeLine&, const ExtremeLine&) = default;
};

struct FeasibilityReport {
  bool feasible = false;
  std::optional<Line> witness;
  bool unique = false;
};

inline bool stabs(const Line& l, const VerticalSegment& s) {
  const Rational y = eval_line(l, s.x());
  return s.lo() <= y && y <= s.hi();
}

inline bool stabs_all(const Line& l, const SegmentFamily& f) {
  for (const auto& s : f)
    if (!stabs(l, s)) return false;
  return true;
}

namespace detail {

inline void require_pairs(const SegmentFamily& f, const char* what) {
  if (f.size() < 2)
    throw InsufficientSegmentsError(std::string(what) +
                                    " needs at least two segments");
}

}  // namespace detail

// A_sB_t: least slope over A_iB_j, i < j; ties go to the smallest (i, j).
inline ExtremeLine extreme_min_ab(const SegmentFamily& f) {
  detail::require_pairs(f, "extreme_min_ab");
  std::optional<Rational> best;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      Rational slope = (f[j].hi() - f[i].lo()) / (f[j].x() - f[i].x());
      if (!best || slope < *best) {
        best = std::move(slope);
        bi = i;
        bj = j;
      }
    }
  }
  return {line_through(f[bi].lower(), f[bj].upper()), bi + 1, bj + 1};
}

// B_uA_v: greatest slope over B_iA_j, i < j; ties go to the smallest (i, j).
inline ExtremeLine extreme_max_ba(const SegmentFamily& f) {
  detail::require_pairs(f, "extreme_max_ba");
  std::optional<Rational> best;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      Rational slope = (f[j].lo() - f[i].hi()) / (f[j].x() - f[i].x());
      if (!best || *best < slope) {
        best = std::move(slope);
        bi = i;
        bj = j;
      }
    }
  }
  return {line_through(f[bi].upper(), f[bj].lower()), bi + 1, bj + 1};
}

// Decides existence by stab-checking A_sB_t, and uniqueness by comparing it
// with B_uA_v. A single segment is stabbed by the horizontal line through its
// midpoint.
inline FeasibilityReport feasibility(const SegmentFamily& f) {
  if (f.size() == 1) {
    const auto& s = f[0];
    return {true, Line{rat(0), (s.lo() + s.hi()) / rat(2)}, false};
  }
  ExtremeLine r = extreme_min_ab(f);
  if (!stabs_all(r.line, f)) return {};
  const bool unique = extreme_max_ba(f).line == r.line;
  return {true, std::move(r.line), unique};
}

// phi(A_i, B_j, A_k) <= 0 <= phi(B_i, A_j, B_k) for all i < j < k.
// Cubic; kept as an independent check on feasibility().
inline bool condition_ii(const SegmentFamily& f) {
  if (f.size() < 3)
    throw InsufficientSegmentsError("condition_ii needs at least three segments");
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (phi(f[i].lower(), f[j].upper(), f[k].lower()).sign() > 0) return false;
        if (phi(f[i].upper(), f[j].lower(), f[k].upper()).sign() < 0) return false;
      }
  return true;
}

// (least, greatest) slope over all transversals: the slopes of B_uA_v and
// A_sB_t.
inline std::pair<Rational, Rational> slope_bounds(const SegmentFamily& f) {
  detail::require_pairs(f, "slope_bounds");
  ExtremeLine r = extreme_min_ab(f);
  if (!stabs_all(r.line, f))
    throw NoTransversalError("slope_bounds: the family has no transversal");
  return {extreme_max_ba(f).line.m, std::move(r.line.m)};
}

}  // namespace stabline

#endif  // STABLINE_STABBING_HPP
