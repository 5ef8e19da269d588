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

// Primal plane types and the orientation determinant.

#ifndef STABLINE_GEOMETRY_HPP
#define STABLINE_GEOMETRY_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "stabline/error.hpp"
#include "stabline/rational.hpp"

namespace stabline {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

// The non-vertical line y = m*x + b.
struct Line {
  Rational m;
  Rational b;

  friend bool operator==(const Line&, const Line&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Line& l) {
    return os << "y = " << l.m << "*x + " << l.b;
  }
};

enum class Orientation { CounterClockwise, Clockwise, Collinear };

inline const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::CounterClockwise: return "counterclockwise";
    case Orientation::Clockwise: return "clockwise";
    case Orientation::Collinear: return "collinear";
  }
  return "?";
}

// The closed segment {x} x [lo, hi]. lo == hi is a point segment.
class VerticalSegment {
 public:
  VerticalSegment(Rational x, Rational lo, Rational hi)
      : x_(std::move(x)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_)
      throw InvalidFamilyError("segment at x = " + x_.str() + " has lo " +
                               lo_.str() + " > hi " + hi_.str());
  }

  const Rational& x() const { return x_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  Point lower() const { return {x_, lo_}; }
  Point upper() const { return {x_, hi_}; }
  bool is_point() const { return lo_ == hi_; }

  friend bool operator==(const VerticalSegment&, const VerticalSegment&) = default;
  friend std::ostream& operator<<(std::ostream& os, const VerticalSegment& s) {
    return os << '{' << s.x_ << ", [" << s.lo_ << ", " << s.hi_ << "]}";
  }

 private:
  Rational x_;
  Rational lo_;
  Rational hi_;
};

// Non-empty list of vertical segments with strictly increasing abscissae.
class SegmentFamily {
 public:
  explicit SegmentFamily(std::vector<VerticalSegment> segments)
      : segments_(std::move(segments)) {
    if (segments_.empty())
      throw InvalidFamilyError("a segment family needs at least one segment");
    for (std::size_t i = 1; i < segments_.size(); ++i) {
      if (!(segments_[i - 1].x() < segments_[i].x()))
        throw InvalidFamilyError(
            "abscissae must be strictly increasing (segment " +
            std::to_string(i + 1) + " at x = " + segments_[i].x().str() + ")");
    }
  }

  std::size_t size() const { return segments_.size(); }
  const VerticalSegment& operator[](std::size_t i) const { return segments_[i]; }
  std::span<const VerticalSegment> segments() const { return segments_; }
  auto begin() const { return segments_.begin(); }
  auto end() const { return segments_.end(); }

  friend bool operator==(const SegmentFamily&, const SegmentFamily&) = default;

 private:
  std::vector<VerticalSegment> segments_;
};

// det [[1, 1, 1], [xa, xb, xc], [ya, yb, yc]], via its 2x2 cofactor form.
// Positive iff a, b, c turn counterclockwise.
inline Rational phi(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

inline Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const int s = phi(a, b, c).sign();
  if (s > 0) return Orientation::CounterClockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

inline Line line_through(const Point& p, const Point& q) {
  if (p.x == q.x)
    throw VerticalLineError("points " + p.x.str() + "," + p.y.str() + " and " +
                            q.x.str() + "," + q.y.str() +
                            " share an abscissa");
  Rational m = (q.y - p.y) / (q.x - p.x);
  Rational b = p.y - m * p.x;
  return {std::move(m), std::move(b)};
}

inline Rational eval_line(const Line& l, const Rational& x) { return l.m * x + l.b; }

}  // namespace stabline

#endif  // STABLINE_GEOMETRY_HPP
