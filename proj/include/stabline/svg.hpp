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

// SVG plots of a solved instance. Coordinates are printed with 12
// significant digits; the output is for viewing only.

#ifndef STABLINE_SVG_HPP
#define STABLINE_SVG_HPP

#include <algorithm>
#include <cstdio>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "stabline/instance.hpp"

namespace stabline {

enum class PlotMode { Primal, Dual };

namespace svg_detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

inline const char* color(SelectorMethod m) {
  switch (m) {
    case SelectorMethod::ExtremeMin: return "#7f7f7f";
    case SelectorMethod::ExtremeMax: return "#bcbd22";
    case SelectorMethod::Midpoint: return "#17becf";
    case SelectorMethod::DiscreteBarycenter: return "#2ca02c";
    case SelectorMethod::ContinuousBarycenter: return "#d62728";
  }
  return "black";
}

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  bool empty() const { return xmin > xmax; }

  // Pads zero extents, then grows each side by 10% of the extent.
  void finish() {
    if (empty()) {
      xmin = ymin = -1;
      xmax = ymax = 1;
    }
    double w = xmax - xmin, h = ymax - ymin;
    const double fallback = std::max({w, h, 1.0});
    if (w == 0) {
      xmin -= fallback / 2;
      xmax += fallback / 2;
      w = fallback;
    }
    if (h == 0) {
      ymin -= fallback / 2;
      ymax += fallback / 2;
      h = fallback;
    }
    xmin -= 0.1 * w;
    xmax += 0.1 * w;
    ymin -= 0.1 * h;
    ymax += 0.1 * h;
  }
};

// SVG's y axis points down; every y is negated on output.
class Writer {
 public:
  explicit Writer(const Box& box) : box_(box) {
    const double w = box.xmax - box.xmin, h = box.ymax - box.ymin;
    stroke_ = std::max(w, h) / 400;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.xmin)
         << ' ' << num(-box.ymax) << ' ' << num(w) << ' ' << num(h)
         << "\" width=\"800\" height=\"" << num(800 * h / w) << "\">\n";
  }

  void line(const char* cls, double x1, double y1, double x2, double y2,
            const char* stroke, double width_scale, const std::string& extra = {}) {
    out_ << "  <line class=\"" << cls << "\"" << extra << " x1=\"" << num(x1)
         << "\" y1=\"" << num(-y1) << "\" x2=\"" << num(x2) << "\" y2=\""
         << num(-y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(stroke_ * width_scale) << "\"/>\n";
  }

  // Infinite line y = m*x + b (or x = c) drawn across the whole view.
  void full_line(const char* cls, const FrameLine& l, const char* stroke,
                 double width_scale, const std::string& extra = {}) {
    if (const auto* v = std::get_if<VerticalLine>(&l)) {
      const double x = v->x.to_double();
      line(cls, x, box_.ymin, x, box_.ymax, stroke, width_scale, extra);
      return;
    }
    const auto& s = std::get<Line>(l);
    const double m = s.m.to_double(), b = s.b.to_double();
    line(cls, box_.xmin, m * box_.xmin + b, box_.xmax, m * box_.xmax + b, stroke,
         width_scale, extra);
  }

  void circle(const char* cls, double x, double y, const char* fill,
              const std::string& extra = {}) {
    out_ << "  <circle class=\"" << cls << "\"" << extra << " cx=\"" << num(x)
         << "\" cy=\"" << num(-y) << "\" r=\"" << num(stroke_ * 3) << "\" fill=\""
         << fill << "\"/>\n";
  }

  void polygon(const std::vector<DualPoint>& v) {
    out_ << "  <polygon class=\"stab-polygon\" points=\"";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out_ << ' ';
      out_ << num(v[k].m.to_double()) << ',' << num(-v[k].b.to_double());
    }
    out_ << "\" fill=\"#aec7e8\" fill-opacity=\"0.6\" stroke=\"#1f77b4\" "
            "stroke-width=\""
         << num(stroke_) << "\"/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Box box_;
  double stroke_ = 1;
  std::ostringstream out_;
};

inline std::string method_attr(SelectorMethod m) {
  return " data-method=\"" + std::string(method_name(m)) + "\"";
}

}  // namespace svg_detail

// Primal mode draws the document's segments and the selected transversals.
// Dual mode draws the strip boundaries, the transversal polygon and the
// selected transversals as points, all in canonical dual coordinates.
inline std::string emit_svg(const InstanceDocument& doc, const SolveResult& result,
                            PlotMode mode,
                            std::span<const SelectorMethod> methods = kAllMethods) {
  using namespace svg_detail;
  Box box;

  if (mode == PlotMode::Primal) {
    for (const auto& s : doc.segments) {
      const auto [p, q] = endpoints(s);
      box.add(p.x.to_double(), p.y.to_double());
      box.add(q.x.to_double(), q.y.to_double());
    }
    box.finish();
    Writer w(box);
    for (const auto& s : doc.segments) {
      const auto [p, q] = endpoints(s);
      w.line("segment", p.x.to_double(), p.y.to_double(), q.x.to_double(),
             q.y.to_double(), "#1f77b4", 2.5);
    }
    for (auto m : methods) {
      auto it = result.lines.find(m);
      if (it == result.lines.end()) continue;
      w.full_line("transversal", it->second, color(m), 1, method_attr(m));
    }
    return w.finish();
  }

  std::vector<DualStrip> strips;
  if (result.family)
    for (const auto& s : *result.family) strips.push_back(segment_strip(s));

  for (const auto& v : result.polygon.vertices())
    box.add(v.m.to_double(), v.b.to_double());
  for (auto m : methods) {
    auto it = result.canonical_lines.find(m);
    if (it != result.canonical_lines.end())
      box.add(it->second.m.to_double(), it->second.b.to_double());
  }
  if (result.polygon.empty()) {
    // Frame the crossings of the strip boundaries instead.
    for (std::size_t i = 0; i < strips.size(); ++i)
      for (std::size_t j = i + 1; j < strips.size(); ++j)
        for (const auto& u : {strips[i].lower_boundary(), strips[i].upper_boundary()})
          for (const auto& v : {strips[j].lower_boundary(), strips[j].upper_boundary()}) {
            const Rational m = (v.b - u.b) / (u.m - v.m);
            box.add(m.to_double(), (u.m * m + u.b).to_double());
          }
  }
  box.finish();
  Writer w(box);
  for (const auto& st : strips) {
    w.full_line("strip-boundary", st.lower_boundary(), "#9467bd", 0.6);
    w.full_line("strip-boundary", st.upper_boundary(), "#9467bd", 0.6);
  }
  const auto& verts = result.polygon.vertices();
  switch (result.polygon.kind()) {
    case PolygonKind::Empty:
      break;
    case PolygonKind::SinglePoint:
      w.circle("stab-point", verts[0].m.to_double(), verts[0].b.to_double(), "#1f77b4");
      break;
    case PolygonKind::SegmentShaped:
      w.line("stab-polygon", verts[0].m.to_double(), verts[0].b.to_double(),
             verts[1].m.to_double(), verts[1].b.to_double(), "#1f77b4", 2);
      break;
    case PolygonKind::FullDimensional:
      w.polygon(verts);
      break;
  }
  // A single-point polygon already marks every selection.
  if (result.polygon.kind() != PolygonKind::SinglePoint) {
    for (auto m : methods) {
      auto it = result.canonical_lines.find(m);
      if (it == result.canonical_lines.end()) continue;
      w.circle("selector", it->second.m.to_double(), it->second.b.to_double(),
               color(m), method_attr(m));
    }
  }
  return w.finish();
}

}  // namespace stabline

#endif  // STABLINE_SVG_HPP
