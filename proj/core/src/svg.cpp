// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphent/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "graphent/error.hpp"
#include "graphent/region.hpp"

namespace graphent {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;
  double px(double x) const { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); }
  double py(double y) const { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); }
};

std::string open_document(double w = kWidth, double h = kHeight) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string axes(const Frame& f, const std::string& x_label, const std::string& y_label) {
  std::string out;
  out += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kWidth - 2 * kMargin) +
         "\" height=\"" + num(kHeight - 2 * kMargin) + "\"/>\n</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = f.x_lo + (f.x_hi - f.x_lo) * i / 4;
    const double y = f.y_lo + (f.y_hi - f.y_lo) * i / 4;
    out += "<text x=\"" + num(f.px(x)) + "\" y=\"" + num(kHeight - kMargin + 16) +
           "\" text-anchor=\"middle\">" + num(x) + "</text>\n";
    out += "<text x=\"" + num(kMargin - 6) + "\" y=\"" + num(f.py(y) + 4) + "\" text-anchor=\"end\">" + num(y) +
           "</text>\n";
  }
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 12) + "\" text-anchor=\"middle\">" + x_label +
         "</text>\n";
  out += "<text x=\"16\" y=\"" + num(kHeight / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(kHeight / 2) + ")\">" + y_label + "</text>\n</g>\n";
  return out;
}

std::string polyline(const Frame& f, const std::vector<std::pair<double, double>>& pts, const std::string& color,
                     const std::string& dash = "") {
  std::string out = "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"";
  if (!dash.empty()) out += " stroke-dasharray=\"" + dash + "\"";
  out += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(f.px(pts[i].first)) + "," + num(f.py(pts[i].second));
  }
  return out + "\"/>\n";
}

std::string region_curves(const Frame& f, int samples, int k) {
  std::vector<std::pair<double, double>> upper, envelope, er;
  for (int i = 0; i < samples; ++i) {
    const double e = static_cast<double>(i) / (samples - 1);
    upper.emplace_back(e, region::upper_boundary(e));
    envelope.emplace_back(e, region::lower_envelope(e));
    er.emplace_back(e, std::pow(e, k));
  }
  return polyline(f, upper, "#1f4e9c") + polyline(f, envelope, "#1f4e9c") + polyline(f, er, "#c0392b", "6 3");
}

// Blue (low) to yellow (high).
std::string heat_color(double v) {
  v = std::clamp(v, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(30 + 225 * v));
  const int g = static_cast<int>(std::lround(60 + 170 * v));
  const int b = static_cast<int>(std::lround(160 - 120 * v));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string render_scan_heatmap(const ScanTable& table) {
  std::vector<const ScanRow*> rows;
  for (const auto& r : table.rows) {
    if ((r.status == "converged" || r.status == "not_converged") && std::isfinite(r.s_value)) rows.push_back(&r);
  }
  if (rows.empty()) throw Error(ErrorCode::kEmptyTable, "scan table has no usable rows");
  double s_lo = rows.front()->s_value, s_hi = s_lo;
  for (const auto* r : rows) {
    s_lo = std::min(s_lo, r->s_value);
    s_hi = std::max(s_hi, r->s_value);
  }
  const Frame f{0.0, 1.0, 0.0, 1.0};
  std::string out = open_document();
  out += "<g stroke=\"none\">\n";
  for (const auto* r : rows) {
    const double v = s_hi > s_lo ? (r->s_value - s_lo) / (s_hi - s_lo) : 1.0;
    out += "<circle cx=\"" + num(f.px(r->e)) + "\" cy=\"" + num(f.py(r->t)) + "\" r=\"3\" fill=\"" +
           heat_color(v) + "\"/>\n";
  }
  out += "</g>\n";
  out += region_curves(f, 201, std::max(1, table.motif_edges));
  out += axes(f, "e", "t");
  return out + "</svg>\n";
}

std::string render_region(int samples) {
  if (samples < 2) throw Error(ErrorCode::kInvalidArgument, "render_region needs >= 2 samples");
  const Frame f{0.0, 1.0, 0.0, 1.0};
  std::string out = open_document();
  out += region_curves(f, samples, 3);
  out += axes(f, "e", "t");
  return out + "</svg>\n";
}

std::string render_graphon(const Graphon& g) {
  const int m = g.resolution();
  const double side = 400.0;
  const double cell = side / m;
  std::string out = open_document(side, side);
  out += "<g stroke=\"none\">\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int level = static_cast<int>(std::lround(255.0 * (1.0 - g(i, j))));
      char color[16];
      std::snprintf(color, sizeof color, "#%02x%02x%02x", level, level, level);
      out += "<rect x=\"" + num(j * cell) + "\" y=\"" + num(i * cell) + "\" width=\"" + num(cell) +
             "\" height=\"" + num(cell) + "\" fill=\"" + color + "\"/>\n";
    }
  }
  return out + "</g>\n</svg>\n";
}

std::string render_transition_curve(const TransitionCurve& curve) {
  if (curve.points.empty()) throw Error(ErrorCode::kEmptyTable, "transition curve has no points");
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : curve.points) pts.emplace_back(p.beta2, p.beta1_critical);
  std::sort(pts.begin(), pts.end());
  double x_lo = pts.front().first, x_hi = pts.back().first;
  double y_lo = pts.front().second, y_hi = y_lo;
  for (const auto& [x, y] : pts) {
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  const Frame f{x_lo, x_hi, y_lo, y_hi};
  std::string out = open_document();
  out += polyline(f, pts, "#c0392b");
  out += axes(f, "beta2", "beta1");
  return out + "</svg>\n";
}

}  // namespace graphent
