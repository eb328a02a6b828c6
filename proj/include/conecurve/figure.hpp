#pragma once

/**
 * @file figure.hpp
 * @brief The ten figure panels: curves as SVG polylines, surfaces of
 *        revolution about the timelike x3 axis as OBJ meshes plus an SVG preview.
 *
 * Panel letters pair up: A/B base curve, C/D x-alpha, E/F x-y, G/H alpha-y,
 * I/J x-alpha-y. The first letter of each pair is the curve, the second its
 * surface. Rotation about x3 is a Lorentz isometry, so surfaces of cone
 * curves stay on the cone.
 *
 * Output is byte-deterministic: fixed traversal order and printf formatting.
 */

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conecurve/curve.hpp"
#include "conecurve/frame.hpp"
#include "conecurve/smarandache.hpp"

namespace conecurve {

enum class Projection { Iso, XY };

inline const char* to_string(Projection p) { return p == Projection::Iso ? "iso" : "xy"; }

inline std::optional<Projection> parse_projection(const std::string& s) {
  if (s == "iso") return Projection::Iso;
  if (s == "xy") return Projection::XY;
  return std::nullopt;
}

struct FigureOptions {
  double lo = -2.0;
  double hi = 2.0;
  int n_s = 201;
  int n_theta = 64;
  double b = 1.0;
  double c = 1.0;
  double cstar = 1.0;
  Projection projection = Projection::Iso;
  double admissible_tol = kAdmissibleTol;
};

inline constexpr std::array<char, 10> kPanels = {'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'J'};

inline bool valid_panel(char p) { return p >= 'A' && p <= 'J'; }

inline bool is_surface_panel(char p) { return (p - 'A') % 2 == 1; }

/// Partner kind drawn by a panel; nullopt for the base curve (A, B).
inline std::optional<Kind> panel_kind(char p) {
  const int pair = (p - 'A') / 2;
  if (pair == 0) return std::nullopt;
  return kAllKinds[static_cast<std::size_t>(pair - 1)];
}

inline std::string panel_title(char p) {
  const auto k = panel_kind(p);
  const std::string what = k ? std::string(kind_label(*k)) + " partner" : std::string("base curve");
  return std::string("panel ") + p + ": " + what + (is_surface_panel(p) ? " surface of revolution" : " curve");
}

/// Contiguous admissible pieces of a curve, in parameter order.
using Polyline = std::vector<LorentzVector>;

struct PanelCurve {
  std::vector<Polyline> runs;
  std::size_t skipped = 0;
};

inline std::vector<double> figure_grid(const CurveSource& curve, const FigureOptions& o) {
  if (const auto native = curve.native_grid()) {
    std::vector<double> out;
    for (double s : *native) {
      if (s >= o.lo - 1e-12 && s <= o.hi + 1e-12) out.push_back(s);
    }
    return out;
  }
  return uniform_grid(o.lo, o.hi, o.n_s);
}

/// Curve samples for a panel, broken at inadmissible parameter values.
inline PanelCurve panel_curve(char panel, const CurveSource& curve, const FigureOptions& o) {
  if (!valid_panel(panel)) throw std::invalid_argument(std::string("panel must be A..J, got ") + panel);
  const auto kind = panel_kind(panel);
  std::optional<SmarandacheSpec> spec;
  if (kind) {
    spec = SmarandacheSpec{*kind, o.b, o.c, o.cstar};
    spec->validate();
  }
  PanelCurve out;
  bool open = false;
  for (double s : figure_grid(curve, o)) {
    const CurveJet j = curve.jet(s);
    if (!spec) {
      if (!open) out.runs.emplace_back();
      open = true;
      out.runs.back().push_back(j.p);
      continue;
    }
    const FrameJet fj = frame_jet_at(j, FrameTolerances::for_accuracy(j.accuracy));
    if (!admissible(*spec, fj, o.admissible_tol)) {
      ++out.skipped;
      open = false;
      continue;
    }
    if (!open) out.runs.emplace_back();
    open = true;
    out.runs.back().push_back(construct(*spec, fj.frame));
  }
  return out;
}

struct Mesh {
  std::vector<LorentzVector> vertices;
  std::vector<std::array<std::size_t, 3>> faces;  ///< 0-based
};

/// Revolve each run about x3 with theta_j = 2 pi j / n_theta. Quads are split
/// on the (i + j) parity diagonal; every face lists theta-increasing first.
inline Mesh revolve(const std::vector<Polyline>& runs, int n_theta) {
  if (n_theta < 1) throw std::invalid_argument("n_theta must be >= 1");
  Mesh m;
  const auto nt = static_cast<std::size_t>(n_theta);
  for (const auto& run : runs) {
    const std::size_t base = m.vertices.size();
    for (const auto& p : run) {
      for (std::size_t j = 0; j < nt; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
        m.vertices.push_back(rotate_about_timelike_axis(p, theta));
      }
    }
    if (nt < 3) continue;
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
      for (std::size_t j = 0; j < nt; ++j) {
        const std::size_t jn = (j + 1) % nt;
        const std::size_t a = base + i * nt + j;
        const std::size_t b = base + i * nt + jn;
        const std::size_t c = base + (i + 1) * nt + jn;
        const std::size_t d = base + (i + 1) * nt + j;
        if ((i + j) % 2 == 0) {
          m.faces.push_back({a, b, c});
          m.faces.push_back({a, c, d});
        } else {
          m.faces.push_back({a, b, d});
          m.faces.push_back({b, c, d});
        }
      }
    }
  }
  return m;
}

inline std::string write_obj(const Mesh& m, const std::string& comment) {
  std::string out = "# " + comment + "\n";
  char buf[128];
  for (const auto& v : m.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x1, v.x2, v.x3);
    out += buf;
  }
  for (const auto& f : m.faces) {
    std::snprintf(buf, sizeof buf, "f %zu %zu %zu\n", f[0] + 1, f[1] + 1, f[2] + 1);
    out += buf;
  }
  return out;
}

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Isometric: (x1 - x2) cos 30, x3 + (x1 + x2) sin 30. Planar: (x1, x2).
inline Point2 project(const LorentzVector& v, Projection p) {
  if (p == Projection::XY) return {v.x1, v.x2};
  const double c30 = std::sqrt(3.0) / 2.0;
  return {(v.x1 - v.x2) * c30, v.x3 + (v.x1 + v.x2) * 0.5};
}

/// SVG 1.1 document with one polyline per entry. Screen y points down.
inline std::string write_svg(const std::vector<Polyline>& lines, Projection proj, const std::string& title,
                             const std::string& desc) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& l : lines) {
    for (const auto& v : l) {
      const Point2 q = project(v, proj);
      x0 = std::min(x0, q.x);
      x1 = std::max(x1, q.x);
      y0 = std::min(y0, -q.y);
      y1 = std::max(y1, -q.y);
    }
  }
  if (!(x0 <= x1)) x0 = x1 = y0 = y1 = 0.0;
  double w = x1 - x0, h = y1 - y0;
  const double span = std::max({w, h, 1e-9});
  if (w < 1e-9 * span || w == 0.0) w = span;
  if (h < 1e-9 * span || h == 0.0) h = span;
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  const double mx = 0.05 * w, my = 0.05 * h;
  const double vx = cx - 0.5 * w - mx, vy = cy - 0.5 * h - my, vw = w + 2 * mx, vh = h + 2 * my;

  std::string out;
  char buf[256];
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"%.0f\" "
                "viewBox=\"%.6f %.6f %.6f %.6f\">\n",
                std::round(600.0 * vh / vw), vx, vy, vw, vh);
  out += buf;
  out += "<title>" + title + "</title>\n";
  out += "<desc>" + desc + "</desc>\n";
  std::snprintf(buf, sizeof buf,
                "<g fill=\"none\" stroke=\"#1f3b73\" stroke-width=\"%.6f\" stroke-linejoin=\"round\">\n",
                0.004 * std::max(vw, vh));
  out += buf;
  for (const auto& l : lines) {
    if (l.empty()) continue;
    out += "<polyline points=\"";
    for (std::size_t i = 0; i < l.size(); ++i) {
      const Point2 q = project(l[i], proj);
      std::snprintf(buf, sizeof buf, "%s%.6f,%.6f", i ? " " : "", q.x, -q.y);
      out += buf;
    }
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

struct PanelOutput {
  char panel = 'A';
  std::string svg;
  std::optional<std::string> obj;  ///< surfaces only
  PanelCurve curve;
  std::optional<Mesh> mesh;
};

inline std::string figure_metadata(char panel, const CurveSource& curve, const FigureOptions& o, std::size_t skipped) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "curve=%s; s-range=[%.6g, %.6g]; n_s=%d; n_theta=%d; b=%.6g; c=%.6g; cstar=%.6g; projection=%s; "
                "rotation axis=x3 (timelike); skipped inadmissible samples=%zu; %s",
                curve.descriptor().c_str(), o.lo, o.hi, o.n_s, o.n_theta, o.b, o.c, o.cstar, to_string(o.projection),
                skipped,
                o.projection == Projection::Iso ? "screen=((x1-x2)cos30, x3+(x1+x2)sin30)" : "screen=(x1, x2)");
  (void)panel;
  return buf;
}

inline PanelOutput render_panel(char panel, const CurveSource& curve, const FigureOptions& o = {}) {
  if (!valid_panel(panel)) throw std::invalid_argument(std::string("panel must be A..J, got ") + panel);
  if (o.n_s < 2) throw std::invalid_argument("n_s must be >= 2");
  PanelOutput out;
  out.panel = panel;
  out.curve = panel_curve(panel, curve, o);
  const std::string meta = figure_metadata(panel, curve, o, out.curve.skipped);
  const std::string title = panel_title(panel);
  if (!is_surface_panel(panel)) {
    out.svg = write_svg(out.curve.runs, o.projection, title, meta);
    return out;
  }
  Mesh m = revolve(out.curve.runs, o.n_theta);
  out.obj = write_obj(m, title + "; " + meta);
  // Preview: every meridian, and every tenth parallel.
  std::vector<Polyline> lines;
  const auto nt = static_cast<std::size_t>(o.n_theta);
  std::size_t base = 0;
  for (const auto& run : out.curve.runs) {
    for (std::size_t j = 0; j < nt; ++j) {
      Polyline meridian;
      for (std::size_t i = 0; i < run.size(); ++i) meridian.push_back(m.vertices[base + i * nt + j]);
      lines.push_back(std::move(meridian));
    }
    for (std::size_t i = 0; i < run.size(); i += 10) {
      Polyline ring;
      for (std::size_t j = 0; j <= nt; ++j) ring.push_back(m.vertices[base + i * nt + j % nt]);
      lines.push_back(std::move(ring));
    }
    base += run.size() * nt;
  }
  out.svg = write_svg(lines, o.projection, title + " (preview)", meta);
  out.mesh = std::move(m);
  return out;
}

}  // namespace conecurve
