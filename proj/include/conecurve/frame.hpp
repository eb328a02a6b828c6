#pragma once

/**
 * @file frame.hpp
 * @brief Asymptotic orthonormal frame {x, alpha, y} and cone curvature.
 *
 * For a unit-speed curve on the null cone the frame is
 *
 *   alpha = x',   kappa = -1/2 <x'', x''>,   y = kappa x - x''.
 *
 * The curvature identity follows from the frame conditions together with
 * alpha' = kappa x - y: pairing that line with itself gives
 * <x'', x''> = kappa^2 <x,x> - 2 kappa <x,y> + <y,y> = -2 kappa.
 * Differentiating <x', x'> = 1 twice shows <x'', x'''> = -kappa', which
 * feeds the third cone Frenet line y' = -kappa alpha.
 */

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "conecurve/csv.hpp"
#include "conecurve/curve.hpp"
#include "conecurve/lorentz.hpp"

namespace conecurve {

class NotOnCone : public std::domain_error {
 public:
  NotOnCone(double s, double q)
      : std::domain_error("position at s = " + std::to_string(s) + " is off the null cone: <p,p> = " + std::to_string(q)) {}
};

class NonUnitSpeed : public std::domain_error {
 public:
  NonUnitSpeed(double s, double q)
      : std::domain_error("curve at s = " + std::to_string(s) + " is not unit speed: <p',p'> = " + std::to_string(q)) {}
};

struct FrameTolerances {
  double cone_tol = 1e-9;
  double speed_tol = 1e-9;
  double frame_tol = 1e-9;

  /// Looser defaults for finite-difference jets.
  static FrameTolerances for_accuracy(JetAccuracy a) {
    if (a == JetAccuracy::Exact) return {};
    return {1e-5, 1e-5, 1e-5};
  }
};

struct FrameSample {
  double s = 0.0;
  LorentzVector x;
  LorentzVector alpha;
  LorentzVector y;
  double kappa = 0.0;
};

/// Frame plus the s-derivatives of its members, built from an order-3 jet.
struct FrameJet {
  FrameSample frame;
  LorentzVector dx;
  LorentzVector dalpha;
  LorentzVector dy;
  double dkappa = 0.0;
  JetAccuracy accuracy = JetAccuracy::Exact;
};

namespace detail {

inline void check_cone_jet(const CurveJet& c, const FrameTolerances& tol) {
  const double q = inner(c.p, c.p);
  if (!(std::abs(q) <= tol.cone_tol)) throw NotOnCone(c.s, q);
  const double v = inner(c.d1, c.d1);
  if (!(std::abs(v - 1.0) <= tol.speed_tol)) throw NonUnitSpeed(c.s, v);
}

}  // namespace detail

inline FrameSample frame_at(const CurveJet& c, const FrameTolerances& tol = {}) {
  detail::check_cone_jet(c, tol);
  const double kappa = -0.5 * inner(c.d2, c.d2);
  return {c.s, c.p, c.d1, kappa * c.p - c.d2, kappa};
}

inline FrameJet frame_jet_at(const CurveJet& c, const FrameTolerances& tol = {}) {
  FrameJet fj;
  fj.frame = frame_at(c, tol);
  fj.dkappa = -inner(c.d2, c.d3);
  fj.dx = c.d1;
  fj.dalpha = c.d2;
  fj.dy = fj.dkappa * c.p + fj.frame.kappa * c.d1 - c.d3;
  fj.accuracy = c.accuracy;
  return fj;
}

/// <x,x>, <y,y>, <x,alpha>, <y,alpha>, <x,y> - 1, <alpha,alpha> - 1.
inline std::array<double, 6> frame_condition_residuals(const FrameSample& f) {
  return {inner(f.x, f.x),         inner(f.y, f.y),         inner(f.x, f.alpha),
          inner(f.y, f.alpha),     inner(f.x, f.y) - 1.0,   inner(f.alpha, f.alpha) - 1.0};
}

/// Sup-norm residuals of x' = alpha, alpha' = kappa x - y, y' = -kappa alpha.
inline std::array<double, 3> frenet_residual(const FrameJet& fj) {
  const auto& f = fj.frame;
  return {max_abs(fj.dx - f.alpha), max_abs(fj.dalpha - (f.kappa * f.x - f.y)), max_abs(fj.dy + f.kappa * f.alpha)};
}

inline std::vector<std::array<double, 3>> frenet_residuals(std::span<const FrameJet> frames) {
  std::vector<std::array<double, 3>> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back(frenet_residual(f));
  return out;
}

/// Components of v in the (x, alpha, y) basis, read off by the dual pairing
/// (<v,y>, <v,alpha>, <v,x>).
struct FrameCoordinates {
  double x = 0.0;
  double alpha = 0.0;
  double y = 0.0;

  std::array<double, 3> as_array() const { return {x, alpha, y}; }
};

inline FrameCoordinates frame_coordinates(const LorentzVector& v, const FrameSample& f) {
  return {inner(v, f.y), inner(v, f.alpha), inner(v, f.x)};
}

inline LorentzVector combine(const FrameCoordinates& c, const FrameSample& f) {
  return c.x * f.x + c.alpha * f.alpha + c.y * f.y;
}

inline std::vector<FrameJet> frame_trajectory(const CurveSource& curve, std::span<const double> grid,
                                              const FrameTolerances& tol) {
  std::vector<FrameJet> out;
  out.reserve(grid.size());
  for (double s : grid) out.push_back(frame_jet_at(curve.jet(s), tol));
  return out;
}

/// Frame CSV: s,kappa,x1,x2,x3,a1,a2,a3,y1,y2,y3.
inline void write_frame_csv(std::ostream& out, std::span<const FrameJet> frames) {
  CsvWriter w(out);
  w.header({"s", "kappa", "x1", "x2", "x3", "a1", "a2", "a3", "y1", "y2", "y3"});
  for (const auto& f : frames) {
    w.cell(f.frame.s).cell(f.frame.kappa).cell(f.frame.x).cell(f.frame.alpha).cell(f.frame.y);
    w.end_row();
  }
}

}  // namespace conecurve
