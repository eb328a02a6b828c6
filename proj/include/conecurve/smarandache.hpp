#pragma once

/**
 * @file smarandache.hpp
 * @brief The four Smarandache partner constructions and their oracle frames.
 *
 * A partner gamma is a constant combination p x + q alpha + r y of the base
 * frame. Its geometry is computed here without reference to any printed
 * closed form: derivatives are taken in the moving frame with the cone
 * Frenet operator
 *
 *   d/ds (P x + Q alpha + R y) = (P' + Q kappa) x + (P + Q' - R kappa) alpha + (R' - Q) y,
 *
 * which needs kappa and kappa' only, and the arc-length parameter s* of the
 * partner enters through the chain rule
 *
 *   alpha_g = gamma_s / sigma,  gamma'' = (gamma_ss - (sigma'/sigma) gamma_s) / sigma^2,
 *
 * with sigma = ds* / ds = sqrt(<gamma_s, gamma_s>).
 */

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conecurve/curve.hpp"
#include "conecurve/frame.hpp"
#include "conecurve/jet.hpp"
#include "conecurve/lorentz.hpp"

namespace conecurve {

enum class Kind { XAlpha, XY, AlphaY, XAlphaY };

inline constexpr std::array<Kind, 4> kAllKinds = {Kind::XAlpha, Kind::XY, Kind::AlphaY, Kind::XAlphaY};

/// Short command-line token: xa, xy, ay, xay.
inline const char* kind_token(Kind k) {
  switch (k) {
    case Kind::XAlpha: return "xa";
    case Kind::XY: return "xy";
    case Kind::AlphaY: return "ay";
    case Kind::XAlphaY: return "xay";
  }
  return "?";
}

inline const char* kind_label(Kind k) {
  switch (k) {
    case Kind::XAlpha: return "x-alpha";
    case Kind::XY: return "x-y";
    case Kind::AlphaY: return "alpha-y";
    case Kind::XAlphaY: return "x-alpha-y";
  }
  return "?";
}

inline std::optional<Kind> parse_kind(const std::string& token) {
  for (Kind k : kAllKinds) {
    if (token == kind_token(k)) return k;
  }
  return std::nullopt;
}

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity (radicand, denominator, speed) left its validity domain.
class DomainViolation : public std::domain_error {
 public:
  DomainViolation(std::string quantity, double value, const std::string& where = {})
      : std::domain_error(quantity + " = " + std::to_string(value) + (where.empty() ? "" : " at " + where) +
                          " is outside the validity domain"),
        quantity(std::move(quantity)),
        value(value) {}
  std::string quantity;
  double value;
};

class NonSpacelikeTangent : public std::domain_error {
 public:
  NonSpacelikeTangent(double s, double q)
      : std::domain_error("partner tangent at s = " + std::to_string(s) + " is not spacelike: <g',g'> = " +
                          std::to_string(q)),
        s(s),
        quadrance(q) {}
  double s;
  double quadrance;
};

struct SmarandacheSpec {
  Kind kind = Kind::XAlpha;
  double b = 1.0;
  double c = 1.0;
  double cstar = 1.0;  ///< only used by XAlphaY

  void validate() const {
    auto bad = [](double v) { return !std::isfinite(v) || !(v > 0.0); };
    if (bad(b) || bad(c) || bad(cstar)) {
      throw InvalidSpec("construction constants must be finite and strictly positive (b=" + std::to_string(b) +
                        ", c=" + std::to_string(c) + ", cstar=" + std::to_string(cstar) + ")");
    }
  }

  friend bool operator==(const SmarandacheSpec&, const SmarandacheSpec&) = default;
};

/// (p, q, r) with gamma = p x + q alpha + r y.
inline FrameCoordinates construction_coefficients(const SmarandacheSpec& spec) {
  spec.validate();
  const double b = spec.b;
  const double c = spec.c;
  switch (spec.kind) {
    case Kind::XAlpha: return {c / b, 1.0, 0.0};
    case Kind::XY: {
      const double n = std::sqrt(2.0 * c * b);
      return {c / n, 0.0, b / n};
    }
    case Kind::AlphaY: return {0.0, 1.0, b / c};
    case Kind::XAlphaY: {
      const double n = std::sqrt(2.0 * c * spec.cstar + b * b);
      return {c / n, b / n, spec.cstar / n};
    }
  }
  return {};
}

inline LorentzVector construct(const SmarandacheSpec& spec, const FrameSample& frame) {
  return combine(construction_coefficients(spec), frame);
}

/// Frame coordinates with first s-derivatives, for the Frenet operator.
struct CoordinateJet {
  Taylor<1> x, alpha, y;
};

/// Derivative of P x + Q alpha + R y along the base curve.
inline FrameCoordinates frenet_derivative(const CoordinateJet& v, double kappa) {
  return {v.x.derivative(1) + v.alpha.value() * kappa,
          v.x.value() + v.alpha.derivative(1) - v.y.value() * kappa,
          v.y.derivative(1) - v.alpha.value()};
}

/// Frame coordinates of gamma_s and gamma_ss for a constant-coefficient partner.
struct PartnerDerivatives {
  FrameCoordinates first;
  FrameCoordinates second;
};

inline PartnerDerivatives partner_derivatives(const SmarandacheSpec& spec, double kappa, double dkappa) {
  const auto k = construction_coefficients(spec);
  const Taylor<1> kap = Taylor<1>::from_coefficients({kappa, dkappa});
  const CoordinateJet gamma{Taylor<1>(k.x), Taylor<1>(k.alpha), Taylor<1>(k.y)};
  // gamma_s with its coefficient derivatives, then once more.
  const CoordinateJet first{k.alpha * kap, k.x - k.y * kap, Taylor<1>(-k.alpha)};
  PartnerDerivatives d;
  d.first = frenet_derivative(gamma, kappa);
  d.second = frenet_derivative(first, kappa);
  return d;
}

struct PartnerSample {
  double s = 0.0;
  std::optional<double> sstar;  ///< filled in by trajectories
  LorentzVector gamma;
  double sigma = 0.0;  ///< ds* / ds
  LorentzVector alpha_g;
  LorentzVector y_g;
  double kappa_g = 0.0;
  double gamma_self = 0.0;  ///< <gamma, gamma>, measured
  LorentzVector gamma_pp;   ///< second derivative with respect to s*
};

/// Threshold on <gamma_s, gamma_s> below which the partner is not regular.
inline constexpr double kAdmissibleTol = 1e-9;

/// Oracle speed from the vectors gamma_s = d/ds of the construction.
inline double partner_speed_oracle(const SmarandacheSpec& spec, const FrameJet& fj,
                                   double admissible_tol = kAdmissibleTol) {
  const auto d = partner_derivatives(spec, fj.frame.kappa, fj.dkappa);
  const LorentzVector gs = combine(d.first, fj.frame);
  const double q = inner(gs, gs);
  if (!(q > admissible_tol)) throw NonSpacelikeTangent(fj.frame.s, q);
  return std::sqrt(q);
}

/// True when the partner tangent is spacelike at this frame.
inline bool admissible(const SmarandacheSpec& spec, const FrameJet& fj, double admissible_tol = kAdmissibleTol) {
  const auto d = partner_derivatives(spec, fj.frame.kappa, fj.dkappa);
  const LorentzVector gs = combine(d.first, fj.frame);
  return inner(gs, gs) > admissible_tol;
}

namespace detail {

inline PartnerSample partner_from_derivatives(double s, const LorentzVector& gamma, const LorentzVector& gs,
                                              const LorentzVector& gss, double admissible_tol) {
  const double q = inner(gs, gs);
  if (!(q > admissible_tol)) throw NonSpacelikeTangent(s, q);
  PartnerSample p;
  p.s = s;
  p.gamma = gamma;
  p.sigma = std::sqrt(q);
  p.alpha_g = gs / p.sigma;
  const double dsigma = inner(gs, gss) / p.sigma;
  p.gamma_pp = (gss - (dsigma / p.sigma) * gs) / q;
  p.kappa_g = -0.5 * inner(p.gamma_pp, p.gamma_pp);
  p.y_g = p.kappa_g * gamma - p.gamma_pp;
  p.gamma_self = inner(gamma, gamma);
  return p;
}

}  // namespace detail

/// Partner frame from a base frame jet (exact chain-rule route).
inline PartnerSample partner_frame_oracle(const SmarandacheSpec& spec, const FrameJet& fj,
                                          double admissible_tol = kAdmissibleTol) {
  const auto d = partner_derivatives(spec, fj.frame.kappa, fj.dkappa);
  return detail::partner_from_derivatives(fj.frame.s, construct(spec, fj.frame), combine(d.first, fj.frame),
                                          combine(d.second, fj.frame), admissible_tol);
}

inline PartnerSample partner_frame_oracle(const SmarandacheSpec& spec, const CurveSource& curve, double s,
                                          const FrameTolerances& tol = {}, double admissible_tol = kAdmissibleTol) {
  return partner_frame_oracle(spec, frame_jet_at(curve.jet(s), tol), admissible_tol);
}

/// Same partner quantities from finite differences of gamma(s) itself.
inline PartnerSample partner_frame_fd(const SmarandacheSpec& spec, const CurveSource& curve, double s, double h,
                                      const FrameTolerances& tol = {}, double admissible_tol = kAdmissibleTol) {
  auto gamma_at = [&](double t) { return construct(spec, frame_at(curve.jet(t), tol)); };
  const CurveJet g = fd_jet_of(gamma_at, s, h);
  return detail::partner_from_derivatives(s, g.p, g.d1, g.d2, admissible_tol);
}

/// Admissible partner samples along a grid; inadmissible points are counted.
struct PartnerTrajectory {
  SmarandacheSpec spec;
  std::vector<PartnerSample> samples;
  std::size_t skipped = 0;
  /// Index in `samples` where each contiguous admissible run starts.
  std::vector<std::size_t> run_starts;
};

}  // namespace conecurve
