#pragma once

/**
 * @file registry.hpp
 * @brief Printed closed forms for the partner curves, kept as data.
 *
 * Each entry evaluates one displayed expression exactly as printed, for one
 * reading of it (its variant), and names the oracle quantity it claims to
 * equal. Nothing here is "fixed": an expression that disagrees with the
 * oracle is expected to show up as a discrepancy in the assessment.
 *
 * Derivatives that appear in a formula come from a first-order jet of the
 * base curvature. The reading decides the jet variable: `ds` uses kappa'
 * with respect to the base arc length, `dsstar` divides by sigma = ds* / ds.
 * Every prime in the formula then follows automatically.
 */

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "conecurve/jet.hpp"
#include "conecurve/lorentz.hpp"
#include "conecurve/smarandache.hpp"

namespace conecurve {

/// What a registered expression claims to equal.
enum class OracleTarget {
  GammaRow,    ///< frame coordinates of gamma
  AlphaRow,    ///< frame coordinates of the partner tangent
  YRow,        ///< frame coordinates of the partner y
  GammaPP,     ///< frame coordinates of d^2 gamma / ds*^2
  Speed,       ///< ds* / ds
  Curvature,   ///< partner cone curvature
  Normalizer,  ///< c / (b sigma), the scalar in front of the x-alpha tangent
  Position,    ///< Cartesian position of gamma (generating-function forms)
};

inline const char* to_string(OracleTarget t) {
  switch (t) {
    case OracleTarget::GammaRow: return "gamma-row";
    case OracleTarget::AlphaRow: return "alpha-row";
    case OracleTarget::YRow: return "y-row";
    case OracleTarget::GammaPP: return "gamma''";
    case OracleTarget::Speed: return "speed";
    case OracleTarget::Curvature: return "curvature";
    case OracleTarget::Normalizer: return "normalizer";
    case OracleTarget::Position: return "position";
  }
  return "?";
}

/// Targets that need the partner tangent to be spacelike.
inline bool needs_partner_frame(OracleTarget t) {
  return t != OracleTarget::GammaRow && t != OracleTarget::Position;
}

enum class Reading { None, DS, DSStar };

inline const char* to_string(Reading r) {
  switch (r) {
    case Reading::None: return "";
    case Reading::DS: return "d/ds";
    case Reading::DSStar: return "d/ds*";
  }
  return "?";
}

/// Inputs available to a printed expression at one base parameter value.
struct ClosedFormInput {
  SmarandacheSpec spec;
  double kappa = 0.0;
  double dkappa = 0.0;  ///< d kappa / ds
  double sigma = 1.0;   ///< oracle ds* / ds; only used by the d/ds* reading
  // Generating-function data at s.
  LorentzVector x;
  double f = 0.0;
  double fs = 1.0;
  double fss = 0.0;
};

using FormulaValue = std::vector<double>;

struct RegistryEntry {
  std::string formula_id;  ///< anchor of the displayed expression
  std::string variant;
  Kind kind;
  OracleTarget target;
  std::string description;
  std::function<FormulaValue(const ClosedFormInput&)> eval;
};

namespace formulas {

using J = Taylor<1>;

/// Curvature jet in the variable selected by the reading.
inline J kappa_jet(const ClosedFormInput& in, Reading r) {
  const double d = r == Reading::DSStar ? in.dkappa / in.sigma : in.dkappa;
  return J::from_coefficients({in.kappa, d});
}

inline J d(const J& v) { return J(v.derivative(1)); }

inline J checked_sqrt(const J& v, const char* what) {
  if (!(v.value() > 0.0)) throw DomainViolation(std::string("radicand ") + what, v.value());
  return sqrt(v);
}

inline double checked_sqrt(double v, const char* what) {
  if (!(v > 0.0)) throw DomainViolation(std::string("radicand ") + what, v);
  return std::sqrt(v);
}

inline void check_denominator(double v, const char* what) {
  if (!(std::abs(v) > 1e-12)) throw DomainViolation(std::string("denominator ") + what, v);
}

inline J checked_div(const J& num, const J& den, const char* what) {
  check_denominator(den.value(), what);
  return num / den;
}

inline FormulaValue row(const J& a, const J& b, const J& c) { return {a.value(), b.value(), c.value()}; }
inline FormulaValue row(double a, double b, double c) { return {a, b, c}; }

// ---------------------------------------------------------------- x-alpha

inline J psi(const ClosedFormInput& in, Reading r) {
  const double b = in.spec.b, c = in.spec.c;
  const J k = kappa_jet(in, r);
  return c / checked_sqrt(c * c - 2.0 * b * b * k, "c^2 - 2 kappa b^2");
}

inline std::array<J, 3> upsilon(const ClosedFormInput& in, Reading r) {
  const double b = in.spec.b, c = in.spec.c, q = b / c;
  const J k = kappa_jet(in, r);
  const J p = psi(in, r);
  const J dp = d(p);
  const J dk = d(k);
  return {q * (q * dk + k) * p * dp + q * q * k * dp * dp,  //
          q * p * (dp + 2.0 * q * k * p),                   //
          -q * p * (q * dp + p)};
}

// ---------------------------------------------------------------- alpha-y

inline double alpha_y_denominator(const ClosedFormInput& in) {
  return in.spec.b * in.spec.b - 2.0 * in.spec.c * in.spec.c;
}

inline std::array<J, 3> zeta(const ClosedFormInput& in, Reading r) {
  const double b = in.spec.b, c = in.spec.c, D = alpha_y_denominator(in);
  check_denominator(D, "b^2 - 2c^2");
  const J k = kappa_jet(in, r);
  check_denominator(k.value(), "kappa");
  const J a = c * d(k) / D;
  return {a * (c - 2.0 * k * b) / (2.0 * k),  //
          a * (c - b - 1.0) / (2.0 * k),       //
          a * (b * k - c) / (2.0 * k * k)};
}

// ---------------------------------------------------------------- x-alpha-y

inline double xay_norm(const ClosedFormInput& in) {
  return std::sqrt(2.0 * in.spec.c * in.spec.cstar + in.spec.b * in.spec.b);
}

inline J eta(const ClosedFormInput& in, Reading r) {
  const double b = in.spec.b, c = in.spec.c, cs = in.spec.cstar;
  const J k = kappa_jet(in, r);
  const J m = c - cs * k;
  return checked_sqrt(m * m - 2.0 * b * b * k, "(c - c* kappa)^2 - 2 b^2 kappa");
}

inline std::array<J, 3> rho(const ClosedFormInput& in, Reading r) {
  const double b = in.spec.b, c = in.spec.c, cs = in.spec.cstar;
  const J k = kappa_jet(in, r);
  const J e = eta(in, r);
  return {b * k / e, (c - cs * k) / e, -b / e};
}

inline std::array<J, 3> xi(const ClosedFormInput& in, Reading r) {
  const J k = kappa_jet(in, r);
  const auto p = rho(in, r);
  return {d(p[0]) + p[1] * k, d(p[1]) + p[0] + p[2] * k, -d(p[2]) - p[1]};
}

// ---------------------------------------------------------------- generating-function forms

inline LorentzVector f_vec(const ClosedFormInput& in) { return {in.f, 1.0, in.f}; }

/// The printed tuple "(1.0, 1)", read as the vector (1, 0, 1).
inline constexpr LorentzVector kTupleOneZeroOne{1.0, 0.0, 1.0};

inline double g_ratio(const ClosedFormInput& in) {
  check_denominator(in.fs, "f_s");
  return in.fss / in.fs;
}

inline FormulaValue vec(const LorentzVector& v) { return {v.x1, v.x2, v.x3}; }

// ---------------------------------------------------------------- frame-coordinate algebra

/// <u, v> for vectors given in the (x, alpha, y) basis.
inline double pair(const FrameCoordinates& u, const FrameCoordinates& v) {
  return u.x * v.y + u.y * v.x + u.alpha * v.alpha;
}

/// gamma'' with respect to s*, in the (x, alpha, y) basis.
inline FrameCoordinates second_derivative_coords(const ClosedFormInput& in) {
  const auto d = partner_derivatives(in.spec, in.kappa, in.dkappa);
  const double q = pair(d.first, d.first);
  if (!(q > kAdmissibleTol)) throw DomainViolation("<gamma_s, gamma_s>", q);
  const double k = pair(d.first, d.second) / q;  // sigma' / sigma
  return {(d.second.x - k * d.first.x) / q, (d.second.alpha - k * d.first.alpha) / q,
          (d.second.y - k * d.first.y) / q};
}

}  // namespace formulas

/// The full registry, in display order. Each kind's entries are evaluated
/// for every spec of that kind.
inline const std::vector<RegistryEntry>& closed_form_registry() {
  using namespace formulas;
  static const std::vector<RegistryEntry> registry = [] {
    std::vector<RegistryEntry> r;
    auto add = [&r](std::string id, std::string variant, Kind k, OracleTarget t, std::string desc,
                    std::function<FormulaValue(const ClosedFormInput&)> f) {
      r.push_back({std::move(id), std::move(variant), k, t, std::move(desc), std::move(f)});
    };
    const std::array<Reading, 2> readings = {Reading::DS, Reading::DSStar};

    // x-alpha partner.
    add("eq3.2", "gamma-row", Kind::XAlpha, OracleTarget::GammaRow, "gamma = (c/b) x + alpha",
        [](const ClosedFormInput& in) { return row(in.spec.c / in.spec.b, 1.0, 0.0); });
    add("eq3.2", "alpha-row", Kind::XAlpha, OracleTarget::AlphaRow, "matrix row (psi, (b/c) kappa psi, -(b/c) psi)",
        [](const ClosedFormInput& in) {
          const double q = in.spec.b / in.spec.c;
          const J p = psi(in, Reading::DS);
          return row(p, q * kappa_jet(in, Reading::DS) * p, -q * p);
        });
    add("eq3.2", "alpha-row:proof", Kind::XAlpha, OracleTarget::AlphaRow,
        "tangent from the proof, psi ((b/c) kappa, 1, -(b/c))", [](const ClosedFormInput& in) {
          const double q = in.spec.b / in.spec.c;
          const J p = psi(in, Reading::DS);
          return row(q * kappa_jet(in, Reading::DS) * p, p, -q * p);
        });
    add("eq3.3", "printed", Kind::XAlpha, OracleTarget::Normalizer, "psi = c / sqrt(c^2 - 2 kappa b^2)",
        [](const ClosedFormInput& in) { return FormulaValue{psi(in, Reading::DS).value()}; });
    for (Reading rd : readings) {
      add("eq3.4", to_string(rd), Kind::XAlpha, OracleTarget::GammaPP, "(Upsilon1, Upsilon2, Upsilon3)",
          [rd](const ClosedFormInput& in) {
            const auto u = upsilon(in, rd);
            return row(u[0], u[1], u[2]);
          });
    }
    for (Reading rd : readings) {
      add("eq3.5", to_string(rd), Kind::XAlpha, OracleTarget::YRow, "(varrho1, varrho2, varrho3)",
          [rd](const ClosedFormInput& in) {
            const auto u = upsilon(in, rd);
            const J q = 2.0 * u[0] * u[2] + u[1] * u[1];
            const double cb = in.spec.c / in.spec.b;
            return row(-(u[0] + 0.5 * cb * q), -(u[1] + 0.5 * q), -u[2]);
          });
    }
    for (Reading rd : readings) {
      add("eq3.6", to_string(rd), Kind::XAlpha, OracleTarget::Curvature, "-1/2 (2 Upsilon1 Upsilon3 + Upsilon2^2)",
          [rd](const ClosedFormInput& in) {
            const auto u = upsilon(in, rd);
            return FormulaValue{-0.5 * (2.0 * u[0] * u[2] + u[1] * u[1]).value()};
          });
    }
    add("eq3.8", "printed", Kind::XAlpha, OracleTarget::Speed, "ds* / ds = (1/b) sqrt(c^2 - 2 b^2 kappa)",
        [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c;
          return FormulaValue{checked_sqrt(c * c - 2.0 * b * b * in.kappa, "c^2 - 2 b^2 kappa") / b};
        });

    add("eq3.11", "literal", Kind::XAlpha, OracleTarget::YRow, "-gamma'' - 1/2 <gamma'', gamma''> gamma",
        [](const ClosedFormInput& in) {
          const auto g = second_derivative_coords(in);
          const auto c = construction_coefficients(in.spec);
          const double h = 0.5 * pair(g, g);
          return row(-g.x - h * c.x, -g.alpha - h * c.alpha, -g.y - h * c.y);
        });
    add("eq3.13", "printed", Kind::XAlpha, OracleTarget::Curvature, "-1/2 <gamma'', gamma''>",
        [](const ClosedFormInput& in) {
          const auto g = second_derivative_coords(in);
          return FormulaValue{-0.5 * pair(g, g)};
        });

    // x-y partner.
    add("eq3.15", "gamma-row", Kind::XY, OracleTarget::GammaRow, "(sqrt(c/2b), 0, sqrt(b/2c))",
        [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c;
          return row(std::sqrt(c / (2.0 * b)), 0.0, std::sqrt(b / (2.0 * c)));
        });
    add("eq3.15", "alpha-row", Kind::XY, OracleTarget::AlphaRow, "(0, 1, 0)",
        [](const ClosedFormInput&) { return row(0.0, 1.0, 0.0); });
    add("eq3.15", "y-row", Kind::XY, OracleTarget::YRow,
        "(b kappa^2 sqrt(2bc)/(c - b kappa)^2, 0, c sqrt(2bc)/(c - b kappa)^2)", [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c, k = in.kappa, n = std::sqrt(2.0 * b * c);
          const double m = c - b * k;
          check_denominator(m, "c - b kappa");
          return row(b * k * k * n / (m * m), 0.0, c * n / (m * m));
        });
    add("eq3.16", "definition", Kind::XY, OracleTarget::Curvature, "2 b kappa / (c - b kappa)^2",
        [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c, k = in.kappa, m = c - b * k;
          check_denominator(m, "c - b kappa");
          return FormulaValue{2.0 * b * k / (m * m)};
        });
    add("eq3.16", "proof", Kind::XY, OracleTarget::Curvature, "2 b c kappa / (c - b kappa)^2",
        [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c, k = in.kappa, m = c - b * k;
          check_denominator(m, "c - b kappa");
          return FormulaValue{2.0 * b * c * k / (m * m)};
        });
    add("eq3.17", "printed", Kind::XY, OracleTarget::Speed, "ds* / ds = (c - b kappa) / sqrt(2cb)",
        [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c;
          return FormulaValue{(c - b * in.kappa) / std::sqrt(2.0 * c * b)};
        });
    add("eq3.19", "printed", Kind::XY, OracleTarget::AlphaRow, "alpha_xy = alpha",
        [](const ClosedFormInput&) { return row(0.0, 1.0, 0.0); });
    add("eq3.21", "printed", Kind::XY, OracleTarget::GammaPP,
        "(kappa sqrt(2bc)/(c - b kappa), 0, -sqrt(2bc)/(c - b kappa)^2)", [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c, k = in.kappa, n = std::sqrt(2.0 * b * c);
          const double m = c - b * k;
          check_denominator(m, "c - b kappa");
          return row(k * n / m, 0.0, -n / (m * m));
        });

    // alpha-y partner.
    add("eq3.24", "gamma-row", Kind::AlphaY, OracleTarget::GammaRow, "(0, 1, b/c)",
        [](const ClosedFormInput& in) { return row(0.0, 1.0, in.spec.b / in.spec.c); });
    add("eq3.24", "alpha-row", Kind::AlphaY, OracleTarget::AlphaRow,
        "sqrt(kappa)/sqrt(b^2 - 2c^2) (c, b, c/kappa)", [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c;
          const double a = checked_sqrt(in.kappa, "kappa") / checked_sqrt(alpha_y_denominator(in), "b^2 - 2c^2");
          return row(c * a, b * a, c * a / in.kappa);
        });
    add("eq3.24", "alpha-row:proof", Kind::AlphaY, OracleTarget::AlphaRow,
        "tangent from the proof, sqrt(kappa)/sqrt(b^2 - 2c^2) (c, -b, -c/kappa)", [](const ClosedFormInput& in) {
          const double b = in.spec.b, c = in.spec.c;
          const double a = checked_sqrt(in.kappa, "kappa") / checked_sqrt(alpha_y_denominator(in), "b^2 - 2c^2");
          return row(c * a, -b * a, -c * a / in.kappa);
        });
    for (Reading rd : readings) {
      add("eq3.25", to_string(rd), Kind::AlphaY, OracleTarget::GammaPP, "(zeta1, zeta2, zeta3)",
          [rd](const ClosedFormInput& in) {
            const auto z = zeta(in, rd);
            return row(z[0], z[1], z[2]);
          });
    }
    for (Reading rd : readings) {
      add("eq3.26", to_string(rd), Kind::AlphaY, OracleTarget::YRow, "(omega1, omega2, omega3)",
          [rd](const ClosedFormInput& in) {
            const auto z = zeta(in, rd);
            const J q = 2.0 * z[0] * z[2] + z[1] * z[1];
            const double bc = in.spec.b / in.spec.c;
            return row(-z[0], -(z[1] + 0.5 * q), -(z[2] + 0.5 * bc * q));
          });
    }
    for (Reading rd : readings) {
      add("eq3.27", to_string(rd), Kind::AlphaY, OracleTarget::Curvature,
          "-c^2/(8 (b^2-2c^2)^2) (kappa'/kappa)^2 ((c - 2 kappa b)(b kappa - c)/kappa + (c - b - 1)^2)",
          [rd](const ClosedFormInput& in) {
            const double b = in.spec.b, c = in.spec.c, D = alpha_y_denominator(in);
            check_denominator(D, "b^2 - 2c^2");
            const J k = kappa_jet(in, rd);
            check_denominator(k.value(), "kappa");
            const double ratio = k.derivative(1) / k.value();
            const double tail = (c - 2.0 * k.value() * b) * (b * k.value() - c) / k.value() + (c - b - 1.0) * (c - b - 1.0);
            return FormulaValue{-c * c / (8.0 * D * D) * ratio * ratio * tail};
          });
    }
    add("eq3.28", "printed", Kind::AlphaY, OracleTarget::Speed, "ds* / ds = sqrt(b^2 - 2c^2) sqrt(kappa) / c",
        [](const ClosedFormInput& in) {
          return FormulaValue{checked_sqrt(alpha_y_denominator(in), "b^2 - 2c^2") * checked_sqrt(in.kappa, "kappa") /
                              in.spec.c};
        });

    // x-alpha-y partner.
    add("eq3.35", "gamma-row", Kind::XAlphaY, OracleTarget::GammaRow, "(c, b, c*) / sqrt(2cc* + b^2)",
        [](const ClosedFormInput& in) {
          const double n = xay_norm(in);
          return row(in.spec.c / n, in.spec.b / n, in.spec.cstar / n);
        });
    add("eq3.35", "alpha-row", Kind::XAlphaY, OracleTarget::AlphaRow, "(rho1, rho2, rho3)",
        [](const ClosedFormInput& in) {
          const auto p = rho(in, Reading::DS);
          return row(p[0], p[1], p[2]);
        });
    add("eq3.35", "alpha-row:proof", Kind::XAlphaY, OracleTarget::AlphaRow, "tangent from the proof, (rho1, rho2, -rho3)",
        [](const ClosedFormInput& in) {
          const auto p = rho(in, Reading::DS);
          return row(p[0], p[1], -p[2]);
        });
    for (Reading rd : readings) {
      add("eq3.36", to_string(rd), Kind::XAlphaY, OracleTarget::GammaPP, "(xi1, xi2, xi3)",
          [rd](const ClosedFormInput& in) {
            const auto x = xi(in, rd);
            return row(x[0], x[1], x[2]);
          });
    }
    for (Reading rd : readings) {
      add("eq3.37", to_string(rd), Kind::XAlphaY, OracleTarget::YRow, "(sigma1, sigma2, sigma3)",
          [rd](const ClosedFormInput& in) {
            const auto x = xi(in, rd);
            const J q = 2.0 * x[0] * x[2] + x[1] * x[1];
            const double n2 = 2.0 * xay_norm(in);
            return row(-x[0] - in.spec.c / n2 * q, -x[1] - in.spec.b / n2 * q, -x[2] - in.spec.cstar / n2 * q);
          });
    }
    for (Reading rd : readings) {
      add("eq3.38", to_string(rd), Kind::XAlphaY, OracleTarget::Curvature,
          "(b (kappa/eta)' + (c - c* kappa) kappa / eta) ((b/eta)' + (c - c* kappa)/eta) - 1/2 ((c - c* kappa)/eta)'",
          [rd](const ClosedFormInput& in) {
            const double b = in.spec.b, c = in.spec.c, cs = in.spec.cstar;
            const J k = kappa_jet(in, rd);
            const J e = eta(in, rd);
            const J m = (c - cs * k) / e;
            const J first = b * d(k / e) + m * k;
            const J second = d(b / e) + m;
            return FormulaValue{(first * second - 0.5 * d(m)).value()};
          });
    }
    add("eq3.39", "printed", Kind::XAlphaY, OracleTarget::Speed,
        "ds* / ds = sqrt((c - c* kappa)^2 - 2 b^2 kappa) / sqrt(2cc* + b^2)", [](const ClosedFormInput& in) {
          return FormulaValue{eta(in, Reading::DS).value() / xay_norm(in)};
        });

    // Generating-function forms of the four partners.
    add("eq3.47", "printed", Kind::XAlpha, OracleTarget::Position, "(c/b - f_s^-1 f_ss) x + (f, 1, f)",
        [](const ClosedFormInput& in) {
          const double g = g_ratio(in);
          return vec((in.spec.c / in.spec.b - g) * in.x + f_vec(in));
        });
    add("eq3.48", "printed", Kind::XY, OracleTarget::Position,
        "((c - f_s^-2 f_ss^2 / 2) x + f_s^-1 f_ss (f, 1, f) - f_s (1, 0, 1)) / sqrt(2bc)", [](const ClosedFormInput& in) {
          const double g = g_ratio(in);
          const double n = std::sqrt(2.0 * in.spec.b * in.spec.c);
          return vec(((in.spec.c - 0.5 * g * g) * in.x + g * f_vec(in) - in.fs * kTupleOneZeroOne) / n);
        });
    add("eq3.49", "printed", Kind::AlphaY, OracleTarget::Position,
        "(-f_s^-1 f_ss - (b/2c) f_s^-2 f_ss^2) x + (1 + (b/c) f_s^-1 f_ss)(f, 1, f) - (b/c) f_s (1, 0, 1)",
        [](const ClosedFormInput& in) {
          const double g = g_ratio(in);
          const double bc = in.spec.b / in.spec.c;
          return vec((-g - 0.5 * bc * g * g) * in.x + (1.0 + bc * g) * f_vec(in) - bc * in.fs * kTupleOneZeroOne);
        });
    add("xay-display", "printed", Kind::XAlphaY, OracleTarget::Position,
        "((c - b f_s^-1 f_ss - (c*/2) f_s^-2 f_ss^2) x + (b + c* f_s^-1 f_ss)(f, 1, f) - f_s (1, 0, 1)) / sqrt(2cc* + b^2)",
        [](const ClosedFormInput& in) {
          const double g = g_ratio(in);
          const double b = in.spec.b, c = in.spec.c, cs = in.spec.cstar;
          return vec(((c - b * g - 0.5 * cs * g * g) * in.x + (b + cs * g) * f_vec(in) - in.fs * kTupleOneZeroOne) /
                     xay_norm(in));
        });
    return r;
  }();
  return registry;
}

/// Evaluate one entry; throws DomainViolation outside its printed domain.
inline FormulaValue closed_form_eval(const RegistryEntry& e, const ClosedFormInput& in) {
  if (e.kind != in.spec.kind) throw InvalidSpec("registry entry " + e.formula_id + " does not apply to this kind");
  return e.eval(in);
}

inline const RegistryEntry& find_entry(const std::string& id, const std::string& variant) {
  for (const auto& e : closed_form_registry()) {
    if (e.formula_id == id && e.variant == variant) return e;
  }
  throw std::out_of_range("no registry entry " + id + " / " + variant);
}

}  // namespace conecurve
