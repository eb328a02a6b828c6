#pragma once

/**
 * @file lorentz.hpp
 * @brief Value-level algebra of Minkowski 3-space E^3_1.
 *
 * The bilinear form is <u, v> = u1 v1 + u2 v2 - u3 v3, with x3 the timelike
 * axis. Everything downstream (frames, cone curvature, partner curves)
 * assumes this ordering.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace conecurve {

/// Raised when a square root is requested of a negative quadrance.
class NegativeQuadrance : public std::domain_error {
 public:
  explicit NegativeQuadrance(double q)
      : std::domain_error("negative quadrance <v,v> = " + std::to_string(q)),
        quadrance(q) {}
  double quadrance;
};

/// Triple (x1, x2, x3) of E^3_1. Components are plain doubles; finiteness is
/// checked where vectors enter the pipeline (see `is_finite`).
struct LorentzVector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr LorentzVector() = default;
  constexpr LorentzVector(double a, double b, double c) : x1(a), x2(b), x3(c) {}

  constexpr double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  constexpr LorentzVector& operator+=(const LorentzVector& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr LorentzVector& operator-=(const LorentzVector& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr LorentzVector& operator*=(double a) {
    x1 *= a;
    x2 *= a;
    x3 *= a;
    return *this;
  }

  friend constexpr LorentzVector operator+(LorentzVector a, const LorentzVector& b) { return a += b; }
  friend constexpr LorentzVector operator-(LorentzVector a, const LorentzVector& b) { return a -= b; }
  friend constexpr LorentzVector operator-(const LorentzVector& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend constexpr LorentzVector operator*(double a, LorentzVector v) { return v *= a; }
  friend constexpr LorentzVector operator*(LorentzVector v, double a) { return v *= a; }
  friend constexpr LorentzVector operator/(LorentzVector v, double a) { return v *= (1.0 / a); }

  friend constexpr bool operator==(const LorentzVector&, const LorentzVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LorentzVector& v) {
    return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
  }
};

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

inline const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
  }
  return "?";
}

/// Default absolute tolerance for lightlike classification.
inline constexpr double kLightlikeTol = 1e-9;

constexpr double inner(const LorentzVector& u, const LorentzVector& v) {
  return u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3;
}

constexpr double quadrance(const LorentzVector& v) { return inner(v, v); }

inline bool is_finite(const LorentzVector& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

inline CausalCharacter causal_character(const LorentzVector& v, double tol = kLightlikeTol) {
  const double q = inner(v, v);
  if (std::abs(q) <= tol) return CausalCharacter::Lightlike;
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

/// sqrt(<v,v>). Timelike input is an error, not |<v,v>|^(1/2).
inline double norm(const LorentzVector& v) {
  const double q = inner(v, v);
  if (q < 0.0) throw NegativeQuadrance(q);
  return std::sqrt(q);
}

/// Largest absolute component; the sup norm used for residuals.
inline double max_abs(const LorentzVector& v) {
  return std::max({std::abs(v.x1), std::abs(v.x2), std::abs(v.x3)});
}

/// Rotation by theta in the (x1, x2) plane, fixing the timelike axis. This is
/// an isometry of E^3_1 and maps the null cone to itself.
inline LorentzVector rotate_about_timelike_axis(const LorentzVector& v, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * v.x1 - s * v.x2, s * v.x1 + c * v.x2, v.x3};
}

}  // namespace conecurve
