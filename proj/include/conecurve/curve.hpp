#pragma once

/**
 * @file curve.hpp
 * @brief Unit-speed curves on the null cone Q^2 and their derivative jets.
 *
 * A spacelike unit-speed curve on Q^2 can be written through a generating
 * function f as x(s) = (1 / (2 f')) (f^2 - 1, 2f, f^2 + 1). Sources here
 * produce `CurveJet`s (position and three derivatives) either exactly, by
 * Taylor-jet propagation, or from sampled data through finite differences.
 */

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "conecurve/fd.hpp"
#include "conecurve/jet.hpp"
#include "conecurve/lorentz.hpp"

namespace conecurve {

class DegenerateGenerator : public std::domain_error {
 public:
  explicit DegenerateGenerator(double fs)
      : std::domain_error("generating function is locally constant: |f'| = " + std::to_string(std::abs(fs))) {}
};

class DegenerateProjection : public std::domain_error {
 public:
  explicit DegenerateProjection(double d)
      : std::domain_error("x3 - x1 = " + std::to_string(d) + " is too close to zero to recover f") {}
};

class OffGrid : public std::out_of_range {
 public:
  explicit OffGrid(double s) : std::out_of_range("s = " + std::to_string(s) + " is not a node of the sampled curve") {}
};

/// Position and derivatives to order 3 at parameter s.
struct CurveJet {
  double s = 0.0;
  LorentzVector p;
  LorentzVector d1;
  LorentzVector d2;
  LorentzVector d3;
  JetAccuracy accuracy = JetAccuracy::Exact;
};

/// f and its first three derivatives at one parameter value.
struct ScalarJet3 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

/// Jet of the generating function; order 4 is needed for x''' .
using GeneratorJet = Taylor<4>;

inline constexpr double kDegenerateEps = 1e-12;

/// Position of the cone curve generated by f at a point where f = `f`, f' = `fs`.
inline LorentzVector cone_position(double f, double fs) {
  if (std::abs(fs) < kDegenerateEps) throw DegenerateGenerator(fs);
  const double h = 0.5 / fs;
  return {h * (f * f - 1.0), h * 2.0 * f, h * (f * f + 1.0)};
}

/// Exact jet of x(s) = (1/(2 f')) (f^2 - 1, 2f, f^2 + 1) from a jet of f.
inline CurveJet eval_cone_curve(const GeneratorJet& fjet, double s) {
  if (std::abs(fjet.derivative(1)) < kDegenerateEps) throw DegenerateGenerator(fjet.derivative(1));
  const Taylor<3> f = fjet.truncate<3>();
  const Taylor<3> half_inv = 0.5 / fjet.differentiate();
  const Taylor<3> f2 = f * f;
  const Taylor<3> c1 = half_inv * (f2 - 1.0);
  const Taylor<3> c2 = half_inv * (2.0 * f);
  const Taylor<3> c3 = half_inv * (f2 + 1.0);
  auto vec = [&](int k) { return LorentzVector{c1.derivative(k), c2.derivative(k), c3.derivative(k)}; };
  return {s, vec(0), vec(1), vec(2), vec(3), JetAccuracy::Exact};
}

/// The closed-form sample curve (cosh s/2 - 1/cosh s, tanh s, cosh s/2),
/// generated by f = sinh.
inline CurveJet example1_curve(double s) {
  const auto t = Taylor<3>::variable(s);
  const Taylor<3> ch = cosh(t);
  const Taylor<3> c1 = ch / 2.0 - 1.0 / ch;
  const Taylor<3> c2 = tanh(t);
  const Taylor<3> c3 = ch / 2.0;
  auto vec = [&](int k) { return LorentzVector{c1.derivative(k), c2.derivative(k), c3.derivative(k)}; };
  return {s, vec(0), vec(1), vec(2), vec(3), JetAccuracy::Exact};
}

namespace detail {

inline Taylor<3> projection_jet(const CurveJet& c) {
  const double d0 = c.p.x3 - c.p.x1;
  if (std::abs(d0) < kDegenerateEps) throw DegenerateProjection(d0);
  return Taylor<3>::from_derivatives({d0, c.d1.x3 - c.d1.x1, c.d2.x3 - c.d2.x1, c.d3.x3 - c.d3.x1});
}

}  // namespace detail

/// Generating function recovered from a cone-curve jet: f = x2/(x3 - x1),
/// f' = 1/(x3 - x1). Higher derivatives follow from the jet of 1/(x3 - x1).
inline ScalarJet3 recover_generating_function(const CurveJet& c) {
  const Taylor<3> inv = 1.0 / detail::projection_jet(c);
  return {c.p.x2 * inv.value(), inv.derivative(0), inv.derivative(1), inv.derivative(2)};
}

/// Same recovery carried to the order-4 jet that `eval_cone_curve` consumes.
inline GeneratorJet recover_generator_jet(const CurveJet& c) {
  const Taylor<3> inv = 1.0 / detail::projection_jet(c);
  return GeneratorJet::from_derivatives(
      {c.p.x2 * inv.value(), inv.derivative(0), inv.derivative(1), inv.derivative(2), inv.derivative(3)});
}

/// FD jet from seven positions at s - 3h, ..., s + 3h. Audit oracle only.
inline CurveJet fd_jet(std::span<const LorentzVector, kStencilWidth> stencil, double h, double s,
                       FdOptions opts = {}) {
  const auto fd = fd_derivatives(stencil, h, 3, opts);
  return {s, stencil[3], fd.d1, fd.d2, fd.d3, fd.accuracy};
}

/// FD jet of any position function sampled around s.
template <typename PositionFn>
CurveJet fd_jet_of(PositionFn&& position, double s, double h, FdOptions opts = {}) {
  std::array<LorentzVector, kStencilWidth> st;
  for (int j = 0; j < static_cast<int>(kStencilWidth); ++j) st[static_cast<std::size_t>(j)] = position(s + (j - 3) * h);
  return fd_jet(st, h, s, opts);
}

/// A named generating function, evaluated on Taylor jets.
struct GeneratorCurve {
  std::string name;
  std::function<GeneratorJet(const GeneratorJet&)> f;

  CurveJet jet(double s) const { return eval_cone_curve(f(GeneratorJet::variable(s)), s); }
};

struct Example1Curve {
  CurveJet jet(double s) const { return example1_curve(s); }
};

/// Positions on a uniform grid; jets come from 7-point stencils.
struct SampledCurve {
  double s0 = 0.0;
  double step = 1.0;
  std::vector<LorentzVector> positions;

  std::size_t size() const { return positions.size(); }
  double node(std::size_t i) const { return s0 + step * static_cast<double>(i); }

  std::size_t index_of(double s) const {
    const double t = (s - s0) / step;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-6 || r < 0.0 || r > static_cast<double>(positions.size() - 1)) throw OffGrid(s);
    return static_cast<std::size_t>(r);
  }

  CurveJet jet(double s) const {
    const std::size_t i = index_of(s);
    const auto fd = fd_jet_on_grid(positions, i, step);
    return {node(i), positions[i], fd.d1, fd.d2, fd.d3, fd.accuracy};
  }
};

/// Immutable curve source: a generating function, the closed-form example,
/// or sampled data.
class CurveSource {
 public:
  using Variant = std::variant<GeneratorCurve, Example1Curve, SampledCurve>;

  explicit CurveSource(Variant v, std::string descriptor) : v_(std::move(v)), descriptor_(std::move(descriptor)) {}

  static CurveSource example1() { return CurveSource(Example1Curve{}, "example1"); }
  static CurveSource generator(std::string name, std::function<GeneratorJet(const GeneratorJet&)> f) {
    std::string d = "f:" + name;
    return CurveSource(GeneratorCurve{std::move(name), std::move(f)}, std::move(d));
  }
  static CurveSource sampled(SampledCurve c, std::string path) {
    return CurveSource(std::move(c), "csv:" + std::move(path));
  }

  CurveJet jet(double s) const {
    return std::visit([s](const auto& c) { return c.jet(s); }, v_);
  }

  /// True when jets are exact (Taylor propagation), false for FD jets.
  bool exact() const { return !std::holds_alternative<SampledCurve>(v_); }

  const std::string& descriptor() const { return descriptor_; }

  const SampledCurve* sampled_data() const { return std::get_if<SampledCurve>(&v_); }

  /// Sampled curves only admit their own nodes.
  std::optional<std::vector<double>> native_grid() const {
    if (const auto* sc = sampled_data()) {
      std::vector<double> g(sc->size());
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = sc->node(i);
      return g;
    }
    return std::nullopt;
  }

 private:
  Variant v_;
  std::string descriptor_;
};

/// Generating functions selectable by name (`f:NAME` on the command line).
/// All have f' > 0 on the real line.
inline std::optional<CurveSource> named_generator(const std::string& name) {
  if (name == "sinh") return CurveSource::generator(name, [](const GeneratorJet& s) { return sinh(s); });
  // x(s) = (sinh s, 1, cosh s), constant cone curvature 1/2.
  if (name == "exp") return CurveSource::generator(name, [](const GeneratorJet& s) { return exp(s); });
  if (name == "cubic") return CurveSource::generator(name, [](const GeneratorJet& s) { return s + s * s * s / 3.0; });
  if (name == "sinh-perturbed") {
    return CurveSource::generator(name, [](const GeneratorJet& s) {
      return sinh(s) + s * s * s / 20.0 - s * s / 30.0;
    });
  }
  return std::nullopt;
}

inline std::vector<std::string> generator_names() { return {"sinh", "exp", "cubic", "sinh-perturbed"}; }

/// Uniform grid of n points on [lo, hi].
inline std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace conecurve
