#pragma once

/**
 * @file arclength.hpp
 * @brief Arc length s* of a partner curve as a function of the base parameter.
 *
 * s*(s) is the integral of sigma = ds* / ds, computed panel by panel with
 * adaptive Gauss-Kronrod quadrature for exact curves. Sampled curves only
 * know sigma at their nodes and use a 4-point interpolatory panel rule.
 * The resulting table is inverted with a monotone cubic Hermite interpolant.
 */

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/interpolators/cubic_hermite.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "conecurve/csv.hpp"
#include "conecurve/curve.hpp"
#include "conecurve/frame.hpp"
#include "conecurve/smarandache.hpp"

namespace conecurve {

class QuadratureFailure : public std::runtime_error {
 public:
  QuadratureFailure(double a, double b, double err)
      : std::runtime_error("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                           "] did not reach tolerance (error estimate " + std::to_string(err) + ")") {}
};

struct ArcLengthOptions {
  double abs_tol = 1e-10;  ///< per panel
  unsigned max_depth = 15;
  double admissible_tol = kAdmissibleTol;
  std::optional<FrameTolerances> frame_tol;  ///< default: by jet accuracy
};

namespace detail {

inline FrameTolerances tolerances_for(const CurveSource& curve, const ArcLengthOptions& o) {
  if (o.frame_tol) return *o.frame_tol;
  return FrameTolerances::for_accuracy(curve.exact() ? JetAccuracy::Exact : JetAccuracy::Centered);
}

inline double speed_at(const SmarandacheSpec& spec, const CurveSource& curve, double s, const ArcLengthOptions& o) {
  try {
    return partner_speed_oracle(spec, frame_jet_at(curve.jet(s), tolerances_for(curve, o)), o.admissible_tol);
  } catch (const NonSpacelikeTangent& e) {
    throw DomainViolation("<gamma_s, gamma_s>", e.quadrance, "s = " + std::to_string(s));
  }
}

/// Weights of the exact integral over one interval of the cubic through four
/// equally spaced nodes; `pos` is the interval index within the four (0..2).
inline std::array<double, 4> four_point_panel(int pos) {
  switch (pos) {
    case 0: return {9.0 / 24, 19.0 / 24, -5.0 / 24, 1.0 / 24};
    case 1: return {-1.0 / 24, 13.0 / 24, 13.0 / 24, -1.0 / 24};
    default: return {1.0 / 24, -5.0 / 24, 19.0 / 24, 9.0 / 24};
  }
}

/// Integral of the sampled speed over [nodes[i], nodes[i+1]], using the
/// four-node window inside [0, n).
inline double sampled_panel(std::span<const double> sigma, std::size_t i, double h, double* err) {
  const std::size_t n = sigma.size();
  const double trap = 0.5 * h * (sigma[i] + sigma[i + 1]);
  if (n < 4) {
    if (err) *err = 0.0;
    return trap;
  }
  std::size_t first = i >= 1 ? i - 1 : 0;
  if (first + 4 > n) first = n - 4;
  const auto w = four_point_panel(static_cast<int>(i - first));
  double acc = 0.0;
  for (std::size_t j = 0; j < 4; ++j) acc += w[j] * sigma[first + j];
  acc *= h;
  if (err) *err = std::abs(acc - trap);
  return acc;
}

}  // namespace detail

/// Integral of ds* / ds over [a, b] for an exact curve source.
inline double integrate_speed(const SmarandacheSpec& spec, const CurveSource& curve, double a, double b,
                              const ArcLengthOptions& o = {}, double* error = nullptr) {
  if (a == b) {
    if (error) *error = 0.0;
    return 0.0;
  }
  auto f = [&](double s) { return detail::speed_at(spec, curve, s, o); };
  double err = 0.0;
  double l1 = 0.0;
  // Boost's tolerance is relative to the L1 norm; the panel test below is absolute.
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, o.max_depth, 1e-12, &err, &l1);
  if (!(err <= o.abs_tol)) throw QuadratureFailure(a, b, err);
  if (error) *error = err;
  return v;
}

/// Monotone table s -> s*, s*(lo) = 0.
class ArcLengthTable {
 public:
  ArcLengthTable(std::vector<double> s, std::vector<double> sstar, std::vector<double> sigma, double max_error)
      : s_(std::move(s)), sstar_(std::move(sstar)), sigma_(std::move(sigma)), max_error_(max_error) {
    if (s_.size() >= 2) build_interpolants();
  }

  const std::vector<double>& s() const { return s_; }
  const std::vector<double>& sstar() const { return sstar_; }
  const std::vector<double>& sigma() const { return sigma_; }
  double total() const { return sstar_.empty() ? 0.0 : sstar_.back(); }
  /// Largest panel error estimate from the quadrature.
  double max_error_estimate() const { return max_error_; }

  double sstar_at(double s) const {
    check_range(s, s_.front(), s_.back(), "s");
    if (s_.size() == 1) return 0.0;
    return (*forward_)(s);
  }

  double s_at(double sstar) const {
    check_range(sstar, sstar_.front(), sstar_.back(), "s*");
    if (s_.size() == 1) return s_.front();
    return (*inverse_)(sstar);
  }

 private:
  using Hermite = boost::math::interpolators::cubic_hermite<std::vector<double>>;

  static void check_range(double v, double lo, double hi, const char* name) {
    const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
    if (v < lo - slack || v > hi + slack) {
      throw std::out_of_range(std::string(name) + " = " + std::to_string(v) + " outside the table");
    }
  }

  void build_interpolants() {
    forward_.emplace(std::vector<double>(s_), std::vector<double>(sstar_), std::vector<double>(sigma_));
    // Inverse slopes 1/sigma, limited so that each Hermite piece stays
    // monotone (Fritsch-Carlson: alpha^2 + beta^2 <= 9).
    std::vector<double> slope(sigma_.size());
    for (std::size_t i = 0; i < slope.size(); ++i) slope[i] = 1.0 / sigma_[i];
    for (std::size_t i = 0; i + 1 < s_.size(); ++i) {
      const double delta = (s_[i + 1] - s_[i]) / (sstar_[i + 1] - sstar_[i]);
      const double a = slope[i] / delta;
      const double b = slope[i + 1] / delta;
      const double r = a * a + b * b;
      if (r > 9.0) {
        const double t = 3.0 / std::sqrt(r);
        slope[i] = t * a * delta;
        slope[i + 1] = t * b * delta;
      }
    }
    inverse_.emplace(std::vector<double>(sstar_), std::vector<double>(s_), std::move(slope));
  }

  std::vector<double> s_;
  std::vector<double> sstar_;
  std::vector<double> sigma_;
  double max_error_ = 0.0;
  std::optional<Hermite> forward_;
  std::optional<Hermite> inverse_;
};

/// Table on n uniform nodes of [lo, hi] (exact sources) or on the native
/// nodes inside [lo, hi] (sampled sources).
inline ArcLengthTable arclength_table(const SmarandacheSpec& spec, const CurveSource& curve, double lo, double hi,
                                      int n, const ArcLengthOptions& o = {}) {
  spec.validate();
  if (hi < lo) throw std::invalid_argument("arc-length range must satisfy lo <= hi");
  std::vector<double> nodes;
  if (lo == hi) {
    nodes = {lo};
  } else if (const auto native = curve.native_grid()) {
    for (double s : *native) {
      if (s >= lo - 1e-12 && s <= hi + 1e-12) nodes.push_back(s);
    }
    if (nodes.size() < 2) throw std::invalid_argument("fewer than two sampled nodes in the arc-length range");
  } else {
    if (n < 2) throw std::invalid_argument("arc-length table needs n >= 2");
    nodes = uniform_grid(lo, hi, n);
  }

  std::vector<double> sigma(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) sigma[i] = detail::speed_at(spec, curve, nodes[i], o);

  std::vector<double> sstar(nodes.size(), 0.0);
  double max_err = 0.0;
  const bool sampled = curve.sampled_data() != nullptr;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    double err = 0.0;
    const double piece = sampled ? detail::sampled_panel(sigma, i, nodes[i + 1] - nodes[i], &err)
                                 : integrate_speed(spec, curve, nodes[i], nodes[i + 1], o, &err);
    if (!(piece > 0.0)) throw DomainViolation("arc-length increment", piece, "s = " + std::to_string(nodes[i]));
    sstar[i + 1] = sstar[i] + piece;
    max_err = std::max(max_err, err);
  }
  return ArcLengthTable(std::move(nodes), std::move(sstar), std::move(sigma), max_err);
}

/// Partner frames on a grid. Inadmissible points are skipped and counted;
/// s* accumulates over the admissible runs only.
inline PartnerTrajectory partner_trajectory(const SmarandacheSpec& spec, const CurveSource& curve,
                                            std::span<const double> grid, const ArcLengthOptions& o = {}) {
  spec.validate();
  PartnerTrajectory t;
  t.spec = spec;
  const FrameTolerances ftol = detail::tolerances_for(curve, o);
  std::vector<bool> ok(grid.size(), false);
  std::vector<PartnerSample> all(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const FrameJet fj = frame_jet_at(curve.jet(grid[i]), ftol);
    if (admissible(spec, fj, o.admissible_tol)) {
      all[i] = partner_frame_oracle(spec, fj, o.admissible_tol);
      ok[i] = true;
    } else {
      ++t.skipped;
    }
  }

  const bool sampled = curve.sampled_data() != nullptr;
  double acc = 0.0;
  std::size_t run_begin = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!ok[i]) continue;
    const bool continues = i > 0 && ok[i - 1];
    if (!continues) {
      t.run_starts.push_back(t.samples.size());
      run_begin = i;
    } else if (sampled) {
      std::size_t run_end = i;
      while (run_end + 1 < grid.size() && ok[run_end + 1]) ++run_end;
      std::vector<double> sig;
      for (std::size_t j = run_begin; j <= run_end; ++j) sig.push_back(all[j].sigma);
      acc += detail::sampled_panel(sig, i - 1 - run_begin, grid[i] - grid[i - 1], nullptr);
    } else {
      acc += integrate_speed(spec, curve, grid[i - 1], grid[i], o);
    }
    all[i].sstar = acc;
    t.samples.push_back(all[i]);
  }
  return t;
}

/// Partner CSV: s,sstar,sigma,kappa_g,gamma_self,g1,g2,g3,a1,a2,a3,y1,y2,y3.
inline void write_partner_csv(std::ostream& out, const PartnerTrajectory& t) {
  CsvWriter w(out);
  w.header({"s", "sstar", "sigma", "kappa_g", "gamma_self", "g1", "g2", "g3", "a1", "a2", "a3", "y1", "y2", "y3"});
  for (const auto& p : t.samples) {
    w.cell(p.s).cell(p.sstar.value_or(NAN)).cell(p.sigma).cell(p.kappa_g).cell(p.gamma_self);
    w.cell(p.gamma).cell(p.alpha_g).cell(p.y_g);
    w.end_row();
  }
}

}  // namespace conecurve
