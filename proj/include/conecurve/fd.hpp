#pragma once

/**
 * @file fd.hpp
 * @brief Finite-difference derivative estimates for vector-valued samples.
 *
 * Only used as an audit oracle for exact jets and as the jet source for
 * sampled curves. Stencil weights come from Fornberg's recursion, so the
 * centered and one-sided 7-point stencils share one code path.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "conecurve/lorentz.hpp"

namespace conecurve {

enum class JetAccuracy {
  Exact,     ///< Taylor propagation, rounding only
  Centered,  ///< 7-point centered stencil
  OneSided,  ///< 7-point shifted stencil near a grid end
};

inline const char* to_string(JetAccuracy a) {
  switch (a) {
    case JetAccuracy::Exact: return "exact";
    case JetAccuracy::Centered: return "centered";
    case JetAccuracy::OneSided: return "one-sided";
  }
  return "?";
}

class StepTooSmall : public std::domain_error {
 public:
  StepTooSmall(double h, int order, double roundoff)
      : std::domain_error("finite-difference step h = " + std::to_string(h) + " loses order-" +
                          std::to_string(order) + " derivative to cancellation (roundoff estimate " +
                          std::to_string(roundoff) + ")") {}
};

/// Fornberg weights: w[k][j] is the weight of node j for the k-th derivative
/// at x0.
template <std::size_t Nodes, std::size_t MaxOrder>
std::array<std::array<double, Nodes>, MaxOrder + 1> fornberg_weights(double x0,
                                                                     const std::array<double, Nodes>& x) {
  std::array<std::array<double, Nodes>, MaxOrder + 1> c{};
  double c1 = 1.0;
  double c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < Nodes; ++i) {
    const std::size_t mn = std::min(i, MaxOrder);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[k][i] = c1 * (static_cast<double>(k) * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[k][j] = (c4 * c[k][j] - static_cast<double>(k) * c[k - 1][j]) / c3;
      }
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

inline constexpr std::size_t kStencilWidth = 7;

struct FdOptions {
  /// Largest tolerated rounding error, relative to max(1, |position|).
  double cancellation_limit = 1e-4;
};

struct FdDerivatives {
  LorentzVector d1;
  LorentzVector d2;
  LorentzVector d3;
  JetAccuracy accuracy = JetAccuracy::Centered;
  /// Rounding-error estimates for d1..d3, eps * max|p| * sum|w| / h^k.
  std::array<double, 3> roundoff{};
  /// Truncation orders of d1..d3 (powers of h).
  std::array<int, 3> truncation_order{};
};

/// Derivatives at stencil node `center` (0..6) of seven equally spaced
/// samples with spacing h. center = 3 is the symmetric stencil.
inline FdDerivatives fd_derivatives(std::span<const LorentzVector, kStencilWidth> samples, double h,
                                    std::size_t center = 3, FdOptions opts = {}) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  std::array<double, kStencilWidth> offsets{};
  for (std::size_t j = 0; j < kStencilWidth; ++j) {
    offsets[j] = static_cast<double>(j) - static_cast<double>(center);
  }
  const auto w = fornberg_weights<kStencilWidth, 3>(0.0, offsets);

  double scale = 0.0;
  for (const auto& p : samples) scale = std::max(scale, max_abs(p));

  FdDerivatives out;
  out.accuracy = center == 3 ? JetAccuracy::Centered : JetAccuracy::OneSided;
  LorentzVector* dst[3] = {&out.d1, &out.d2, &out.d3};
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int k = 1; k <= 3; ++k) {
    LorentzVector acc;
    double wsum = 0.0;
    for (std::size_t j = 0; j < kStencilWidth; ++j) {
      acc += w[k][j] * samples[j];
      wsum += std::abs(w[k][j]);
    }
    const double hk = std::pow(h, k);
    *dst[k - 1] = acc / hk;
    const double roundoff = 4.0 * eps * scale * wsum / hk;
    out.roundoff[k - 1] = roundoff;
    if (roundoff > opts.cancellation_limit * std::max(1.0, scale)) throw StepTooSmall(h, k, roundoff);
  }
  // n nodes give order n - k; the symmetric stencil gains one for even k.
  if (center == 3) {
    out.truncation_order = {6, 6, 4};
  } else {
    out.truncation_order = {6, 5, 4};
  }
  return out;
}

/// Jet at node i of a uniform grid, centered where the grid allows and
/// shifted (one-sided) within three nodes of either end.
inline FdDerivatives fd_jet_on_grid(const std::vector<LorentzVector>& positions, std::size_t i, double step,
                                    FdOptions opts = {}) {
  const std::size_t n = positions.size();
  if (n < kStencilWidth) {
    throw std::invalid_argument("sampled curve needs at least 7 points for order-3 jets, got " + std::to_string(n));
  }
  std::size_t first = i >= 3 ? i - 3 : 0;
  if (first + kStencilWidth > n) first = n - kStencilWidth;
  std::span<const LorentzVector, kStencilWidth> window(positions.data() + first, kStencilWidth);
  return fd_derivatives(window, step, i - first, opts);
}

}  // namespace conecurve
