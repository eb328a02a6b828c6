#pragma once

/**
 * @file jet.hpp
 * @brief Truncated Taylor jets for exact forward-mode differentiation.
 *
 * A `Taylor<N>` carries the normalized coefficients f^(k)(s)/k! for
 * k = 0..N. Arithmetic and the elementary functions below propagate them
 * with the usual Cauchy-product recurrences, so derivatives of closed-form
 * expressions are exact up to rounding.
 *
 * @code
 * auto s = Taylor<3>::variable(0.5);
 * auto x = cosh(s) / 2.0 - 1.0 / cosh(s);
 * double third = x.derivative(3);
 * @endcode
 */

#include <array>
#include <cmath>
#include <cstddef>

namespace conecurve {

template <int N>
class Taylor {
  static_assert(N >= 0, "jet order must be non-negative");

 public:
  static constexpr int order = N;

  constexpr Taylor() = default;
  constexpr Taylor(double value) { c_[0] = value; }  // NOLINT: implicit constant

  static constexpr Taylor constant(double value) { return Taylor(value); }

  /// The independent variable at `s` (value s, unit slope).
  static constexpr Taylor variable(double s) {
    Taylor t(s);
    if constexpr (N >= 1) t.c_[1] = 1.0;
    return t;
  }

  static constexpr Taylor from_coefficients(const std::array<double, N + 1>& c) {
    Taylor t;
    t.c_ = c;
    return t;
  }

  /// Build from plain derivatives f, f', f'', ...
  static Taylor from_derivatives(const std::array<double, N + 1>& d) {
    Taylor t;
    double fact = 1.0;
    for (int k = 0; k <= N; ++k) {
      if (k > 0) fact *= k;
      t.c_[k] = d[k] / fact;
    }
    return t;
  }

  constexpr double value() const { return c_[0]; }
  constexpr double coeff(int k) const { return c_[k]; }
  constexpr double& coeff(int k) { return c_[k]; }

  /// k-th derivative with respect to the jet variable.
  constexpr double derivative(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return c_[k] * fact;
  }

  /// Jet of f', one order shorter.
  constexpr Taylor<(N > 0 ? N - 1 : 0)> differentiate() const {
    Taylor<(N > 0 ? N - 1 : 0)> d;
    for (int k = 0; k < N; ++k) d.coeff(k) = (k + 1) * c_[k + 1];
    return d;
  }

  template <int M>
  constexpr Taylor<M> truncate() const {
    static_assert(M <= N);
    Taylor<M> t;
    for (int k = 0; k <= M; ++k) t.coeff(k) = c_[k];
    return t;
  }

  constexpr Taylor& operator+=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Taylor& operator-=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Taylor& operator*=(double a) {
    for (auto& v : c_) v *= a;
    return *this;
  }

  friend constexpr Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend constexpr Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend constexpr Taylor operator+(Taylor a, double b) { a.c_[0] += b; return a; }
  friend constexpr Taylor operator+(double a, Taylor b) { b.c_[0] += a; return b; }
  friend constexpr Taylor operator-(Taylor a, double b) { a.c_[0] -= b; return a; }
  friend constexpr Taylor operator-(double a, const Taylor& b) { return Taylor(a) - b; }
  friend constexpr Taylor operator-(Taylor a) { return a *= -1.0; }
  friend constexpr Taylor operator*(Taylor a, double b) { return a *= b; }
  friend constexpr Taylor operator*(double a, Taylor b) { return b *= a; }
  friend constexpr Taylor operator/(Taylor a, double b) { return a *= (1.0 / b); }

  friend constexpr Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
      r.c_[k] = acc;
    }
    return r;
  }

  friend constexpr Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q;
    for (int k = 0; k <= N; ++k) {
      double acc = a.c_[k];
      for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
      q.c_[k] = acc / b.c_[0];
    }
    return q;
  }

  friend constexpr Taylor operator/(double a, const Taylor& b) { return Taylor(a) / b; }

 private:
  std::array<double, N + 1> c_{};
};

template <int N>
Taylor<N> exp(const Taylor<N>& u) {
  Taylor<N> y;
  y.coeff(0) = std::exp(u.value());
  for (int k = 1; k <= N; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * u.coeff(j) * y.coeff(k - j);
    y.coeff(k) = acc / k;
  }
  return y;
}

template <int N>
Taylor<N> log(const Taylor<N>& u) {
  Taylor<N> y;
  y.coeff(0) = std::log(u.value());
  for (int k = 1; k <= N; ++k) {
    double acc = 0.0;
    for (int j = 1; j < k; ++j) acc += j * y.coeff(j) * u.coeff(k - j);
    y.coeff(k) = (u.coeff(k) - acc / k) / u.value();
  }
  return y;
}

template <int N>
Taylor<N> sqrt(const Taylor<N>& u) {
  Taylor<N> y;
  y.coeff(0) = std::sqrt(u.value());
  for (int k = 1; k <= N; ++k) {
    double acc = u.coeff(k);
    for (int j = 1; j < k; ++j) acc -= y.coeff(j) * y.coeff(k - j);
    y.coeff(k) = acc / (2.0 * y.value());
  }
  return y;
}

namespace detail {

// sign = +1 gives (sinh, cosh), sign = -1 gives (sin, cos).
template <int N>
void trig_pair(const Taylor<N>& u, double sign, Taylor<N>& odd, Taylor<N>& even) {
  if (sign > 0) {
    odd.coeff(0) = std::sinh(u.value());
    even.coeff(0) = std::cosh(u.value());
  } else {
    odd.coeff(0) = std::sin(u.value());
    even.coeff(0) = std::cos(u.value());
  }
  for (int k = 1; k <= N; ++k) {
    double so = 0.0;
    double se = 0.0;
    for (int j = 1; j <= k; ++j) {
      so += j * u.coeff(j) * even.coeff(k - j);
      se += j * u.coeff(j) * odd.coeff(k - j);
    }
    odd.coeff(k) = so / k;
    even.coeff(k) = sign * se / k;
  }
}

}  // namespace detail

template <int N>
Taylor<N> sinh(const Taylor<N>& u) {
  Taylor<N> s, c;
  detail::trig_pair(u, 1.0, s, c);
  return s;
}

template <int N>
Taylor<N> cosh(const Taylor<N>& u) {
  Taylor<N> s, c;
  detail::trig_pair(u, 1.0, s, c);
  return c;
}

template <int N>
Taylor<N> tanh(const Taylor<N>& u) {
  Taylor<N> s, c;
  detail::trig_pair(u, 1.0, s, c);
  return s / c;
}

template <int N>
Taylor<N> sin(const Taylor<N>& u) {
  Taylor<N> s, c;
  detail::trig_pair(u, -1.0, s, c);
  return s;
}

template <int N>
Taylor<N> cos(const Taylor<N>& u) {
  Taylor<N> s, c;
  detail::trig_pair(u, -1.0, s, c);
  return c;
}

template <int N>
Taylor<N> square(const Taylor<N>& u) {
  return u * u;
}

template <int N>
Taylor<N> pow(const Taylor<N>& u, int n) {
  Taylor<N> r(1.0);
  for (int i = 0; i < n; ++i) r = r * u;
  return r;
}

}  // namespace conecurve
