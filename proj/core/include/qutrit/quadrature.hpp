#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <string>
#include <vector>

#include "qutrit/errors.hpp"

namespace qutrit::quad {

/// Result of an adaptive integration.
template <class T>
struct Result {
  T value{};
  double error = 0.0;
  int evaluations = 0;
};

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(std::complex<double> z) { return std::abs(z); }
template <class T, std::size_t N>
double magnitude(const std::array<T, N>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, magnitude(x));
  return m;
}

template <class T>
T scaled(const T& x, double s) {
  return x * s;
}
template <class T, std::size_t N>
std::array<T, N> scaled(const std::array<T, N>& v, double s) {
  std::array<T, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = v[i] * s;
  return out;
}
template <class T>
T added(const T& a, const T& b) {
  return a + b;
}
template <class T, std::size_t N>
std::array<T, N> added(const std::array<T, N>& a, const std::array<T, N>& b) {
  std::array<T, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + b[i];
  return out;
}
template <class T>
T subtracted(const T& a, const T& b) {
  return added(a, scaled(b, -1.0));
}

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525040376, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Segment {
  double a, b;
  T value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class T, class F>
Segment<T> kronrod21(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(centre);
  T kronrod = scaled(fc, kWgk[10]);
  T gauss = scaled(fc, 0.0);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const T sum = added(f(centre - dx), f(centre + dx));
    kronrod = added(kronrod, scaled(sum, kWgk[j]));
    if (j % 2 == 1) gauss = added(gauss, scaled(sum, kWg[j / 2]));
  }
  kronrod = scaled(kronrod, half);
  gauss = scaled(gauss, half);
  return {a, b, kronrod, magnitude(subtracted(kronrod, gauss))};
}

}  // namespace detail

/// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
/// Bisects the interval with the largest error estimate until the summed
/// estimate drops below abs_tol. Throws QuadratureFailure when max_segments
/// is exhausted first.
template <class F>
auto integrate(F f, double a, double b, double abs_tol, int max_segments = 2000)
    -> Result<decltype(f(a))> {
  using T = decltype(f(a));
  std::priority_queue<detail::Segment<T>> heap;
  heap.push(detail::kronrod21<T>(f, a, b));
  T total = heap.top().value;
  double error = heap.top().error;
  int segments = 1;
  while (error > abs_tol) {
    if (segments >= max_segments) {
      throw QuadratureFailure("adaptive quadrature did not converge: error estimate " + std::to_string(error) +
                              " > tolerance " + std::to_string(abs_tol));
    }
    const detail::Segment<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::kronrod21<T>(f, worst.a, mid);
    auto right = detail::kronrod21<T>(f, mid, worst.b);
    total = added(subtracted(total, worst.value), added(left.value, right.value));
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++segments;
    // Re-sum occasionally so that cancellation in the running totals does
    // not leave a stale error estimate.
    if (segments % 64 == 0) {
      auto copy = heap;
      total = scaled(total, 0.0);
      error = 0.0;
      while (!copy.empty()) {
        total = added(total, copy.top().value);
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {total, error, 21 + (segments - 1) * 42};
}

}  // namespace qutrit::quad
