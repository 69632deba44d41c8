#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "tricenter/errors.hpp"

namespace tricenter::quad {

// Value types supported by the integrator: double and fixed-size arrays of
// double (integrated component-wise, error measured in the max-norm).
template <class T>
struct ValueTraits;

template <>
struct ValueTraits<double> {
  static double zero() { return 0.0; }
  static double magnitude(double v) { return std::abs(v); }
  static double axpy(double s, double x, double y) { return s * x + y; }
};

template <std::size_t N>
struct ValueTraits<std::array<double, N>> {
  using V = std::array<double, N>;
  static V zero() { return V{}; }
  static double magnitude(const V& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  static V axpy(double s, const V& x, V y) {
    for (std::size_t i = 0; i < N; ++i) y[i] += s * x[i];
    return y;
  }
};

struct Tolerance {
  double abs = 0.0;
  double rel = 1e-10;
  int max_depth = 20;  // bisection levels below the initial interval
};

template <class T>
struct Result {
  T value;
  double error;
  int evaluations;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T, class F>
Result<T> kronrod15(F& f, double lo, double hi) {
  using Tr = ValueTraits<T>;
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  T fc = f(center);
  T kronrod = Tr::axpy(kWgk[7], fc, Tr::zero());
  T gauss = Tr::axpy(kWg[3], fc, Tr::zero());
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    T f1 = f(center - dx);
    T f2 = f(center + dx);
    kronrod = Tr::axpy(kWgk[j], f1, kronrod);
    kronrod = Tr::axpy(kWgk[j], f2, kronrod);
    if (j % 2 == 1) {
      gauss = Tr::axpy(kWg[j / 2], f1, gauss);
      gauss = Tr::axpy(kWg[j / 2], f2, gauss);
    }
  }
  kronrod = Tr::axpy(half - 1.0, kronrod, kronrod);  // scale by half
  gauss = Tr::axpy(half - 1.0, gauss, gauss);
  const double err = Tr::magnitude(Tr::axpy(-1.0, gauss, kronrod));
  return {kronrod, err, 15};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi].
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(tol.abs, tol.rel * |integral|). Throws
/// ToleranceNotReached when a needed split would exceed tol.max_depth.
template <class T, class F>
Result<T> integrate(F&& f, double lo, double hi, const Tolerance& tol) {
  using Tr = ValueTraits<T>;
  struct Piece {
    double lo, hi;
    T value;
    double error;
    int depth;
    bool operator<(const Piece& o) const { return error < o.error; }
  };

  auto first = detail::kronrod15<T>(f, lo, hi);
  int evaluations = first.evaluations;
  std::priority_queue<Piece> heap;
  heap.push({lo, hi, first.value, first.error, 0});
  T total = first.value;
  double total_err = first.error;

  for (;;) {
    const double target = std::max(tol.abs, tol.rel * Tr::magnitude(total));
    if (total_err <= target) break;
    Piece worst = heap.top();
    if (worst.depth >= tol.max_depth) {
      std::ostringstream msg;
      msg << "quadrature tolerance not reached: error estimate " << total_err << " > target "
          << target << " after " << tol.max_depth << " subdivision levels";
      throw ToleranceNotReached(msg.str(), total_err);
    }
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    auto left = detail::kronrod15<T>(f, worst.lo, mid);
    auto right = detail::kronrod15<T>(f, mid, worst.hi);
    evaluations += left.evaluations + right.evaluations;
    total = Tr::axpy(-1.0, worst.value, total);
    total = Tr::axpy(1.0, left.value, total);
    total = Tr::axpy(1.0, right.value, total);
    total_err += left.error + right.error - worst.error;
    heap.push({worst.lo, mid, left.value, left.error, worst.depth + 1});
    heap.push({mid, worst.hi, right.value, right.error, worst.depth + 1});
  }

  // Re-sum to shed the drift of the running updates.
  T sum = Tr::zero();
  double err = 0.0;
  while (!heap.empty()) {
    sum = Tr::axpy(1.0, heap.top().value, sum);
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, evaluations};
}

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

}  // namespace tricenter::quad
