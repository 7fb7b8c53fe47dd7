#include "rch/coefficients.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "rch/error.hpp"

namespace rch {
namespace {

double horner(const std::array<double, 4>& a, int degree, double x) {
  double v = 0.0;
  for (int i = degree; i >= 0; --i) v = v * x + a[i];
  return v;
}

double horner_derivative(const std::array<double, 4>& a, int degree, double x) {
  double v = 0.0;
  for (int i = degree; i >= 1; --i) v = v * x + i * a[i];
  return v;
}

// Root of a monotone polynomial on [lo, hi] with f(lo), f(hi) of opposite sign.
double bracketed_root(const std::array<double, 4>& a, int degree, double lo, double hi) {
  double flo = horner(a, degree, lo);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = horner(a, degree, mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  // Newton polish, accepted only while it stays in the bracket and helps.
  for (int it = 0; it < 8; ++it) {
    const double f = horner(a, degree, x);
    const double df = horner_derivative(a, degree, x);
    if (df == 0.0 || f == 0.0) break;
    const double nx = x - f / df;
    if (!(nx >= lo && nx <= hi)) break;
    if (std::abs(horner(a, degree, nx)) >= std::abs(f)) break;
    x = nx;
  }
  return x;
}

}  // namespace

std::vector<double> real_polynomial_roots(double a0, double a1, double a2, double a3) {
  const std::array<double, 4> a{a0, a1, a2, a3};
  for (double v : a) {
    if (!std::isfinite(v)) throw InvalidParameter("polynomial coefficients must be finite");
  }
  int degree = 3;
  while (degree >= 0 && a[degree] == 0.0) --degree;
  if (degree < 0) throw InvalidParameter("degenerate all-zero polynomial");
  if (degree == 0) return {};
  if (degree == 1) return {-a0 / a1};

  const double lead = a[degree];
  double bound = 0.0;
  for (int i = 0; i < degree; ++i) bound = std::max(bound, std::abs(a[i] / lead));
  bound += 1.0;

  // Critical points split the line into monotone pieces.
  std::vector<double> breaks{-bound};
  if (degree == 2) {
    breaks.push_back(-a1 / (2.0 * a2));
  } else {
    const double qa = 3.0 * a3, qb = 2.0 * a2, qc = a1;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc > 0.0) {
      const double sq = std::sqrt(disc);
      const double q = -0.5 * (qb + std::copysign(sq, qb));
      double r1 = q / qa;
      double r2 = (q != 0.0) ? qc / q : -r1;
      if (r1 > r2) std::swap(r1, r2);
      breaks.push_back(r1);
      breaks.push_back(r2);
    } else if (disc == 0.0) {
      breaks.push_back(-qb / (2.0 * qa));
    }
  }
  breaks.push_back(bound);
  std::sort(breaks.begin(), breaks.end());

  std::vector<double> roots;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double lo = std::clamp(breaks[k], -bound, bound);
    const double hi = std::clamp(breaks[k + 1], -bound, bound);
    if (!(hi > lo)) continue;
    const double flo = horner(a, degree, lo);
    const double fhi = horner(a, degree, hi);
    if (flo == 0.0) {
      roots.push_back(lo);
    } else if ((flo < 0.0) != (fhi < 0.0) && fhi != 0.0) {
      roots.push_back(bracketed_root(a, degree, lo, hi));
    }
  }
  if (horner(a, degree, breaks.back()) == 0.0) roots.push_back(breaks.back());

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

CubicRoot solve_gamma_cubic(double c, double alpha, double beta0, double beta,
                            double omega1, double omega2) {
  if (!(alpha > 0.0)) throw InvalidParameter("alpha must be positive");
  if (beta == 0.0) throw InvalidParameter("beta vanishes: beta0/beta undefined");
  const double a0 = c - beta0 / beta;
  const double a1 = -2.0;
  const double a2 = omega1 / (alpha * alpha);
  const double a3 = -omega2 / (alpha * alpha * alpha);
  auto roots = real_polynomial_roots(a0, a1, a2, a3);
  if (roots.empty()) throw InvalidParameter("gamma cubic has no real root");

  CubicRoot out;
  out.all_roots = roots;
  out.real_root_count = static_cast<int>(roots.size());
  out.multiple = roots.size() > 1;
  out.value = *std::min_element(roots.begin(), roots.end(), [](double x, double y) {
    return std::abs(x) < std::abs(y);
  });
  const double g = out.value;
  out.residual = std::abs(a0 + g * (a1 + g * (a2 + g * a3)));
  return out;
}

double gamma_residual(const ModelParams& p, double g) {
  const double a2 = p.omega1 / (p.alpha * p.alpha);
  const double a3 = -p.omega2 / (p.alpha * p.alpha * p.alpha);
  return std::abs(p.c - p.beta0 / p.beta - 2.0 * g + a2 * g * g + a3 * g * g * g);
}

ModelParams derive_coefficients(double omega) {
  if (!std::isfinite(omega)) throw InvalidParameter("omega must be finite");
  if (omega < 0.0) throw InvalidParameter("omega must be non-negative");

  ModelParams p;
  p.omega = omega;
  const double c = std::sqrt(1.0 + omega * omega) - omega;
  const double c2 = c * c;
  const double c4 = c2 * c2;
  const double s = c2 + 1.0;
  p.c = c;
  p.alpha = c2 / s;
  p.beta0 = c * (c4 + 6.0 * c2 - 1.0) / (6.0 * s * s);
  p.beta = (3.0 * c4 + 8.0 * c2 - 1.0) / (6.0 * s * s);
  // `+ 0.0` normalizes the signed zero produced at c = 1.
  p.omega1 = -3.0 * c * (c2 - 1.0) * (c2 - 2.0) / (2.0 * s * s * s) + 0.0;
  p.omega2 = (c2 - 1.0) * (c2 - 1.0) * (c2 - 2.0) * (8.0 * c2 - 1.0) / (2.0 * s * s * s * s * s) + 0.0;

  const CubicRoot root = solve_gamma_cubic(p.c, p.alpha, p.beta0, p.beta, p.omega1, p.omega2);
  const double g = root.value;
  p.gamma = g;
  p.gamma_multiple_roots = root.multiple;
  p.c0 = p.beta0 / p.beta - g;

  const double a2 = p.alpha * p.alpha;
  const double a3 = a2 * p.alpha;
  p.c1 = 1.0 + 3.0 * g * g * p.omega2 / (2.0 * a3) - p.omega1 * g / a2;
  p.c2 = p.omega1 / (3.0 * a2) - p.omega2 * g / a3 + 0.0;
  p.c3 = p.omega2 / (4.0 * a3) + 0.0;
  return p;
}

}  // namespace rch
