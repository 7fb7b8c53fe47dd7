#pragma once

#include <vector>

namespace rch {

/// Scalar coefficients of the rotation Camassa-Holm equation and of its
/// weak form u_t + u u_x = -d_x p*(u_x^2/2 + c1 u^2 + c2 u^3 + c3 u^4).
struct ModelParams {
  double omega = 0.0;
  double c = 1.0;
  double alpha = 0.5;
  double beta0 = 0.25;
  double beta = 5.0 / 12.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double gamma = 0.2;
  double c0 = 0.4;
  double c1 = 1.0;
  double c2 = 0.0;
  double c3 = 0.0;
  /// Set when the gamma cubic had more than one real root.
  bool gamma_multiple_roots = false;
};

struct CubicRoot {
  double value = 0.0;
  double residual = 0.0;
  int real_root_count = 0;
  bool multiple = false;
  std::vector<double> all_roots;
};

/// Real root of c - beta0/beta - 2g + (omega1/alpha^2) g^2 - (omega2/alpha^3) g^3.
/// With several real roots the one of smallest magnitude is returned and
/// `multiple` is set.
CubicRoot solve_gamma_cubic(double c, double alpha, double beta0, double beta,
                            double omega1, double omega2);

/// Real roots of a3 g^3 + a2 g^2 + a1 g + a0 (leading terms may vanish),
/// bracketed on monotone pieces, bisected, then Newton-polished.
std::vector<double> real_polynomial_roots(double a0, double a1, double a2, double a3);

ModelParams derive_coefficients(double omega);

/// Cubic residual of the gamma equation at g for the given parameters.
double gamma_residual(const ModelParams& p, double g);

}  // namespace rch
