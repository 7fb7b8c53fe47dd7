#pragma once

#include <limits>
#include <span>
#include <vector>

#include "rch/kernels.hpp"

namespace rch {

using ScanKind = kernels::KernelSign;

/// Split exponential-kernel sums by two linear recurrences:
///
///   out_i = sum_{left} e^{-(y_i - y_j)} w_j dxi  (+/-)  sum_{right} e^{-(y_j - y_i)} w_j dxi
///
/// with + for Unsigned and - for Signed (the node j = i itself is excluded).
/// With a finite `period` L the positions are read as one period of
/// y(xi + L) = y(xi) + L and every periodic image is summed exactly; the
/// wrap-around enters through a carry c = X / (1 - e^{-L}) from one pass.
/// y must be strictly increasing (and y_back < y_front + L when periodic).
std::vector<double> exp_scan_split(std::span<const double> weights, std::span<const double> y, double dxi,
                                   ScanKind kind, double period = std::numeric_limits<double>::infinity());

/// Throws DiffeomorphismViolation unless y is strictly increasing.
void require_monotone(std::span<const double> y, double period, double time);

}  // namespace rch
