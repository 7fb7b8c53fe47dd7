#include "rch/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rch/error.hpp"

namespace rch {

PeriodicGrid::PeriodicGrid(double length, std::size_t n_points) : length_(length), n_(n_points) {
  if (!(std::isfinite(length) && length > 0.0)) throw InvalidParameter("grid length must be positive");
  if (n_points < 16 || (n_points & (n_points - 1)) != 0)
    throw InvalidParameter("grid size must be a power of two >= 16");
}

double PeriodicGrid::dk() const noexcept { return 2.0 * std::numbers::pi / length_; }

double PeriodicGrid::wavenumber(std::size_t m) const noexcept { return dk() * static_cast<double>(m); }

double PeriodicGrid::nyquist() const noexcept { return wavenumber(n_ / 2); }

Field::Field(const PeriodicGrid& grid) : grid_(grid), values_(grid.size(), 0.0) {}

Field::Field(const PeriodicGrid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw InvalidParameter("field length differs from grid size");
}

Field Field::sample(const PeriodicGrid& grid, const std::function<double(double)>& f) {
  Field out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) out.values_[i] = f(grid.x(i));
  return out;
}

bool Field::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double Field::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

Field& Field::operator+=(const Field& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Field& Field::operator*=(double a) noexcept {
  for (double& v : values_) v *= a;
  return *this;
}

Field& Field::axpy(double a, const Field& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += a * o.values_[i];
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double a, Field f) { return f *= a; }

void require_same_grid(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("fields live on different grids");
}

}  // namespace rch
