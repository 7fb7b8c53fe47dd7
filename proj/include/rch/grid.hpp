#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rch {

/// Uniform grid on the torus [-L/2, L/2) with a power-of-two point count.
class PeriodicGrid {
 public:
  PeriodicGrid(double length, std::size_t n_points);

  double length() const noexcept { return length_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return length_ / static_cast<double>(n_); }
  double x(std::size_t i) const noexcept { return -0.5 * length_ + static_cast<double>(i) * spacing(); }

  /// Lattice wavenumber 2 pi m / L for the half-spectrum index m in [0, N/2].
  double wavenumber(std::size_t m) const noexcept;
  double nyquist() const noexcept;
  /// Wavenumber spacing 2 pi / L.
  double dk() const noexcept;
  std::size_t spectrum_size() const noexcept { return n_ / 2 + 1; }

  bool operator==(const PeriodicGrid& o) const noexcept {
    return length_ == o.length_ && n_ == o.n_;
  }

 private:
  double length_;
  std::size_t n_;
};

/// Real samples of a function on a PeriodicGrid.
class Field {
 public:
  explicit Field(const PeriodicGrid& grid);
  Field(const PeriodicGrid& grid, std::vector<double> values);

  static Field sample(const PeriodicGrid& grid, const std::function<double(double)>& f);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double& operator[](std::size_t i) noexcept { return values_[i]; }

  bool all_finite() const noexcept;
  double max_abs() const noexcept;

  Field& operator+=(const Field& o);
  Field& operator-=(const Field& o);
  Field& operator*=(double a) noexcept;

  /// this += a * o
  Field& axpy(double a, const Field& o);

 private:
  PeriodicGrid grid_;
  std::vector<double> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double a, Field f);

/// Throws GridMismatch unless both fields live on the same grid.
void require_same_grid(const Field& a, const Field& b);

}  // namespace rch
