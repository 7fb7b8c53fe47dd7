#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace rch {

using Complex = std::complex<double>;
/// Half spectrum (N/2 + 1 modes) of a real signal, unnormalized forward DFT.
using Spectrum = std::vector<Complex>;

/// Real-to-complex FFT pair of a fixed size. Plans are cached per size and
/// shared; executing them is safe from concurrent threads.
class Fourier {
 public:
  explicit Fourier(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t spectrum_size() const noexcept { return n_ / 2 + 1; }

  void forward(std::span<const double> in, std::span<Complex> out) const;
  Spectrum forward(std::span<const double> in) const;

  /// Inverse including the 1/N normalization. `in` is left untouched.
  void inverse(std::span<const Complex> in, std::span<double> out) const;
  std::vector<double> inverse(std::span<const Complex> in) const;

  struct Plans;

 private:
  std::size_t n_;
  std::shared_ptr<const Plans> plans_;
};

}  // namespace rch
