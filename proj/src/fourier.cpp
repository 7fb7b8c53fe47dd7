#include "rch/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "rch/error.hpp"

namespace rch {

struct Fourier::Plans {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  ~Plans() {
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
  }
};

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<const Fourier::Plans> plans_for(std::size_t n) {
  static std::map<std::size_t, std::shared_ptr<const Fourier::Plans>> cache;
  std::lock_guard lock(planner_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Planning with FFTW_ESTIMATE leaves the scratch buffers untouched.
  std::vector<double> real(n);
  std::vector<Complex> cplx(n / 2 + 1);
  auto plans = std::make_shared<Fourier::Plans>();
  const int ni = static_cast<int>(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plans->r2c = fftw_plan_dft_r2c_1d(ni, real.data(), reinterpret_cast<fftw_complex*>(cplx.data()), flags);
  plans->c2r = fftw_plan_dft_c2r_1d(ni, reinterpret_cast<fftw_complex*>(cplx.data()), real.data(),
                                    flags | FFTW_DESTROY_INPUT);
  if (!plans->r2c || !plans->c2r) throw Error("FFTW planning failed");
  cache.emplace(n, plans);
  return plans;
}

}  // namespace

Fourier::Fourier(std::size_t n) : n_(n), plans_(plans_for(n)) {}

void Fourier::forward(std::span<const double> in, std::span<Complex> out) const {
  if (in.size() != n_ || out.size() != spectrum_size()) throw InvalidParameter("FFT size mismatch");
  // r2c does not modify its input.
  fftw_execute_dft_r2c(plans_->r2c, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

Spectrum Fourier::forward(std::span<const double> in) const {
  Spectrum out(spectrum_size());
  forward(in, out);
  return out;
}

void Fourier::inverse(std::span<const Complex> in, std::span<double> out) const {
  if (out.size() != n_ || in.size() != spectrum_size()) throw InvalidParameter("FFT size mismatch");
  thread_local std::vector<Complex> scratch;
  scratch.assign(in.begin(), in.end());
  fftw_execute_dft_c2r(plans_->c2r, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
  const double inv = 1.0 / static_cast<double>(n_);
  for (double& v : out) v *= inv;
}

std::vector<double> Fourier::inverse(std::span<const Complex> in) const {
  std::vector<double> out(n_);
  inverse(in, out);
  return out;
}

}  // namespace rch
