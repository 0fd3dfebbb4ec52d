#ifndef FOCH_FFT_HPP
#define FOCH_FFT_HPP

// Thin RAII wrapper around FFTW's 1-D real transforms.
// Conventions used throughout the library:
//   forward(f)[m] = (1/n) * sum_i f_i exp(-2*pi*I*i*m/n)   (true Fourier coefficients)
//   inverse(c)[i] =         sum_m c_m exp(+2*pi*I*i*m/n)   (unnormalized FFTW c2r)
// so inverse(forward(f)) == f up to roundoff. Half-spectrum storage, m in [0, n/2];
// the slot m = n/2 holds the merged +/-Nyquist coefficient (real for real fields).

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace foch::detail {

class FftEngine {
 public:
  explicit FftEngine(int n) : n_(n), nc_(n / 2 + 1) {
    real_ = fftw_alloc_real(static_cast<std::size_t>(n_));
    cplx_ = fftw_alloc_complex(static_cast<std::size_t>(nc_));
    if (!real_ || !cplx_) throw std::bad_alloc();
    // FFTW's planner is not thread-safe; execution on private buffers is.
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_r2c_1d(n_, real_, cplx_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(n_, cplx_, real_, FFTW_ESTIMATE);
    if (!fwd_ || !inv_) throw std::runtime_error("fftw plan creation failed");
  }

  ~FftEngine() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(real_);
    fftw_free(cplx_);
  }

  FftEngine(const FftEngine&) = delete;
  FftEngine& operator=(const FftEngine&) = delete;

  void forward(const double* in, std::complex<double>* out) {
    for (int i = 0; i < n_; ++i) real_[i] = in[i];
    fftw_execute(fwd_);
    const double scale = 1.0 / n_;
    for (int m = 0; m < nc_; ++m)
      out[m] = std::complex<double>(cplx_[m][0] * scale, cplx_[m][1] * scale);
  }

  void inverse(const std::complex<double>* in, double* out) {
    for (int m = 0; m < nc_; ++m) {
      cplx_[m][0] = in[m].real();
      cplx_[m][1] = in[m].imag();
    }
    fftw_execute(inv_);  // c2r destroys cplx_, which is scratch anyway
    for (int i = 0; i < n_; ++i) out[i] = real_[i];
  }

  // One engine per transform size, cached per thread.
  static FftEngine& get(int n) {
    thread_local std::map<int, std::unique_ptr<FftEngine>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
      it = cache.emplace(n, std::make_unique<FftEngine>(n)).first;
    return *it->second;
  }

 private:
  static std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
  }

  int n_;
  int nc_;
  double* real_;
  fftw_complex* cplx_;
  fftw_plan fwd_;
  fftw_plan inv_;
};

}  // namespace foch::detail

#endif
