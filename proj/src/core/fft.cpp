#include "core/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace bo2d {

namespace {
// The FFTW planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft2D::Fft2D(int nx, int ny) : nx_(nx), ny_(ny) {
    const std::size_t n = static_cast<std::size_t>(nx) * ny;
    buf_in_ = reinterpret_cast<Complex*>(fftw_alloc_complex(n));
    buf_out_ = reinterpret_cast<Complex*>(fftw_alloc_complex(n));
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_2d(nx, ny, reinterpret_cast<fftw_complex*>(buf_in_),
                            reinterpret_cast<fftw_complex*>(buf_out_), FFTW_FORWARD,
                            FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_2d(nx, ny, reinterpret_cast<fftw_complex*>(buf_in_),
                            reinterpret_cast<fftw_complex*>(buf_out_), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
}

Fft2D::~Fft2D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
    fftw_free(buf_in_);
    fftw_free(buf_out_);
}

void Fft2D::forward(const Complex* in, Complex* out) {
    const std::size_t n = static_cast<std::size_t>(nx_) * ny_;
    std::memcpy(buf_in_, in, n * sizeof(Complex));
    fftw_execute(static_cast<fftw_plan>(fwd_));
    std::memcpy(out, buf_out_, n * sizeof(Complex));
}

void Fft2D::backward(const Complex* in, Complex* out) {
    const std::size_t n = static_cast<std::size_t>(nx_) * ny_;
    std::memcpy(buf_in_, in, n * sizeof(Complex));
    fftw_execute(static_cast<fftw_plan>(bwd_));
    std::memcpy(out, buf_out_, n * sizeof(Complex));
}

Fft1D::Fft1D(int n) : n_(n) {
    buf_in_ = reinterpret_cast<Complex*>(fftw_alloc_complex(n));
    buf_out_ = reinterpret_cast<Complex*>(fftw_alloc_complex(n));
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                            reinterpret_cast<fftw_complex*>(buf_out_), FFTW_FORWARD,
                            FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                            reinterpret_cast<fftw_complex*>(buf_out_), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
}

Fft1D::~Fft1D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
    fftw_free(buf_in_);
    fftw_free(buf_out_);
}

void Fft1D::forward(const Complex* in, Complex* out) {
    std::memcpy(buf_in_, in, n_ * sizeof(Complex));
    fftw_execute(static_cast<fftw_plan>(fwd_));
    std::memcpy(out, buf_out_, n_ * sizeof(Complex));
}

void Fft1D::backward(const Complex* in, Complex* out) {
    std::memcpy(buf_in_, in, n_ * sizeof(Complex));
    fftw_execute(static_cast<fftw_plan>(bwd_));
    std::memcpy(out, buf_out_, n_ * sizeof(Complex));
}

Fft2D& fft2d_for(int nx, int ny) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<Fft2D>> cache;
    auto& slot = cache[{nx, ny}];
    if (!slot) slot = std::make_unique<Fft2D>(nx, ny);
    return *slot;
}

Fft1D& fft1d_for(int n) {
    thread_local std::map<int, std::unique_ptr<Fft1D>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Fft1D>(n);
    return *slot;
}

}  // namespace bo2d
