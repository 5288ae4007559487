#pragma once

#include <complex>
#include <vector>

namespace bo2d {

using Complex = std::complex<double>;

// Thin FFTW wrappers. Raw (unnormalized) transforms with the e^{-i k x}
// forward convention; normalization lives at the field level. Each engine
// owns its buffers, so distinct engines may execute concurrently. Plans are
// created with FFTW_ESTIMATE (deterministic algorithm choice) under a global
// planner lock.
class Fft2D {
public:
    Fft2D(int nx, int ny);
    ~Fft2D();
    Fft2D(const Fft2D&) = delete;
    Fft2D& operator=(const Fft2D&) = delete;

    void forward(const Complex* in, Complex* out);
    void backward(const Complex* in, Complex* out);

private:
    int nx_, ny_;
    void* fwd_ = nullptr;
    void* bwd_ = nullptr;
    Complex* buf_in_ = nullptr;
    Complex* buf_out_ = nullptr;
};

class Fft1D {
public:
    explicit Fft1D(int n);
    ~Fft1D();
    Fft1D(const Fft1D&) = delete;
    Fft1D& operator=(const Fft1D&) = delete;

    void forward(const Complex* in, Complex* out);
    void backward(const Complex* in, Complex* out);

private:
    int n_;
    void* fwd_ = nullptr;
    void* bwd_ = nullptr;
    Complex* buf_in_ = nullptr;
    Complex* buf_out_ = nullptr;
};

/// Thread-local engine caches keyed by size.
Fft2D& fft2d_for(int nx, int ny);
Fft1D& fft1d_for(int n);

}  // namespace bo2d
