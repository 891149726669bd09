#pragma once

#include <vector>

#include "zitterlab/complexmat.hpp"

namespace zitterlab {

// Radix-2 in-place FFT with precomputed twiddles; n must be a power of two.
// forward() is unnormalized, inverse() carries the 1/n factor, so
// inverse(forward(x)) == x.
class Fft {
  public:
    explicit Fft(int n);

    int size() const { return n_; }
    void forward(Complex* data) const;
    void inverse(Complex* data) const;

  private:
    void transform(Complex* data, bool inv) const;

    int n_;
    std::vector<int> rev_;
    std::vector<Complex> w_;  // w_[k] = exp(-2 pi i k / n), k < n/2
};

bool is_power_of_two(int n);

}  // namespace zitterlab
