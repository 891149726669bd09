#include "zitterlab/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zitterlab {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Fft::Fft(int n) : n_(n) {
    if (!is_power_of_two(n)) throw std::invalid_argument("Fft: size must be a power of two");

    rev_.resize(static_cast<std::size_t>(n));
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < log2n; ++b) {
            if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
        }
        rev_[static_cast<std::size_t>(i)] = r;
    }

    w_.resize(static_cast<std::size_t>(n / 2));
    for (int k = 0; k < n / 2; ++k) {
        const double ang = -2.0 * std::numbers::pi * k / n;
        w_[static_cast<std::size_t>(k)] = Complex(std::cos(ang), std::sin(ang));
    }
}

void Fft::transform(Complex* data, bool inv) const {
    const int n = n_;
    for (int i = 0; i < n; ++i) {
        const int r = rev_[static_cast<std::size_t>(i)];
        if (i < r) std::swap(data[i], data[r]);
    }

    for (int len = 2; len <= n; len <<= 1) {
        const int half = len >> 1;
        const int step = n / len;
        for (int i = 0; i < n; i += len) {
            for (int j = 0; j < half; ++j) {
                Complex w = w_[static_cast<std::size_t>(j * step)];
                if (inv) w = std::conj(w);
                const Complex u = data[i + j];
                const Complex v = data[i + j + half] * w;
                data[i + j] = u + v;
                data[i + j + half] = u - v;
            }
        }
    }

    if (inv) {
        const double s = 1.0 / n;
        for (int i = 0; i < n; ++i) data[i] *= s;
    }
}

void Fft::forward(Complex* data) const { transform(data, false); }
void Fft::inverse(Complex* data) const { transform(data, true); }

}  // namespace zitterlab
