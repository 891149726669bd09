#include "zitterlab/grid.hpp"

#include <cmath>
#include <numbers>

#include "zitterlab/fft.hpp"

namespace zitterlab {

Grid1D Grid1D::make(int n, double x_min, double x_max) {
    if (!is_power_of_two(n) || n < 8) {
        throw ConfigInvalid("grid.n: must be a power of two >= 8");
    }
    if (!(x_max > x_min)) {
        throw ConfigInvalid("grid.x_max: must exceed grid.x_min");
    }
    return Grid1D{n, x_min, x_max};
}

double Grid1D::momentum(int k, double hbar) const {
    const int m = (k < n / 2) ? k : k - n;
    return 2.0 * std::numbers::pi * hbar * m / length();
}

double SpinorField::norm2() const {
    double s = 0.0;
    for (const auto& v : values) s += v.norm2();
    return s * grid.dx();
}

void SpinorField::normalize() {
    const double n2 = norm2();
    const double s = 1.0 / std::sqrt(n2);
    for (auto& v : values) {
        for (int i = 0; i < 4; ++i) v[i] *= s;
    }
}

std::vector<double> SpinorField::density() const {
    std::vector<double> d(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) d[j] = values[j].norm2();
    return d;
}

}  // namespace zitterlab
