#pragma once

#include <string>
#include <vector>

#include "zitterlab/complexmat.hpp"
#include "zitterlab/constants.hpp"
#include "zitterlab/errors.hpp"

namespace zitterlab {

// Uniform periodic 1D grid; point n wraps back to point 0.
struct Grid1D {
    int n = 0;
    double x_min = 0.0;
    double x_max = 0.0;

    static Grid1D make(int n, double x_min, double x_max);  // throws ConfigInvalid

    double length() const { return x_max - x_min; }
    double dx() const { return length() / n; }
    double x(int j) const { return x_min + j * dx(); }

    // FFT-ordered momentum of bin k: 2 pi hbar m / L with m = k for k < n/2,
    // m = k - n otherwise.
    double momentum(int k, double hbar) const;
};

// 4-spinor field on a Grid1D. values[j] is the spinor at x(j).
struct SpinorField {
    Grid1D grid;
    std::vector<Spinor> values;
    double time = 0.0;

    double norm2() const;  // sum psi^dagger psi dx
    void normalize();
    std::vector<double> density() const;  // psi^dagger psi per point
};

// Time-stamped scalar samples.
struct ObservableSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::string label;

    void push(double t, double v) {
        times.push_back(t);
        values.push_back(v);
    }
    std::size_t size() const { return times.size(); }
};

}  // namespace zitterlab
