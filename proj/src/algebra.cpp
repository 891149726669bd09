#include "zitterlab/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace zitterlab::algebra {

namespace {

// 2x2 Pauli matrix entries embedded into the off-diagonal blocks.
void put_block(Mat4& m, int row0, int col0, const std::array<Complex, 4>& sigma) {
    m(row0, col0) = sigma[0];
    m(row0, col0 + 1) = sigma[1];
    m(row0 + 1, col0) = sigma[2];
    m(row0 + 1, col0 + 1) = sigma[3];
}

std::array<Complex, 4> pauli(Axis axis) {
    switch (axis) {
        case Axis::X: return {Complex(0), Complex(1), Complex(1), Complex(0)};
        case Axis::Y: return {Complex(0), -iu, iu, Complex(0)};
        case Axis::Z: return {Complex(1), Complex(0), Complex(0), Complex(-1)};
    }
    return {};
}

}  // namespace

Mat4 dirac_alpha(Axis axis) {
    Mat4 m;
    const auto s = pauli(axis);
    put_block(m, 0, 2, s);
    put_block(m, 2, 0, s);
    return m;
}

Mat4 dirac_beta() {
    Mat4 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    return m;
}

DiracMatrices dirac_matrices() {
    return DiracMatrices{{dirac_alpha(Axis::X), dirac_alpha(Axis::Y), dirac_alpha(Axis::Z)},
                         dirac_beta()};
}

Mat4 anticommutator(const Mat4& a, const Mat4& b) { return a * b + b * a; }

double hermiticity_defect(const Mat4& a) { return max_abs_diff(a, adjoint(a)); }

EigenSystem eigen_hermitian(const Mat4& a) {
    if (hermiticity_defect(a) > 1e-10) {
        throw NotHermitian("eigen_hermitian: input defect exceeds 1e-10");
    }

    // Symmetrize so roundoff asymmetry cannot bias the rotations.
    Mat4 m = 0.5 * (a + adjoint(a));
    Mat4 v = Mat4::identity();

    const double scale = std::max(max_abs(m), 1e-300);
    constexpr int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off = std::max(off, std::abs(m(p, q)));
        if (off <= 1e-15 * scale) break;

        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const Complex apq = m(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;

                // Phase-rotate the pivot to a real value, then apply the
                // classic symmetric Jacobi rotation in the (p,q) plane.
                const Complex phase = apq / r;
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                Mat4 g = Mat4::identity();
                g(p, p) = c;
                g(q, q) = c;
                g(p, q) = s * phase;
                g(q, p) = -s * std::conj(phase);

                m = adjoint(g) * m * g;
                v = v * g;
            }
        }
    }

    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });

    EigenSystem out;
    for (int k = 0; k < 4; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        out.values[static_cast<std::size_t>(k)] = m(src, src).real();
        Spinor vec;
        for (int i = 0; i < 4; ++i) vec[i] = v(i, src);
        out.vectors[static_cast<std::size_t>(k)] = vec;
    }
    return out;
}

}  // namespace zitterlab::algebra
