#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace zitterlab {

using Complex = std::complex<double>;

inline constexpr Complex iu{0.0, 1.0};  // imaginary unit

// 4-component complex amplitude (Dirac spinor).
struct Spinor {
    std::array<Complex, 4> c{};

    Complex& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const Complex& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    double norm2() const {
        double s = 0.0;
        for (const auto& z : c) s += std::norm(z);
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }
};

inline Spinor operator+(const Spinor& a, const Spinor& b) {
    Spinor r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}

inline Spinor operator-(const Spinor& a, const Spinor& b) {
    Spinor r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] - b[i];
    return r;
}

inline Spinor operator*(const Complex& s, const Spinor& a) {
    Spinor r;
    for (int i = 0; i < 4; ++i) r[i] = s * a[i];
    return r;
}

inline Spinor operator*(double s, const Spinor& a) { return Complex(s, 0.0) * a; }

// Conjugate-linear in the first argument: <a|b>.
inline Complex dot(const Spinor& a, const Spinor& b) {
    Complex s{};
    for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline Spinor normalized(const Spinor& a) {
    const double n = a.norm();
    Spinor r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] / n;
    return r;
}

// Dense 4x4 complex matrix, row-major.
struct Mat4 {
    std::array<Complex, 16> e{};

    Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
    const Complex& operator()(int r, int c) const {
        return e[static_cast<std::size_t>(4 * r + c)];
    }

    static Mat4 zero() { return Mat4{}; }
    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Mat4 operator*(const Complex& s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
    return r;
}

inline Mat4 operator*(double s, const Mat4& a) { return Complex(s, 0.0) * a; }

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

inline Spinor operator*(const Mat4& m, const Spinor& v) {
    Spinor r;
    for (int i = 0; i < 4; ++i) {
        Complex s{};
        for (int j = 0; j < 4; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

inline Mat4 adjoint(const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline Complex trace(const Mat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline double max_abs(const Mat4& a) {
    double m = 0.0;
    for (const auto& z : a.e) m = std::max(m, std::abs(z));
    return m;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
    double m = 0.0;
    for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

}  // namespace zitterlab
