#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zitterlab/algebra.hpp"

using namespace zitterlab;
using namespace zitterlab::algebra;

namespace {

// Test-local multiplication oracle, independent of Mat4::operator*.
Mat4 mul_oracle(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex s{};
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Mat4 random_hermitian(std::mt19937_64& rng) {
    Mat4 a;
    for (int i = 0; i < 4; ++i) {
        a(i, i) = 2.0 * uniform01(rng) - 1.0;
        for (int j = i + 1; j < 4; ++j) {
            const Complex z(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

}  // namespace

TEST_CASE("dirac matrices block structure") {
    const auto dm = dirac_matrices();

    // beta = diag(1,1,-1,-1)
    Mat4 beta_expect;
    beta_expect(0, 0) = 1.0;
    beta_expect(1, 1) = 1.0;
    beta_expect(2, 2) = -1.0;
    beta_expect(3, 3) = -1.0;
    CHECK(max_abs_diff(dm.beta, beta_expect) == 0.0);

    // first row of alpha_x is (0,0,0,1)
    CHECK(dm.alpha[0](0, 0) == Complex(0.0));
    CHECK(dm.alpha[0](0, 1) == Complex(0.0));
    CHECK(dm.alpha[0](0, 2) == Complex(0.0));
    CHECK(dm.alpha[0](0, 3) == Complex(1.0));

    // alpha_y carries +-i on the same anti-diagonal
    CHECK(dm.alpha[1](0, 3) == -iu);
    CHECK(dm.alpha[1](3, 0) == iu);

    for (const auto& a : dm.alpha) {
        CHECK(std::abs(trace(a)) == 0.0);
        CHECK(hermiticity_defect(a) == 0.0);
    }
    CHECK(std::abs(trace(dm.beta)) == 0.0);
    CHECK(hermiticity_defect(dm.beta) == 0.0);
}

TEST_CASE("anticommutators close the algebra") {
    const auto dm = dirac_matrices();
    const Mat4 ident = Mat4::identity();

    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Mat4 ac = anticommutator(dm.alpha[i], dm.alpha[j]);
            const Mat4 oracle = mul_oracle(dm.alpha[i], dm.alpha[j]) +
                                mul_oracle(dm.alpha[j], dm.alpha[i]);
            CHECK(max_abs_diff(ac, oracle) <= 1e-15);
            const Mat4 expect = (i == j) ? 2.0 * ident : Mat4::zero();
            CHECK(max_abs_diff(ac, expect) <= 1e-12);
        }
        CHECK(max_abs(anticommutator(dm.alpha[i], dm.beta)) <= 1e-12);
    }
    CHECK(max_abs_diff(mul_oracle(dm.beta, dm.beta), ident) <= 1e-12);
}

TEST_CASE("hermiticity defect") {
    const auto dm = dirac_matrices();
    CHECK(hermiticity_defect(dm.beta) == 0.0);
    CHECK(hermiticity_defect(dm.alpha[1]) == 0.0);

    // a = i alpha_x is antihermitian: a - a^dagger = 2 i alpha_x.
    const Mat4 a = iu * dm.alpha[0];
    CHECK(hermiticity_defect(a) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("eigen_hermitian on the dirac matrices") {
    const auto dm = dirac_matrices();

    for (const Mat4& m : {dm.alpha[0], dm.alpha[1], dm.alpha[2], dm.beta}) {
        const auto es = eigen_hermitian(m);
        CHECK(es.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(es.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(es.values[2] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(es.values[3] == doctest::Approx(1.0).epsilon(1e-12));

        // orthonormality
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const Complex g = dot(es.vectors[i], es.vectors[j]);
                CHECK(std::abs(g - (i == j ? Complex(1.0) : Complex(0.0))) <= 1e-10);
            }
        }
        // residuals
        for (int i = 0; i < 4; ++i) {
            const Spinor r = m * es.vectors[i] - es.values[i] * es.vectors[i];
            CHECK(r.norm() <= 1e-10);
        }
    }
}

TEST_CASE("alpha_x +1 eigenspace contains (1,0,0,1)/sqrt(2)") {
    const auto es = eigen_hermitian(dirac_alpha(Axis::X));
    Spinor target;
    target[0] = 1.0 / std::sqrt(2.0);
    target[3] = 1.0 / std::sqrt(2.0);

    // Project the target onto the +1 eigenspace (last two vectors).
    Complex c2 = dot(es.vectors[2], target);
    Complex c3 = dot(es.vectors[3], target);
    const double inside = std::norm(c2) + std::norm(c3);
    CHECK(inside == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("eigen_hermitian rejects non-hermitian input") {
    Mat4 a = dirac_alpha(Axis::X);
    a(0, 1) = Complex(0.5, 0.25);  // no conjugate partner
    CHECK_THROWS_AS(eigen_hermitian(a), NotHermitian);
}

TEST_CASE("random hermitian reconstruction") {
    std::mt19937_64 rng(20240811);
    for (int s = 0; s < 100; ++s) {
        const Mat4 a = random_hermitian(rng);
        const auto es = eigen_hermitian(a);

        CHECK(es.values[0] <= es.values[1]);
        CHECK(es.values[1] <= es.values[2]);
        CHECK(es.values[2] <= es.values[3]);

        Mat4 rebuilt;
        for (int m = 0; m < 4; ++m) {
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    rebuilt(r, c) += es.values[m] * es.vectors[m][r] * std::conj(es.vectors[m][c]);
        }
        CHECK(max_abs_diff(rebuilt, a) <= 1e-9);
    }
}
