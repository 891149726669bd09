#pragma once

#include <array>

#include "zitterlab/complexmat.hpp"
#include "zitterlab/errors.hpp"

namespace zitterlab {

enum class Axis { X = 0, Y = 1, Z = 2 };

namespace algebra {

// Dirac (standard) representation: alpha_i has the Pauli matrix sigma_i on the
// off-diagonal 2x2 blocks, beta is diag(I, -I).
Mat4 dirac_alpha(Axis axis);
Mat4 dirac_beta();

struct DiracMatrices {
    std::array<Mat4, 3> alpha;
    Mat4 beta;
};
DiracMatrices dirac_matrices();

// ab + ba
Mat4 anticommutator(const Mat4& a, const Mat4& b);

// max entrywise |a - a^dagger|; zero for hermitian input.
double hermiticity_defect(const Mat4& a);

struct EigenSystem {
    std::array<double, 4> values;   // ascending
    std::array<Spinor, 4> vectors;  // orthonormal, vectors[k] belongs to values[k]
};

// Cyclic complex Jacobi diagonalization of a hermitian 4x4.
// Throws NotHermitian if hermiticity_defect(a) > 1e-10.
EigenSystem eigen_hermitian(const Mat4& a);

}  // namespace algebra
}  // namespace zitterlab
