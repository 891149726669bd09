#pragma once

#include <vector>

#include "zitterlab/errors.hpp"
#include "zitterlab/grid.hpp"

namespace zitterlab {

// Static scalar potential entering the Hamiltonian as V(x) times the identity
// in spinor space.
struct PotentialSpec {
    enum class Kind { Zero, TanhStep, Table };

    Kind kind = Kind::Zero;
    double v0 = 0.0;  // step height
    double w = 1.0;   // step width, > 0 for TanhStep
    std::vector<double> table;

    static PotentialSpec zero() { return {}; }
    static PotentialSpec tanh_step(double v0, double w);
    static PotentialSpec from_table(std::vector<double> values);

    double value(double x, const Grid1D& grid, int j) const;
    std::vector<double> sample(const Grid1D& grid) const;  // throws ConfigInvalid on bad table
    bool is_zero() const { return kind == Kind::Zero; }
};

namespace pairsim {

// V0 [tanh(x/W) + 1] / 2: 0 far left, V0 far right, V0/2 at the step.
double tanh_potential(double x, double v0, double w);

}  // namespace pairsim
}  // namespace zitterlab
