#include "zitterlab/potential.hpp"

#include <cmath>

namespace zitterlab {

namespace pairsim {

double tanh_potential(double x, double v0, double w) {
    if (!(w > 0.0)) throw ConfigInvalid("potential.W: must be > 0");
    return v0 * (std::tanh(x / w) + 1.0) * 0.5;
}

}  // namespace pairsim

PotentialSpec PotentialSpec::tanh_step(double v0, double w) {
    if (!(w > 0.0)) throw ConfigInvalid("potential.W: must be > 0");
    PotentialSpec p;
    p.kind = Kind::TanhStep;
    p.v0 = v0;
    p.w = w;
    return p;
}

PotentialSpec PotentialSpec::from_table(std::vector<double> values) {
    PotentialSpec p;
    p.kind = Kind::Table;
    p.table = std::move(values);
    return p;
}

double PotentialSpec::value(double x, const Grid1D& grid, int j) const {
    switch (kind) {
        case Kind::Zero: return 0.0;
        case Kind::TanhStep: return pairsim::tanh_potential(x, v0, w);
        case Kind::Table: {
            (void)grid;
            return table[static_cast<std::size_t>(j)];
        }
    }
    return 0.0;
}

std::vector<double> PotentialSpec::sample(const Grid1D& grid) const {
    if (kind == Kind::Table && static_cast<int>(table.size()) != grid.n) {
        throw ConfigInvalid("potential.table: length must equal grid.n");
    }
    std::vector<double> v(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) {
        v[static_cast<std::size_t>(j)] = value(grid.x(j), grid, j);
    }
    return v;
}

}  // namespace zitterlab
