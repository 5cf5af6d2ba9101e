#pragma once

#include "llfw/grid.hpp"

namespace llfw {

inline constexpr double kDefaultLiftingMargin = 1e-3;

/// Unit-sphere-valued map sampled on a grid, with its wave speed attached.
struct Field {
    Grid grid;
    double c = 0.0;
    ScalarSamples u1, u2, u3;
};

/// Polar representation (theta, u3) with rho = sqrt(1 - u3^2), valid while
/// max |u3| stays below 1 - margin.
struct LiftedField {
    Grid grid;
    double c = 0.0;
    ScalarSamples u3, theta;
};

Field make_constant_field(const Grid& grid, double c);  // the trivial solution (1, 0, 0)

/// max over nodes of | |u|^2 - 1 |.
double sphere_defect(const Field& f);

/// Scale each node back onto the unit sphere.
void renormalize(Field& f);

/// (rho cos theta, rho sin theta, u3); renormalized unless renorm is false.
Field reconstruct(const LiftedField& lf, bool renorm = true);

/// Global lifting by branch-continued phase unwrapping along the first row
/// and then along columns, with a plaquette-winding consistency check.
/// Throws when max |u3| exceeds 1 - margin (vortex present) or when a
/// plaquette carries nonzero winding.
LiftedField lift(const Field& f, double margin = kDefaultLiftingMargin);

}  // namespace llfw
