#pragma once

#include <cmath>

#include "llfw/field.hpp"
#include "llfw/grid.hpp"

namespace llfw {

/// E(u) = (1/2) integral of |grad u|^2 + u3^2, spectral gradients.
double energy(const Field& f);

/// p(u) = integral of u3 d1(theta).
double momentum_lifted(const LiftedField& lf);

/// p(u) = - integral of x2 u.(d1 u x d2 u) over the truncated box (2d).
double momentum_density(const Field& f);

/// |E - int |d1 u|^2| and |int u3^2 - c p|, both normalized by E + 1.
/// poh3 is two-dimensional and needs the lifting; it is NaN when either
/// fails to apply.
struct PohozaevReport {
    double poh2 = 0.0;
    double poh3 = 0.0;
};
PohozaevReport pohozaev_report(const Field& f, double margin = kDefaultLiftingMargin);

struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual() const { return std::fabs(lhs - rhs); }
};

/// Integral identities of the polar system, absolute left/right values:
///   i1   int rho^2 |grad theta|^2                 = c int u3 d1 theta
///   i2   int |grad rho|^2 + rho^2 |grad theta|^2  = 2 int e rho^2 - c int u3 rho^2 d1 theta
///   i2b  2 int rho |grad rho|^2 + 2 int e u3^2 rho = int rho u3^2 |grad theta|^2 + c int rho u3^3 d1 theta
///   i3   int |grad u3|^2 + u3^2                   = 2 int e u3^2 + c int rho^2 u3 d1 theta
struct IdentityReport {
    IdentitySides i1, i2, i2b, i3;
};
IdentityReport identity_report(const LiftedField& lf);

/// One a priori inequality, stored as lhs <= rhs with its applicability
/// flag (the standing assumptions are max|u3| <= 1/2 and c in (0,1]).
struct InequalityGap {
    double lhs = 0.0;
    double rhs = 0.0;
    bool applicable = false;
    double gap() const { return rhs - lhs; }
};

struct InequalityReport {
    double delta = 0.0;       // max |u3|
    InequalityGap chiron54;   // ||u3||_L4       <= 54 delta E          (2d)
    InequalityGap energy_l4;  // E               <= 10 ||u3||_L4^4      (2d)
    InequalityGap phi94;      // ||d1th - c u3||_L2^2 + ||d2th||_L2^2 <= (9/4) ||u3||_L4^4
    InequalityGap rho6;       // ||grad rho||_L2^2 <= 6 ||u3||_L4^4
    InequalityGap l2_bound;   // E <= 3 ||u3||_L2^2; three dimensions and up, never
                              // applicable in this artifact (schema completeness)
    // max over nodes of |u3 d1 theta| - e(u)/sqrt(1 - delta^2); nonpositive
    // up to roundoff for any lifted field, solution or not
    double polar_pointwise_max = 0.0;
};
InequalityReport inequality_report(const LiftedField& lf);

struct DiagnosticsReport {
    double c = 0.0;
    double energy = 0.0;
    double momentum_lifted = 0.0;
    double momentum_density = 0.0;
    double u3_linf = 0.0;
    double u3_l2 = 0.0;
    double u3_l4 = 0.0;
    PohozaevReport pohozaev;
    IdentityReport identities;
    InequalityReport inequalities;
    double residual_pde = 0.0;
    double tolerance = 0.0;  // max(1e-8, 50 * residual_pde); scale for the identity checks
    bool lifted = false;     // lifting succeeded; lifted-form entries are valid
};

DiagnosticsReport diagnose(const Field& f, double margin = kDefaultLiftingMargin);

}  // namespace llfw
