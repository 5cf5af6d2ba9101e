#pragma once

#include <vector>

#include "llfw/fit.hpp"
#include "llfw/grid.hpp"
#include "llfw/spectral.hpp"

namespace llfw {

/// D_c(xi) = |xi|^4 + |xi|^2 - c^2 xi1^2, the symbol of the fourth-order
/// operator behind the convolution form.  Strictly positive off the origin
/// for c <= 1.
double denom(double c, double xi1, double xi2);

enum class SymbolKind { Lc, Lcj, Tcjk, Rjk };

/// One of the four multiplier families shared with the Gross-Pitaevskii
/// traveling-wave theory:
///   Lc    |xi|^2 / D_c
///   Lcj   xi1 xi_j / D_c
///   Tcjk  xi1^2 xi_j xi_k / (|xi|^2 D_c)
///   Rjk   xi_j xi_k / |xi|^2        (composed Riesz; c ignored)
/// All four are even under xi -> -xi and degree-0 bounded at the origin
/// except Lc/Lcj, which stay bounded for c < 1.
struct KernelSymbol {
    SymbolKind kind = SymbolKind::Lc;
    int dim = 2;
    double c = 0.0;
    int j = 1;
    int k = 1;

    double eval(double xi1, double xi2 = 0.0) const;
};

KernelSymbol make_symbol(SymbolKind kind, int dim, double c, int j = 1, int k = 1);

Symbol as_symbol(const KernelSymbol& s);
ScalarSamples apply_multiplier(const ScalarSamples& s, const KernelSymbol& m);

/// || L_c ||_{L^{4/3}(R^2)} by polar quadrature.  The radial integral is
/// analytic; the angular integrand has an integrable s^{-2/3} endpoint
/// singularity at c = 1 that the cubic substitution removes before
/// Gauss-Legendre is applied.
double lc_norm_43(double c, int nodes = 200);

enum class LimitKind { LcInf, LcjInf, TcjkInf, RieszInf };

/// Closed-form far-field limits lim R^2 K(R sigma) of the kernels over unit
/// directions sigma (two dimensions).  RieszInf is the coefficient function
/// (delta_jk - 2 sigma_j sigma_k)/(2 pi).
struct FarFieldLimit {
    LimitKind kind = LimitKind::LcInf;
    double c = 0.0;
    int j = 1;
    int k = 1;

    double eval(double s1, double s2) const;
};

FarFieldLimit make_limit(LimitKind kind, double c, int j = 1, int k = 1);

/// Closed forms for sum_j sigma_j Lcj_inf and sum_j sigma_j Tcjk_inf.
double lcj_sum_closed(double c, double s1);
double tcjk_sum_closed(double c, double s1, double s2, int k);

/// |sum_j sigma_j L_{c,j,inf} - closed| and max_k of the T analogue.
struct SumResiduals {
    double lsum = 0.0;
    double tsum = 0.0;
};
SumResiduals farfield_sum_check(double c, double s1, double s2);

/// Physical-space kernel on a periodic grid (inverse transform of the
/// symbol, zero mode dropped, centered at the coordinate origin) together
/// with a radial decay fit over annuli in [0.15, 0.4] of the half-box.
struct KernelField {
    ScalarSamples kernel;
    DecayFit fit;
};
KernelField kernel_physical(SymbolKind kind, double c, const Grid& grid, int j = 1, int k = 1);

struct KernelFarFieldRow {
    double angle = 0.0;
    double measured = 0.0;   // R^2 K(R sigma)
    double predicted = 0.0;  // closed-form limit
};
std::vector<KernelFarFieldRow> kernel_farfield_table(SymbolKind kind, double c, const Grid& grid,
                                                     double radius, int ndir, int j = 1, int k = 1);

}  // namespace llfw
