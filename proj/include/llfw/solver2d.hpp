#pragma once

#include <array>
#include <vector>

#include "llfw/field.hpp"
#include "llfw/grid.hpp"

namespace llfw {

/// Right-hand sides of the convolution system:
///   G_j = u1 d_j u2 - u2 d_j u1 - d_j theta   (= -u3^2 d_j theta on lifted fields)
///   F   = 2 e(u) u3 + c G_1
/// computed with spectral derivatives of the reconstructed field.
struct SourceTerms {
    ScalarSamples F;
    std::array<ScalarSamples, 2> G;
};

SourceTerms compute_FG(const LiftedField& lf, double margin = kDefaultLiftingMargin);

/// One damped fixed-point step of
///   u3    <- (1-tau) u3    + tau [ L_c*F - c sum_j L_{c,j}*G_j ]
///   theta <- (1-tau) theta + tau [ mean-zero antigradient of the phase system ]
/// with u3 clipped back into the lifting margin when exceeded.
LiftedField iterate_once(const LiftedField& lf, double damping, bool* clipped = nullptr);

/// Grid-weighted L2 norm of the traveling-wave system residual, normalized
/// by energy + 1.  Accepts 1d and 2d fields.
double residual(const Field& f);

enum class InitKind { Bump, Lump };

LiftedField initial_guess(double c, const Grid& grid, InitKind kind, double amplitude);

struct SolveParams {
    double damping = 0.3;
    double tol = 1e-6;
    int max_iter = 400;
    bool renormalize = true;  // reconstruct() keeps |u| = 1 after each step
    double margin = kDefaultLiftingMargin;
};

struct SolveResult {
    Field field;         // best-residual iterate, reconstructed
    LiftedField lifted;  // matching polar representation
    bool converged = false;
    bool diverged = false;
    bool clipped = false;
    int iterations = 0;
    double best_residual = 0.0;
    std::vector<double> residual_history;  // accepted steps only; nonincreasing
};

/// Damped Picard iteration with step rejection: a step that increases the
/// residual is discarded and the damping halved; accepted steps slowly
/// restore it.  Always returns the best-residual iterate.
SolveResult solve(double c, const Grid& grid, const LiftedField& init, const SolveParams& params);

/// Chain of solves over equally spaced speeds, each seeded by the previous
/// converged field rescaled to the new decay scale sqrt(1-c^2).  Stops at
/// the first non-converged step (which is still reported).
std::vector<SolveResult> continuation(double c_start, double c_end, int steps, const Grid& grid,
                                      const SolveParams& params, InitKind kind, double amplitude);

/// The 1d closed-form profile (periodic closure) extended constant in x2;
/// an exact-solution oracle for the 2d residual.
Field extend_1d(double c, const Grid& grid2d);

}  // namespace llfw
