#pragma once

#include "ifr/lp_metric.hpp"
#include "ifr/trifn.hpp"

namespace ifr {

// Which side of a number a cut-based integral runs over.
enum class Side { membership, nonmembership };

enum class QuadratureRule { composite_simpson, adaptive_bisection };

struct QuadratureSpec {
    QuadratureRule rule = QuadratureRule::adaptive_bisection;
    double abs_tol = 1e-12;
    int max_depth = 48;
};

// Numeric cross-check route for the closed forms in indices.hpp and
// lp_metric.hpp.  These functions integrate the defining integrals directly
// (cut midpoints and widths against the cut weights, and |h|^p for the
// endpoint line difference h); they never touch the closed-form expressions
// they are used to check.

// Weighted cut-midpoint integral over [0,w] (membership side) or [u,1]
// (non-membership side).  The integrand is a quadratic in the cut parameter,
// which composite Simpson integrates exactly up to round-off.  Degenerate
// sides (w == 0, u == 1) integrate to zero.
double value_by_quadrature(const Trifn& n, Side side, int panels = 16);

// Same scheme for the weighted cut-width integral.
double ambiguity_by_quadrature(const Trifn& n, Side side, int panels = 16);

// (integral_0^1 |(e1 - e0) x + e0|^p dx)^(1/p).  The range is split at the
// sign change of h before integrating, so each piece has one sign.  abs_tol
// applies to the integral of the scale-normalized integrand; throws
// std::runtime_error if the tolerance is not reached within max_depth.
double lp_by_quadrature(PNorm p, double e0, double e1, QuadratureSpec spec = {});

}  // namespace ifr
