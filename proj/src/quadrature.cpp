#include "ifr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifr {
namespace {

// Composite Simpson over [lo, hi] with 2 * panels subintervals.
template <typename F>
double composite_simpson(F&& f, double lo, double hi, int panels) {
    int n = 2 * panels;
    double h = (hi - lo) / n;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) {
        // Recompute the node from the index so the last interior nodes do
        // not drift past hi.
        double x = lo + (hi - lo) * i / n;
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f(x);
    }
    return acc * h / 3.0;
}

enum class CutFeature { midpoint, width };

double feature_of(const CutInterval& c, CutFeature feature) {
    return feature == CutFeature::midpoint ? (c.lower + c.upper) / 2.0 : c.width();
}

// Weighted integral of a cut feature.  Membership side: weight 2a/w over
// [0, w].  Non-membership side: weight 2(1 - b)/(1 - u) over [u, 1].  Both
// integrands are quadratics, so Simpson is exact here up to round-off; the
// panel count only spreads the rounding.
double cut_integral(const Trifn& n, Side side, CutFeature feature, int panels) {
    if (panels < 1) throw std::invalid_argument("panels must be at least 1");
    if (side == Side::membership) {
        double w = n.w();
        if (w == 0.0) return 0.0;
        auto f = [&](double alpha) {
            return feature_of(n.alpha_cut(alpha), feature) * (2.0 * alpha / w);
        };
        return composite_simpson(f, 0.0, w, panels);
    }
    double u = n.u();
    if (u == 1.0) return 0.0;
    auto g = [&](double beta) {
        return feature_of(n.beta_cut(beta), feature) * (2.0 * (1.0 - beta) / (1.0 - u));
    };
    return composite_simpson(g, u, 1.0, panels);
}

struct AdaptiveState {
    double tol_floor;
    int max_depth;
};

// One Simpson estimate over [a, b] with midpoint m.
double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_step(F&& f, const AdaptiveState& st, double a, double b, double fa, double fm,
                     double fb, double whole, double tol, int depth) {
    double m = (a + b) / 2.0;
    double lm = (a + m) / 2.0;
    double rm = (m + b) / 2.0;
    double flm = f(lm);
    double frm = f(rm);
    double left = simpson(fa, flm, fm, a, m);
    double right = simpson(fm, frm, fb, m, b);
    double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    if (depth >= st.max_depth) {
        throw std::runtime_error("adaptive quadrature did not converge within the depth limit");
    }
    double half_tol = std::max(tol / 2.0, st.tol_floor);
    return adaptive_step(f, st, a, m, fa, flm, fm, left, half_tol, depth + 1) +
           adaptive_step(f, st, m, b, fm, frm, fb, right, half_tol, depth + 1);
}

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth) {
    AdaptiveState st{tol * 0x1p-20, max_depth};
    double m = (a + b) / 2.0;
    double fa = f(a);
    double fm = f(m);
    double fb = f(b);
    double whole = simpson(fa, fm, fb, a, b);
    return adaptive_step(f, st, a, b, fa, fm, fb, whole, tol, 0);
}

template <typename F>
double doubling_simpson(F&& f, double a, double b, double tol, int max_doublings) {
    // Past 2^20 panels the refinement cost explodes while round-off already
    // dominates, so give up there even under a larger depth budget.
    max_doublings = std::min(max_doublings, 20);
    int panels = 4;
    double prev = composite_simpson(f, a, b, panels);
    for (int i = 0; i < max_doublings; ++i) {
        panels *= 2;
        double next = composite_simpson(f, a, b, panels);
        if (std::abs(next - prev) <= tol) return next;
        prev = next;
    }
    throw std::runtime_error("composite quadrature did not converge within the refinement limit");
}

template <typename F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec) {
    if (spec.rule == QuadratureRule::composite_simpson) {
        return doubling_simpson(f, a, b, spec.abs_tol, spec.max_depth);
    }
    return adaptive_simpson(f, a, b, spec.abs_tol, spec.max_depth);
}

}  // namespace

double value_by_quadrature(const Trifn& n, Side side, int panels) {
    return cut_integral(n, side, CutFeature::midpoint, panels);
}

double ambiguity_by_quadrature(const Trifn& n, Side side, int panels) {
    return cut_integral(n, side, CutFeature::width, panels);
}

double lp_by_quadrature(PNorm p, double e0, double e1, QuadratureSpec spec) {
    double scale = std::max(std::abs(e0), std::abs(e1));
    if (scale == 0.0) return 0.0;
    double pe = p.p();
    double f0 = e0 / scale;
    double f1 = e1 / scale;
    auto integrand = [&](double x) { return std::pow(std::abs((f1 - f0) * x + f0), pe); };
    double integral;
    if (e0 * e1 < 0.0) {
        // h changes sign inside (0, 1); split at the root so each piece is
        // one-signed and smooth.
        double x0 = e0 / (e0 - e1);
        integral = integrate(integrand, 0.0, x0, spec) + integrate(integrand, x0, 1.0, spec);
    } else {
        integral = integrate(integrand, 0.0, 1.0, spec);
    }
    if (integral <= 0.0) return 0.0;
    return scale * std::pow(integral, 1.0 / pe);
}

}  // namespace ifr
