#include "ifr/lp_metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ifr/indices.hpp"

namespace ifr {

PNorm::PNorm(double p) : p_(p) {
    if (!(p > 1.0)) {
        throw std::domain_error("the norm exponent p must exceed 1");
    }
}

namespace detail {

namespace {

// mean of (1 + t s)^p over s in [-1, 1], for |t| <= 1.  The direct quotient
// loses digits as t -> 0, so small t switches to the even Taylor terms.
double symmetric_mean_pow(double p, double t) {
    if (std::fabs(t) < 1e-3) {
        double t2 = t * t;
        return 1.0 + p * (p - 1.0) * t2 / 6.0
                   + p * (p - 1.0) * (p - 2.0) * (p - 3.0) * t2 * t2 / 120.0;
    }
    return (std::pow(1.0 + t, p + 1.0) - std::pow(1.0 - t, p + 1.0)) / (2.0 * (p + 1.0) * t);
}

}  // namespace

double lp_segment_integral(double p, double e0, double e1) noexcept {
    if (e0 == e1) {
        return std::pow(std::fabs(e0), p);
    }
    bool opposite = (e0 < 0.0 && e1 > 0.0) || (e0 > 0.0 && e1 < 0.0);
    if (!opposite) {
        // h keeps one sign on [0,1] (an endpoint may be zero); factor out the
        // midpoint value m, |t| <= 1 up to rounding.
        double m = 0.5 * (e0 + e1);
        double t = std::clamp((e1 - e0) / (e0 + e1), -1.0, 1.0);
        return std::pow(std::fabs(m), p) * symmetric_mean_pow(p, t);
    }
    // h crosses zero inside (0,1); the signed antiderivative difference turns
    // into a plain sum of magnitudes.
    double num = std::pow(std::fabs(e1), p + 1.0) + std::pow(std::fabs(e0), p + 1.0);
    return num / ((p + 1.0) * std::fabs(e1 - e0));
}

}  // namespace detail

double interval_distance(PNorm p, const EndpointPair& f, const EndpointPair& g) noexcept {
    double e1 = f.a - g.a;
    double e0 = f.b - g.b;
    double integral = detail::lp_segment_integral(p.p(), e0, e1);
    return integral == 0.0 ? 0.0 : std::pow(integral, 1.0 / p.p());
}

double trifn_distance(PNorm p, const Trifn& x, const Trifn& y, double lambda) {
    VaIndex ix = va_index(x, lambda);
    VaIndex iy = va_index(y, lambda);
    if (ix.value >= 0.0) {
        return interval_distance(p, {ix.ambiguity, ix.value}, {iy.ambiguity, iy.value});
    }
    return interval_distance(p, {ix.value, ix.ambiguity}, {iy.value, iy.ambiguity});
}

}  // namespace ifr
