#pragma once

#include "ifr/trifn.hpp"

namespace ifr {

// Membership- and non-membership-side value and ambiguity of a number.
// Value is the weighted mean of cut midpoints (a location summary), ambiguity
// the weighted mean of cut widths (a vagueness summary), with cut weights
// f(alpha) = 2*alpha/w and g(beta) = 2*(1-beta)/(1-u).
struct VaComponents {
    double v_mu = 0.0;
    double v_nu = 0.0;
    double a_mu = 0.0;
    double a_nu = 0.0;
};

// The lambda-blended pair used for distances and ranking:
//   value     = v_mu + lambda * (v_nu - v_mu)
//   ambiguity = a_nu - lambda * (a_nu - a_mu)
struct VaIndex {
    double value = 0.0;
    double ambiguity = 0.0;
    double lambda = 0.5;
};

// Closed forms; w == 0 and u == 1 fall out as zero components, no division.
//   v_mu = w (a1 + a4 + 2(a2 + a3)) / 6       v_nu = (1-u) (same sum) / 6
//   a_mu = w ((a4 - a1) - 2(a2 - a3)) / 3     a_nu = (1-u) (same span) / 3
VaComponents components(const Trifn& n) noexcept;

// Throws std::domain_error unless 0 <= lambda <= 1.  Default lambda = 1/2.
VaIndex va_index(const Trifn& n, double lambda = 0.5);

}  // namespace ifr
