#include "ifr/indices.hpp"

#include <stdexcept>

namespace ifr {

VaComponents components(const Trifn& n) noexcept {
    double mean_sum = (n.a1() + n.a4() + 2.0 * (n.a2() + n.a3())) / 6.0;
    double span_sum = ((n.a4() - n.a1()) - 2.0 * (n.a2() - n.a3())) / 3.0;  // >= 0 for any valid number
    return {n.w() * mean_sum, (1.0 - n.u()) * mean_sum,
            n.w() * span_sum, (1.0 - n.u()) * span_sum};
}

VaIndex va_index(const Trifn& n, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::domain_error("lambda must lie in [0, 1]");
    }
    VaComponents c = components(n);
    return {c.v_mu + lambda * (c.v_nu - c.v_mu),
            c.a_nu - lambda * (c.a_nu - c.a_mu),
            lambda};
}

}  // namespace ifr
