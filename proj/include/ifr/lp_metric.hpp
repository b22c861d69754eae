#pragma once

#include "ifr/trifn.hpp"

namespace ifr {

// An interval [a, b] enters the distance through the line x -> (a - b) x + b
// on [0, 1]: `a` is the value at x = 1, `b` the value at x = 0.
struct EndpointPair {
    double a = 0.0;
    double b = 0.0;
};

// Validated exponent for the L_p norm; any real p > 1 is admissible.
class PNorm {
  public:
    explicit PNorm(double p);  // throws std::domain_error unless p > 1
    double p() const noexcept { return p_; }

  private:
    double p_;
};

namespace detail {

// integral_0^1 |(e1 - e0) x + e0|^p dx in closed form:
//   (sgn(e1)|e1|^{p+1} - sgn(e0)|e0|^{p+1}) / ((p+1)(e1 - e0))
// and |e0|^p when e1 == e0.  Evaluated branch-wise so that no cancellation
// occurs for nearly constant h; exactly symmetric under swapping or jointly
// negating (e0, e1).
double lp_segment_integral(double p, double e0, double e1) noexcept;

}  // namespace detail

// L_p[0,1] distance between the endpoint lines of two intervals.
double interval_distance(PNorm p, const EndpointPair& f, const EndpointPair& g) noexcept;

// Distance between two numbers through their (ambiguity, value) index pairs.
// The interval order is [A, V] when value(x) >= 0 and [V, A] otherwise; the
// two orders are reflections of each other and give identical distances.
double trifn_distance(PNorm p, const Trifn& x, const Trifn& y, double lambda = 0.5);

}  // namespace ifr
