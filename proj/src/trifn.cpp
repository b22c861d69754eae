#include "ifr/trifn.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ifr {

namespace {

[[noreturn]] void fail_invalid(const std::string& msg) {
    throw std::invalid_argument(msg);
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

Trifn::Trifn(double a1, double a2, double a3, double a4, double w, double u)
    : a1_(a1), a2_(a2), a3_(a3), a4_(a4), w_(w), u_(u) {
    // Conditions are negated so that NaN in any field lands in an error branch.
    if (!(a1 <= a2)) fail_invalid("abscissae out of order: a1 (" + num(a1) + ") must not exceed a2 (" + num(a2) + ")");
    if (!(a2 <= a3)) fail_invalid("abscissae out of order: a2 (" + num(a2) + ") must not exceed a3 (" + num(a3) + ")");
    if (!(a3 <= a4)) fail_invalid("abscissae out of order: a3 (" + num(a3) + ") must not exceed a4 (" + num(a4) + ")");
    if (!(w >= 0.0 && w <= 1.0)) fail_invalid("degree out of range: w (" + num(w) + ") must lie in [0,1]");
    if (!(u >= 0.0 && u <= 1.0)) fail_invalid("degree out of range: u (" + num(u) + ") must lie in [0,1]");
    if (!(w + u <= 1.0)) fail_invalid("degree sum out of range: w+u (" + num(w + u) + ") must not exceed 1");
}

Trifn Trifn::triangular(double t1, double t2, double t3, double w, double u) {
    return Trifn(t1, t2, t2, t3, w, u);
}

const Trifn& Trifn::origin() {
    static const Trifn zero(0.0, 0.0, 0.0, 0.0, 0.0, 1.0);
    return zero;
}

double Trifn::membership_at(double x) const noexcept {
    if (x < a1_ || x > a4_) return 0.0;
    if (x >= a2_ && x <= a3_) return w_;
    if (x < a2_) return (x - a1_) / (a2_ - a1_) * w_;  // a1 <= x < a2, so a2 > a1
    return (a4_ - x) / (a4_ - a3_) * w_;               // a3 < x <= a4, so a4 > a3
}

double Trifn::nonmembership_at(double x) const noexcept {
    if (x < a1_ || x > a4_) return 1.0;
    if (x >= a2_ && x <= a3_) return u_;
    if (x < a2_) return ((a2_ - x) + u_ * (x - a1_)) / (a2_ - a1_);
    return ((x - a3_) + u_ * (a4_ - x)) / (a4_ - a3_);
}

double Trifn::indeterminacy_at(double x) const noexcept {
    return 1.0 - membership_at(x) - nonmembership_at(x);
}

CutInterval Trifn::alpha_cut(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= w_)) {
        fail_invalid("alpha (" + num(alpha) + ") must lie in [0, w] = [0, " + num(w_) + "]");
    }
    if (alpha == 0.0) return {a1_, a4_};   // also the only admissible cut when w == 0
    if (alpha == w_) return {a2_, a3_};
    double r = alpha / w_;
    return {a1_ + r * (a2_ - a1_), a4_ - r * (a4_ - a3_)};
}

CutInterval Trifn::beta_cut(double beta) const {
    if (!(beta >= u_ && beta <= 1.0)) {
        fail_invalid("beta (" + num(beta) + ") must lie in [u, 1] = [" + num(u_) + ", 1]");
    }
    if (beta == 1.0) return {a1_, a4_};    // also the only admissible cut when u == 1
    if (beta == u_) return {a2_, a3_};
    double d = 1.0 - u_;
    return {((1.0 - beta) * a2_ + (beta - u_) * a1_) / d,
            ((1.0 - beta) * a3_ + (beta - u_) * a4_) / d};
}

namespace {

double combined_w(const Trifn& x, const Trifn& y) { return std::min(x.w(), y.w()); }
double combined_u(const Trifn& x, const Trifn& y) { return std::max(x.u(), y.u()); }

}  // namespace

Trifn add(const Trifn& x, const Trifn& y) {
    return Trifn(x.a1() + y.a1(), x.a2() + y.a2(), x.a3() + y.a3(), x.a4() + y.a4(),
                 combined_w(x, y), combined_u(x, y));
}

Trifn sub(const Trifn& x, const Trifn& y) {
    return Trifn(x.a1() - y.a4(), x.a2() - y.a3(), x.a3() - y.a2(), x.a4() - y.a1(),
                 combined_w(x, y), combined_u(x, y));
}

Trifn mul(const Trifn& x, const Trifn& y) {
    if (!(x.is_nonnegative() || x.is_nonpositive()) || !(y.is_nonnegative() || y.is_nonpositive())) {
        throw std::domain_error("mul requires sign-definite operands; a support straddling zero has no product form");
    }
    double w = combined_w(x, y);
    double u = combined_u(x, y);
    if (x.is_nonnegative() && y.is_nonnegative()) {
        return Trifn(x.a1() * y.a1(), x.a2() * y.a2(), x.a3() * y.a3(), x.a4() * y.a4(), w, u);
    }
    if (x.is_nonpositive() && y.is_nonnegative()) {
        return Trifn(x.a1() * y.a4(), x.a2() * y.a3(), x.a3() * y.a2(), x.a4() * y.a1(), w, u);
    }
    if (x.is_nonnegative() && y.is_nonpositive()) {
        return mul(y, x);  // the mirrored case, by commutativity
    }
    return Trifn(x.a4() * y.a4(), x.a3() * y.a3(), x.a2() * y.a2(), x.a1() * y.a1(), w, u);
}

Trifn scale(double factor, const Trifn& x) {
    if (factor > 0.0) {
        return Trifn(factor * x.a1(), factor * x.a2(), factor * x.a3(), factor * x.a4(), x.w(), x.u());
    }
    if (factor < 0.0) {
        return Trifn(factor * x.a4(), factor * x.a3(), factor * x.a2(), factor * x.a1(), x.w(), x.u());
    }
    throw std::domain_error("scale factor must be nonzero");
}

Trifn reciprocal(const Trifn& x) {
    if (!(x.a1() > 0.0 || x.a4() < 0.0)) {
        throw std::domain_error("reciprocal requires zero strictly outside the support [a1, a4]");
    }
    return Trifn(1.0 / x.a4(), 1.0 / x.a3(), 1.0 / x.a2(), 1.0 / x.a1(), x.w(), x.u());
}

}  // namespace ifr
