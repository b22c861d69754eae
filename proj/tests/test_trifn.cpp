#include <doctest.h>

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "ifr/trifn.hpp"

using ifr::CutInterval;
using ifr::Trifn;

namespace {

const Trifn set1_a = Trifn::triangular(0.5, 0.7, 0.9, 0.7, 0.2);

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("construction accepts valid tuples") {
    Trifn n(0.5, 0.7, 0.7, 0.9, 0.7, 0.2);
    CHECK(n.a1() == 0.5);
    CHECK(n.a2() == 0.7);
    CHECK(n.a3() == 0.7);
    CHECK(n.a4() == 0.9);
    CHECK(n.w() == 0.7);
    CHECK(n.u() == 0.2);
    CHECK(n.is_triangular());

    CHECK_NOTHROW(Trifn(0.0, 0.0, 0.0, 0.0, 0.0, 1.0));
    CHECK_NOTHROW(Trifn(-2.0, -1.0, 1.0, 2.0, 0.3, 0.3));
    CHECK_NOTHROW(Trifn(1.0, 1.0, 1.0, 1.0, 1.0, 0.0));
}

TEST_CASE("construction rejects bad ordering and names the field") {
    CHECK_THROWS_AS(Trifn(0.8, 0.7, 0.7, 0.9, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.5, 0.8, 0.7, 0.9, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.5, 0.7, 0.95, 0.9, 0.5, 0.2), std::invalid_argument);

    std::string msg = message_of([] { Trifn(0.8, 0.7, 0.7, 0.9, 0.5, 0.2); });
    CHECK(msg.find("a1") != std::string::npos);
    msg = message_of([] { Trifn(0.5, 0.7, 0.95, 0.9, 0.5, 0.2); });
    CHECK(msg.find("a3") != std::string::npos);
}

TEST_CASE("construction rejects degree violations and names the field") {
    CHECK_THROWS_AS(Trifn(0.3, 0.4, 0.5, 0.6, -0.1, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, 0.4, 0.5, 0.6, 1.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, 0.4, 0.5, 0.6, 0.5, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, 0.4, 0.5, 0.6, 0.5, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, 0.4, 0.5, 0.6, 0.7, 0.5), std::invalid_argument);

    std::string msg = message_of([] { Trifn(0.3, 0.4, 0.5, 0.6, -0.1, 0.2); });
    CHECK(msg.find("w") != std::string::npos);
    msg = message_of([] { Trifn(0.3, 0.4, 0.5, 0.6, 0.5, 1.2); });
    CHECK(msg.find("u") != std::string::npos);
    msg = message_of([] { Trifn(0.3, 0.4, 0.5, 0.6, 0.7, 0.5); });
    CHECK(msg.find("w+u") != std::string::npos);
}

TEST_CASE("construction rejects NaN in any field") {
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Trifn(nan, 0.4, 0.5, 0.6, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, nan, 0.5, 0.6, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, 0.4, nan, 0.6, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, 0.4, 0.5, nan, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, 0.4, 0.5, 0.6, nan, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Trifn(0.3, 0.4, 0.5, 0.6, 0.5, nan), std::invalid_argument);
}

TEST_CASE("origin is the degenerate point at zero") {
    const Trifn& zero = Trifn::origin();
    CHECK(zero.a1() == 0.0);
    CHECK(zero.a4() == 0.0);
    CHECK(zero.w() == 0.0);
    CHECK(zero.u() == 1.0);
    CHECK(zero.is_triangular());
    CHECK(zero.is_nonnegative());
    CHECK(zero.is_nonpositive());
}

TEST_CASE("sign classification looks at the support") {
    CHECK(Trifn(0.1, 0.2, 0.3, 0.4, 0.5, 0.2).is_nonnegative());
    CHECK_FALSE(Trifn(0.1, 0.2, 0.3, 0.4, 0.5, 0.2).is_nonpositive());
    CHECK(Trifn(-0.4, -0.3, -0.2, -0.1, 0.5, 0.2).is_nonpositive());
    CHECK(Trifn(0.0, 0.1, 0.2, 0.3, 0.5, 0.2).is_nonnegative());
    Trifn straddling(-0.1, 0.2, 0.3, 0.4, 0.5, 0.2);
    CHECK_FALSE(straddling.is_nonnegative());
    CHECK_FALSE(straddling.is_nonpositive());
}

TEST_CASE("membership follows the piecewise shape") {
    CHECK(set1_a.membership_at(0.7) == 0.7);
    CHECK(set1_a.membership_at(0.6) == doctest::Approx(0.35).epsilon(1e-12));
    CHECK(set1_a.membership_at(1.5) == 0.0);
    CHECK(set1_a.membership_at(-5.0) == 0.0);
    CHECK(set1_a.membership_at(0.5) == 0.0);
    CHECK(set1_a.membership_at(0.9) == 0.0);

    Trifn trap(0.1, 0.2, 0.4, 0.5, 0.8, 0.1);
    CHECK(trap.membership_at(0.3) == 0.8);
    CHECK(trap.membership_at(0.45) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("non-membership follows the piecewise shape") {
    CHECK(set1_a.nonmembership_at(0.7) == 0.2);
    CHECK(set1_a.nonmembership_at(0.6) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(set1_a.nonmembership_at(-5.0) == 1.0);
    CHECK(set1_a.nonmembership_at(1.5) == 1.0);
    CHECK(set1_a.nonmembership_at(0.5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("indeterminacy completes the degrees to one") {
    CHECK(set1_a.indeterminacy_at(0.7) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(set1_a.indeterminacy_at(10.0) == 0.0);
    CHECK(Trifn::origin().indeterminacy_at(0.0) == 0.0);
}

TEST_CASE("degenerate point support uses the plateau everywhere on it") {
    Trifn point(0.5, 0.5, 0.5, 0.5, 0.6, 0.3);
    CHECK(point.membership_at(0.5) == 0.6);
    CHECK(point.nonmembership_at(0.5) == 0.3);
    CHECK(point.membership_at(0.4) == 0.0);
}

TEST_CASE("alpha cut hits the documented endpoints") {
    CHECK(set1_a.alpha_cut(0.0) == CutInterval{0.5, 0.9});
    CHECK(set1_a.alpha_cut(0.7) == CutInterval{0.7, 0.7});
    CutInterval mid = set1_a.alpha_cut(0.35);
    CHECK(mid.lower == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(mid.upper == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(mid.width() == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("alpha cut rejects levels outside [0, w]") {
    CHECK_THROWS_AS(set1_a.alpha_cut(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(set1_a.alpha_cut(0.7 + 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(set1_a.alpha_cut(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
}

TEST_CASE("alpha cut with zero membership admits only level zero") {
    Trifn flat(0.1, 0.2, 0.3, 0.4, 0.0, 0.6);
    CHECK(flat.alpha_cut(0.0) == CutInterval{0.1, 0.4});
    CHECK_THROWS_AS(flat.alpha_cut(0.1), std::invalid_argument);
}

TEST_CASE("beta cut hits the documented endpoints") {
    CHECK(set1_a.beta_cut(0.2) == CutInterval{0.7, 0.7});
    CHECK(set1_a.beta_cut(1.0) == CutInterval{0.5, 0.9});
    CutInterval mid = set1_a.beta_cut(0.6);
    CHECK(mid.lower == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(mid.upper == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("beta cut rejects levels outside [u, 1]") {
    CHECK_THROWS_AS(set1_a.beta_cut(0.19), std::invalid_argument);
    CHECK_THROWS_AS(set1_a.beta_cut(1.01), std::invalid_argument);
    CHECK_THROWS_AS(set1_a.beta_cut(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
}

TEST_CASE("beta cut with full non-membership admits only level one") {
    Trifn blank(0.1, 0.2, 0.3, 0.4, 0.0, 1.0);
    CHECK(blank.beta_cut(1.0) == CutInterval{0.1, 0.4});
    CHECK_THROWS_AS(blank.beta_cut(0.99), std::invalid_argument);
}

TEST_CASE("add is componentwise with min/max degrees") {
    Trifn x(1.0, 2.0, 3.0, 4.0, 0.6, 0.3);
    Trifn y(0.0, 1.0, 1.0, 2.0, 0.8, 0.1);
    Trifn s = add(x, y);
    CHECK(s == Trifn(1.0, 3.0, 4.0, 6.0, 0.6, 0.3));
}

TEST_CASE("sub reverses the second operand") {
    Trifn x(1.0, 2.0, 3.0, 4.0, 0.5, 0.3);
    Trifn d = sub(x, x);
    CHECK(d == Trifn(-3.0, -1.0, 1.0, 3.0, 0.5, 0.3));
}

TEST_CASE("scale by a negative factor mirrors the support") {
    Trifn x(0.3, 0.4, 0.5, 0.6, 0.7, 0.1);
    Trifn neg = scale(-1.0, x);
    CHECK(neg == Trifn(-0.6, -0.5, -0.4, -0.3, 0.7, 0.1));
    CHECK(scale(-1.0, neg) == x);
    CHECK(scale(2.0, x) == Trifn(0.6, 0.8, 1.0, 1.2, 0.7, 0.1));
}

TEST_CASE("scale rejects factor zero") {
    CHECK_THROWS_AS(scale(0.0, set1_a), std::domain_error);
}

TEST_CASE("mul handles the four sign-definite cases") {
    Trifn pos(1.0, 2.0, 3.0, 4.0, 0.6, 0.3);
    Trifn pos2(2.0, 3.0, 4.0, 5.0, 0.8, 0.1);
    Trifn neg = scale(-1.0, pos);
    Trifn neg2 = scale(-1.0, pos2);

    CHECK(mul(pos, pos2) == Trifn(2.0, 6.0, 12.0, 20.0, 0.6, 0.3));
    CHECK(mul(neg, neg2) == Trifn(2.0, 6.0, 12.0, 20.0, 0.6, 0.3));
    CHECK(mul(neg, pos2) == Trifn(-20.0, -12.0, -6.0, -2.0, 0.6, 0.3));
    CHECK(mul(pos, neg2) == mul(neg2, pos));
    CHECK(mul(pos, neg2) == Trifn(-20.0, -12.0, -6.0, -2.0, 0.6, 0.3));
}

TEST_CASE("mul rejects supports that straddle zero") {
    Trifn mixed(-1.0, 0.5, 1.0, 2.0, 0.5, 0.2);
    Trifn pos(1.0, 2.0, 3.0, 4.0, 0.6, 0.3);
    CHECK_THROWS_AS(mul(mixed, pos), std::domain_error);
    CHECK_THROWS_AS(mul(pos, mixed), std::domain_error);
}

TEST_CASE("reciprocal reverses and inverts a sign-definite support") {
    Trifn pos(1.0, 2.0, 4.0, 5.0, 0.6, 0.3);
    Trifn r = reciprocal(pos);
    CHECK(r.a1() == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(r.a2() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(r.a3() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.a4() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.w() == 0.6);
    CHECK(r.u() == 0.3);

    Trifn neg(-5.0, -4.0, -2.0, -1.0, 0.6, 0.3);
    Trifn rn = reciprocal(neg);
    CHECK(rn.a1() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(rn.a4() == doctest::Approx(-0.2).epsilon(1e-15));
}

TEST_CASE("reciprocal rejects a support touching zero") {
    CHECK_THROWS_AS(reciprocal(Trifn(0.0, 1.0, 2.0, 3.0, 0.5, 0.2)), std::domain_error);
    CHECK_THROWS_AS(reciprocal(Trifn(-1.0, 0.0, 1.0, 2.0, 0.5, 0.2)), std::domain_error);
    CHECK_THROWS_AS(reciprocal(Trifn::origin()), std::domain_error);
}
