#pragma once

namespace ifr {

// Closed interval produced by the alpha and beta cuts.
struct CutInterval {
    double lower = 0.0;
    double upper = 0.0;

    double width() const noexcept { return upper - lower; }
};

inline bool operator==(const CutInterval& x, const CutInterval& y) noexcept {
    return x.lower == y.lower && x.upper == y.upper;
}

// Trapezoidal intuitionistic fuzzy number <(a1,a2,a3,a4); w, u>.
//
// Membership rises linearly from zero at a1 to the plateau height w over
// [a2,a3] and falls back to zero at a4.  Non-membership mirrors it: floor u
// over the plateau, rising to 1 at the support edges and 1 outside.  The
// triangular case is stored with a2 == a3.
//
// Constraints checked at construction: a1 <= a2 <= a3 <= a4, w and u in
// [0,1], w + u <= 1.  Every live Trifn satisfies them, so the query and
// arithmetic functions never revalidate.
class Trifn {
  public:
    // Throws std::invalid_argument naming the offending field.
    Trifn(double a1, double a2, double a3, double a4, double w, double u);

    // Triangular form <(t1,t2,t3); w, u>, canonicalized to a2 == a3.
    static Trifn triangular(double t1, double t2, double t3, double w, double u);

    // The crisp zero <(0,0,0,0); 0, 1>, the reference point for ranking.
    static const Trifn& origin();

    double a1() const noexcept { return a1_; }
    double a2() const noexcept { return a2_; }
    double a3() const noexcept { return a3_; }
    double a4() const noexcept { return a4_; }
    double w() const noexcept { return w_; }
    double u() const noexcept { return u_; }

    bool is_triangular() const noexcept { return a2_ == a3_; }

    // Support sign queries used by mul and reciprocal. A number whose
    // support touches zero counts as both nonnegative and nonpositive.
    bool is_nonnegative() const noexcept { return a1_ >= 0.0; }
    bool is_nonpositive() const noexcept { return a4_ <= 0.0; }

    double membership_at(double x) const noexcept;
    double nonmembership_at(double x) const noexcept;
    double indeterminacy_at(double x) const noexcept;

    // {x : membership(x) >= alpha} for alpha in [0, w].  When w == 0 only
    // alpha == 0 is admissible and the support [a1,a4] is returned.
    CutInterval alpha_cut(double alpha) const;

    // {x : nonmembership(x) <= beta} for beta in [u, 1].  When u == 1 only
    // beta == 1 is admissible and the support [a1,a4] is returned.
    CutInterval beta_cut(double beta) const;

    friend bool operator==(const Trifn&, const Trifn&) noexcept = default;

  private:
    double a1_, a2_, a3_, a4_, w_, u_;
};

// Arithmetic. Degrees combine as min(w_x, w_y) and max(u_x, u_y); results
// always satisfy the construction constraints.
Trifn add(const Trifn& x, const Trifn& y);
Trifn sub(const Trifn& x, const Trifn& y);

// Requires sign-definite operands (support entirely >= 0 or entirely <= 0);
// throws std::domain_error on a support that straddles zero.
Trifn mul(const Trifn& x, const Trifn& y);

// factor > 0 scales componentwise; factor < 0 also reverses the abscissae.
// Throws std::domain_error for factor == 0.
Trifn scale(double factor, const Trifn& x);

// (1/a4, 1/a3, 1/a2, 1/a1) with unchanged degrees.  Requires zero strictly
// outside the support; throws std::domain_error otherwise.
Trifn reciprocal(const Trifn& x);

}  // namespace ifr
