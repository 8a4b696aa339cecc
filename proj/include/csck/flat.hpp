#ifndef CSCK_FLAT_HPP
#define CSCK_FLAT_HPP

#include <optional>
#include <vector>

#include "csck/asymptotics.hpp"
#include "csck/errors.hpp"
#include "csck/poly.hpp"
#include "csck/roots.hpp"

namespace csck {

/// Rotationally symmetric cscK problem on punctured C^n / D^n:
/// t = log r^2, phi(t) = u'(t), target scalar curvature c, and
/// phi -> a as t -> -infinity.
struct FlatProblem {
    int n = 2;
    Rational a = Rational(1);
    Rational c = Rational(0);

    /// Throws InputError unless n >= 2, a > 0 and (c > 0 implies a*c < n(n-1)).
    void validate() const;
};

enum class EndpointClass {
    InfiniteLogGrowth,   ///< c = 0: phi ranges over (a, inf), t ~ log phi
    InfinitePoincare,    ///< c < 0: phi -> inf at finite t (Poincare boundary)
    FiniteSimpleRoot,    ///< c > 0: phi -> b, simple root of F
};

/// Right endpoint of the phi-domain: +infinity, an exact rational root,
/// or a refined approximation.
struct Endpoint {
    bool finite = false;
    std::optional<Rational> exact;
    real value = 0;              ///< meaningful when finite
    Rational tol = Rational(0);  ///< refinement width when not exact

    static Endpoint infinite() { return {}; }
};

/// Solved profile for the flat families: F(phi) with the (phi-a)^2 factor
/// enforced, the phi -> t map by exact pole-split quadrature, and the
/// induced potential u.
class FlatProfile {
public:
    /// Determines c1, c2 from the completeness constraint, certifies
    /// positivity of F on (a, b), classifies the far end, and computes
    /// (b, kappa) for c > 0.
    static FlatProfile build(const FlatProblem& prob);

    /// Rebuilds the analytic machinery from an externally supplied F
    /// (document verification path).  No completeness structure is assumed:
    /// a perturbed F yields a profile whose oracle checks fail rather than
    /// a construction error.
    static FlatProfile from_parts(const FlatProblem& prob, const Poly& F);

    const FlatProblem& problem() const { return prob_; }
    const Poly& F() const { return F_; }
    const Rational& c1() const { return c1_; }
    const Rational& c2() const { return c2_; }
    EndpointClass endpoint_class() const { return endpoint_class_; }
    const Endpoint& b() const { return b_; }
    bool has_exact_structure() const { return exact_structure_; }

    /// kappa = -b^(n-1)/F'(b); exact when b is an exact rational root.
    std::optional<Rational> kappa_exact() const { return kappa_exact_; }
    real kappa() const;

    /// Solution map t(phi) on (a, b), strictly increasing, normalized per
    /// family: c < 0 fixes sup t = 0; c = 0, n = 2 matches
    /// t = log(phi-a) - a/(phi-a); otherwise t(phi_ref) = 0 with
    /// phi_ref = a + min(1, (b-a)/2).
    real t_of_phi(real phi) const;
    real phi_of_t(real t) const;   ///< bisection inverse
    /// Potential along the profile as a function of phi, u(phi_ref) = 0.
    real u_of_phi(real phi) const;
    real u_of_t(real t) const { return u_of_phi(phi_of_t(t)); }

    real phi_ref() const { return phi_ref_; }
    /// Supremum of attainable t (0 for c < 0, +inf otherwise).
    real t_sup() const;

    struct Sample {
        real t, phi, u, det_g;
    };
    /// (t, phi, u, det_g) table; u by refined cumulative trapezoid of
    /// phi dt (successive grid doublings until < 1e-9 relative), anchored
    /// u = 0 at the first grid point; det_g = e^(-nt) F(phi).
    std::vector<Sample> sample_potential(const std::vector<real>& t_grid) const;

    /// Expansion targets for the oracle fits (puncture plus the far-end
    /// model of the family).  Coefficients carry the signs the potential
    /// actually realizes.
    std::vector<AsymptoticModel> expected_asymptotics() const;

    struct KappaCheck {
        real kappa;
        std::optional<Rational> exact;
        bool is_one;   ///< property violation when true
    };
    /// kappa of a c > 0 profile, flagged if it equals 1 (the metric would
    /// extend across the hyperplane at infinity, which the family excludes).
    KappaCheck check_no_extension() const;

    /// Length integrand sqrt(x^(n-1)/F(x)) integrated over [x1, x2] inside
    /// (a, b); exp-substituted near the a-end so the near-puncture values
    /// stay accurate.  Used by the completeness probe.
    real length_integral(real x1, real x2) const;

private:
    FlatProfile() = default;
    void finish_setup();   // splits + normalization offsets

    FlatProblem prob_;
    Poly F_;
    Rational c1_, c2_;
    Poly Fred_;                    // F/(x-a)^2 when exact, else unused
    bool exact_structure_ = false;
    EndpointClass endpoint_class_ = EndpointClass::InfiniteLogGrowth;
    Endpoint b_;
    std::optional<Rational> kappa_exact_;
    real kappa_value_ = 0;

    // pole-split data at a (exact path): N/F = alpha/(x-a)^2 + beta/(x-a) + S/Fred
    struct Split {
        real alpha = 0, beta = 0;
        Poly S;
    };
    Split t_split_, u_split_;      // N = x^(n-1) and N = x^n
    // numeric pole split at finite b: N/F = gamma/(x-b) + Sb/Fb
    struct BSplit {
        real gamma = 0;
        std::vector<real> Sb, Fb;  // long-double coefficient polys
    };
    BSplit t_bsplit_, u_bsplit_;
    Poly Grev_;                    // y^(n+1) F(1/y) for the tail transform
    real phi_ref_ = 0;
    real t_offset_ = 0;            // t = t_raw + offset
    real t_tail_offset_ = 0;       // for c < 0: -t_raw(inf)

    real t_raw(real phi) const;    // 0 at phi_ref
    real u_raw(real phi) const;
};

} // namespace csck

#endif
