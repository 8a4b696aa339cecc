#ifndef CSCK_ROOTS_HPP
#define CSCK_ROOTS_HPP

#include <optional>
#include <vector>

#include "csck/poly.hpp"

namespace csck {

/// Interval certified to contain exactly one distinct real root of the
/// queried polynomial.  lo == hi means the root is known exactly.
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    Rational width() const { return hi - lo; }
};

/// A root interval together with the square-free factor that changes sign
/// across it, which is what bisection refinement needs (the polynomial
/// itself does not change sign at an even-multiplicity root).
struct IsolatedRoot {
    RootInterval interval;
    Poly factor;   ///< square-free, simple sign change on (lo, hi]
};

/// Square-free decomposition p = prod factor[k].poly ^ factor[k].power
/// (Yun's algorithm); constant content is dropped.
struct SquareFreeFactor {
    Poly poly;
    int power;
};
std::vector<SquareFreeFactor> squarefree_decompose(const Poly& p);

/// Product of the distinct irreducible factors, each taken once.
Poly squarefree_part(const Poly& p);

/// Sturm chain of a square-free polynomial.
std::vector<Poly> sturm_chain(const Poly& squarefree);

/// Number of distinct roots of the (square-free) chain owner in (lo, hi].
int sturm_count(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi);

/// Isolates every distinct real root of p in the half-open interval
/// (lo, hi], with multiplicities from the square-free decomposition.
/// Roots are returned sorted; exact rational roots collapse to points.
/// Requires p nonzero and lo < hi.
std::vector<IsolatedRoot> isolate_real_roots(const Poly& p, const Rational& lo, const Rational& hi);

/// Shrinks the interval by sign-change bisection until width <= tol.
RootInterval refine_root(const Poly& squarefree_factor, RootInterval iv, const Rational& tol);

/// Smallest root of p in (lo, hi], if any, refined to tol.
std::optional<IsolatedRoot> first_root_in(const Poly& p, const Rational& lo, const Rational& hi,
                                          const Rational& tol);

/// True iff p has no root in the open interval (lo, hi) and is positive at
/// the midpoint: an exact positivity certificate on (lo, hi).  Roots AT the
/// endpoints are permitted.
bool positive_on_open_interval(const Poly& p, const Rational& lo, const Rational& hi);

/// Positivity certificate on (lo, +infinity): no root beyond lo (Cauchy
/// bound search) and positive leading coefficient / sample.
bool positive_on_ray(const Poly& p, const Rational& lo);

} // namespace csck

#endif
