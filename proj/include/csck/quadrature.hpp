#ifndef CSCK_QUADRATURE_HPP
#define CSCK_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>

#include "csck/rational.hpp"

namespace csck {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK abscissae and weights).
inline constexpr real kGK15X[8] = {
    0.991455371120812639206854697526329L,
    0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L,
    0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L,
    0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L,
    0.000000000000000000000000000000000L};
inline constexpr real kGK15WK[8] = {
    0.022935322010529224963732008058970L,
    0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L,
    0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L,
    0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L,
    0.209482141084727828012999174891714L};
inline constexpr real kGK15WG[4] = {
    0.129484966168869693270611432679082L,
    0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L,
    0.417959183673469387755102040816327L};

template <class F>
void gk15(const F& f, real lo, real hi, real& value, real& err) {
    const real mid = (lo + hi) / 2, half = (hi - lo) / 2;
    real fk = 0, fg = 0;
    for (int i = 0; i < 8; ++i) {
        real fv;
        if (i == 7) {
            fv = f(mid);
        } else {
            fv = f(mid - half * kGK15X[i]) + f(mid + half * kGK15X[i]);
        }
        fk += kGK15WK[i] * fv;
        if (i % 2 == 1) fg += kGK15WG[i / 2] * fv;
    }
    value = fk * half;
    err = std::fabs((fk - fg) * half);
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [lo, hi].
/// Bisects until the local K15-G7 discrepancy meets the tolerance budget;
/// throws QuadratureError if the recursion depth is exhausted first.
template <class F>
real integrate(const F& f, real lo, real hi,
               real rel_tol = 1e-16L, real abs_tol = 1e-22L, int max_depth = 52) {
    if (lo == hi) return 0;
    struct Frame { real lo, hi; int depth; };
    // explicit stack; tolerance split proportionally to interval width
    Frame stack[2048];
    int top = 0;
    stack[top++] = {lo, hi, 0};
    real total = 0;
    const real span = std::fabs(hi - lo);
    while (top > 0) {
        Frame fr = stack[--top];
        real v, e;
        detail::gk15(f, fr.lo, fr.hi, v, e);
        real budget = abs_tol * std::fabs(fr.hi - fr.lo) / span +
                      rel_tol * (std::fabs(v) + 1e-30L);
        if (e <= budget || fr.depth >= max_depth) {
            if (e > budget && fr.depth >= max_depth)
                throw QuadratureError("integrate: failed to converge (depth exhausted)");
            total += v;
            continue;
        }
        if (top + 2 >= 2048) throw QuadratureError("integrate: subdivision stack overflow");
        real mid = (fr.lo + fr.hi) / 2;
        stack[top++] = {fr.lo, mid, fr.depth + 1};
        stack[top++] = {mid, fr.hi, fr.depth + 1};
    }
    return total;
}

} // namespace csck

#endif
