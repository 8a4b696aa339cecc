#ifndef CSCK_ODE_HPP
#define CSCK_ODE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "csck/rational.hpp"

namespace csck {

struct OdeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalar adaptive Dormand-Prince 5(4) integrator.  Integrates y' = f(t, y)
/// from (t0, y0) and reports y at each requested output time (strictly
/// monotone in either direction).
template <class F>
std::vector<real> ode_solve(const F& f, real t0, real y0,
                            const std::vector<real>& t_out,
                            real rel_tol = 1e-12L, real abs_tol = 1e-14L) {
    static const real c2 = 1.0L / 5, c3 = 3.0L / 10, c4 = 4.0L / 5, c5 = 8.0L / 9;
    static const real a21 = 1.0L / 5;
    static const real a31 = 3.0L / 40, a32 = 9.0L / 40;
    static const real a41 = 44.0L / 45, a42 = -56.0L / 15, a43 = 32.0L / 9;
    static const real a51 = 19372.0L / 6561, a52 = -25360.0L / 2187, a53 = 64448.0L / 6561,
                      a54 = -212.0L / 729;
    static const real a61 = 9017.0L / 3168, a62 = -355.0L / 33, a63 = 46732.0L / 5247,
                      a64 = 49.0L / 176, a65 = -5103.0L / 18656;
    static const real b1 = 35.0L / 384, b3 = 500.0L / 1113, b4 = 125.0L / 192,
                      b5 = -2187.0L / 6784, b6 = 11.0L / 84;
    static const real e1 = 35.0L / 384 - 5179.0L / 57600, e3 = 500.0L / 1113 - 7571.0L / 16695,
                      e4 = 125.0L / 192 - 393.0L / 640, e5 = -2187.0L / 6784 + 92097.0L / 339200,
                      e6 = 11.0L / 84 - 187.0L / 2100, e7 = -1.0L / 40;

    std::vector<real> out;
    out.reserve(t_out.size());
    if (t_out.empty()) return out;
    const real dir = t_out.back() >= t0 ? 1 : -1;
    real t = t0, y = y0;
    real h = dir * std::min<real>(1e-2L, std::fabs(t_out.back() - t0) / 16 + 1e-12L);
    size_t next = 0;
    while (next < t_out.size() && dir * (t_out[next] - t) <= 0) {
        out.push_back(y);  // output at or before start
        ++next;
    }
    int steps = 0;
    while (next < t_out.size()) {
        if (++steps > 2000000) throw OdeError("ode_solve: step limit exceeded");
        real target = t_out[next];
        if (dir * (t + h - target) > 0) h = target - t;
        real k1 = f(t, y);
        real k2 = f(t + c2 * h, y + h * a21 * k1);
        real k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        real k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        real k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        real k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        real ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        real k7 = f(t + h, ynew);
        real err = std::fabs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
        real tol = abs_tol + rel_tol * std::max(std::fabs(y), std::fabs(ynew));
        if (err <= tol) {
            t += h;
            y = ynew;
            while (next < t_out.size() && dir * (t_out[next] - t) <= 1e-30L) {
                out.push_back(y);  // steps land exactly on outputs (h clamped)
                ++next;
            }
        }
        real scale = err > 0 ? static_cast<real>(0.9L * std::pow(static_cast<double>(tol / err), 0.2)) : 4.0L;
        scale = std::min<real>(4, std::max<real>(0.2L, scale));
        h *= scale;
        if (std::fabs(h) < 1e-28L) throw OdeError("ode_solve: step size underflow");
    }
    return out;
}

} // namespace csck

#endif
