#include "csck/flat.hpp"

#include <algorithm>
#include <cmath>

#include "csck/quadrature.hpp"

namespace csck {

namespace {

// long-double coefficient helpers for the numeric pole split at b
real horner(const std::vector<real>& c, real x) {
    real acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<real> to_real_coeffs(const Poly& p) {
    std::vector<real> c(p.coeffs().size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = p.coeffs()[k].to_real();
    return c;
}

// synthetic division by (x - r); remainder discarded
std::vector<real> deflate(const std::vector<real>& c, real r) {
    if (c.size() <= 1) return {};
    std::vector<real> q(c.size() - 1);
    real carry = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + carry * r;
    }
    return q;
}

std::vector<real> xpow_coeffs(int k) {
    std::vector<real> c(static_cast<size_t>(k) + 1, 0);
    c.back() = 1;
    return c;
}

} // namespace

void FlatProblem::validate() const {
    if (n < 2) throw InputError("flat: dimension n must be >= 2");
    if (!(a > Rational(0))) throw InputError("flat: a must be positive");
    if (c.sign() > 0 && !(a * c < Rational(static_cast<long>(n) * (n - 1))))
        throw InputError("flat: c > 0 requires a*c < n(n-1)");
}

FlatProfile FlatProfile::build(const FlatProblem& prob) {
    prob.validate();
    const int n = prob.n;
    const Rational& a = prob.a;
    const Rational& c = prob.c;

    FlatProfile pr;
    pr.prob_ = prob;
    pr.c1_ = Rational(n) * a.pow(n - 1) - c / Rational(n) * a.pow(n);
    pr.c2_ = Rational(1 - n) * a.pow(n) + c / Rational(n + 1) * a.pow(n + 1);

    std::vector<Rational> fc(static_cast<size_t>(n) + 2, Rational(0));
    fc[static_cast<size_t>(n) + 1] = -c / Rational(static_cast<long>(n) * (n + 1));
    fc[static_cast<size_t>(n)] = Rational(1);
    fc[1] = -pr.c1_;
    fc[0] = -pr.c2_;
    pr.F_ = Poly(std::move(fc));

    if (!pr.F_(a).is_zero() || !pr.F_.derivative()(a).is_zero())
        throw InvariantError("flat: F(a) = F'(a) = 0 failed");
    pr.exact_structure_ = true;

    Poly lin({-a, Rational(1)});
    pr.Fred_ = pr.F_.exact_div(lin * lin);

    if (c.sign() <= 0) {
        pr.b_ = Endpoint::infinite();
        pr.endpoint_class_ =
            c.is_zero() ? EndpointClass::InfiniteLogGrowth : EndpointClass::InfinitePoincare;
        if (!positive_on_ray(pr.Fred_, a))
            throw InvariantError("flat: F positivity on (a, inf) failed");
    } else {
        pr.endpoint_class_ = EndpointClass::FiniteSimpleRoot;
        Rational bound = pr.Fred_.cauchy_root_bound() + Rational(1);
        auto root = first_root_in(pr.Fred_, a, bound, Rational(1, 1000000000L).pow(4));
        if (!root) throw InvariantError("flat: c > 0 but no root of F beyond a");
        if (root->interval.multiplicity != 1)
            throw InvariantError("flat: F(b) = 0 must be a simple root");
        pr.b_.finite = true;
        if (root->interval.exact()) {
            pr.b_.exact = root->interval.lo;
            pr.b_.value = root->interval.lo.to_real();
            pr.kappa_exact_ = -pr.b_.exact->pow(n - 1) / pr.F_.derivative()(*pr.b_.exact);
            pr.kappa_value_ = pr.kappa_exact_->to_real();
        } else {
            pr.b_.tol = root->interval.width();
            pr.b_.value = root->interval.midpoint().to_real();
            pr.kappa_value_ = -std::pow(pr.b_.value, static_cast<real>(n - 1)) /
                              pr.F_.derivative().eval_real(pr.b_.value);
        }
        if (!positive_on_open_interval(pr.Fred_, a, root->interval.lo == a ? root->interval.hi
                                                                           : root->interval.lo))
            throw InvariantError("flat: F positivity on (a, b) failed");
    }

    pr.finish_setup();
    return pr;
}

FlatProfile FlatProfile::from_parts(const FlatProblem& prob, const Poly& F) {
    prob.validate();
    FlatProfile pr;
    pr.prob_ = prob;
    pr.F_ = F;
    pr.c1_ = -F.coeff(1);
    pr.c2_ = -F.coeff(0);
    pr.exact_structure_ = F(prob.a).is_zero() && F.derivative()(prob.a).is_zero();
    if (pr.exact_structure_) {
        Poly lin({-prob.a, Rational(1)});
        pr.Fred_ = F.exact_div(lin * lin);
    }
    if (prob.c.sign() <= 0) {
        pr.b_ = Endpoint::infinite();
        pr.endpoint_class_ =
            prob.c.is_zero() ? EndpointClass::InfiniteLogGrowth : EndpointClass::InfinitePoincare;
    } else {
        pr.endpoint_class_ = EndpointClass::FiniteSimpleRoot;
        // locate the first far root numerically off the reduced polynomial
        const Poly& search = pr.exact_structure_ ? pr.Fred_ : F;
        Rational bound = search.cauchy_root_bound() + Rational(1);
        Rational lo = prob.a + (prob.a + Rational(1)) / Rational(1000000);
        auto root = first_root_in(search, lo, bound, Rational(1, 1000000000L).pow(3));
        if (!root) throw InputError("flat document: c > 0 but F has no far root");
        pr.b_.finite = true;
        if (root->interval.exact()) {
            pr.b_.exact = root->interval.lo;
            pr.b_.value = root->interval.lo.to_real();
        } else {
            pr.b_.value = root->interval.midpoint().to_real();
            pr.b_.tol = root->interval.width();
        }
        real fp = F.derivative().eval_real(pr.b_.value);
        if (fp != 0) pr.kappa_value_ = -std::pow(pr.b_.value, static_cast<real>(prob.n - 1)) / fp;
        if (pr.b_.exact) {
            Rational d = F.derivative()(*pr.b_.exact);
            if (!d.is_zero()) pr.kappa_exact_ = -pr.b_.exact->pow(prob.n - 1) / d;
        }
    }
    pr.finish_setup();
    return pr;
}

void FlatProfile::finish_setup() {
    const int n = prob_.n;
    const real a = prob_.a.to_real();

    real span = b_.finite ? (b_.value - a) : 2;
    phi_ref_ = a + std::min<real>(1, span / 2);

    if (exact_structure_) {
        auto make_split = [&](int power) {
            Split s;
            Rational Na = prob_.a.pow(power);
            Rational Npa = Rational(power) * prob_.a.pow(power - 1);
            Rational fa = Fred_(prob_.a);
            Rational fpa = Fred_.derivative()(prob_.a);
            Rational alpha = Na / fa;
            Rational beta = (Npa * fa - Na * fpa) / (fa * fa);
            Poly N = Poly::monomial(Rational(1), power);
            Poly lin({-prob_.a, Rational(1)});
            Poly num = N - alpha * Fred_ - beta * (lin * Fred_);
            s.S = num.exact_div(lin * lin);
            s.alpha = alpha.to_real();
            s.beta = beta.to_real();
            return s;
        };
        t_split_ = make_split(n - 1);
        u_split_ = make_split(n);
    }

    // reversed polynomial y^(n+1) F(1/y) for integrals to infinity
    {
        std::vector<Rational> g(static_cast<size_t>(n) + 2, Rational(0));
        for (int j = 0; j <= n + 1; ++j) g[static_cast<size_t>(j)] = F_.coeff(n + 1 - j);
        Grev_ = Poly(std::move(g));
    }

    if (b_.finite) {
        auto coeffs = to_real_coeffs(F_);
        std::vector<real> Fb = deflate(coeffs, b_.value);
        auto make_bsplit = [&](int power) {
            BSplit s;
            s.Fb = Fb;
            real gamma = std::pow(b_.value, static_cast<real>(power)) / horner(Fb, b_.value);
            std::vector<real> num = xpow_coeffs(power);
            num.resize(std::max(num.size(), Fb.size()), 0);
            for (size_t k = 0; k < Fb.size(); ++k) num[k] -= gamma * Fb[k];
            s.gamma = gamma;
            s.Sb = deflate(num, b_.value);
            return s;
        };
        t_bsplit_ = make_bsplit(n - 1);
        u_bsplit_ = make_bsplit(n);
    }

    // normalization offsets
    t_offset_ = 0;
    if (prob_.c.sign() < 0) {
        // fix sup t = 0: subtract the tail integral from phi_ref to infinity
        real yref = 1 / phi_ref_;
        real tail = integrate([&](real y) { return 1 / Grev_.eval_real(y); }, 0, yref);
        real t_raw_inf = tail;  // t_raw(phi_ref) = 0, so t_raw(inf) = tail
        t_offset_ = -t_raw_inf;
    } else if (prob_.c.is_zero() && n == 2 && exact_structure_) {
        // match t = log(phi - a) - a/(phi - a)
        real s = phi_ref_ - a;
        t_offset_ = std::log(s) - a / s;
    }
}

real FlatProfile::kappa() const {
    if (endpoint_class_ != EndpointClass::FiniteSimpleRoot)
        throw InputError("flat: kappa defined only for c > 0 profiles");
    return kappa_value_;
}

real FlatProfile::t_raw(real phi) const {
    const int n = prob_.n;
    const real a = prob_.a.to_real();
    if (phi <= phi_ref_) {
        if (exact_structure_) {
            real lead = t_split_.alpha * (1 / (phi_ref_ - a) - 1 / (phi - a)) +
                        t_split_.beta * (std::log(phi - a) - std::log(phi_ref_ - a));
            real smooth = integrate(
                [&](real x) { return t_split_.S.eval_real(x) / Fred_.eval_real(x); }, phi_ref_, phi);
            return lead + smooth;
        }
        return integrate([&](real x) {
            return std::pow(x, static_cast<real>(n - 1)) / F_.eval_real(x);
        }, phi_ref_, phi);
    }
    if (b_.finite) {
        real lead = t_bsplit_.gamma * (std::log(b_.value - phi) - std::log(b_.value - phi_ref_));
        real smooth = integrate(
            [&](real x) { return horner(t_bsplit_.Sb, x) / horner(t_bsplit_.Fb, x); }, phi_ref_, phi);
        return lead + smooth;
    }
    // infinite b: transform x = 1/y, integrate e^s/G(e^s) in s = log y
    real s1 = std::log(1 / phi), s2 = std::log(1 / phi_ref_);
    return integrate([&](real s) {
        real y = std::exp(s);
        return y / Grev_.eval_real(y);
    }, s1, s2);
}

real FlatProfile::u_raw(real phi) const {
    const int n = prob_.n;
    const real a = prob_.a.to_real();
    if (phi <= phi_ref_) {
        if (exact_structure_) {
            real lead = u_split_.alpha * (1 / (phi_ref_ - a) - 1 / (phi - a)) +
                        u_split_.beta * (std::log(phi - a) - std::log(phi_ref_ - a));
            real smooth = integrate(
                [&](real x) { return u_split_.S.eval_real(x) / Fred_.eval_real(x); }, phi_ref_, phi);
            return lead + smooth;
        }
        return integrate([&](real x) {
            return std::pow(x, static_cast<real>(n)) / F_.eval_real(x);
        }, phi_ref_, phi);
    }
    if (b_.finite) {
        real lead = u_bsplit_.gamma * (std::log(b_.value - phi) - std::log(b_.value - phi_ref_));
        real smooth = integrate(
            [&](real x) { return horner(u_bsplit_.Sb, x) / horner(u_bsplit_.Fb, x); }, phi_ref_, phi);
        return lead + smooth;
    }
    // int x^n/F dx = int ds / G(e^s),  s = log(1/x)
    real s1 = std::log(1 / phi), s2 = std::log(1 / phi_ref_);
    return integrate([&](real s) { return 1 / Grev_.eval_real(std::exp(s)); }, s1, s2);
}

real FlatProfile::t_of_phi(real phi) const {
    const real a = prob_.a.to_real();
    if (!(phi > a) || (b_.finite && !(phi < b_.value)))
        throw InputError("flat: phi outside (a, b)");
    return t_raw(phi) + t_offset_;
}

real FlatProfile::u_of_phi(real phi) const {
    const real a = prob_.a.to_real();
    if (!(phi > a) || (b_.finite && !(phi < b_.value)))
        throw InputError("flat: phi outside (a, b)");
    return u_raw(phi);
}

real FlatProfile::t_sup() const {
    return prob_.c.sign() < 0 ? 0 : std::numeric_limits<real>::infinity();
}

real FlatProfile::phi_of_t(real t) const {
    const real a = prob_.a.to_real();
    if (prob_.c.sign() < 0 && t >= 0) throw InputError("flat: t outside range (sup t = 0)");
    real lo = a + (phi_ref_ - a) * 1e-22L;
    if (t_of_phi(lo) > t) {
        // extremely deep puncture request; walk further in geometrically
        while (t_of_phi(lo) > t) {
            lo = a + (lo - a) * 1e-3L;
            if (lo - a < a * 1e-300L) throw InputError("flat: t too deep to invert");
        }
    }
    real hi;
    if (b_.finite) {
        hi = b_.value - (b_.value - a) * 1e-22L;
        if (t_of_phi(hi) < t) throw InputError("flat: t beyond resolvable range near b");
    } else {
        hi = phi_ref_ + 1;
        while (t_of_phi(hi) < t) {
            hi = a + (hi - a) * 2;
            if (hi > 1e300L) throw InputError("flat: t beyond range");
        }
    }
    for (int it = 0; it < 200; ++it) {
        real mid = (lo + hi) / 2;
        if (t_of_phi(mid) < t) lo = mid;
        else hi = mid;
        if (hi - lo <= 1e-23L * std::max<real>(hi - a, 1e-30L)) break;
    }
    return (lo + hi) / 2;
}

std::vector<FlatProfile::Sample> FlatProfile::sample_potential(const std::vector<real>& t_grid) const {
    if (t_grid.empty()) return {};
    real tmin = *std::min_element(t_grid.begin(), t_grid.end());
    real tmax = *std::max_element(t_grid.begin(), t_grid.end());
    if (prob_.c.sign() < 0 && tmax >= 0) throw InputError("flat: grid outside range (sup t = 0)");

    const int n = prob_.n;
    std::vector<real> u_prev(t_grid.size(), 0);
    std::vector<FlatProfile::Sample> out(t_grid.size());
    size_t M = 2048;
    for (int pass = 0; pass < 8; ++pass) {
        real h = (tmax - tmin) / static_cast<real>(M);
        std::vector<real> cum(M + 1, 0);
        real prev_phi = phi_of_t(tmin);
        for (size_t i = 1; i <= M; ++i) {
            real phi = phi_of_t(tmin + h * static_cast<real>(i));
            cum[i] = cum[i - 1] + h * (prev_phi + phi) / 2;
            prev_phi = phi;
        }
        real worst = 0;
        for (size_t j = 0; j < t_grid.size(); ++j) {
            real pos = (t_grid[j] - tmin) / h;
            size_t i0 = std::min<size_t>(static_cast<size_t>(std::max<real>(pos, 0)), M - 1);
            real frac = pos - static_cast<real>(i0);
            real u = cum[i0] + frac * (cum[i0 + 1] - cum[i0]);
            worst = std::max(worst, std::fabs(u - u_prev[j]) / std::max<real>(1, std::fabs(u)));
            u_prev[j] = u;
        }
        if (pass > 0 && worst < 1e-9L) break;
        M *= 2;
    }
    for (size_t j = 0; j < t_grid.size(); ++j) {
        real t = t_grid[j];
        real phi = phi_of_t(t);
        out[j] = {t, phi, u_prev[j],
                  std::exp(-static_cast<real>(n) * t) * F_.eval_real(phi)};
    }
    return out;
}

std::vector<AsymptoticModel> FlatProfile::expected_asymptotics() const {
    const int n = prob_.n;
    const real a = prob_.a.to_real();
    const real c = prob_.c.to_real();
    const real nn1 = static_cast<real>(n) * (n - 1);
    std::vector<AsymptoticModel> models;

    {
        AsymptoticModel pmy;
        pmy.location = AsymptoticLocation::PunctureZero;
        pmy.terms = {
            {a, BasisTag::LogR2, 0, true},
            {-2 * a / (nn1 - a * c), BasisTag::LogNegLog, 0, true},
            {NAN, BasisTag::One, 0, false},
            {NAN, BasisTag::LogNegLogOverT, 0, false},   // log(-t)/t remainder
            {NAN, BasisTag::NegLogPow, -1, false},       // 1/(-t) remainder
        };
        models.push_back(std::move(pmy));
    }

    switch (endpoint_class_) {
        case EndpointClass::InfiniteLogGrowth: {
            AsymptoticModel ale;
            ale.location = AsymptoticLocation::InfinityALE;
            if (n == 2) {
                ale.terms = {
                    {1, BasisTag::R2, 0, true},
                    {2 * a, BasisTag::LogR2, 0, true},
                    {a * a / 2, BasisTag::R2Pow, -1, true},
                    {NAN, BasisTag::One, 0, false},
                    {NAN, BasisTag::R2Pow, -2, false},
                };
            } else {
                ale.terms = {
                    {1, BasisTag::R2, 0, true},
                    {-static_cast<real>(n) * std::pow(a, static_cast<real>(n - 1)) /
                         (static_cast<real>(n - 1) * (n - 2)),
                     BasisTag::R2Pow, static_cast<real>(2 - n), true},
                    {std::pow(a, static_cast<real>(n)) / n, BasisTag::R2Pow,
                     static_cast<real>(1 - n), true},
                    {NAN, BasisTag::LogR2, 0, false},
                    {NAN, BasisTag::One, 0, false},
                    {NAN, BasisTag::R2Pow, static_cast<real>(-n), false},
                };
                ale.note = "far-field correction exponent 2-n (derivation route)";
            }
            models.push_back(std::move(ale));
            break;
        }
        case EndpointClass::InfinitePoincare: {
            AsymptoticModel poin;
            poin.location = AsymptoticLocation::BoundaryPoincare;
            poin.terms = {
                {static_cast<real>(n) * (n + 1) / c, BasisTag::LogNegLog, 0, true},
                {NAN, BasisTag::One, 0, false},
                {NAN, BasisTag::LogR2, 0, false},
            };
            poin.note = "potential realizes n(n+1)/c (negative) on log(-log r2)";
            models.push_back(std::move(poin));
            break;
        }
        case EndpointClass::FiniteSimpleRoot: {
            AsymptoticModel inc;
            inc.location = AsymptoticLocation::InfinityIncomplete;
            real k = kappa_value_;
            inc.terms = {
                {b_.value, BasisTag::LogR2, 0, true},
                {k, BasisTag::ExpNegOverKappa, k, true},
                {NAN, BasisTag::One, 0, false},
                {NAN, BasisTag::ExpNegOverKappa, k / 2, false},   // (r^-2/k)^2
            };
            models.push_back(std::move(inc));
            break;
        }
    }
    return models;
}

FlatProfile::KappaCheck FlatProfile::check_no_extension() const {
    if (endpoint_class_ != EndpointClass::FiniteSimpleRoot)
        throw InputError("check_no_extension: requires a c > 0 profile");
    KappaCheck chk;
    chk.kappa = kappa_value_;
    chk.exact = kappa_exact_;
    chk.is_one = kappa_exact_ ? (*kappa_exact_ == Rational(1))
                              : std::fabs(kappa_value_ - 1) < 1e-12L;
    return chk;
}

real FlatProfile::length_integral(real x1, real x2) const {
    if (!(x1 <= x2)) throw InputError("length_integral: x1 <= x2 required");
    const int n = prob_.n;
    const real a = prob_.a.to_real();
    auto g = [&](real x) {
        real v = std::pow(x, static_cast<real>(n - 1)) / F_.eval_real(x);
        return std::sqrt(v);
    };
    real total = 0;
    real mid = std::min(phi_ref_, x2);
    if (x1 < mid) {
        // x = a + e^s keeps the 1/(x-a) blow-up resolved
        real s1 = std::log(x1 - a), s2 = std::log(mid - a);
        total += integrate([&](real s) {
            real x = a + std::exp(s);
            return g(x) * std::exp(s);
        }, s1, s2);
        x1 = mid;
    }
    if (x1 < x2) {
        if (b_.finite) {
            // b - x = e^s resolves the inverse-sqrt end
            real s1 = std::log(b_.value - x2), s2 = std::log(b_.value - x1);
            total += integrate([&](real s) {
                real x = b_.value - std::exp(s);
                return g(x) * std::exp(s);
            }, s1, s2);
        } else {
            // x = e^s for the unbounded end
            total += integrate([&](real s) {
                real x = std::exp(s);
                return g(x) * x;
            }, std::log(x1), std::log(x2));
        }
    }
    return total;
}

} // namespace csck
