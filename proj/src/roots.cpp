#include "csck/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace csck {

std::vector<SquareFreeFactor> squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
    std::vector<SquareFreeFactor> out;
    if (p.degree() == 0) return out;
    // Yun's algorithm over Q
    Poly a = p.monic();
    Poly g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    Poly b = a.exact_div(g);
    Poly d = a.derivative().exact_div(g) - b.derivative();
    int power = 1;
    while (true) {
        Poly f = d.is_zero() ? b : poly_gcd(b, d);
        if (f.degree() > 0) out.push_back({f.monic(), power});
        Poly bn = b.exact_div(f);
        if (bn.degree() == 0) break;
        Poly dn = d.is_zero() ? Poly() : d.exact_div(f);
        b = std::move(bn);
        d = dn - b.derivative();
        ++power;
    }
    return out;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    Poly dp = p.derivative();
    if (dp.is_zero()) return Poly({Rational(1)});
    return p.exact_div(poly_gcd(p, dp)).monic();
}

std::vector<Poly> sturm_chain(const Poly& squarefree) {
    std::vector<Poly> chain;
    chain.push_back(squarefree);
    if (squarefree.degree() <= 0) return chain;
    chain.push_back(squarefree.derivative());
    while (chain.back().degree() > 0) {
        Poly rem = chain[chain.size() - 2].divmod(chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = p(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Rational-root trial division on an integer-scaled polynomial: keeps exact
// roots exact (e.g. b = 4 for the c > 0 flat family).  Skipped when the
// candidate set would be large.
std::optional<Rational> rational_root_in(const Poly& p, const Rational& lo, const Rational& hi) {
    mpz_class den_lcm = 1;
    for (const Rational& c : p.coeffs()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = den_lcm / g * c.den();
    }
    std::vector<mpz_class> ic;
    ic.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) ic.push_back((c * Rational(den_lcm)).num());
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;  // x^low divides
    if (low > 0 && lo < Rational(0) && Rational(0) <= hi) return Rational(0);
    if (ic.size() - low < 2) return std::nullopt;
    mpz_class a0 = abs(ic[low]), an = abs(ic.back());
    if (a0 > 1000000 || an > 1000000) return std::nullopt;
    auto divisors = [](const mpz_class& v) {
        std::vector<mpz_class> ds;
        for (mpz_class d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const mpz_class& pnum : divisors(a0))
        for (const mpz_class& qden : divisors(an))
            for (int s : {1, -1}) {
                Rational cand(s * pnum, qden);
                if (lo < cand && cand <= hi && p(cand).is_zero()) return cand;
            }
    return std::nullopt;
}

// One bisection step on an interval known to contain exactly one root of
// the (square-free) factor in (lo, hi].
void shrink_once(const std::vector<Poly>& chain, const Poly& factor, RootInterval& iv) {
    if (iv.exact()) return;
    Rational mid = iv.midpoint();
    if (factor(mid).is_zero()) {
        iv.lo = iv.hi = mid;
        return;
    }
    if (sturm_count(chain, mid, iv.hi) == 1) iv.lo = mid;
    else iv.hi = mid;
}

} // namespace

int sturm_count(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<IsolatedRoot> isolate_real_roots(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots: requires lo < hi");
    std::vector<IsolatedRoot> out;
    std::vector<std::vector<Poly>> chains;
    for (const auto& [factor, power] : squarefree_decompose(p)) {
        if (factor.degree() < 1) continue;
        auto chain = sturm_chain(factor);
        std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
        while (!stack.empty()) {
            auto [l, h] = stack.back();
            stack.pop_back();
            int count = sturm_count(chain, l, h);
            if (count == 0) continue;
            if (count == 1) {
                RootInterval iv{l, h, power};
                if (factor(h).is_zero()) iv.lo = iv.hi = h;
                else if (auto r = rational_root_in(factor, l, h)) iv.lo = iv.hi = *r;
                out.push_back({iv, factor});
                chains.push_back(chain);
                continue;
            }
            Rational mid = (l + h) / Rational(2);
            stack.push_back({l, mid});
            stack.push_back({mid, h});
        }
    }
    // Intervals from distinct square-free factors may overlap; shrink until
    // pairwise disjoint so the sorted order is certified.
    bool overlap = true;
    while (overlap) {
        overlap = false;
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j) {
                RootInterval &a = out[i].interval, &b = out[j].interval;
                if (!(a.hi <= b.lo || b.hi <= a.lo)) {
                    shrink_once(chains[i], out[i].factor, a);
                    shrink_once(chains[j], out[j].factor, b);
                    overlap = true;
                }
            }
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.interval.lo < b.interval.lo || (a.interval.lo == b.interval.lo && a.interval.hi < b.interval.hi);
    });
    return out;
}

RootInterval refine_root(const Poly& factor, RootInterval iv, const Rational& tol) {
    if (iv.exact()) return iv;
    auto chain = sturm_chain(factor);
    while (iv.width() > tol) shrink_once(chain, factor, iv);
    return iv;
}

std::optional<IsolatedRoot> first_root_in(const Poly& p, const Rational& lo, const Rational& hi,
                                          const Rational& tol) {
    auto roots = isolate_real_roots(p, lo, hi);
    if (roots.empty()) return std::nullopt;
    IsolatedRoot r = roots.front();
    r.interval = refine_root(r.factor, r.interval, tol);
    return r;
}

bool positive_on_open_interval(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) return false;
    if (!(lo < hi)) throw std::invalid_argument("positive_on_open_interval: lo < hi required");
    Poly sf = squarefree_part(p);
    auto chain = sturm_chain(sf);
    int count = sturm_count(chain, lo, hi);
    if (sf(hi).is_zero()) --count;
    if (count > 0) return false;
    return p(lo + (hi - lo) / Rational(2)).sign() > 0;
}

bool positive_on_ray(const Poly& p, const Rational& lo) {
    if (p.is_zero()) return false;
    if (p.leading().sign() <= 0) return false;
    Rational bound = p.cauchy_root_bound();
    Rational hi = bound <= lo ? lo + Rational(1) : bound + Rational(1);
    return positive_on_open_interval(p, lo, hi);
}

} // namespace csck
