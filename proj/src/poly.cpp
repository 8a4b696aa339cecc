#include "csck/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace csck {

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

real Poly::eval_real(real x) const {
    real acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_real();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<Rational> a(c_.size() + 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    return Poly(std::move(a));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) r[k] = -c_[k];
    return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    std::vector<Rational> r(p.c_.size());
    for (size_t k = 0; k < p.c_.size(); ++k) r[k] = s * p.c_[k];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
    Rational lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational f = rem.leading() / lead;
        q[static_cast<size_t>(shift)] = f;
        rem = rem - Poly::monomial(f, shift) * divisor;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("Poly::exact_div: nonzero remainder");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

Poly Poly::scale_arg(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    Rational p(1);
    for (size_t k = 0; k < c_.size(); ++k) {
        r[k] = c_[k] * p;
        p *= s;
    }
    return Poly(std::move(r));
}

Poly Poly::reverse() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Rational Poly::cauchy_root_bound() const {
    if (is_zero()) throw std::domain_error("Poly::cauchy_root_bound: zero polynomial");
    Rational m(0);
    for (size_t k = 0; k + 1 < c_.size(); ++k) {
        Rational q = (c_[k] / c_.back()).abs();
        if (q > m) m = q;
    }
    return Rational(1) + m;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& ck = c_[static_cast<size_t>(k)];
        if (ck.is_zero()) continue;
        if (!first) os << (ck.sign() > 0 ? " + " : " - ");
        else if (ck.sign() < 0) os << "-";
        first = false;
        Rational mag = ck.abs();
        if (k == 0 || mag != Rational(1)) os << mag.str();
        if (k > 0) {
            if (mag != Rational(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("poly_gcd: both polynomials zero");
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    if (num_.is_zero()) { den_ = Poly({Rational(1)}); return; }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    if (den_.leading().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational RatFunc::operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
    return num_(x) / d;
}

real RatFunc::eval_real(real x) const { return num_.eval_real(x) / den_.eval_real(x); }

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

} // namespace csck
