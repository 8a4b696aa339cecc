#ifndef CSCK_RATIONAL_HPP
#define CSCK_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <iosfwd>

#include <gmpxx.h>

namespace csck {

/// Floating type used by all approximate numerics (quadrature, ODE,
/// finite differences, fits).  80-bit extended precision keeps the
/// finite-difference noise floor well below the curvature thresholds.
using real = long double;

/// Arbitrary-precision rational, always reduced, denominator > 0.
///
/// Thin wrapper over GMP's mpq_class that enforces canonical form on
/// every construction path and adds the conversions this project needs
/// (exact decimal-string parsing, long-double export).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(static_cast<long int>(v)) {}
    Rational(long num, long den) : q_(static_cast<long int>(num), static_cast<long int>(den)) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }

    /// Parses "p/q", "p", or a decimal/scientific literal ("0.25", "1e-3",
    /// "-3.5e2").  Decimal inputs convert exactly (0.1 -> 1/10).
    static Rational parse(const std::string& text);

    /// Exact value of a double (binary expansion), for snapping floats.
    static Rational from_double(double v);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    /// Integer power (negative exponents allowed for nonzero values).
    Rational pow(long e) const;

    double to_double() const { return q_.get_d(); }

    /// Long-double conversion via a two-limb expansion: the double
    /// rounding plus the exactly-computed residue, accurate to ~1 ulp
    /// of long double.
    real to_real() const {
        double hi = q_.get_d();
        mpq_class rest = q_ - mpq_class(hi);
        return static_cast<real>(hi) + static_cast<real>(rest.get_d());
    }

    std::string str() const;          ///< "p/q" (or "p" when integral)

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, long b) { return a * Rational(b); }
inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

} // namespace csck

#endif
