#include "csck/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace csck {

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw std::invalid_argument("Rational::parse: malformed fraction '" + text + "'");
        mpz_class num, den;
        if (num.set_str(ns, 10) != 0 || den.set_str(ds, 10) != 0)
            throw std::invalid_argument("Rational::parse: malformed fraction '" + text + "'");
        if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
        return Rational(num, den);
    }

    // decimal / scientific literal, converted exactly
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    std::string digits;
    long frac_digits = 0, exponent = 0;
    bool saw_digit = false, saw_point = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
            if (saw_point) ++frac_digits;
            saw_digit = true;
        } else if (ch == '.' && !saw_point) {
            saw_point = true;
        } else if ((ch == 'e' || ch == 'E') && saw_digit) {
            exponent = std::stol(s.substr(i + 1));
            break;
        } else {
            throw std::invalid_argument("Rational::parse: malformed number '" + text + "'");
        }
    }
    if (!saw_digit) throw std::invalid_argument("Rational::parse: malformed number '" + text + "'");
    mpz_class num;
    if (digits.empty()) digits = "0";
    num.set_str(digits, 10);
    if (neg) num = -num;
    long p10 = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(p10 < 0 ? -p10 : p10));
    return p10 >= 0 ? Rational(num * scale) : Rational(num, scale);
}

Rational Rational::from_double(double v) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), v);
    return Rational(q);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(n, d);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << q_.get_num();
    if (q_.get_den() != 1) os << '/' << q_.get_den();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace csck
