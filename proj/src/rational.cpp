#include "cyclotome/rational.hpp"

#include <stdexcept>

namespace cyclotome {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(q_);
    num.assign_to(mpq_numref(q_));
    den.assign_to(mpq_denref(q_));
    mpq_canonicalize(q_);
}

Rational::Rational(const std::string& text) {
    mpq_init(q_);
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    BigInt n(num), d(den);
    if (d.is_zero()) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    n.assign_to(mpq_numref(q_));
    d.assign_to(mpq_denref(q_));
    mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::invalid_argument("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

BigInt Rational::numerator() const { return BigInt::from_mpz(mpq_numref(q_)); }
BigInt Rational::denominator() const { return BigInt::from_mpz(mpq_denref(q_)); }

std::string Rational::to_string() const {
    const std::string den = denominator().to_string();
    std::string out = numerator().to_string();
    if (den != "1") out += "/" + den;
    return out;
}

Rational Rational::pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = base;
    if (exp < 0) {
        b = Rational(1) / b;
        exp = -exp;
    }
    Rational r(1);
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace cyclotome
