#ifndef CYCLOTOME_RATIONAL_HPP
#define CYCLOTOME_RATIONAL_HPP

#include <gmp.h>

#include <string>

#include "cyclotome/bigint.hpp"

namespace cyclotome {

/// Exact rational built on mpq; always canonical. All bound comparisons in
/// the checkers go through this type, never floating point.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long num, long den = 1);
    Rational(const BigInt& num, const BigInt& den);
    /// Parses "p/q" or "p".
    explicit Rational(const std::string& text);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    int compare(const Rational& o) const { return mpq_cmp(q_, o.q_); }
    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    int sign() const { return mpq_sgn(q_); }
    BigInt numerator() const;
    BigInt denominator() const;
    double to_double() const { return mpq_get_d(q_); }
    /// "p/q", or just "p" for integers.
    std::string to_string() const;

    static Rational pow(const Rational& base, long exp);

  private:
    mpq_t q_;
};

}  // namespace cyclotome

#endif
