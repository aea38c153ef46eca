#ifndef CYCLOTOME_POLY_HPP
#define CYCLOTOME_POLY_HPP

#include <initializer_list>
#include <vector>

#include "cyclotome/bigint.hpp"

namespace cyclotome {

/// Dense integer polynomial, coefficients ascending. The zero polynomial is
/// the empty sequence; its degree() is kZeroDegree (the "minus infinity"
/// marker). Nonzero polynomials keep a nonzero last coefficient.
class IntPoly {
  public:
    static constexpr long kZeroDegree = -1;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    static IntPoly one() { return IntPoly({1}); }
    /// c * x^e
    static IntPoly monomial(const BigInt& c, std::size_t e);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of x^i, zero beyond the stored range.
    const BigInt& coeff(std::size_t i) const {
        static const BigInt zero;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// First N coefficients of a formal power series. Unlike IntPoly the length
/// is exactly the truncation order; trailing zeros are meaningful.
class SeriesPrefix {
  public:
    SeriesPrefix() = default;
    SeriesPrefix(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t order() const { return coeffs_.size(); }
    const BigInt& coeff(std::size_t i) const { return coeffs_[i]; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    friend bool operator==(const SeriesPrefix& a, const SeriesPrefix& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::vector<BigInt> coeffs_;
};

/// Exact product. Schoolbook below kKaratsubaThreshold terms, Karatsuba above.
IntPoly mul(const IntPoly& a, const IntPoly& b);

/// Product truncated to the first `order` coefficients.
IntPoly mul_truncated(const IntPoly& a, const IntPoly& b, std::size_t order);

/// Exact quotient a / b; throws NotDivisible when any remainder coefficient
/// is nonzero, std::invalid_argument for b = 0.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

/// First n coefficients of 1/a. Requires a(0) = +1 or -1.
SeriesPrefix series_inverse(const IntPoly& a, std::size_t n);

/// x -> x^t substitution, t >= 1.
IntPoly substitute_power(const IntPoly& a, std::size_t t);

BigInt height(const IntPoly& a);
BigInt height(const SeriesPrefix& a);
BigInt abs_sum(const IntPoly& a);

namespace detail {
inline constexpr std::size_t kKaratsubaThreshold = 64;
/// Exposed for cross-checking the Karatsuba path in tests.
std::vector<BigInt> mul_schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b);
}  // namespace detail

}  // namespace cyclotome

#endif
