#include "cyclotome/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclotome/errors.hpp"

namespace cyclotome {

namespace detail {

std::vector<BigInt> mul_schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j].add_mul(a[i], b[j]);
    }
    return out;
}

// Karatsuba on raw coefficient vectors; sizes already > 0.
std::vector<BigInt> mul_rec(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_schoolbook(a, b);
    const std::size_t half = (std::max(a.size(), b.size()) + 1) / 2;
    auto split = [half](const std::vector<BigInt>& v) {
        std::vector<BigInt> lo(v.begin(), v.begin() + std::min(half, v.size()));
        std::vector<BigInt> hi;
        if (v.size() > half) hi.assign(v.begin() + half, v.end());
        if (lo.empty()) lo.emplace_back(0);
        return std::pair(std::move(lo), std::move(hi));
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);

    std::vector<BigInt> z0 = mul_rec(a0, b0);
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];

    if (!a1.empty() && !b1.empty()) {
        std::vector<BigInt> z2 = mul_rec(a1, b1);
        for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * half] += z2[i];
        std::vector<BigInt> sa(std::max(a0.size(), a1.size()));
        std::vector<BigInt> sb(std::max(b0.size(), b1.size()));
        for (std::size_t i = 0; i < sa.size(); ++i) {
            if (i < a0.size()) sa[i] += a0[i];
            if (i < a1.size()) sa[i] += a1[i];
        }
        for (std::size_t i = 0; i < sb.size(); ++i) {
            if (i < b0.size()) sb[i] += b0[i];
            if (i < b1.size()) sb[i] += b1[i];
        }
        std::vector<BigInt> z1 = mul_rec(sa, sb);
        for (std::size_t i = 0; i < z1.size(); ++i) {
            BigInt m = std::move(z1[i]);
            if (i < z0.size()) m -= z0[i];
            if (i < z2.size()) m -= z2[i];
            out[i + half] += m;
        }
    } else {
        // one operand fits entirely below the split
        const std::vector<BigInt>& hi = a1.empty() ? b1 : a1;
        const std::vector<BigInt>& other = a1.empty() ? a0 : b0;
        if (!hi.empty()) {
            std::vector<BigInt> z1 = mul_rec(other, hi);
            for (std::size_t i = 0; i < z1.size(); ++i) out[i + half] += z1[i];
        }
    }
    return out;
}

}  // namespace detail

IntPoly IntPoly::monomial(const BigInt& c, std::size_t e) {
    if (c.is_zero()) return IntPoly();
    std::vector<BigInt> v(e + 1);
    v[e] = c;
    return IntPoly(std::move(v));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    return IntPoly(detail::mul_rec(a.coeffs(), b.coeffs()));
}

IntPoly mul_truncated(const IntPoly& a, const IntPoly& b, std::size_t order) {
    if (a.is_zero() || b.is_zero() || order == 0) return IntPoly();
    std::vector<BigInt> out(std::min(order, a.size() + b.size() - 1));
    for (std::size_t i = 0; i < a.size() && i < order; ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        const std::size_t jmax = std::min(b.size(), order - i);
        for (std::size_t j = 0; j < jmax; ++j) out[i + j].add_mul(a.coeffs()[i], b.coeffs()[j]);
    }
    return IntPoly(std::move(out));
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("div_exact: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw NotDivisible("div_exact: degree(a) < degree(b)");

    // Strip common trailing zeros: x^t | b forces x^t | a.
    std::size_t shift = 0;
    while (b.coeff(shift).is_zero()) ++shift;
    for (std::size_t i = 0; i < shift; ++i)
        if (!a.coeff(i).is_zero()) throw NotDivisible("div_exact: trailing coefficient mismatch");

    const std::size_t na = a.size() - shift;
    const std::size_t nb = b.size() - shift;
    const std::size_t nq = na - nb + 1;
    const BigInt& b0 = b.coeff(shift);
    const bool b0_unit = b0 == BigInt(1) || b0 == BigInt(-1);

    // Low-end recurrence: q[m] = (a[m] - sum_j b[j] q[m-j]) / b[0]; indices
    // m past the quotient degree must leave a zero residual.
    std::vector<BigInt> q(nq);
    for (std::size_t m = 0; m < na; ++m) {
        BigInt acc = a.coeff(m + shift);
        const std::size_t jmin = m + 1 > nq ? m + 1 - nq : 1;
        for (std::size_t j = jmin; j <= m && j < nb; ++j) acc.sub_mul(b.coeff(j + shift), q[m - j]);
        if (m < nq) {
            if (b0_unit) {
                if (b0.to_int64_unchecked() == -1) acc.negate();
                q[m] = std::move(acc);
            } else {
                q[m] = acc.div_exact(b0);
            }
        } else if (!acc.is_zero()) {
            throw NotDivisible("div_exact: nonzero remainder");
        }
    }
    return IntPoly(std::move(q));
}

SeriesPrefix series_inverse(const IntPoly& a, std::size_t n) {
    const BigInt& a0 = a.coeff(0);
    const bool plus = a0 == BigInt(1);
    if (!plus && a0 != BigInt(-1))
        throw NotInvertible("series_inverse: constant coefficient is not a unit");
    std::vector<BigInt> b(n);
    if (n == 0) return SeriesPrefix(std::move(b));
    b[0] = a0;
    for (std::size_t m = 1; m < n; ++m) {
        BigInt acc;
        const std::size_t jmax = std::min(m, a.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) acc.add_mul(a.coeffs()[j], b[m - j]);
        if (plus) acc.negate();
        b[m] = std::move(acc);
    }
    return SeriesPrefix(std::move(b));
}

IntPoly substitute_power(const IntPoly& a, std::size_t t) {
    if (t == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
    if (t == 1 || a.is_zero()) return a;
    std::vector<BigInt> out(static_cast<std::size_t>(a.degree()) * t + 1);
    for (std::size_t i = 0; i < a.size(); ++i) out[i * t] = a.coeffs()[i];
    return IntPoly(std::move(out));
}

namespace {
BigInt height_of(const std::vector<BigInt>& v) {
    BigInt h;
    for (const BigInt& c : v) {
        BigInt a = c.abs();
        if (a > h) h = std::move(a);
    }
    return h;
}
}  // namespace

BigInt height(const IntPoly& a) { return height_of(a.coeffs()); }
BigInt height(const SeriesPrefix& a) { return height_of(a.coeffs()); }

BigInt abs_sum(const IntPoly& a) {
    BigInt s;
    for (const BigInt& c : a.coeffs()) s += c.abs();
    return s;
}

}  // namespace cyclotome
