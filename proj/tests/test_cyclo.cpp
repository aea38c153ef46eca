#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclotome/cyclo.hpp"
#include "cyclotome/errors.hpp"

using namespace cyclotome;

TEST_CASE("analyze") {
    const CyclotomicIndex i105 = analyze(105);
    CHECK(i105.primes == std::vector<long>{3, 5, 7});
    CHECK(i105.totient == 48);
    CHECK(i105.kernel == 105);
    CHECK(i105.squarefree);
    CHECK(i105.odd);
    CHECK(i105.omega == 3);

    const CyclotomicIndex i12 = analyze(12);
    CHECK(i12.primes == std::vector<long>{2, 3});
    CHECK(i12.kernel == 6);
    CHECK_FALSE(i12.squarefree);
    CHECK_FALSE(i12.odd);

    const CyclotomicIndex i1 = analyze(1);
    CHECK(i1.primes.empty());
    CHECK(i1.totient == 1);
    CHECK(i1.kernel == 1);
    CHECK(i1.omega == 0);

    CHECK_THROWS_AS(analyze(0), std::invalid_argument);
}

TEST_CASE("divisors and mobius") {
    CHECK(divisors_of(analyze(12)) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_of(analyze(1)) == std::vector<long>{1});
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
}

TEST_CASE("cyclotomic small values") {
    CHECK(cyclotomic(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic(2) == IntPoly({1, 1}));
    CHECK(cyclotomic(3) == IntPoly({1, 1, 1}));
    CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
    CHECK(cyclotomic(15) == IntPoly({1, -1, 0, 1, -1, 1, 0, -1, 1}));
    // monic of degree phi(n)
    for (long n : {4L, 9L, 10L, 36L, 100L}) {
        const IntPoly p = cyclotomic(n);
        CHECK(p.degree() == analyze(n).totient);
        CHECK(p.coeff(static_cast<std::size_t>(p.degree())) == BigInt(1));
    }
    CHECK(height(cyclotomic(105)) == BigInt(2));
}

TEST_CASE("mobius product cross-checked by dividing x^n - 1 by proper cyclotomics") {
    for (long n = 1; n <= 150; ++n) {
        std::vector<BigInt> cs(static_cast<std::size_t>(n) + 1);
        cs[0] = BigInt(-1);
        cs[static_cast<std::size_t>(n)] = BigInt(1);
        IntPoly rem(std::move(cs));  // x^n - 1
        for (long d : divisors_of(analyze(n)))
            if (d != n) rem = div_exact(rem, cyclotomic(d));
        CHECK(rem == cyclotomic(n));
    }
}

TEST_CASE("cyclotomic_via_recursion equals the mobius product") {
    for (long n = 2; n <= 400; ++n) CHECK(cyclotomic_via_recursion(analyze(n)) == cyclotomic(n));
    // worked cases
    CHECK(cyclotomic_via_recursion(analyze(15)) ==
          div_exact(substitute_power(cyclotomic(3), 5), cyclotomic(3)));
    CHECK(cyclotomic_via_recursion(analyze(3)) == IntPoly({1, 1, 1}));
    CHECK(cyclotomic_via_recursion(analyze(18)) == substitute_power(cyclotomic(6), 3));
    CHECK_THROWS_AS(cyclotomic_via_recursion(analyze(1)), std::invalid_argument);
}

TEST_CASE("psi_prefix") {
    CHECK(psi_prefix(3, 6) ==
          SeriesPrefix({BigInt(1), BigInt(-1), BigInt(0), BigInt(1), BigInt(-1), BigInt(0)}));
    // prime p: period-p fold of 1 - x
    const SeriesPrefix p5 = psi_prefix(5, 10);
    const std::vector<long long> expect{1, -1, 0, 0, 0, 1, -1, 0, 0, 0};
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(p5.coeff(i) == BigInt(expect[i]));
    for (long n : {2L, 7L, 12L, 30L}) CHECK(psi_prefix(n, 5).coeff(0) == BigInt(1));
    CHECK_THROWS_AS(psi_prefix(1, 4), std::invalid_argument);
}

TEST_CASE("inverse_cyclotomic") {
    CHECK(inverse_cyclotomic(7) == IntPoly({1, -1}));  // prime: 1 - x
    CHECK(inverse_cyclotomic(15) == IntPoly({1, 1, 1, 0, 0, -1, -1, -1}));
    CHECK(inverse_cyclotomic(6) == IntPoly({1, 1, 0, -1, -1}));
    CHECK_THROWS_AS(inverse_cyclotomic(1), std::invalid_argument);
    for (long n = 2; n <= 200; ++n) {
        const CyclotomicIndex idx = analyze(n);
        const IntPoly ic = inverse_cyclotomic(idx);
        CHECK(ic.degree() == n - idx.totient);
        // multiply-back: ic * Phi_n = 1 - x^n
        const IntPoly prod = mul(ic, cyclotomic(idx));
        CHECK(prod.degree() == n);
        CHECK(prod.coeff(0) == BigInt(1));
        CHECK(prod.coeff(static_cast<std::size_t>(n)) == BigInt(-1));
        CHECK(abs_sum(prod) == BigInt(2));
    }
}

TEST_CASE("psi fold property, one period and beyond") {
    for (long n : {3L, 5L, 6L, 15L, 35L, 105L, 210L}) {
        const std::size_t N = static_cast<std::size_t>(2 * n + 7);
        const SeriesPrefix psi = psi_prefix(n, N);
        const IntPoly ic = inverse_cyclotomic(n);
        for (std::size_t m = 0; m < N; ++m)
            CHECK(psi.coeff(m) == ic.coeff(m % static_cast<std::size_t>(n)));
    }
}

TEST_CASE("palindrome symmetry of coefficients") {
    for (long n : {15L, 21L, 105L, 165L, 255L, 385L}) {
        const CyclotomicIndex idx = analyze(n);
        const IntPoly p = cyclotomic(idx);
        for (long m = 0; m <= idx.totient; ++m)
            CHECK(p.coeff(static_cast<std::size_t>(m)) ==
                  p.coeff(static_cast<std::size_t>(idx.totient - m)));
    }
}

TEST_CASE("kernel and doubling invariance of heights") {
    for (long n = 3; n <= 300; n += 2) {
        const CyclotomicIndex idx = analyze(n);
        const BigInt a = height(cyclotomic(idx));
        CHECK(a == height(cyclotomic(idx.kernel)));
        CHECK(a == height(cyclotomic(2 * n)));
        const BigInt c = height(inverse_cyclotomic(idx));
        CHECK(c == height(inverse_cyclotomic(idx.kernel)));
        CHECK(c == height(inverse_cyclotomic(2 * n)));
    }
}

TEST_CASE("psi recursion consistency: Psi_np = Psi_n(x^p) Phi_n(x) for p not dividing n") {
    const std::vector<std::pair<long, long>> cases{{3, 5}, {5, 3}, {15, 7}, {6, 5}, {35, 3}};
    for (const auto& [n, p] : cases) {
        const std::size_t N = 160;
        const SeriesPrefix direct = psi_prefix(n * p, N);
        const SeriesPrefix psi_n = psi_prefix(n, N);
        std::vector<BigInt> dilated(N);
        for (std::size_t i = 0; i * p < N; ++i) dilated[i * p] = psi_n.coeff(i);
        const IntPoly combined = mul_truncated(IntPoly(dilated), cyclotomic(n), N);
        for (std::size_t i = 0; i < N; ++i) CHECK(combined.coeff(i) == direct.coeff(i));
    }
}

TEST_CASE("c_np(m) is the convolution sum of c_n over dilated indices with a_n") {
    const long n = 15, p = 7;
    const std::size_t N = 140;
    const SeriesPrefix cnp = psi_prefix(n * p, N);
    const SeriesPrefix cn = psi_prefix(n, N);
    const IntPoly an = cyclotomic(n);
    for (long m = 0; m < static_cast<long>(N); ++m) {
        BigInt sum;
        for (long k = 0; k <= m / p; ++k)
            sum.add_mul(cn.coeff(static_cast<std::size_t>(k)),
                        an.coeff(static_cast<std::size_t>(m - k * p)));
        CHECK(sum == cnp.coeff(static_cast<std::size_t>(m)));
    }
}
