#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "cyclotome/bigint.hpp"
#include "cyclotome/errors.hpp"
#include "cyclotome/rational.hpp"

using cyclotome::BigInt;
using cyclotome::Rational;

TEST_CASE("construction and string round trip") {
    CHECK(BigInt().is_zero());
    CHECK(BigInt(-7).to_string() == "-7");
    CHECK(BigInt("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK(BigInt("-42") == BigInt(-42));
    CHECK_THROWS_AS(BigInt("12x"), std::invalid_argument);
    CHECK(BigInt(std::string("9223372036854775807")).fits_int64());
    CHECK_FALSE(BigInt(std::string("9223372036854775808")).fits_int64());
}

TEST_CASE("promotion at the int64 boundary") {
    const BigInt max(INT64_MAX);
    BigInt v = max + BigInt(1);
    CHECK_FALSE(v.fits_int64());
    CHECK(v.to_string() == "9223372036854775808");
    v -= BigInt(1);
    CHECK(v.fits_int64());  // demotes back
    CHECK(v == max);

    BigInt m(INT64_MIN);
    m.negate();
    CHECK(m.to_string() == "9223372036854775808");

    BigInt prod = max * max;
    CHECK(prod.to_string() == "85070591730234615847396907784232501249");
    CHECK(prod > max);
    CHECK(BigInt(-1) < BigInt(0));
    CHECK(prod.abs() == prod);
    CHECK((-prod).abs() == prod);
}

TEST_CASE("arithmetic agrees with a 128-bit oracle on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-3'000'000'000LL, 3'000'000'000LL);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t a = dist(rng), b = dist(rng);
        const __int128 sum = static_cast<__int128>(a) + b;
        const __int128 prod = static_cast<__int128>(a) * b;
        CHECK(BigInt(a) + BigInt(b) == BigInt(std::to_string(static_cast<long long>(sum))));
        auto i128_str = [](__int128 v) {
            if (v == 0) return std::string("0");
            const bool neg = v < 0;
            unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
            std::string s;
            while (u) {
                s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
                u /= 10;
            }
            return neg ? "-" + s : s;
        };
        CHECK(BigInt(a) * BigInt(b) == BigInt(i128_str(prod)));
        BigInt acc(a);
        acc.add_mul(BigInt(b), BigInt(b));
        CHECK(acc == BigInt(i128_str(static_cast<__int128>(a) + static_cast<__int128>(b) * b)));
        BigInt acc2(a);
        acc2.sub_mul(BigInt(b), BigInt(b));
        CHECK(acc2 == BigInt(i128_str(static_cast<__int128>(a) - static_cast<__int128>(b) * b)));
    }
}

TEST_CASE("exact division") {
    CHECK(BigInt(42).div_exact(BigInt(-7)) == BigInt(-6));
    CHECK_THROWS_AS(BigInt(43).div_exact(BigInt(7)), cyclotome::NotDivisible);
    CHECK_THROWS_AS(BigInt(1).div_exact(BigInt(0)), std::invalid_argument);
    const BigInt big = BigInt::pow(BigInt(10), 30);
    CHECK(big.div_exact(BigInt::pow(BigInt(10), 15)) == BigInt::pow(BigInt(10), 15));
}

TEST_CASE("pow and binomial") {
    CHECK(BigInt::pow(BigInt(3), 0) == BigInt(1));
    CHECK(BigInt::pow(BigInt(2), 70).to_string() == "1180591620717411303424");
    CHECK(BigInt::binomial(10, 5) == BigInt(252));
    CHECK(BigInt::binomial(0, 0) == BigInt(1));
}

TEST_CASE("rational basics") {
    const Rational r(3, 4);
    CHECK(r.to_string() == "3/4");
    CHECK(Rational("15/32") == Rational(15, 32));
    CHECK(Rational(6, 8) == r);
    CHECK(Rational("7").to_string() == "7");
    CHECK(r * Rational(4, 3) == Rational(1));
    CHECK(Rational(1) - r == Rational(1, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).sign() < 0);
}
