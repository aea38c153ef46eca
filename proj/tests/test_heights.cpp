#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclotome/errors.hpp"
#include "cyclotome/heights.hpp"
#include "cyclotome/poly.hpp"

using namespace cyclotome;

namespace {

// independent oracle: enumerate subsets by counter, full product each time
DivisorHeightResult brute_force_b(long n) {
    const std::vector<long> ds = divisors_of(analyze(n));
    DivisorHeightResult best;
    best.B = BigInt(1);
    for (unsigned long mask = 0; mask < (1UL << ds.size()); ++mask) {
        IntPoly prod = IntPoly::one();
        std::vector<long> subset;
        for (std::size_t i = 0; i < ds.size(); ++i)
            if (mask >> i & 1UL) {
                subset.push_back(ds[i]);
                prod = mul(prod, cyclotomic(ds[i]));
            }
        const BigInt h = height(prod);
        if (h > best.B) {
            best.B = h;
            best.witnessSubset = subset;
        } else if (h == best.B && subset < best.witnessSubset) {
            best.witnessSubset = subset;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("heights_of known values") {
    const HeightRecord r7 = heights_of(7);
    CHECK(r7.A == BigInt(1));
    CHECK(r7.S == BigInt(7));
    CHECK(*r7.C == BigInt(1));
    CHECK(r7.phi == 6);

    const HeightRecord r105 = heights_of(105);
    CHECK(r105.A == BigInt(2));
    CHECK(r105.S == BigInt(35));
    CHECK(*r105.C == BigInt(1));

    const HeightRecord r15 = heights_of(15);
    CHECK(r15.A == BigInt(1));
    CHECK(r15.S == BigInt(7));
    CHECK(*r15.C == BigInt(1));

    const HeightRecord r1 = heights_of(1);
    CHECK(r1.A == BigInt(1));
    CHECK(r1.S == BigInt(2));
    CHECK_FALSE(r1.C.has_value());
}

TEST_CASE("record invariants A <= S, C >= 1") {
    for (long n = 1; n <= 120; ++n) {
        const HeightRecord r = heights_of(n);
        CHECK(r.A <= r.S);
        CHECK(r.A >= BigInt(1));
        if (r.C) CHECK(*r.C >= BigInt(1));
    }
}

TEST_CASE("C equals the max |coefficient| of one psi period") {
    for (long n = 2; n <= 150; ++n) {
        const HeightRecord r = heights_of(n);
        CHECK(*r.C == height(psi_prefix(n, static_cast<std::size_t>(n))));
    }
}

TEST_CASE("max_divisor_height basics") {
    CHECK(max_divisor_height(1).B == BigInt(1));
    for (long p : {2L, 3L, 5L, 13L}) CHECK(max_divisor_height(p).B == BigInt(1));
    const DivisorHeightResult r15 = max_divisor_height(15);
    CHECK(r15.B == BigInt(3));
    CHECK(r15.witnessSubset == std::vector<long>{3, 5});
    CHECK_THROWS_AS(max_divisor_height(12), NotAdmissible);  // not squarefree
    CHECK_THROWS_AS(max_divisor_height(15, 8), TooManyDivisors);
}

TEST_CASE("max_divisor_height agrees with an independent brute force") {
    for (long n : {1L, 2L, 6L, 10L, 15L, 21L, 30L, 42L, 66L, 105L}) {
        const DivisorHeightResult fast = max_divisor_height(n);
        const DivisorHeightResult slow = brute_force_b(n);
        CHECK(fast.B == slow.B);
        CHECK(fast.witnessSubset == slow.witnessSubset);
    }
    CHECK(max_divisor_height(30).B == BigInt(12));
    CHECK(max_divisor_height(105).B == BigInt(74));
}

TEST_CASE("B_n >= A_d for every divisor") {
    for (long n : {15L, 21L, 30L, 70L, 105L, 210L}) {
        const BigInt b = max_divisor_height(n).B;
        for (long d : divisors_of(analyze(n))) CHECK(b >= height(cyclotomic(d)));
    }
}

TEST_CASE("scan filter semantics") {
    ScanFilters f;
    f.odd_only = true;
    f.squarefree_only = true;
    f.omega = {2};
    const auto recs = scan(3, 15, f, 2);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].n == 15);

    ScanFilters f3;
    f3.odd_only = true;
    f3.squarefree_only = true;
    f3.omega = {3};
    const auto recs3 = scan(3, 200, f3, 2);
    std::vector<long> ns;
    for (const auto& r : recs3) ns.push_back(r.n);
    CHECK(ns == std::vector<long>{105, 165, 195});
}

TEST_CASE("scan with-b marks over-limit records instead of failing") {
    ScanFilters f;
    f.with_b = true;
    f.subset_limit = 8;  // tau(30) = 8 -> 256 subsets > 8
    const auto recs = scan(30, 30, f, 1);
    REQUIRE(recs.size() == 1);
    CHECK_FALSE(recs[0].B.has_value());
    CHECK(recs[0].bOverLimit);
}

TEST_CASE("scan records are identical for any worker count") {
    ScanFilters f;
    f.squarefree_only = true;
    f.with_b = true;
    const auto a = scan(1, 40, f, 1);
    const auto b = scan(1, 40, f, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].A == b[i].A);
        CHECK(a[i].S == b[i].S);
        CHECK(a[i].B.has_value() == b[i].B.has_value());
        if (a[i].B) CHECK(*a[i].B == *b[i].B);
        if (a[i].witnessSubset) CHECK(*a[i].witnessSubset == *b[i].witnessSubset);
    }
}

TEST_CASE("divisor product identity for squarefree n") {
    for (long n : {1L, 2L, 15L, 30L, 210L, 1155L}) {
        const CyclotomicIndex idx = analyze(n);
        BigInt prod(1);
        for (long d : divisors_of(idx)) prod *= BigInt(d);
        const unsigned long e = idx.omega == 0 ? 0 : (1UL << (idx.omega - 1)) - 1;
        CHECK(prod == BigInt(n) * BigInt::pow(BigInt(n), e));
    }
}
