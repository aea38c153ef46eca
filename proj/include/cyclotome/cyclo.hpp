#ifndef CYCLOTOME_CYCLO_HPP
#define CYCLOTOME_CYCLO_HPP

#include <vector>

#include "cyclotome/poly.hpp"

namespace cyclotome {

/// A validated index n with its factorization-derived data.
struct CyclotomicIndex {
    long n = 1;
    std::vector<long> primes;  // distinct prime factors, strictly ascending
    int omega = 0;             // number of distinct prime factors
    long totient = 1;
    long kernel = 1;  // product of the distinct primes (the radical)
    bool squarefree = true;
    bool odd = true;
};

/// Trial-division factorization; n >= 1.
CyclotomicIndex analyze(long n);

/// All divisors of index.n, ascending.
std::vector<long> divisors_of(const CyclotomicIndex& index);

/// Moebius function of a squarefree-by-construction product of a subset of
/// index.primes; general m via analyze(m) elsewhere.
int mobius(long m);

/// Phi_n by the Moebius product prod_{d|n} (1-x^d)^{mu(n/d)}, evaluated as a
/// truncated series of length phi(n)+1. Phi_1 = x-1.
IntPoly cyclotomic(long n);
IntPoly cyclotomic(const CyclotomicIndex& index);

/// Independent construction: iterate Phi_{mp}(x) = Phi_m(x^p)/Phi_m(x) over
/// the prime factors, then dilate by n/ker(n). Requires n >= 2.
IntPoly cyclotomic_via_recursion(const CyclotomicIndex& index);

/// First N coefficients of Psi_n = 1/Phi_n. Requires n >= 2.
SeriesPrefix psi_prefix(long n, std::size_t N);

/// The inverse cyclotomic polynomial (1-x^n)/Phi_n, degree n-phi(n).
/// Requires n >= 2. One period of Psi_n folds onto its coefficients.
IntPoly inverse_cyclotomic(long n);
IntPoly inverse_cyclotomic(const CyclotomicIndex& index);

namespace detail {
/// In-place a *= (1 - x^e) truncated to a.size().
void mul_one_minus_pow(std::vector<BigInt>& a, std::size_t e);
/// In-place a /= (1 - x^e) truncated to a.size() (geometric-series fold).
void div_one_minus_pow(std::vector<BigInt>& a, std::size_t e);
}  // namespace detail

}  // namespace cyclotome

#endif
