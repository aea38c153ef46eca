#ifndef CYCLOTOME_VERIFY_HPP
#define CYCLOTOME_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclotome/bounds.hpp"
#include "cyclotome/heights.hpp"
#include "cyclotome/rational.hpp"

namespace cyclotome {

struct Violation {
    std::string where;  // n, (n,m), or a prime tuple
    std::string bound;  // name of the violated relation
    std::string lhs;
    std::string rhs;
};

struct SuiteReport {
    std::string suite;
    long checks = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    double seconds = 0;

    bool clean() const { return violations.empty(); }
    void merge(const SuiteReport& o);
};

/// Phi cross-algorithm equality, A/C kernel-shift invariance, the Psi fold,
/// and the divisor-product identity, for n up to maxN.
SuiteReport run_identities(long maxN, int jobs);

/// One shared pass over odd squarefree pqr <= maxN: the ternary height
/// bound, the inverse ternary bound (max C/(p-1) ratio reported), the
/// ternary S-bound, and Bloom symmetry/pointwise checks for n <= bloomMax.
SuiteReport run_ternary(long maxN, long bloomMax, const Rational& eps3, int jobs);

/// S_1 = 2 and S_pq <= pq/2 over squarefree semiprimes up to maxN.
SuiteReport run_semiprime_s(long maxN, int jobs);

/// Bloom symmetry + pointwise bound alone, over odd squarefree pqr <= maxN.
SuiteReport run_bloom(long maxN, int jobs);

/// Every small-order bound (omega 1..6) over odd squarefree n <= maxN,
/// ternary part included.
SuiteReport run_small_orders(long maxN, const Rational& eps3, int jobs);

/// The factorization and its Sperner certificate over odd squarefree
/// n <= maxN with omega in {3,4,5}:
/// congruence fstar * prod P_j == Phi_n (mod x^n) and height(fstar) <= b.
SuiteReport run_decomposition(long maxN, int jobs);

/// dm_combinatorial == fstar coefficients and the maximal-lambda
/// certificate chain |d_m| <= count <= b_{k-2}, for every m of every listed
/// n. `certificates` selects which n also run the certificate.
SuiteReport run_dm_formula(const std::vector<long>& ns, const std::vector<long>& certificates,
                           int jobs);

/// 20 deterministic admissible samples <= maxN beyond the fixed trio.
std::vector<long> sample_admissible(long maxN, std::size_t count, unsigned seed);

/// Exhaustive totient-power comparison for k <= 6 tuples from the first 15 odd
/// primes plus `randomSamples` seeded tuples with k <= 10.
SuiteReport run_phi_theorem(std::size_t randomSamples, unsigned seed, int jobs);

struct EtaRow {
    long n = 0;
    int omega = 0;
    std::string B;
    std::string exponent;  // (3^k-1)/(2k) - 1
    double eta = 0;
};

/// B_n for squarefree n <= maxN within the subset limit: divisor-height
/// invariants, the Kaplan product inequality, and the eta table.
SuiteReport run_kaplan(long maxN, long subsetLimit, int jobs, std::vector<EtaRow>* etaTable);

}  // namespace cyclotome

#endif
