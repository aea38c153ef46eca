#ifndef CYCLOTOME_HEIGHTS_HPP
#define CYCLOTOME_HEIGHTS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/cyclo.hpp"

namespace cyclotome {

/// Computed height statistics for one index n. C is absent only for n = 1
/// (Psi_1 has no unit-constant-term series); B and its witness are present
/// only when a divisor-height enumeration ran within its subset limit.
struct HeightRecord {
    long n = 1;
    int omega = 0;
    long phi = 1;
    BigInt A;                               // height of Phi_n
    BigInt S;                               // abs_sum of Phi_n
    std::optional<BigInt> C;                // max |c_n(m)| over one period
    std::optional<BigInt> B;                // max divisor height of x^n - 1
    std::optional<std::vector<long>> witnessSubset;  // divisor subset achieving B
    bool bOverLimit = false;                // enumeration skipped: 2^tau(n) > limit
};

/// A, S, C (no B). C uses one period of Psi_n, i.e. the coefficients of the
/// inverse cyclotomic polynomial; the fold property is covered by tests.
HeightRecord heights_of(long n);
HeightRecord heights_of(const CyclotomicIndex& index);

inline constexpr long kDefaultSubsetLimit = 1L << 16;

struct DivisorHeightResult {
    BigInt B;
    std::vector<long> witnessSubset;
};

/// Exact max of height(prod_{d in D} Phi_d) over all subsets D of the
/// divisors of n, with the lexicographically smallest witness among ties.
/// Requires squarefree n; throws TooManyDivisors when 2^tau(n) > limit.
DivisorHeightResult max_divisor_height(long n, long limit = kDefaultSubsetLimit);

struct ScanFilters {
    bool odd_only = false;
    bool squarefree_only = false;
    std::vector<int> omega;  // empty = any
    bool with_b = false;
    long subset_limit = kDefaultSubsetLimit;
};

/// Records for every n in [lo, hi] passing the filters, ascending in n
/// regardless of the worker count.
std::vector<HeightRecord> scan(long lo, long hi, const ScanFilters& filters, int jobs = 0);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads (0 = hardware).
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace cyclotome

#endif
