#ifndef CYCLOTOME_DECOMP_HPP
#define CYCLOTOME_DECOMP_HPP

#include <cstdint>
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/cyclo.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

/// Central binomial coefficient binom(t, floor(t/2)).
BigInt sperner_bound(long t);

/// The factorization Phi_n === fstar * prod(parts) (mod x^n) for odd
/// squarefree n with omega >= 3, together with the Sperner height bound on
/// fstar.
struct DecompParts {
    CyclotomicIndex index;
    IntPoly fstar;               // degree < n
    std::vector<IntPoly> parts;  // P_1 .. P_{k-2}
    BigInt sperner;              // b_{k-2}
};

/// Throws NotAdmissible unless index is odd, squarefree, omega >= 3.
DecompParts build_decomposition(const CyclotomicIndex& index);

/// Membership table for the numerical semigroup generated by {n/p_i}.
/// Immutable after construction and shareable across threads.
class ChiTable {
  public:
    ChiTable(const CyclotomicIndex& index, std::size_t size);
    /// 1 iff m is a nonnegative integer combination of the generators;
    /// negative m gives 0. m must be below the table size.
    int operator()(long m) const { return m >= 0 && table_[static_cast<std::size_t>(m)] ? 1 : 0; }
    std::size_t size() const { return table_.size(); }

  private:
    std::vector<bool> table_;
};

/// One-off representability query; builds a table up to m+1 internally.
int chi(const CyclotomicIndex& index, long m);

/// Certificate data for one coefficient: the number of maximal lambda
/// vectors bounds |d_m|, and Sperner's theorem bounds the count.
struct LambdaCertificate {
    long count = 0;
    std::vector<std::int64_t> u_times_p1;  // p1*u_i, index order i = 2..k
    std::int64_t d_value = 0;              // D = m - <alpha(0), v>
    // Sign-normalized data actually used for the maximality enumeration:
    // all entries nonnegative, minimal entry moved last (ties toward the
    // larger original position), threshold scaled by p1.
    std::vector<std::int64_t> normalized_u_times_p1;
    std::int64_t normalized_threshold_times_p1 = 0;
};

/// Per-index evaluator for the combinatorial coefficient formula of fstar.
/// Construction costs O(n * omega); each query is O(2^omega).
class DmEvaluator {
  public:
    explicit DmEvaluator(const CyclotomicIndex& index);

    /// d_m = sum over lambda of s(lambda) * chi(m - <lambda, v/p1>),
    /// equal to the coefficient of x^m in fstar; m in [0, n).
    long dm(long m) const;

    /// Maximal-lambda count certificate at m; |dm(m)| <= count <= b_{k-2}.
    LambdaCertificate certificate(long m) const;

    const CyclotomicIndex& index() const { return index_; }
    const ChiTable& chi_table() const { return chi_; }

  private:
    CyclotomicIndex index_;
    ChiTable chi_;
    std::vector<std::int64_t> v_;          // n/p_i, i = 2..k
    std::vector<std::int64_t> v_over_p1_;  // n/(p1 p_i), i = 2..k
};

/// One-off wrappers over DmEvaluator (construction cost per call).
long dm_combinatorial(const CyclotomicIndex& index, long m);
LambdaCertificate maximal_lambda_certificate(const CyclotomicIndex& index, long m);

}  // namespace cyclotome

#endif
