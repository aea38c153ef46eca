#ifndef CYCLOTOME_BOUNDS_HPP
#define CYCLOTOME_BOUNDS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/cyclo.hpp"
#include "cyclotome/heights.hpp"
#include "cyclotome/rational.hpp"

namespace cyclotome {

/// Positive rational kept as a prime-exponent map. The e-sequence shrinks
/// like C^(2^k); at k = 40 its expanded numerator would need terabytes, in
/// factored form the exact arithmetic stays trivial.
class FactoredRational {
  public:
    FactoredRational() = default;  // value 1

    static FactoredRational from_long(long v);
    /// Factors numerator and denominator by trial division; the value must
    /// be positive and have word-sized parts.
    static FactoredRational from_rational(const Rational& r);

    FactoredRational& operator*=(const FactoredRational& o);
    FactoredRational& operator/=(const FactoredRational& o);
    friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
    friend FactoredRational operator/(FactoredRational a, const FactoredRational& b) { return a /= b; }
    static FactoredRational pow(const FactoredRational& base, long long e);

    friend bool operator==(const FactoredRational& a, const FactoredRational& b) {
        return a.exp_ == b.exp_;
    }

    double log() const;
    /// Bits the expanded numerator+denominator would take.
    double expanded_bits() const;
    /// Exact conversion; throws when expanded_bits() is impractical.
    Rational to_rational() const;
    /// "3^6*5^2 / 2^18" (or the plain value when small).
    std::string to_string() const;

    const std::map<long, long long>& exponents() const { return exp_; }

  private:
    std::map<long, long long> exp_;
};

/// M_k = prod_{i=1..k-2} p_i^{2^{k-i-1}-1}; empty product for k <= 2.
BigInt Mk(const std::vector<long>& primes);

/// The first `count` odd primes 3, 5, 7, ...
std::vector<long> odd_primes(std::size_t count);

// ---- per-record inequality checks ----

struct BoundCheck {
    std::string name;
    bool satisfied = true;
    BigInt value;     // the measured height statistic
    Rational bound;   // the right-hand side, exact
    Rational slack;   // bound - value
};

/// Evaluates every printed small-order bound applicable to the record's
/// omega (1..6). d defaults to the ternary-sum upper bound eps3(2-eps3)/2.
std::vector<BoundCheck> check_small_orders(const HeightRecord& record, const Rational& eps3);
std::vector<BoundCheck> check_small_orders(const HeightRecord& record, const Rational& eps3,
                                           const Rational& d);

struct BloomCheck {
    bool ok = true;
    bool symmetry_ok = true;
    bool bound_ok = true;
    BigInt value;  // |a_n(m)|
    long bound = 0;  // 2*(floor(m/(q*r)) + 1)
};

/// Coefficient symmetry and the pointwise bound at one m for ternary n.
BloomCheck bloom_pointwise(const CyclotomicIndex& index, long m);
/// Same checks against an already-built Phi_n; m's with a failed check.
std::vector<long> bloom_violations(const CyclotomicIndex& index, const IntPoly& phi);

struct EmpiricalD {
    Rational value;
    std::array<long, 3> witness{0, 0, 0};
};

/// Exact max of S_pqr/(p^2 q r) over odd primes p < q < r <= primeBound.
EmpiricalD empirical_d(long primeBound);

// ---- rigorous enclosures ----

struct Enclosure {
    double lo = 0;
    double hi = 0;
    std::string lo_str;
    std::string hi_str;
    double width() const { return hi - lo; }
};

/// Encloses rho = prod_{i>=0} ((2i+5)/(2i+6))^(1/2^i) within `tolerance`.
Enclosure rho_enclosure(double tolerance);

/// Encloses C = ((3/4) eps3^(3/2) d rho^(1/4))^(1/32) with directed rounding.
Enclosure constant_C(const Rational& eps3, const Rational& d, double tolerance);

// ---- e-sequence, inverse chain, trend ----

struct ESequence {
    int kMax = 0;
    std::vector<FactoredRational> e;              // e[1..kMax]; e[0] unused
    std::vector<FactoredRational> via_recursion;  // e_{k-1}^2 b_{k-2}b_{k-4}/b_{k-3}^2, k >= 7
    bool recursion_exact = true;                  // product formula == recursion, 7 <= k <= kMax
    bool ratio_identity_exact = true;  // b-ratio equals (i-2)/(i-1) odd i, (i-2)/(i-3) even i
    std::vector<double> log_e_over_2k;            // index k; trend data
};

/// e_1=e_2=1, e_3=e_4=eps3, then the central-binomial product formula. kMax >= 5.
ESequence e_sequence(int kMax, const Rational& eps3, const Rational& d);

struct InvEpsilonChain {
    int kMax = 0;
    std::vector<FactoredRational> bound;  // bound[4..kMax] = prod_{j=2..k-1} e_j
    bool corrected_identity_exact = true;  // prod = (2/d)(b_{k-3}/b_{k-2}) e_k, k >= 6
    bool variant_identity_holds = false;   // the (b_{k-2}/b_{k-3}) e_k variant
    std::vector<std::string> notes;
};

/// Inverse-height bound chain over the e-sequence. kMax >= 4.
InvEpsilonChain inv_epsilon_chain(int kMax, const Rational& eps3, const Rational& d);

struct TrendCheck {
    std::vector<double> gap;  // gap[k] = log(e_k)/2^k - log C(mid), k = 5..kMax
    bool gap_positive = true;          // sequence stays above log C
    bool never_exceeds_initial = true; // |gap_k| <= |gap_6| for k >= 7
    bool steps_shrink = true;          // |gap_k - gap_{k-1}| decreasing from k = 8
    bool ok() const { return gap_positive && never_exceeds_initial && steps_shrink; }
};

/// Formalization of "log e_k / 2^k monotonically approaches log C": the gap
/// stays one-sided, never re-attains its initial size, and the oscillation
/// amplitude strictly shrinks. The residual limit gap is the asymptotic
/// slack that is reported, never asserted.
TrendCheck e_trend_check(const ESequence& seq, const Enclosure& c);

// ---- theorem-level comparisons ----

struct PhiTheoremCheck {
    bool ok = false;
    BigInt mk;
    BigInt lhs;  // M_k^k
    BigInt rhs;  // phi(n)^(2^(k-1) - k)
};

/// M_k <= phi(n)^(k^-1 2^(k-1) - 1), compared exactly as M_k^k vs
/// phi(n)^(2^(k-1)-k).
PhiTheoremCheck theorem_phi_check(const std::vector<long>& primes);

struct KaplanComparison {
    std::optional<BigInt> kaplanBound;  // prod_{j<k} p_j^(4*3^(k-2)-1); k >= 2
    bool ok = true;                     // B_n < kaplanBound when present
    Rational etaExponent;             // (3^k-1)/(2k) - 1
    double etaObserved = 0;             // B_n / n^etaExponent; reported only
};

/// Requires record.B present and record.n squarefree.
KaplanComparison kaplan_compare(const HeightRecord& record);

struct LowerBoundC {
    Enclosure limit;                     // prod_j p_j^(-2^(-j-1)), j-th odd prime
    std::vector<double> mk_sequence;     // M_k^(-1/2^k) for k = 2..kMax
    bool monotone_exact = true;          // M_k^2 < M_{k+1} checked in integers, k <= 20
    std::string printed_form_note;
};

/// The section-5 lower-bound product in its exponent-corrected form
/// (the printed M_k^(-2^k) collapses to 0; see the note field). kMax >= 5.
LowerBoundC lower_bound_C(int kMax);

// ---- aggregate report ----

struct ConstantsReport {
    Rational eps3;
    Rational d_used;
    bool d_was_auto = true;
    Rational d_upper;  // eps3(2-eps3)/2
    EmpiricalD d_empirical;
    long prime_box = 0;
    Enclosure rho;
    Enclosure C;
    ESequence eseq;
    TrendCheck trend;
    InvEpsilonChain inv;
    LowerBoundC lower;
    std::vector<std::pair<int, std::string>> mk_samples;  // (k, M_k) over first odd primes
    std::vector<std::string> notes;
};

ConstantsReport compute_constants(const Rational& eps3, const std::optional<Rational>& d,
                                  long primeBox, double tolerance, int kMax);

}  // namespace cyclotome

#endif
