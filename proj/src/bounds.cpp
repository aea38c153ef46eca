#include "cyclotome/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cyclotome/decomp.hpp"
#include "cyclotome/errors.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

// ---------------------------------------------------------------- factored

FactoredRational FactoredRational::from_long(long v) {
    if (v <= 0) throw std::invalid_argument("FactoredRational: value must be positive");
    FactoredRational out;
    for (long p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        while (v % p == 0) {
            ++out.exp_[p];
            v /= p;
        }
    }
    if (v > 1) ++out.exp_[v];
    return out;
}

FactoredRational FactoredRational::from_rational(const Rational& r) {
    if (r.sign() <= 0) throw std::invalid_argument("FactoredRational: value must be positive");
    FactoredRational num = from_long(r.numerator().to_int64());
    FactoredRational den = from_long(r.denominator().to_int64());
    return num /= den;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    for (const auto& [p, e] : o.exp_) {
        const long long v = exp_[p] + e;
        if (v == 0)
            exp_.erase(p);
        else
            exp_[p] = v;
    }
    return *this;
}

FactoredRational& FactoredRational::operator/=(const FactoredRational& o) {
    for (const auto& [p, e] : o.exp_) {
        const long long v = exp_[p] - e;
        if (v == 0)
            exp_.erase(p);
        else
            exp_[p] = v;
    }
    return *this;
}

FactoredRational FactoredRational::pow(const FactoredRational& base, long long e) {
    FactoredRational out;
    if (e == 0) return out;
    for (const auto& [p, ex] : base.exp_) out.exp_[p] = ex * e;
    return out;
}

double FactoredRational::log() const {
    double s = 0;
    for (const auto& [p, e] : exp_) s += static_cast<double>(e) * std::log(static_cast<double>(p));
    return s;
}

double FactoredRational::expanded_bits() const {
    double s = 0;
    for (const auto& [p, e] : exp_)
        s += static_cast<double>(e < 0 ? -e : e) * std::log2(static_cast<double>(p));
    return s;
}

Rational FactoredRational::to_rational() const {
    if (expanded_bits() > 1 << 20)
        throw std::overflow_error("FactoredRational: too large to expand");
    BigInt num(1), den(1);
    for (const auto& [p, e] : exp_) {
        if (e > 0)
            num *= BigInt::pow(BigInt(p), static_cast<unsigned long>(e));
        else
            den *= BigInt::pow(BigInt(p), static_cast<unsigned long>(-e));
    }
    return Rational(num, den);
}

std::string FactoredRational::to_string() const {
    if (expanded_bits() <= 256) return to_rational().to_string();
    std::string num, den;
    for (const auto& [p, e] : exp_) {
        std::string& side = e > 0 ? num : den;
        if (!side.empty()) side += "*";
        side += std::to_string(p);
        const long long a = e > 0 ? e : -e;
        if (a != 1) side += "^" + std::to_string(a);
    }
    if (num.empty()) num = "1";
    return den.empty() ? num : num + " / " + den;
}

// ---------------------------------------------------------------- helpers

std::vector<long> odd_primes(std::size_t count) {
    std::vector<long> ps;
    for (long c = 3; ps.size() < count; c += 2) {
        bool prime = true;
        for (long p = 3; p * p <= c; p += 2)
            if (c % p == 0) {
                prime = false;
                break;
            }
        if (prime) ps.push_back(c);
    }
    return ps;
}

BigInt Mk(const std::vector<long>& primes) {
    const int k = static_cast<int>(primes.size());
    for (int i = 1; i < k; ++i)
        if (primes[i] <= primes[i - 1])
            throw std::invalid_argument("Mk: primes must be strictly ascending");
    BigInt m(1);
    for (int i = 1; i <= k - 2; ++i)
        m *= BigInt::pow(BigInt(primes[i - 1]), (1UL << (k - i - 1)) - 1);
    return m;
}

// ---------------------------------------------------------------- checks

namespace {

BoundCheck make_check(std::string name, const BigInt& value, Rational bound) {
    BoundCheck c;
    c.name = std::move(name);
    c.value = value;
    c.slack = bound - Rational(value, BigInt(1));
    c.bound = std::move(bound);
    c.satisfied = c.slack.sign() >= 0;
    return c;
}

BoundCheck make_equality(std::string name, const BigInt& value, long expected) {
    BoundCheck c;
    c.name = std::move(name);
    c.value = value;
    c.bound = Rational(expected);
    c.slack = c.bound - Rational(value, BigInt(1));
    c.satisfied = value == BigInt(expected);
    return c;
}

}  // namespace

std::vector<BoundCheck> check_small_orders(const HeightRecord& record, const Rational& eps3) {
    const Rational d = eps3 * (Rational(2) - eps3) / Rational(2);
    return check_small_orders(record, eps3, d);
}

std::vector<BoundCheck> check_small_orders(const HeightRecord& record, const Rational& eps3,
                                           const Rational& d) {
    const CyclotomicIndex idx = analyze(record.n);
    std::vector<BoundCheck> out;
    if (!idx.odd || !idx.squarefree || idx.omega < 1 || idx.omega > 6) return out;

    const Rational p(idx.primes[0]);
    const Rational mk(Mk(idx.primes), BigInt(1));
    const Rational e5 = Rational(3, 4) * eps3 * d;
    const Rational e6 = Rational(3, 4) * Rational::pow(eps3, 3) * Rational::pow(d, 2);

    switch (idx.omega) {
        case 1:
            out.push_back(make_equality("A_p=1", record.A, 1));
            if (record.C) out.push_back(make_equality("C_p=1", *record.C, 1));
            break;
        case 2:
            out.push_back(make_equality("A_pq=1", record.A, 1));
            if (record.C) out.push_back(make_equality("C_pq=1", *record.C, 1));
            break;
        case 3:
            out.push_back(make_check("A_pqr<=eps3*p", record.A, eps3 * p));
            if (record.C) out.push_back(make_check("C_pqr<=p-1", *record.C, p - Rational(1)));
            break;
        case 4:
            out.push_back(make_check("A_pqrs<=eps3*M4", record.A, eps3 * mk));
            if (record.C) out.push_back(make_check("C_pqrs<=eps3*M4", *record.C, eps3 * mk));
            break;
        case 5:
            out.push_back(make_check("A_pqrst<=e5*M5", record.A, e5 * mk));
            if (record.C)
                out.push_back(make_check("C_pqrst<=eps3^2*M5", *record.C, Rational::pow(eps3, 2) * mk));
            break;
        case 6:
            out.push_back(make_check("A_pqrstu<=e6*M6", record.A, e6 * mk));
            if (record.C)
                out.push_back(make_check("C_pqrstu<=inv6*M6", *record.C,
                                         Rational(3, 4) * Rational::pow(eps3, 3) * d * mk));
            break;
        default:
            break;
    }
    return out;
}

BloomCheck bloom_pointwise(const CyclotomicIndex& index, long m) {
    if (!index.odd || !index.squarefree || index.omega != 3)
        throw NotAdmissible("bloom_pointwise: n must be an odd squarefree pqr");
    const IntPoly phi = cyclotomic(index);
    if (m < 0 || m > index.totient) throw std::out_of_range("bloom_pointwise: m outside [0, phi(n)]");
    const long qr = index.n / index.primes[0];
    BloomCheck c;
    c.value = phi.coeff(static_cast<std::size_t>(m)).abs();
    c.bound = 2 * (m / qr + 1);
    c.symmetry_ok = c.value == phi.coeff(static_cast<std::size_t>(index.totient - m)).abs();
    c.bound_ok = c.value <= BigInt(c.bound);
    c.ok = c.symmetry_ok && c.bound_ok;
    return c;
}

std::vector<long> bloom_violations(const CyclotomicIndex& index, const IntPoly& phi) {
    const long qr = index.n / index.primes[0];
    std::vector<long> bad;
    for (long m = 0; m <= index.totient; ++m) {
        const BigInt a = phi.coeff(static_cast<std::size_t>(m)).abs();
        if (a != phi.coeff(static_cast<std::size_t>(index.totient - m)).abs() ||
            a > BigInt(2 * (m / qr + 1)))
            bad.push_back(m);
    }
    return bad;
}

EmpiricalD empirical_d(long primeBound) {
    if (primeBound < 7) throw std::invalid_argument("empirical_d: prime bound must be >= 7");
    std::vector<long> ps;
    for (long c = 3; c <= primeBound; c += 2) {
        bool prime = true;
        for (long p = 3; p * p <= c; p += 2)
            if (c % p == 0) prime = false;
        if (prime) ps.push_back(c);
    }
    EmpiricalD best;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            for (std::size_t t = j + 1; t < ps.size(); ++t) {
                const long p = ps[i], q = ps[j], r = ps[t];
                const BigInt S = abs_sum(cyclotomic(p * q * r));
                Rational val(S, BigInt(p) * BigInt(p) * BigInt(q) * BigInt(r));
                if (val > best.value) {
                    best.value = std::move(val);
                    best.witness = {p, q, r};
                }
            }
    return best;
}

// ---------------------------------------------------------------- enclosures

namespace {

constexpr mpfr_prec_t kPrec = 192;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

Enclosure finish(mpfr_t lo, mpfr_t hi) {
    Enclosure e;
    e.lo = mpfr_get_d(lo, MPFR_RNDD);
    e.hi = mpfr_get_d(hi, MPFR_RNDU);
    e.lo_str = format_double(e.lo);
    e.hi_str = format_double(e.hi);
    return e;
}

// log of a positive rational with directed rounding
void log_of_rational(mpfr_t out, long num, long den, mpfr_rnd_t rnd) {
    mpfr_t x;
    mpfr_init2(x, kPrec);
    mpfr_set_si(x, num, rnd);
    mpfr_div_si(x, x, den, rnd);
    mpfr_log(out, x, rnd);
    mpfr_clear(x);
}

void mpfr_from_rational(mpfr_t out, const Rational& r, mpfr_rnd_t rnd) {
    mpq_t q;
    mpq_init(q);
    r.numerator().assign_to(mpq_numref(q));
    r.denominator().assign_to(mpq_denref(q));
    mpq_canonicalize(q);
    mpfr_set_q(out, q, rnd);
    mpq_clear(q);
}

}  // namespace

Enclosure rho_enclosure(double tolerance) {
    if (!(tolerance > 0)) throw std::invalid_argument("rho_enclosure: tolerance must be positive");
    // tail of sum_i 2^-i log((2i+5)/(2i+6)) past I lies in [-2^-I/(2I+7), 0]
    long I = 16;
    while (std::ldexp(1.0, -static_cast<int>(I)) / (2 * I + 7) > tolerance / 8 && I < 200) ++I;

    mpfr_t slo, shi, term;
    mpfr_init2(slo, kPrec);
    mpfr_init2(shi, kPrec);
    mpfr_init2(term, kPrec);
    mpfr_set_zero(slo, 0);
    mpfr_set_zero(shi, 0);
    for (long i = 0; i <= I; ++i) {
        log_of_rational(term, 2 * i + 5, 2 * i + 6, MPFR_RNDD);
        mpfr_div_2ui(term, term, static_cast<unsigned long>(i), MPFR_RNDD);
        mpfr_add(slo, slo, term, MPFR_RNDD);
        log_of_rational(term, 2 * i + 5, 2 * i + 6, MPFR_RNDU);
        mpfr_div_2ui(term, term, static_cast<unsigned long>(i), MPFR_RNDU);
        mpfr_add(shi, shi, term, MPFR_RNDU);
    }
    // lower end absorbs the (negative) tail bound
    mpfr_set_si(term, 1, MPFR_RNDU);
    mpfr_div_2ui(term, term, static_cast<unsigned long>(I), MPFR_RNDU);
    mpfr_div_si(term, term, 2 * I + 7, MPFR_RNDU);
    mpfr_sub(slo, slo, term, MPFR_RNDD);
    mpfr_exp(slo, slo, MPFR_RNDD);
    mpfr_exp(shi, shi, MPFR_RNDU);
    Enclosure e = finish(slo, shi);
    mpfr_clear(slo);
    mpfr_clear(shi);
    mpfr_clear(term);
    return e;
}

Enclosure constant_C(const Rational& eps3, const Rational& d, double tolerance) {
    if (eps3.sign() <= 0 || eps3 > Rational(1))
        throw std::invalid_argument("constant_C: eps3 must lie in (0, 1]");
    if (d.sign() <= 0 || d >= Rational(1))
        throw std::invalid_argument("constant_C: d must lie in (0, 1)");
    if (!(tolerance > 0)) throw std::invalid_argument("constant_C: tolerance must be positive");
    const Enclosure rho = rho_enclosure(tolerance / 16);

    // base = (3/4) eps3^(3/2) d rho^(1/4); C = base^(1/32); all factors
    // positive and the maps monotone, so the ends propagate directly.
    auto eval = [&](mpfr_rnd_t rnd, double rho_end, mpfr_t out) {
        mpfr_t x, acc;
        mpfr_init2(x, kPrec);
        mpfr_init2(acc, kPrec);
        mpfr_set_si(acc, 3, rnd);
        mpfr_div_si(acc, acc, 4, rnd);
        mpfr_from_rational(x, eps3, rnd);
        mpfr_rootn_ui(x, x, 2, rnd);  // eps3^(1/2)
        mpfr_mul(acc, acc, x, rnd);
        mpfr_from_rational(x, eps3, rnd);
        mpfr_mul(acc, acc, x, rnd);  // * eps3 -> eps3^(3/2) total
        mpfr_from_rational(x, d, rnd);
        mpfr_mul(acc, acc, x, rnd);
        mpfr_set_d(x, rho_end, rnd);
        mpfr_rootn_ui(x, x, 4, rnd);
        mpfr_mul(acc, acc, x, rnd);
        mpfr_rootn_ui(out, acc, 32, rnd);
        mpfr_clear(x);
        mpfr_clear(acc);
    };
    mpfr_t lo, hi;
    mpfr_init2(lo, kPrec);
    mpfr_init2(hi, kPrec);
    eval(MPFR_RNDD, rho.lo, lo);
    eval(MPFR_RNDU, rho.hi, hi);
    Enclosure e = finish(lo, hi);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return e;
}

// ---------------------------------------------------------------- e-sequence

namespace {

FactoredRational central_binomial_factored(long t) {
    return FactoredRational::from_rational(Rational(sperner_bound(t), BigInt(1)));
}

}  // namespace

ESequence e_sequence(int kMax, const Rational& eps3, const Rational& d) {
    if (kMax < 5) throw std::invalid_argument("e_sequence: kMax must be >= 5");
    ESequence seq;
    seq.kMax = kMax;
    seq.e.resize(kMax + 1);
    seq.via_recursion.resize(kMax + 1);
    seq.log_e_over_2k.resize(kMax + 1, 0.0);

    const FactoredRational feps = FactoredRational::from_rational(eps3);
    const FactoredRational fd = FactoredRational::from_rational(d);
    const FactoredRational two = FactoredRational::from_long(2);
    seq.e[1] = FactoredRational();
    seq.e[2] = FactoredRational();
    seq.e[3] = feps;
    seq.e[4] = feps;
    for (int k = 5; k <= kMax; ++k) {
        FactoredRational acc = central_binomial_factored(k - 2);
        acc *= FactoredRational::pow(fd, k - 4);
        acc /= FactoredRational::pow(two, k - 3);
        for (int j = 1; j <= k - 2; ++j) acc *= FactoredRational::pow(seq.e[j], k - j - 1);
        seq.e[k] = std::move(acc);
    }
    for (int k = 7; k <= kMax; ++k) {
        FactoredRational r = central_binomial_factored(k - 2) * central_binomial_factored(k - 4) /
                             (central_binomial_factored(k - 3) * central_binomial_factored(k - 3));
        seq.via_recursion[k] = FactoredRational::pow(seq.e[k - 1], 2) * r;
        if (!(seq.via_recursion[k] == seq.e[k])) seq.recursion_exact = false;
        const FactoredRational expected =
            k % 2 == 1 ? FactoredRational::from_long(k - 2) / FactoredRational::from_long(k - 1)
                       : FactoredRational::from_long(k - 2) / FactoredRational::from_long(k - 3);
        if (!(r == expected)) seq.ratio_identity_exact = false;
    }
    for (int k = 1; k <= kMax; ++k)
        seq.log_e_over_2k[k] = seq.e[k].log() / std::ldexp(1.0, k);
    return seq;
}

InvEpsilonChain inv_epsilon_chain(int kMax, const Rational& eps3, const Rational& d) {
    if (kMax < 4) throw std::invalid_argument("inv_epsilon_chain: kMax must be >= 4");
    InvEpsilonChain chain;
    chain.kMax = kMax;
    chain.bound.resize(kMax + 1);
    const ESequence seq = e_sequence(std::max(kMax, 5), eps3, d);
    FactoredRational running = seq.e[2];  // prod_{j=2..k-1} e_j
    for (int k = 4; k <= kMax; ++k) {
        running *= seq.e[k - 1];
        chain.bound[k] = running;
    }
    const FactoredRational two_over_d =
        FactoredRational::from_long(2) / FactoredRational::from_rational(d);
    chain.variant_identity_holds = true;
    for (int k = 6; k <= kMax; ++k) {
        const FactoredRational corrected =
            two_over_d * central_binomial_factored(k - 3) / central_binomial_factored(k - 2) * seq.e[k];
        if (!(chain.bound[k] == corrected)) chain.corrected_identity_exact = false;
        const FactoredRational printed =
            central_binomial_factored(k - 2) / central_binomial_factored(k - 3) * seq.e[k];
        if (!(chain.bound[k] == printed)) chain.variant_identity_holds = false;
    }
    if (kMax >= 6) {
        const Rational chain_k6 = Rational(3, 4) * Rational::pow(eps3, 3) * d;
        std::string note =
            "inverse bound at k=6: the chain gives (3/4)eps3^3*d = " + chain_k6.to_string();
        if (eps3 == Rational(3, 4))
            note += "; the variant constant 10935/131072 disagrees here (flagged, not a failure)";
        else
            note += "; the variant constant agrees at eps3 = " + eps3.to_string();
        chain.notes.push_back(std::move(note));
        chain.notes.push_back(
            "chain identity: prod e_2..e_{k-1} equals (2/d)(b_{k-3}/b_{k-2}) e_k exactly; the "
            "variant (b_{k-2}/b_{k-3}) e_k does not hold at these parameters");
    }
    return chain;
}

TrendCheck e_trend_check(const ESequence& seq, const Enclosure& c) {
    TrendCheck t;
    const double logC = std::log((c.lo + c.hi) / 2);
    t.gap.assign(seq.kMax + 1, 0.0);
    if (seq.kMax < 8) return t;  // too short for a trend
    for (int k = 5; k <= seq.kMax; ++k) {
        t.gap[k] = seq.log_e_over_2k[k] - logC;
        if (t.gap[k] <= 0) t.gap_positive = false;
    }
    for (int k = 7; k <= seq.kMax; ++k)
        if (t.gap[k] > t.gap[6]) t.never_exceeds_initial = false;
    for (int k = 8; k <= seq.kMax; ++k)
        if (std::abs(t.gap[k] - t.gap[k - 1]) >= std::abs(t.gap[k - 1] - t.gap[k - 2]))
            t.steps_shrink = false;
    return t;
}

// ---------------------------------------------------------------- theorems

PhiTheoremCheck theorem_phi_check(const std::vector<long>& primes) {
    const int k = static_cast<int>(primes.size());
    if (k < 1) throw std::invalid_argument("theorem_phi_check: empty tuple");
    PhiTheoremCheck c;
    c.mk = Mk(primes);
    BigInt phi(1);
    for (long p : primes) phi *= BigInt(p - 1);
    c.lhs = BigInt::pow(c.mk, static_cast<unsigned long>(k));
    // 2^(k-1) >= k for every k >= 1, so the cross-multiplied exponent is
    // a nonnegative integer.
    const unsigned long exp = (1UL << (k - 1)) - static_cast<unsigned long>(k);
    c.rhs = BigInt::pow(phi, exp);
    c.ok = c.lhs <= c.rhs;
    return c;
}

KaplanComparison kaplan_compare(const HeightRecord& record) {
    if (!record.B) throw std::invalid_argument("kaplan_compare: record has no B");
    const CyclotomicIndex idx = analyze(record.n);
    if (!idx.squarefree) throw NotAdmissible("kaplan_compare: n must be squarefree");
    const int k = idx.omega;
    KaplanComparison c;
    // eta scaling exponent (3^k - 1)/(2k) - 1; for n = 1 (k = 0) the
    // scaling is empty and eta is just B itself
    if (k == 0) {
        c.etaExponent = Rational(0);
        c.etaObserved = record.B->to_double();
        return c;
    }
    BigInt three_k = BigInt::pow(BigInt(3), static_cast<unsigned long>(k));
    c.etaExponent = Rational(three_k - BigInt(1), BigInt(2L * k)) - Rational(1);
    c.etaObserved = record.B->to_double() /
                    std::exp(c.etaExponent.to_double() * std::log(static_cast<double>(record.n)));
    if (k >= 2) {
        unsigned long exp = 4;
        for (int i = 0; i < k - 2; ++i) exp *= 3;
        exp -= 1;  // 4*3^(k-2) - 1
        BigInt bound(1);
        for (int j = 0; j < k - 1; ++j) bound *= BigInt::pow(BigInt(idx.primes[j]), exp);
        c.ok = *record.B < bound;
        c.kaplanBound = std::move(bound);
    }
    return c;
}

LowerBoundC lower_bound_C(int kMax) {
    if (kMax < 5) throw std::invalid_argument("lower_bound_C: kMax must be >= 5");
    LowerBoundC out;
    out.printed_form_note =
        "the text prints C+o(1) >= M_k^(-2^k) with limit prod p_j^(-2^(3-j)); the exponents "
        "consistent with eps_k >= 1/M_k are -2^(-k) and -2^(-j-1), which is what is computed";

    // limit = exp(-sum_j 2^(-j-1) log p_j); p_j < 2^(j+1) caps the tail.
    const long J = std::max(48, kMax);
    const std::vector<long> ps = odd_primes(static_cast<std::size_t>(J));
    mpfr_t slo, shi, term;
    mpfr_init2(slo, kPrec);
    mpfr_init2(shi, kPrec);
    mpfr_init2(term, kPrec);
    mpfr_set_zero(slo, 0);
    mpfr_set_zero(shi, 0);
    for (long j = 1; j <= J; ++j) {
        mpfr_set_si(term, ps[j - 1], MPFR_RNDD);
        mpfr_log(term, term, MPFR_RNDD);
        mpfr_div_2ui(term, term, static_cast<unsigned long>(j + 1), MPFR_RNDD);
        mpfr_add(slo, slo, term, MPFR_RNDD);
        mpfr_set_si(term, ps[j - 1], MPFR_RNDU);
        mpfr_log(term, term, MPFR_RNDU);
        mpfr_div_2ui(term, term, static_cast<unsigned long>(j + 1), MPFR_RNDU);
        mpfr_add(shi, shi, term, MPFR_RNDU);
    }
    // tail <= sum_{j>J} 2^(-j-1) (j+1) log 2 = (J+3) 2^(-J-1) log 2
    mpfr_const_log2(term, MPFR_RNDU);
    mpfr_mul_si(term, term, J + 3, MPFR_RNDU);
    mpfr_div_2ui(term, term, static_cast<unsigned long>(J + 1), MPFR_RNDU);
    mpfr_add(shi, shi, term, MPFR_RNDU);
    // limit in [exp(-shi), exp(-slo)]
    mpfr_neg(shi, shi, MPFR_RNDD);
    mpfr_neg(slo, slo, MPFR_RNDU);
    mpfr_exp(shi, shi, MPFR_RNDD);
    mpfr_exp(slo, slo, MPFR_RNDU);
    out.limit = finish(shi, slo);
    mpfr_clear(slo);
    mpfr_clear(shi);
    mpfr_clear(term);

    out.mk_sequence.assign(kMax + 1, 1.0);
    for (int k = 2; k <= kMax; ++k) {
        double logm = 0;
        for (int i = 1; i <= k - 2; ++i)
            logm += (std::ldexp(1.0, k - i - 1) - 1) * std::log(static_cast<double>(ps[i - 1]));
        out.mk_sequence[k] = std::exp(-logm / std::ldexp(1.0, k));
    }
    // exact strict decrease: M_k^2 < M_{k+1} in integers
    const int cap = std::min(kMax, 20);
    BigInt prev = Mk(std::vector<long>(ps.begin(), ps.begin() + 2));
    for (int k = 2; k <= cap; ++k) {
        BigInt next = Mk(std::vector<long>(ps.begin(), ps.begin() + k + 1));
        if (!(prev * prev < next)) out.monotone_exact = false;
        prev = std::move(next);
    }
    return out;
}

ConstantsReport compute_constants(const Rational& eps3, const std::optional<Rational>& d,
                                  long primeBox, double tolerance, int kMax) {
    ConstantsReport rep;
    rep.eps3 = eps3;
    rep.d_upper = eps3 * (Rational(2) - eps3) / Rational(2);
    rep.d_was_auto = !d.has_value();
    rep.d_used = d.value_or(rep.d_upper);
    rep.prime_box = primeBox;
    rep.d_empirical = empirical_d(primeBox);
    rep.rho = rho_enclosure(tolerance);
    rep.C = constant_C(eps3, rep.d_used, tolerance);
    rep.eseq = e_sequence(kMax, eps3, rep.d_used);
    rep.trend = e_trend_check(rep.eseq, rep.C);
    rep.inv = inv_epsilon_chain(kMax, eps3, rep.d_used);
    rep.lower = lower_bound_C(std::max(kMax, 20));

    const std::vector<long> ps = odd_primes(12);
    for (int k = 3; k <= 10; ++k)
        rep.mk_samples.emplace_back(k, Mk(std::vector<long>(ps.begin(), ps.begin() + k)).to_string());

    const Rational e6_formula = Rational(3, 4) * Rational::pow(eps3, 3) * Rational::pow(rep.d_used, 2);
    const Rational e6_variant = Rational(9, 16) * Rational::pow(eps3, 3) * Rational::pow(rep.d_used, 2);
    rep.notes.push_back("e_6: the product formula gives (3/4)eps3^3 d^2 = " +
                        e6_formula.to_string() +
                        ", consistent with the sixth-order height constant; the variant "
                        "(9/16)eps3^3 d^2 = " +
                        e6_variant.to_string() + " is flagged as inconsistent");
    for (const std::string& n : rep.inv.notes) rep.notes.push_back(n);
    rep.notes.push_back(rep.lower.printed_form_note);
    return rep;
}

}  // namespace cyclotome
