#include "cyclotome/decomp.hpp"

#include <algorithm>
#include <utility>

#include "cyclotome/errors.hpp"

namespace cyclotome {

namespace {

void require_admissible(const CyclotomicIndex& index, int min_omega) {
    if (!index.odd || !index.squarefree || index.omega < min_omega)
        throw NotAdmissible("index must be odd, squarefree, with omega >= " +
                            std::to_string(min_omega) + " (n = " + std::to_string(index.n) + ")");
}

// modular inverse for prime modulus
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        const std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    return t < 0 ? t + p : t;
}

}  // namespace

BigInt sperner_bound(long t) {
    if (t < 0) throw std::invalid_argument("sperner_bound: negative t");
    return BigInt::binomial(static_cast<unsigned long>(t), static_cast<unsigned long>(t / 2));
}

DecompParts build_decomposition(const CyclotomicIndex& index) {
    require_admissible(index, 3);
    const long n = index.n;
    const int k = index.omega;
    const auto& p = index.primes;

    // fstar from the closed form: mod x^n the (1-x^n) factor drops, leaving
    // prod_{i=2..k} (1-x^{n/(p1 p_i)}) / prod_{i=1..k} (1-x^{n/p_i}).
    std::vector<BigInt> f(static_cast<std::size_t>(n));
    f[0] = BigInt(1);
    for (int i = 1; i < k; ++i)
        detail::mul_one_minus_pow(f, static_cast<std::size_t>(n / (p[0] * p[i])));
    for (int i = 0; i < k; ++i)
        detail::div_one_minus_pow(f, static_cast<std::size_t>(n / p[i]));

    DecompParts out;
    out.index = index;
    out.fstar = IntPoly(std::move(f));
    out.sperner = sperner_bound(k - 2);

    // P_j = prod_{i=j+2..k} Phi_{p_1..p_j}(x^{(p_{j+2}..p_k)/p_i})
    for (int j = 1; j <= k - 2; ++j) {
        long base_n = 1;
        for (int t = 0; t < j; ++t) base_n *= p[t];
        const IntPoly base = cyclotomic(base_n);
        long tail = 1;
        for (int t = j + 1; t < k; ++t) tail *= p[t];
        IntPoly pj = IntPoly::one();
        for (int i = j + 1; i < k; ++i)
            pj = mul(pj, substitute_power(base, static_cast<std::size_t>(tail / p[i])));
        out.parts.push_back(std::move(pj));
    }
    return out;
}

ChiTable::ChiTable(const CyclotomicIndex& index, std::size_t size) {
    require_admissible(index, 2);
    table_.assign(std::max<std::size_t>(size, 1), false);
    table_[0] = true;
    for (long prime : index.primes) {
        const std::size_t g = static_cast<std::size_t>(index.n / prime);
        for (std::size_t i = g; i < table_.size(); ++i)
            if (table_[i - g]) table_[i] = true;
    }
}

int chi(const CyclotomicIndex& index, long m) {
    if (m < 0) return 0;
    ChiTable table(index, static_cast<std::size_t>(m) + 1);
    return table(m);
}

DmEvaluator::DmEvaluator(const CyclotomicIndex& index)
    : index_(index), chi_((require_admissible(index, 3), index), static_cast<std::size_t>(index.n)) {
    for (int i = 1; i < index_.omega; ++i) {
        v_.push_back(index_.n / index_.primes[i]);
        v_over_p1_.push_back(index_.n / (index_.primes[0] * index_.primes[i]));
    }
}

long DmEvaluator::dm(long m) const {
    if (m < 0 || m >= index_.n) throw std::out_of_range("dm: m must lie in [0, n)");
    const int bits = index_.omega - 1;
    long sum = 0;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        std::int64_t arg = m;
        for (int i = 0; i < bits; ++i)
            if (mask >> i & 1u) arg -= v_over_p1_[i];
        if (arg >= 0 && chi_(arg)) sum += __builtin_popcount(mask) % 2 == 0 ? 1 : -1;
    }
    return sum;
}

LambdaCertificate DmEvaluator::certificate(long m) const {
    if (m < 0 || m >= index_.n) throw std::out_of_range("certificate: m must lie in [0, n)");
    const int bits = index_.omega - 1;  // coordinates 2..k
    const std::int64_t p1 = index_.primes[0];

    LambdaCertificate cert;
    cert.d_value = m;
    for (int i = 0; i < bits; ++i) {
        const std::int64_t pi = index_.primes[i + 1];
        const std::int64_t vi = v_[i];
        const std::int64_t vinv = inv_mod(vi % pi, pi);
        const std::int64_t a0 = (m % pi) * vinv % pi;
        std::int64_t a1 = ((m - v_over_p1_[i]) % pi) * vinv % pi;
        if (a1 < 0) a1 += pi;
        cert.d_value -= a0 * vi;
        // p1*u_i = v_i + p1*(alpha_i(1) - alpha_i(0))*v_i
        cert.u_times_p1.push_back(vi + p1 * (a1 - a0) * vi);
    }

    // Normalize so every u entry is nonnegative and the minimal one sits
    // last: flipping a coordinate (lambda_i -> 1-lambda_i) negates u_i and
    // shifts the threshold, preserving |d_m|. Ties for the minimum resolve
    // toward the largest original position.
    std::vector<std::int64_t> u = cert.u_times_p1;
    std::int64_t threshold = p1 * cert.d_value;
    for (auto& ui : u) {
        if (ui < 0) {
            threshold -= ui;
            ui = -ui;
        }
    }
    int last = 0;
    for (int i = 1; i < bits; ++i)
        if (u[i] <= u[last]) last = i;
    std::vector<int> free;
    for (int i = 0; i < bits; ++i)
        if (i != last) free.push_back(i);

    cert.normalized_u_times_p1 = u;
    std::rotate(cert.normalized_u_times_p1.begin() + last, cert.normalized_u_times_p1.begin() + last + 1,
                cert.normalized_u_times_p1.end());
    cert.normalized_threshold_times_p1 = threshold;

    // lambda = (free coordinates, 0); maximal iff it satisfies <lambda,u> <=
    // threshold and every one-coordinate extension violates it.
    const int fbits = static_cast<int>(free.size());
    for (unsigned mask = 0; mask < (1u << fbits); ++mask) {
        std::int64_t val = 0;
        for (int t = 0; t < fbits; ++t)
            if (mask >> t & 1u) val += u[free[t]];
        if (val > threshold) continue;
        bool maximal = true;
        for (int t = 0; t < fbits; ++t) {
            if (!(mask >> t & 1u) && val + u[free[t]] <= threshold) {
                maximal = false;
                break;
            }
        }
        if (maximal) ++cert.count;
    }
    return cert;
}

long dm_combinatorial(const CyclotomicIndex& index, long m) { return DmEvaluator(index).dm(m); }

LambdaCertificate maximal_lambda_certificate(const CyclotomicIndex& index, long m) {
    return DmEvaluator(index).certificate(m);
}

}  // namespace cyclotome
