#include "cyclotome/cyclo.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclotome/errors.hpp"

namespace cyclotome {

CyclotomicIndex analyze(long n) {
    if (n < 1) throw std::invalid_argument("analyze: n must be positive");
    CyclotomicIndex idx;
    idx.n = n;
    idx.odd = n % 2 != 0;
    long m = n;
    for (long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int mult = 0;
        while (m % p == 0) {
            m /= p;
            ++mult;
        }
        idx.primes.push_back(p);
        if (mult > 1) idx.squarefree = false;
    }
    if (m > 1) idx.primes.push_back(m);
    idx.omega = static_cast<int>(idx.primes.size());
    idx.totient = n;
    idx.kernel = 1;
    for (long p : idx.primes) {
        idx.totient = idx.totient / p * (p - 1);
        idx.kernel *= p;
    }
    return idx;
}

std::vector<long> divisors_of(const CyclotomicIndex& index) {
    std::vector<long> ds{1};
    long m = index.n;
    for (long p : index.primes) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        const std::size_t base = ds.size();
        long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int mobius(long m) {
    CyclotomicIndex idx = analyze(m);
    if (!idx.squarefree) return 0;
    return idx.omega % 2 == 0 ? 1 : -1;
}

namespace detail {

void mul_one_minus_pow(std::vector<BigInt>& a, std::size_t e) {
    if (e >= a.size()) return;
    for (std::size_t i = a.size(); i-- > e;) a[i] -= a[i - e];
}

void div_one_minus_pow(std::vector<BigInt>& a, std::size_t e) {
    if (e >= a.size()) return;
    for (std::size_t i = e; i < a.size(); ++i) a[i] += a[i - e];
}

// prod over divisors d of index.n of (1 - x^d)^{sign * mu(n/d)}, truncated to
// `length` coefficients. skip_n drops the d = n factor.
std::vector<BigInt> binomial_chain(const CyclotomicIndex& index, std::size_t length, int sign,
                                   bool skip_n) {
    std::vector<BigInt> a(length);
    a[0] = BigInt(1);
    std::vector<std::size_t> muls, divs;
    for (long d : divisors_of(index)) {
        if (skip_n && d == index.n) continue;
        const int mu = mobius(index.n / d) * sign;
        if (mu == 1)
            muls.push_back(static_cast<std::size_t>(d));
        else if (mu == -1)
            divs.push_back(static_cast<std::size_t>(d));
    }
    for (std::size_t e : muls) mul_one_minus_pow(a, e);
    for (std::size_t e : divs) div_one_minus_pow(a, e);
    return a;
}

}  // namespace detail

IntPoly cyclotomic(const CyclotomicIndex& index) {
    if (index.n == 1) return IntPoly({-1, 1});
    return IntPoly(detail::binomial_chain(index, static_cast<std::size_t>(index.totient) + 1,
                                          /*sign=*/1, /*skip_n=*/false));
}

IntPoly cyclotomic(long n) { return cyclotomic(analyze(n)); }

IntPoly cyclotomic_via_recursion(const CyclotomicIndex& index) {
    if (index.n < 2) throw std::invalid_argument("cyclotomic_via_recursion: n must be >= 2");
    IntPoly f({-1, 1});  // Phi_1
    for (long p : index.primes)
        f = div_exact(substitute_power(f, static_cast<std::size_t>(p)), f);
    const long dilation = index.n / index.kernel;
    if (dilation > 1) f = substitute_power(f, static_cast<std::size_t>(dilation));
    return f;
}

SeriesPrefix psi_prefix(long n, std::size_t N) {
    if (n < 2) throw std::invalid_argument("psi_prefix: n must be >= 2");
    return series_inverse(cyclotomic(n), N);
}

IntPoly inverse_cyclotomic(const CyclotomicIndex& index) {
    if (index.n < 2) throw std::invalid_argument("inverse_cyclotomic: n must be >= 2");
    const std::size_t length = static_cast<std::size_t>(index.n - index.totient) + 1;
    // (1-x^n)/Phi_n = prod_{d|n, d<n} (1-x^d)^{-mu(n/d)}
    return IntPoly(detail::binomial_chain(index, length, /*sign=*/-1, /*skip_n=*/true));
}

IntPoly inverse_cyclotomic(long n) { return inverse_cyclotomic(analyze(n)); }

}  // namespace cyclotome
