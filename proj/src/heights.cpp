#include "cyclotome/heights.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "cyclotome/errors.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

HeightRecord heights_of(const CyclotomicIndex& index) {
    HeightRecord rec;
    rec.n = index.n;
    rec.omega = index.omega;
    rec.phi = index.totient;
    const IntPoly phi = cyclotomic(index);
    rec.A = height(phi);
    rec.S = abs_sum(phi);
    if (index.n >= 2) rec.C = height(inverse_cyclotomic(index));
    return rec;
}

HeightRecord heights_of(long n) { return heights_of(analyze(n)); }

namespace {

struct SubsetSearch {
    const std::vector<long>* divisors = nullptr;
    std::vector<IntPoly> phis;  // aligned with *divisors
    BigInt best;
    std::vector<long> witness;
    std::vector<bool> chosen;

    void record(const IntPoly& product) {
        const BigInt h = height(product);
        const int cmp = h.compare(best);
        if (cmp < 0) return;
        std::vector<long> subset;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (chosen[i]) subset.push_back((*divisors)[i]);
        std::sort(subset.begin(), subset.end());
        if (cmp > 0 || subset < witness) {
            best = h;
            witness = std::move(subset);
        }
    }

    // Divisors are visited largest-first so the expensive factors sit near
    // the root and partial products are shared across the most leaves.
    void walk(std::size_t level, const IntPoly& product) {
        if (level == phis.size()) {
            record(product);
            return;
        }
        chosen[level] = true;
        walk(level + 1, mul(product, phis[level]));
        chosen[level] = false;
        walk(level + 1, product);
    }
};

}  // namespace

DivisorHeightResult max_divisor_height(long n, long limit) {
    const CyclotomicIndex index = analyze(n);
    if (!index.squarefree) throw NotAdmissible("max_divisor_height: n must be squarefree");
    std::vector<long> ds = divisors_of(index);
    if (ds.size() >= 63 || (1L << ds.size()) > limit)
        throw TooManyDivisors("max_divisor_height: 2^tau(n) exceeds the subset limit");

    SubsetSearch search;
    std::sort(ds.begin(), ds.end(), std::greater<>());
    search.divisors = &ds;
    for (long d : ds) search.phis.push_back(cyclotomic(d));
    search.chosen.assign(ds.size(), false);
    search.best = BigInt(1);  // empty subset: the constant divisor 1
    search.walk(0, IntPoly::one());

    std::sort(ds.begin(), ds.end());
    return DivisorHeightResult{std::move(search.best), std::move(search.witness)};
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<std::size_t>(jobs, count);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<HeightRecord> scan(long lo, long hi, const ScanFilters& filters, int jobs) {
    std::vector<CyclotomicIndex> selected;
    for (long n = std::max(lo, 1L); n <= hi; ++n) {
        CyclotomicIndex idx = analyze(n);
        if (filters.odd_only && !idx.odd) continue;
        if (filters.squarefree_only && !idx.squarefree) continue;
        if (!filters.omega.empty() &&
            std::find(filters.omega.begin(), filters.omega.end(), idx.omega) == filters.omega.end())
            continue;
        selected.push_back(std::move(idx));
    }
    std::vector<HeightRecord> records(selected.size());
    parallel_for(selected.size(), jobs, [&](std::size_t i) {
        records[i] = heights_of(selected[i]);
        if (filters.with_b && selected[i].squarefree) {
            try {
                DivisorHeightResult r = max_divisor_height(selected[i].n, filters.subset_limit);
                records[i].B = std::move(r.B);
                records[i].witnessSubset = std::move(r.witnessSubset);
            } catch (const TooManyDivisors&) {
                records[i].bOverLimit = true;
            }
        }
    });
    return records;  // selected was built ascending, so records are ordered by n
}

}  // namespace cyclotome
