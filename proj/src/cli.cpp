#include "cyclotome/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclotome/bounds.hpp"
#include "cyclotome/cache.hpp"
#include "cyclotome/decomp.hpp"
#include "cyclotome/errors.hpp"
#include "cyclotome/verify.hpp"

namespace cyclotome {

namespace {

using nlohmann::json;

std::string coeffs_json(const std::vector<BigInt>& cs) {
    std::string out = "[";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += cs[i].to_string();
    }
    return out + "]";
}

void print_coeffs(std::ostream& out, const std::vector<BigInt>& cs, const std::string& format) {
    if (format == "json") {
        out << coeffs_json(cs) << "\n";
    } else {
        for (std::size_t i = 0; i < cs.size(); ++i) out << i << "," << cs[i].to_string() << "\n";
    }
}

void print_record_csv(std::ostream& out, const HeightRecord& r) {
    out << r.n << "," << r.omega << "," << r.phi << "," << r.A.to_string() << ","
        << r.S.to_string() << "," << (r.C ? r.C->to_string() : "") << ","
        << (r.B ? r.B->to_string() : "") << "\n";
}

json enclosure_json(const Enclosure& e) { return json::array({e.lo_str, e.hi_str}); }

json suite_json(const SuiteReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["checksRun"] = rep.checks;
    j["violations"] = json::array();
    for (const Violation& v : rep.violations)
        j["violations"].push_back({{"where", v.where}, {"bound", v.bound}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    j["notes"] = rep.notes;
    return j;
}

struct CliOptions {
    std::string out_format = "csv";
    std::string cache_path;
    int jobs = 0;
};

int cmd_heights(std::ostream& out, const CliOptions& opts, const std::vector<long>& range,
                const ScanFilters& filters) {
    std::optional<HeightCache> cache;
    if (!opts.cache_path.empty()) cache.emplace(opts.cache_path);

    std::vector<HeightRecord> records(range.size());
    std::vector<char> fresh(range.size(), 0);
    parallel_for(range.size(), opts.jobs, [&](std::size_t i) {
        const CyclotomicIndex idx = analyze(range[i]);
        if (cache) {
            // B applies to squarefree n only; other records are complete without it
            if (const HeightRecord* hit = cache->find(range[i], filters.with_b && idx.squarefree)) {
                records[i] = *hit;
                return;
            }
        }
        records[i] = heights_of(idx);
        if (filters.with_b && idx.squarefree) {
            try {
                DivisorHeightResult r = max_divisor_height(range[i], filters.subset_limit);
                records[i].B = std::move(r.B);
                records[i].witnessSubset = std::move(r.witnessSubset);
            } catch (const TooManyDivisors&) {
                records[i].bOverLimit = true;
            }
        }
        fresh[i] = 1;
    });
    for (std::size_t i = 0; i < range.size(); ++i) {
        if (cache && fresh[i]) cache->append(records[i]);
        if (opts.out_format == "json")
            out << record_to_json_line(records[i]) << "\n";
        else
            print_record_csv(out, records[i]);
    }
    return 0;
}

int cmd_decomp(std::ostream& out, std::ostream& err, long n) {
    const CyclotomicIndex idx = analyze(n);
    const DecompParts parts = build_decomposition(idx);  // throws NotAdmissible -> exit 2

    IntPoly prod = parts.fstar;
    for (const IntPoly& pj : parts.parts) prod = mul_truncated(prod, pj, static_cast<std::size_t>(n));
    const IntPoly phi = cyclotomic(idx);
    bool congruent = true;
    for (long i = 0; i < n && congruent; ++i)
        congruent = prod.coeff(static_cast<std::size_t>(i)) == phi.coeff(static_cast<std::size_t>(i));

    const BigInt hf = height(parts.fstar);
    const bool sperner_ok = hf <= parts.sperner;

    out << "n = " << n << "  k = " << idx.omega << "\n";
    out << "H(fstar) = " << hf.to_string() << "  b_{k-2} = " << parts.sperner.to_string() << "  "
        << (sperner_ok ? "OK" : "VIOLATED") << "\n";
    out << "parts:";
    for (std::size_t j = 0; j < parts.parts.size(); ++j)
        out << " deg(P_" << j + 1 << ") = " << parts.parts[j].degree();
    out << "\n";
    out << "congruence fstar * prod(P_j) == Phi_n (mod x^n): " << (congruent ? "OK" : "VIOLATED")
        << "\n";
    if (!congruent || !sperner_ok) {
        err << "decomp: check failed for n = " << n << "\n";
        return 1;
    }
    return 0;
}

int cmd_constants(std::ostream& out, const std::string& eps3_text, const std::string& d_text,
                  long prime_box, double tol, int kmax) {
    const Rational eps3(eps3_text);
    std::optional<Rational> d;
    if (d_text != "auto") d = Rational(d_text);
    const ConstantsReport rep = compute_constants(eps3, d, prime_box, tol, kmax);

    json j;
    j["eps3"] = rep.eps3.to_string();
    j["d"] = rep.d_used.to_string();
    j["dWasAuto"] = rep.d_was_auto;
    j["dUpper"] = rep.d_upper.to_string();
    j["dEmpirical"] = {{"value", rep.d_empirical.value.to_string()},
                       {"witness", rep.d_empirical.witness},
                       {"primeBox", rep.prime_box}};
    j["rho"] = enclosure_json(rep.rho);
    j["C"] = enclosure_json(rep.C);
    json eseq = json::array();
    for (int k = 1; k <= rep.eseq.kMax; ++k)
        eseq.push_back({{"k", k}, {"value", rep.eseq.e[k].to_string()}});
    j["eSequence"] = eseq;
    j["eRecursionExact"] = rep.eseq.recursion_exact;
    j["bRatioIdentityExact"] = rep.eseq.ratio_identity_exact;
    json inv = json::array();
    for (int k = 4; k <= rep.inv.kMax; ++k)
        inv.push_back({{"k", k}, {"value", rep.inv.bound[k].to_string()}});
    j["invChain"] = inv;
    j["invCorrectedIdentityExact"] = rep.inv.corrected_identity_exact;
    json trend;
    trend["ok"] = rep.trend.ok();
    json gaps = json::array();
    for (int k = 5; k < static_cast<int>(rep.trend.gap.size()); ++k)
        gaps.push_back({{"k", k}, {"logE_over_2k_minus_logC", rep.trend.gap[k]}});
    trend["gaps"] = gaps;
    j["trend"] = trend;
    j["lowerBound"] = {{"limit", enclosure_json(rep.lower.limit)},
                       {"mkSequence", rep.lower.mk_sequence},
                       {"monotoneExact", rep.lower.monotone_exact}};
    json mks = json::array();
    for (const auto& [k, v] : rep.mk_samples) mks.push_back({{"k", k}, {"Mk", v}});
    j["mkSamples"] = mks;
    j["notes"] = rep.notes;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& suite, long maxN, int jobs,
               const Rational& eps3, long subset_limit) {
    SuiteReport rep;
    std::vector<EtaRow> eta;
    json extra;
    if (suite == "identities") {
        rep = run_identities(maxN, jobs);
    } else if (suite == "small-orders") {
        rep = run_small_orders(maxN, eps3, jobs);
    } else if (suite == "decomposition") {
        rep = run_decomposition(maxN, jobs);
        std::vector<long> fixed;
        for (long n : {105L, 1155L, 15015L})
            if (n <= maxN) fixed.push_back(n);
        std::vector<long> sampled = sample_admissible(maxN, 20, /*seed=*/20260809);
        std::vector<long> all = fixed;
        for (long n : sampled)
            if (std::find(all.begin(), all.end(), n) == all.end()) all.push_back(n);
        SuiteReport dm = run_dm_formula(all, fixed, jobs);
        rep.merge(dm);
        rep.suite = "decomposition";
    } else if (suite == "bloom") {
        rep = run_bloom(maxN, jobs);
    } else if (suite == "phi-theorem") {
        rep = run_phi_theorem(10000, /*seed=*/20260809, jobs);
    } else if (suite == "kaplan") {
        rep = run_kaplan(maxN, subset_limit, jobs, &eta);
        json table = json::array();
        for (const EtaRow& r : eta)
            table.push_back({{"n", r.n},
                             {"omega", r.omega},
                             {"B", r.B},
                             {"exponent", r.exponent},
                             {"etaObserved", r.eta}});
        extra["etaTable"] = table;
    } else if (suite == "all") {
        rep = run_identities(std::min(maxN, 2000L), jobs);
        rep.merge(run_small_orders(maxN, eps3, jobs));
        rep.merge(run_decomposition(maxN, jobs));
        rep.merge(run_bloom(maxN, jobs));
        rep.merge(run_phi_theorem(10000, 20260809, jobs));
        rep.merge(run_kaplan(std::min(maxN, 2000L), subset_limit, jobs, nullptr));
        rep.suite = "all";
    } else {
        err << "verify: unknown suite '" << suite << "'\n";
        return 2;
    }

    json j = suite_json(rep);
    for (auto& [k, v] : extra.items()) j[k] = v;
    out << j.dump(2) << "\n";
    err << "suite " << rep.suite << ": " << rep.checks << " checks, " << rep.violations.size()
        << " violations, " << rep.seconds << " s\n";
    return rep.violations.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cyclotomic polynomial heights, bounds, and constants"};
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions opts;
    if (const char* env = std::getenv("CYCLOTOME_CACHE")) opts.cache_path = env;
    app.add_option("--out", opts.out_format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--cache", opts.cache_path, "json-lines height cache file");
    app.add_option("--jobs", opts.jobs, "worker threads (default: cores)");

    long poly_n = 1;
    auto* poly = app.add_subcommand("poly", "coefficients of Phi_n");
    poly->add_option("n", poly_n, "index")->required()->check(CLI::PositiveNumber);

    long psi_n = 2;
    long psi_terms = -1;
    auto* psi = app.add_subcommand("psi", "leading coefficients of Psi_n = 1/Phi_n");
    psi->add_option("n", psi_n, "index (>= 2)")->required()->check(CLI::PositiveNumber);
    psi->add_option("--terms", psi_terms, "number of coefficients (default n)");

    long heights_n = 0;
    std::vector<long> scan_range;
    bool f_odd = false, f_squarefree = false, f_with_b = false;
    std::vector<int> f_omega;
    long subset_limit = kDefaultSubsetLimit;
    auto* heights = app.add_subcommand("heights", "height records A,S,C (optionally B)");
    heights->add_option("n", heights_n, "single index");
    heights->add_option("--scan", scan_range, "inclusive range MIN MAX")->expected(2);
    heights->add_flag("--odd", f_odd, "odd n only");
    heights->add_flag("--squarefree", f_squarefree, "squarefree n only");
    heights->add_option("--omega", f_omega, "keep these omega values")->delimiter(',');
    heights->add_flag("--with-b", f_with_b, "also compute B_n for squarefree n");
    heights->add_option("--limit", subset_limit, "divisor-subset budget for B_n");

    long bn_n = 0;
    auto* bn = app.add_subcommand("bn", "height record with B_n for one n");
    bn->add_option("n", bn_n, "index")->required()->check(CLI::PositiveNumber);
    bn->add_option("--limit", subset_limit, "divisor-subset budget for B_n");

    long decomp_n = 0;
    auto* decomp = app.add_subcommand("decomp", "certified fstar * P_j factorization of Phi_n");
    decomp->add_option("n", decomp_n, "odd squarefree n with omega >= 3")->required();

    std::string eps3_text = "3/4", d_text = "auto";
    long prime_box = 30;
    double tol = 1e-9;
    int kmax = 40;
    auto* constants = app.add_subcommand("constants", "constants report (json)");
    constants->add_option("--eps3", eps3_text, "ternary constant (3/4 proven, 2/3 conjectural)");
    constants->add_option("--d", d_text, "d as a rational, or 'auto' for eps3(2-eps3)/2");
    constants->add_option("--prime-box", prime_box, "empirical d search box")->check(CLI::Range(7L, 200L));
    constants->add_option("--tol", tol, "enclosure tolerance");
    constants->add_option("--kmax", kmax, "e-sequence length")->check(CLI::Range(5, 64));

    std::string suite;
    long verify_max = 10000;
    auto* verify = app.add_subcommand("verify", "run a checker suite");
    verify->add_option("suite", suite, "identities|small-orders|decomposition|bloom|phi-theorem|kaplan|all")
        ->required();
    verify->add_option("--max", verify_max, "range limit")->check(CLI::PositiveNumber);
    verify->add_option("--eps3", eps3_text, "ternary constant for the bound checks");
    verify->add_option("--limit", subset_limit, "divisor-subset budget for B_n");

    std::vector<const char*> argv;
    argv.push_back("cyclotome");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (poly->parsed()) {
            print_coeffs(out, cyclotomic(poly_n).coeffs(), opts.out_format);
            return 0;
        }
        if (psi->parsed()) {
            if (psi_n < 2) {
                err << "error: psi requires n >= 2\n";
                return 2;
            }
            const std::size_t terms =
                psi_terms < 0 ? static_cast<std::size_t>(psi_n) : static_cast<std::size_t>(psi_terms);
            print_coeffs(out, psi_prefix(psi_n, terms).coeffs(), opts.out_format);
            return 0;
        }
        if (heights->parsed()) {
            std::vector<long> range;
            if (!scan_range.empty()) {
                if (scan_range[0] < 1 || scan_range[1] < scan_range[0]) {
                    err << "error: bad --scan range\n";
                    return 2;
                }
                for (long n = scan_range[0]; n <= scan_range[1]; ++n) {
                    const CyclotomicIndex idx = analyze(n);
                    if (f_odd && !idx.odd) continue;
                    if (f_squarefree && !idx.squarefree) continue;
                    if (!f_omega.empty() &&
                        std::find(f_omega.begin(), f_omega.end(), idx.omega) == f_omega.end())
                        continue;
                    range.push_back(n);
                }
            } else if (heights_n >= 1) {
                range.push_back(heights_n);
            } else {
                err << "error: heights needs an index or --scan MIN MAX\n";
                return 2;
            }
            ScanFilters filters;
            filters.with_b = f_with_b;
            filters.subset_limit = subset_limit;
            return cmd_heights(out, opts, range, filters);
        }
        if (bn->parsed()) {
            ScanFilters filters;
            filters.with_b = true;
            filters.subset_limit = subset_limit;
            return cmd_heights(out, opts, {bn_n}, filters);
        }
        if (decomp->parsed()) return cmd_decomp(out, err, decomp_n);
        if (constants->parsed())
            return cmd_constants(out, eps3_text, d_text, prime_box, tol, kmax);
        if (verify->parsed())
            return cmd_verify(out, err, suite, verify_max, opts.jobs, Rational(eps3_text),
                              subset_limit);
    } catch (const NotAdmissible& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cyclotome
