#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclotome/bounds.hpp"
#include "cyclotome/decomp.hpp"
#include "cyclotome/heights.hpp"

namespace py = pybind11;
using namespace cyclotome;

namespace {

// BigInt -> python int, losslessly via the decimal string
py::int_ to_py(const BigInt& v) {
    if (v.fits_int64()) return py::int_(v.to_int64_unchecked());
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.to_string().c_str(), nullptr, 10));
}

py::list coeff_list(const std::vector<BigInt>& cs) {
    py::list out;
    for (const BigInt& c : cs) out.append(to_py(c));
    return out;
}

py::dict record_dict(const HeightRecord& r) {
    py::dict d;
    d["n"] = r.n;
    d["omega"] = r.omega;
    d["phi"] = r.phi;
    d["A"] = to_py(r.A);
    d["S"] = to_py(r.S);
    d["C"] = r.C ? py::object(to_py(*r.C)) : py::none();
    d["B"] = r.B ? py::object(to_py(*r.B)) : py::none();
    d["witness"] = r.witnessSubset ? py::object(py::cast(*r.witnessSubset)) : py::none();
    d["b_over_limit"] = r.bOverLimit;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cyclotomic polynomial arithmetic, heights, and bound checks.";

    m.def(
        "cyclotomic", [](long n) { return coeff_list(cyclotomic(n).coeffs()); }, py::arg("n"),
        "Ascending integer coefficients of Phi_n.");
    m.def(
        "cyclotomic_via_recursion",
        [](long n) { return coeff_list(cyclotomic_via_recursion(analyze(n)).coeffs()); },
        py::arg("n"), "Phi_n built by the Phi_{mp}(x) = Phi_m(x^p)/Phi_m(x) route.");
    m.def(
        "inverse_cyclotomic", [](long n) { return coeff_list(inverse_cyclotomic(n).coeffs()); },
        py::arg("n"), "Coefficients of (1 - x^n)/Phi_n.");
    m.def(
        "psi_prefix",
        [](long n, std::size_t terms) { return coeff_list(psi_prefix(n, terms).coeffs()); },
        py::arg("n"), py::arg("terms"), "First coefficients of 1/Phi_n.");
    m.def(
        "heights",
        [](long n) { return record_dict(heights_of(n)); }, py::arg("n"),
        "dict with n, omega, phi, A, S, C.");
    m.def(
        "max_divisor_height",
        [](long n, long limit) {
            const DivisorHeightResult r = max_divisor_height(n, limit);
            return py::make_tuple(to_py(r.B), r.witnessSubset);
        },
        py::arg("n"), py::arg("limit") = kDefaultSubsetLimit,
        "(B_n, witness divisor subset) over all divisors of x^n - 1.");
    m.def(
        "decomposition",
        [](long n) {
            const DecompParts d = build_decomposition(analyze(n));
            py::dict out;
            out["n"] = n;
            out["fstar_height"] = to_py(height(d.fstar));
            out["sperner_bound"] = to_py(d.sperner);
            py::list degs;
            for (const IntPoly& p : d.parts) degs.append(p.degree());
            out["part_degrees"] = degs;
            return out;
        },
        py::arg("n"), "Certified factorization summary for odd squarefree n, omega >= 3.");
    m.def(
        "dm", [](long n, long m) { return dm_combinatorial(analyze(n), m); }, py::arg("n"),
        py::arg("m"), "Coefficient of x^m in fstar via the lambda/chi sum.");
    m.def(
        "sperner_bound", [](long t) { return to_py(sperner_bound(t)); }, py::arg("t"),
        "Central binomial coefficient binom(t, t//2).");
    m.def(
        "mk",
        [](const std::vector<long>& primes) { return to_py(Mk(primes)); }, py::arg("primes"),
        "M_k = prod p_i^(2^(k-i-1)-1) over the first k-2 primes of the tuple.");
    m.def(
        "constant_c",
        [](const std::string& eps3, const std::string& d, double tol) {
            const Enclosure e = constant_C(Rational(eps3), Rational(d), tol);
            return py::make_tuple(e.lo, e.hi);
        },
        py::arg("eps3") = "3/4", py::arg("d") = "15/32", py::arg("tol") = 1e-9,
        "Rigorous (lo, hi) enclosure of the constant C.");
    m.def(
        "rho", [](double tol) {
            const Enclosure e = rho_enclosure(tol);
            return py::make_tuple(e.lo, e.hi);
        },
        py::arg("tol") = 1e-9, "Rigorous enclosure of the infinite product rho.");
}
