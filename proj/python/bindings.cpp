#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bohr/certify.hpp"
#include "bohr/json_io.hpp"
#include "bohr/series.hpp"
#include "bohr/witnesses.hpp"

namespace py = pybind11;

namespace {

py::dict root_dict(const bohr::RadiusProblem& problem, const bohr::CertifiedRoot& root) {
    py::dict d;
    d["theorem"] = bohr::to_string(problem.theorem);
    d["estimate"] = root.estimate;
    d["lo"] = bohr::to_string(root.lo);
    d["hi"] = bohr::to_string(root.hi);
    d["width"] = root.width();
    d["certificate"] = bohr::to_string(root.certificate);
    d["residual"] = root.residual;
    return d;
}

bohr::Params make_params(double K, double alpha, double mu, int N, double a0) {
    bohr::Params p;
    p.K = K;
    p.alpha = alpha;
    p.mu = mu;
    p.N = N;
    p.a0 = a0;
    return p;
}

}  // namespace

PYBIND11_MODULE(bohrlab, m) {
    m.doc() = "certified Bohr-type radius computations for quasiconformal harmonic maps";

    m.def(
        "solve_radius",
        [](const std::string& theorem, double K, double alpha, double mu, int N, double a0,
           double tol) {
            const auto t = bohr::theorem_from_string(theorem);
            const auto problem = bohr::make_problem(t, make_params(K, alpha, mu, N, a0));
            return root_dict(problem, bohr::solve_radius(problem, tol));
        },
        py::arg("theorem"), py::arg("K") = 1.0, py::arg("alpha") = 1.0, py::arg("mu") = 0.0,
        py::arg("N") = 1, py::arg("a0") = 0.0, py::arg("tol") = 1e-12);

    m.def(
        "solve_radius_via_bisection",
        [](const std::string& theorem, double K, double alpha, double mu, int N, double a0,
           double tol) {
            const auto t = bohr::theorem_from_string(theorem);
            const auto problem = bohr::make_problem(t, make_params(K, alpha, mu, N, a0));
            return root_dict(problem, bohr::solve_radius_via_bisection(problem, tol));
        },
        py::arg("theorem"), py::arg("K") = 1.0, py::arg("alpha") = 1.0, py::arg("mu") = 0.0,
        py::arg("N") = 1, py::arg("a0") = 0.0, py::arg("tol") = 1e-12);

    m.def(
        "sturm_count",
        [](const std::vector<std::string>& coeffs, const std::string& lo, const std::string& hi) {
            std::vector<bohr::Rational> cs;
            cs.reserve(coeffs.size());
            for (const auto& c : coeffs) cs.push_back(bohr::rational_from_string(c));
            return bohr::sturm_count(bohr::RationalPolynomial(std::move(cs)),
                                     bohr::rational_from_string(lo),
                                     bohr::rational_from_string(hi));
        },
        py::arg("coeffs"), py::arg("lo"), py::arg("hi"),
        "distinct real roots in (lo, hi); coefficients ascending, as rational strings");

    m.def(
        "concave_coefficients",
        [](double alpha, int M) { return bohr::concave_coefficients(alpha, M).values; },
        py::arg("alpha"), py::arg("M"));

    m.def(
        "closed_form",
        [](const std::string& id, double r, double alpha) {
            return bohr::closed_form(bohr::sum_id_from_string(id), r, alpha);
        },
        py::arg("id"), py::arg("r"), py::arg("alpha") = 1.0);

    m.def("certify_figures", []() {
        py::list out;
        for (const auto& c : bohr::certify_figures()) {
            py::dict d;
            d["name"] = c.name;
            d["pass"] = c.pass;
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    });

    m.def(
        "sharpness_probe",
        [](const std::string& theorem, double K, double alpha, double mu, double delta) {
            const auto rep = bohr::sharpness_probe(bohr::theorem_from_string(theorem), K, alpha,
                                                   mu, delta);
            py::dict d;
            d["r0"] = rep.r0;
            d["below"] = bohr::to_string(rep.below);
            d["above"] = bohr::to_string(rep.above);
            d["sharp_claim"] = rep.sharp_claim;
            d["ok"] = rep.ok;
            return d;
        },
        py::arg("theorem"), py::arg("K") = 1.0, py::arg("alpha") = 1.0, py::arg("mu") = 0.0,
        py::arg("delta") = 1e-3);

    m.def(
        "falsify",
        [](const std::string& theorem, int trials, double r_fraction, std::uint64_t seed,
           double K, double alpha, int M) {
            const auto rep = bohr::falsify(bohr::theorem_from_string(theorem), trials,
                                           r_fraction, seed, K, alpha, M);
            py::dict d;
            d["trials"] = rep.trials;
            d["r"] = rep.r;
            d["holds"] = rep.holds;
            d["fails"] = rep.fails;
            d["inconclusive"] = rep.inconclusive;
            return d;
        },
        py::arg("theorem"), py::arg("trials") = 100, py::arg("r_fraction") = 0.99,
        py::arg("seed") = 42, py::arg("K") = 1.0, py::arg("alpha") = 1.0, py::arg("M") = 200);

    m.def(
        "cross_check_T32",
        [](double K) {
            const auto rep = bohr::cross_check_T32(K);
            py::dict d;
            d["K"] = rep.K;
            d["k"] = rep.k;
            d["interval_hi"] = rep.interval_hi;
            d["statement_count"] = rep.statement_count;
            d["proof_count"] = rep.proof_count;
            d["statement_root"] = rep.statement_root;
            d["proof_root"] = rep.proof_root;
            d["root_gap"] = rep.root_gap;
            d["statement_divides_proof"] = rep.statement_divides_proof;
            return d;
        },
        py::arg("K") = 1.0);
}
