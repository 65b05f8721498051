// Integration gate: one check per acceptance criterion, each printing a
// single pass/fail line. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bohr/certify.hpp"
#include "bohr/json_io.hpp"
#include "bohr/witnesses.hpp"

using namespace bohr;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", idx, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool crit1() {
    const auto t0 = Clock::now();
    const auto root = solve_radius(make_problem(Theorem::T31, {}));
    const auto cubic = RationalPolynomial::from_ints({1, -3, -5, 3});
    const bool value_ok = std::abs(root.estimate - 0.24683) <= 5e-6;
    const bool count_ok = sturm_count(cubic, Rational(0), Rational(1, 3)) == 1;
    return value_ok && count_ok && seconds_since(t0) < 1.0;
}

bool crit2() {
    const auto t0 = Clock::now();
    const auto root = solve_radius(make_problem(Theorem::ThmG, {}));
    return std::abs(root.estimate - 0.128445) <= 5e-7 && seconds_since(t0) < 1.0;
}

bool crit3() {
    for (const double K : {1.0, 2.0, 5.0, 10.0}) {
        Params p;
        p.K = K;
        p.mu = 0.0;
        const double r = solve_radius(make_problem(Theorem::T42, p)).estimate;
        if (std::abs(r - (K + 1) / (5 * K + 1)) > 1e-10) return false;
    }
    return true;
}

bool crit4() {
    const auto p51 = make_problem(Theorem::T51, {});
    const auto p52 = make_problem(Theorem::T52, {});
    const double c51 = solve_radius(p51).estimate;
    const double c52 = solve_radius(p52).estimate;
    const double b51 = solve_radius_via_bisection(p51).estimate;
    const double b52 = solve_radius_via_bisection(p52).estimate;
    return std::abs(c51 - 1.0 / 3.0) <= 1e-10 && std::abs(c52 - 0.2) <= 1e-10 &&
           std::abs(c51 - b51) <= 1e-10 && std::abs(c52 - b52) <= 1e-10;
}

bool crit5() {
    const auto t0 = Clock::now();
    const auto certs = certify_figures();
    bool ok = certs.size() == 4;
    for (const auto& c : certs) ok = ok && c.pass;
    return ok && seconds_since(t0) < 5.0;
}

bool crit6() {
    const auto t0 = Clock::now();
    struct Probe {
        Theorem t;
        double K, alpha, mu;
    };
    const Probe probes[] = {
        {Theorem::ThmD, 1, 1, 0}, {Theorem::ThmD, 2, 1, 0}, {Theorem::T41, 1, 1, 0},
        {Theorem::T41, 1, 1, 1},  {Theorem::T42, 1, 1, 0},  {Theorem::T42, 1, 1, 1},
        {Theorem::T43, 1, 1, 0},  {Theorem::T44, 1, 1, 0},  {Theorem::T51, 1, 1, 0},
        {Theorem::T51, 1, 2, 0},  {Theorem::T51, 2, 1, 0},  {Theorem::T51, 2, 2, 0},
        {Theorem::T52, 1, 1, 0},
    };
    for (const auto& pr : probes) {
        const auto rep = sharpness_probe(pr.t, pr.K, pr.alpha, pr.mu);
        if (rep.below != Verdict::holds || rep.above != Verdict::fails) return false;
    }
    return seconds_since(t0) < 30.0;
}

bool crit7() {
    const auto t0 = Clock::now();
    for (const Theorem t : {Theorem::ThmD, Theorem::T31, Theorem::T51}) {
        const auto rep = falsify(t, 1000, 0.99, 42, 1.0, 1.0, 200);
        if (rep.fails != 0 || rep.inconclusive != 0) return false;
    }
    return seconds_since(t0) < 60.0;
}

bool crit8() {
    for (const double alpha : {1.0, 1.25, 1.5, 2.0}) {
        const auto rec = concave_coefficients(alpha, 50).values;
        // Independent oracle: Cauchy product of the binomial expansions of
        // (1+z)^alpha and (1-z)^{-alpha}.
        std::vector<double> plus(51), minus(51);
        plus[0] = minus[0] = 1.0;
        for (int n = 1; n <= 50; ++n) {
            plus[static_cast<size_t>(n)] =
                plus[static_cast<size_t>(n) - 1] * (alpha - n + 1) / n;
            minus[static_cast<size_t>(n)] =
                minus[static_cast<size_t>(n) - 1] * (alpha + n - 1) / n;
        }
        for (int n = 1; n <= 50; ++n) {
            double w = 0.0;
            for (int j = 0; j <= n; ++j)
                w += plus[static_cast<size_t>(j)] * minus[static_cast<size_t>(n - j)];
            if (std::abs(rec[static_cast<size_t>(n) - 1] - w / (2 * alpha)) > 1e-12)
                return false;
        }
    }
    const auto a1 = concave_coefficients(1.0, 50).values;
    const auto a2 = concave_coefficients(2.0, 50).values;
    for (int n = 1; n <= 50; ++n) {
        if (a1[static_cast<size_t>(n) - 1] != 1.0) return false;
        if (a2[static_cast<size_t>(n) - 1] != static_cast<double>(n)) return false;
    }
    return true;
}

bool crit9() {
    for (const double K : {1.0, 3.0}) {
        const auto rep = cross_check_T32(K);
        if (rep.statement_count != 1 || rep.proof_count != 1) return false;
        if (!(rep.statement_root > 0 && rep.proof_root > 0)) return false;
        if (rep.root_gap != std::abs(rep.statement_root - rep.proof_root)) return false;
        std::printf("    T32 cross-check K=%g: statement root %.12f, proof root %.12f, "
                    "gap %.3e, exact division: %s\n",
                    K, rep.statement_root, rep.proof_root, rep.root_gap,
                    rep.statement_divides_proof ? "yes" : "no");
    }
    return true;
}

// All JSON/CSV artifacts the suite produces, as one byte string.
std::string artifact_bundle() {
    std::ostringstream os;
    for (const Theorem t : {Theorem::T31, Theorem::ThmG, Theorem::T42, Theorem::T51}) {
        const auto problem = make_problem(t, {});
        const auto root = solve_radius(problem);
        os << certificate_json(problem, root).dump() << "\n";
        os << csv_header() << "\n" << csv_row(problem, root) << "\n";
    }
    os << certify_json(certify_figures()).dump() << "\n";
    os << sharpness_json(sharpness_probe(Theorem::ThmD, 1.0)).dump() << "\n";
    const auto camp = falsify(Theorem::ThmD, 64, 0.99, 42);
    os << campaign_json(camp).dump() << "\n" << campaign_csv(camp);
    return os.str();
}

bool crit10() { return artifact_bundle() == artifact_bundle(); }

}  // namespace

int main() {
    report(1, crit1(), "refined convex radius 0.24683 with Sturm count 1, under 1 s");
    report(2, crit2(), "refined univalent radius 0.128445, under 1 s");
    report(3, crit3(), "area-weighted convex bound at mu=0 reduces to (K+1)/(5K+1)");
    report(4, crit4(), "concave radii 1/3 and 1/5; closed form and bisection agree");
    report(5, crit5(), "all four figure certificates (exact grids + Sturm counts), under 5 s");
    report(6, crit6(), "witness transitions at r0(1 +/- 1e-3) for the sharp catalog, under 30 s");
    report(7, crit7(), "3000-sample falsification campaigns: no fails, no inconclusive, under 60 s");
    report(8, crit8(), "coefficient recurrence matches the convolution oracle; exact at integer alpha");
    report(9, crit9(), "statement-vs-proof cross-check report for the refined univalent radius");
    report(10, crit10(), "seed-42 artifact bundle is byte-identical across two runs");
    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures;
}
