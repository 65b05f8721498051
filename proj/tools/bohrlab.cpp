#include <cstdlib>
#include <fstream>
#include <iostream>
#include <vector>

#include "CLI11.hpp"

#include "bohr/errors.hpp"
#include "bohr/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitFinding = 3;

double default_tol() {
    if (const char* env = std::getenv("BOHRLAB_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e-12;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output path: " + out_path);
    os << text;
}

struct Options {
    std::string theorem;
    double K = 1.0;
    double alpha = 1.0;
    double mu = 0.0;
    int N = 1;
    double a0 = 0.0;
    std::string format = "text";
    std::string out;
    bool verbatim = false;
    bool bisect = false;
    std::vector<double> K_grid;
    std::vector<double> alpha_grid;
    std::vector<double> mu_grid;
    int trials = 1000;
    double r_fraction = 0.99;
    std::uint64_t seed = 42;
    int M = 200;
    double delta = 1e-3;
};

bohr::Params to_params(const Options& o) {
    bohr::Params p;
    p.K = o.K;
    p.alpha = o.alpha;
    p.mu = o.mu;
    p.N = o.N;
    p.a0 = o.a0;
    return p;
}

int cmd_radius(const Options& o) {
    const auto t = bohr::theorem_from_string(o.theorem);
    if (o.verbatim) {
        if (t != bohr::Theorem::ThmH)
            throw CLI::ValidationError("--verbatim only applies to ThmH");
        bohr::thmH_verbatim(o.alpha);  // throws with the explanation
    }
    const auto problem = bohr::make_problem(t, to_params(o));
    const auto root = o.bisect ? bohr::solve_radius_via_bisection(problem, default_tol())
                               : bohr::solve_radius(problem, default_tol());
    if (o.format == "json") {
        emit(bohr::certificate_json(problem, root).dump(2) + "\n", o.out);
    } else if (o.format == "csv") {
        emit(bohr::csv_header() + "\n" + bohr::csv_row(problem, root) + "\n", o.out);
    } else {
        std::cout << bohr::to_string(t) << ": radius = " << bohr::format_sig15(root.estimate)
                  << "\n  interval   = [" << bohr::to_string(root.lo) << ", "
                  << bohr::to_string(root.hi) << "]"
                  << "\n  width      = " << bohr::format_sig15(root.width())
                  << "\n  certificate= " << bohr::to_string(root.certificate)
                  << "\n  residual   = " << bohr::format_sig15(root.residual) << "\n";
    }
    return kExitOk;
}

int cmd_certify(const Options& o) {
    const auto certs = bohr::certify_figures();
    bool all_pass = true;
    if (o.format == "json") {
        emit(bohr::certify_json(certs).dump(2) + "\n", o.out);
        for (const auto& c : certs) all_pass = all_pass && c.pass;
    } else {
        for (const auto& c : certs) {
            std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail
                      << ")\n";
            all_pass = all_pass && c.pass;
        }
    }
    return all_pass ? kExitOk : kExitFinding;
}

int cmd_sweep(const Options& o) {
    const auto t = bohr::theorem_from_string(o.theorem);
    std::vector<double> Ks = o.K_grid;
    std::vector<double> alphas = o.alpha_grid;
    std::vector<double> mus = o.mu_grid;
    if (Ks.empty()) Ks = {1, 1.25, 1.5, 2, 3, 5, 10, 100};
    const bool uses_alpha = (t == bohr::Theorem::ThmH || t == bohr::Theorem::ThmI ||
                             t == bohr::Theorem::T51 || t == bohr::Theorem::T52);
    const bool uses_mu =
        (t == bohr::Theorem::T41 || t == bohr::Theorem::T41R || t == bohr::Theorem::T42);
    if (alphas.empty()) alphas = uses_alpha ? std::vector<double>{1, 1.25, 1.5, 1.75, 2}
                                            : std::vector<double>{o.alpha};
    if (mus.empty()) mus = uses_mu ? std::vector<double>{0, 0.5, 1, 2} : std::vector<double>{o.mu};
    if (Ks.empty() || alphas.empty() || mus.empty())
        throw CLI::ValidationError("sweep grid is empty");

    bool any_failed = false;
    std::ostringstream csv;
    csv << bohr::csv_header() << "\n";
    std::vector<std::pair<double, double>> plot;  // radius vs K at first alpha/mu
    for (const double K : Ks)
        for (const double alpha : alphas)
            for (const double mu : mus) {
                Options pt = o;
                pt.K = K;
                pt.alpha = alpha;
                pt.mu = mu;
                try {
                    const auto problem = bohr::make_problem(t, to_params(pt));
                    const auto root = bohr::solve_radius(problem, default_tol());
                    csv << bohr::csv_row(problem, root) << "\n";
                    if (alpha == alphas.front() && mu == mus.front())
                        plot.emplace_back(K, root.estimate);
                } catch (const std::exception& e) {
                    csv << bohr::to_string(t) << ',' << bohr::format_sig15(K) << ','
                        << bohr::format_sig15(alpha) << ',' << bohr::format_sig15(mu) << ','
                        << pt.N << ",ERROR,ERROR,ERROR," << e.what() << "\n";
                    any_failed = true;
                }
            }
    if (o.format == "svg") {
        emit(bohr::svg_polyline(plot, "K", "radius", bohr::to_string(t) + " radius vs K"),
             o.out);
    } else {
        emit(csv.str(), o.out);
    }
    return any_failed ? kExitComputation : kExitOk;
}

int cmd_sharpness(const Options& o) {
    const auto t = bohr::theorem_from_string(o.theorem);
    const auto rep = bohr::sharpness_probe(t, o.K, o.alpha, o.mu, o.delta, 400);
    if (o.format == "json") {
        emit(bohr::sharpness_json(rep).dump(2) + "\n", o.out);
    } else {
        std::cout << bohr::to_string(t) << " (K=" << bohr::format_sig15(o.K)
                  << ", alpha=" << bohr::format_sig15(o.alpha)
                  << ", mu=" << bohr::format_sig15(o.mu) << ")\n"
                  << "  r0 = " << bohr::format_sig15(rep.r0) << "\n"
                  << "  at r0(1-delta) = " << bohr::format_sig15(rep.r_below) << ": "
                  << bohr::to_string(rep.below) << "\n"
                  << "  at r0(1+delta) = " << bohr::format_sig15(rep.r_above) << ": "
                  << bohr::to_string(rep.above) << "\n"
                  << "  sharpness claim catalogued: " << (rep.sharp_claim ? "yes" : "no") << "\n"
                  << "  probe " << (rep.ok ? "ok" : "FAILED") << "\n";
    }
    return rep.ok ? kExitOk : kExitFinding;
}

int cmd_falsify(const Options& o) {
    const auto t = bohr::theorem_from_string(o.theorem);
    const auto rep = bohr::falsify(t, o.trials, o.r_fraction, o.seed, o.K, o.alpha, o.M);
    if (o.format == "json") {
        emit(bohr::campaign_json(rep).dump(2) + "\n", o.out);
    } else if (o.format == "csv") {
        emit(bohr::campaign_csv(rep), o.out);
    } else {
        std::cout << bohr::to_string(t) << " campaign: trials=" << rep.trials
                  << " r=" << bohr::format_sig15(rep.r) << " holds=" << rep.holds
                  << " fails=" << rep.fails << " inconclusive=" << rep.inconclusive << "\n";
    }
    if (rep.fails > 0) {
        std::cerr << "finding: " << rep.fails
                  << " sampled pair(s) violate the inequality; this would contradict the "
                     "theorem\n";
        return kExitFinding;
    }
    return kExitOk;
}

int cmd_report(const Options& o) {
    nlohmann::json j;
    nlohmann::json radii = nlohmann::json::array();
    for (const char* name : {"ThmA", "ThmB", "ThmC", "ThmD", "ThmE", "ThmF", "ThmG", "ThmH",
                             "ThmI", "T31", "T32", "T41", "T41R", "T42", "T43", "T44", "T51",
                             "T52"}) {
        const auto t = bohr::theorem_from_string(name);
        const auto problem = bohr::make_problem(t, to_params(o));
        const auto root = bohr::solve_radius(problem, default_tol());
        radii.push_back(bohr::certificate_json(problem, root));
    }
    j["radii"] = radii;
    j["certificates"] = bohr::certify_json(bohr::certify_figures());
    nlohmann::json crosscheck = nlohmann::json::array();
    for (const double K : {1.0, 3.0}) {
        const auto rep = bohr::cross_check_T32(K, default_tol());
        crosscheck.push_back(
            nlohmann::json{{"K", rep.K},
                           {"k", rep.k},
                           {"interval_hi", rep.interval_hi},
                           {"statement_count", rep.statement_count},
                           {"proof_count", rep.proof_count},
                           {"statement_root", rep.statement_root},
                           {"proof_root", rep.proof_root},
                           {"root_gap", rep.root_gap},
                           {"statement_divides_proof", rep.statement_divides_proof}});
    }
    j["t32_cross_check"] = crosscheck;
    emit(j.dump(2) + "\n", o.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Bohr-type radius computations for quasiconformal harmonic maps"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub, bool needs_theorem) {
        if (needs_theorem)
            sub->add_option("--theorem", o.theorem, "theorem id (ThmA..ThmI, T31..T52)")
                ->required();
        sub->add_option("--K", o.K, "quasiconformality constant K >= 1");
        sub->add_option("--alpha", o.alpha, "opening-angle parameter in [1, 2]");
        sub->add_option("--mu", o.mu, "area-term weight >= 0");
        sub->add_option("--N", o.N, "tail start index");
        sub->add_option("--a0", o.a0, "|a0| for the refined analytic bound");
        sub->add_option("--format", o.format, "text|json|csv|svg")
            ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
        sub->add_option("--out", o.out, "output path (default stdout)");
    };

    auto* radius = app.add_subcommand("radius", "compute one certified radius");
    add_common(radius, true);
    radius->add_flag("--verbatim", o.verbatim,
                     "use the printed product form for ThmH (refused, with explanation)");
    radius->add_flag("--bisect", o.bisect, "force the bisection path for closed-form radii");

    auto* sweep = app.add_subcommand("sweep", "radius over a parameter grid");
    add_common(sweep, true);
    sweep->add_option("--K-grid", o.K_grid, "explicit K grid");
    sweep->add_option("--alpha-grid", o.alpha_grid, "explicit alpha grid");
    sweep->add_option("--mu-grid", o.mu_grid, "explicit mu grid");

    auto* certify = app.add_subcommand("certify", "check the four figure-claim certificates");
    add_common(certify, false);

    auto* sharp = app.add_subcommand("sharpness", "probe the witness around the radius");
    add_common(sharp, true);
    sharp->add_option("--delta", o.delta, "relative probe offset in (0, 0.1)");

    auto* fals = app.add_subcommand("falsify", "random admissible-pair campaign");
    add_common(fals, true);
    fals->add_option("--trials", o.trials, "number of sampled pairs");
    fals->add_option("--r-fraction", o.r_fraction, "test radius as a fraction of r0");
    fals->add_option("--seed", o.seed, "campaign seed");
    fals->add_option("--M", o.M, "truncation order");

    auto* report = app.add_subcommand("report", "combined JSON report");
    add_common(report, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (radius->parsed()) return cmd_radius(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (certify->parsed()) return cmd_certify(o);
        if (sharp->parsed()) return cmd_sharpness(o);
        if (fals->parsed()) return cmd_falsify(o);
        if (report->parsed()) return cmd_report(o);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
