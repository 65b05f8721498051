#include "bohr/witnesses.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bohr/errors.hpp"

namespace bohr {

using Complex = std::complex<double>;

std::string to_string(ClassTag c) {
    switch (c) {
        case ClassTag::convex: return "convex";
        case ClassTag::univalent: return "univalent";
        case ClassTag::concave: return "concave";
    }
    return "?";
}

ClassTag class_tag_from_string(const std::string& name) {
    if (name == "convex") return ClassTag::convex;
    if (name == "univalent") return ClassTag::univalent;
    if (name == "concave") return ClassTag::concave;
    throw std::invalid_argument("unknown class tag: " + name);
}

ClassTag falsify_class(Theorem t) {
    switch (t) {
        case Theorem::ThmD:
        case Theorem::ThmF:
        case Theorem::T31:
        case Theorem::T42:
        case Theorem::T43:
            return ClassTag::convex;
        case Theorem::ThmC:
        case Theorem::ThmE:
        case Theorem::ThmG:
        case Theorem::T32:
        case Theorem::T41:
        case Theorem::T41R:
        case Theorem::T44:
            return ClassTag::univalent;
        case Theorem::ThmH:
        case Theorem::ThmI:
        case Theorem::T51:
        case Theorem::T52:
            return ClassTag::concave;
        default:
            throw std::invalid_argument("falsify_class: no subordination class for " +
                                        to_string(t));
    }
}

HarmonicPair build_witness(const WitnessSpec& spec, int M) {
    if (M < 1) throw std::invalid_argument("build_witness: M must be >= 1");
    if (std::abs(std::abs(spec.unimodular_phase) - 1.0) > 1e-15)
        throw std::invalid_argument("build_witness: phase must be unimodular");
    const double k = QuasiconformalParam::from_K(spec.K).k;

    // a_n pattern, lambda, and the polynomial-in-n coefficient majorant.
    std::vector<double> an(static_cast<size_t>(M));
    double lambda;
    std::vector<double> a_maj;
    switch (spec.theorem) {
        case Theorem::ThmF:
        case Theorem::T31:
            for (int n = 1; n <= M; ++n) an[static_cast<size_t>(n) - 1] = 2.0;
            lambda = 1.0;
            a_maj = {2.0};
            break;
        case Theorem::ThmG:
        case Theorem::T32:
            for (int n = 1; n <= M; ++n) an[static_cast<size_t>(n) - 1] = 4.0 * n;
            lambda = 1.0;
            a_maj = {0.0, 4.0};
            break;
        case Theorem::ThmC:
        case Theorem::ThmE:
        case Theorem::T41:
        case Theorem::T41R:
        case Theorem::T44:
            for (int n = 1; n <= M; ++n) an[static_cast<size_t>(n) - 1] = n;
            lambda = 0.25;
            a_maj = {0.0, 1.0};
            break;
        case Theorem::ThmD:
        case Theorem::T42:
        case Theorem::T43:
            for (int n = 1; n <= M; ++n) an[static_cast<size_t>(n) - 1] = 1.0;
            lambda = 0.5;
            a_maj = {1.0};
            break;
        case Theorem::ThmH:
        case Theorem::ThmI:
        case Theorem::T51:
        case Theorem::T52: {
            an = concave_coefficients(spec.alpha, M).values;
            lambda = 1.0 / (2.0 * spec.alpha);
            a_maj = {0.0, 1.0};  // A_n <= n for alpha in [1, 2]
            break;
        }
        default:
            throw CatalogError("build_witness: no catalogued witness for " +
                               to_string(spec.theorem));
    }

    HarmonicPair p;
    p.k_bound = k;
    p.lambda = lambda;
    p.phi0_abs = 0.0;
    p.a.coeffs.assign(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
    p.b.coeffs.assign(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
    for (int n = 1; n <= M; ++n) {
        const double v = an[static_cast<size_t>(n) - 1];
        p.a.coeffs[static_cast<size_t>(n)] = Complex{v, 0.0};
        p.b.coeffs[static_cast<size_t>(n)] = k * spec.unimodular_phase * v;
    }
    p.a_majorant = a_maj;
    p.b_majorant.resize(a_maj.size());
    for (size_t i = 0; i < a_maj.size(); ++i) p.b_majorant[i] = k * a_maj[i];
    return p;
}

namespace {

// Deterministic uniform in [0, 1) from the raw engine stream (avoids
// distribution implementation differences).
double unit_uniform(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

struct BlaschkeDraw {
    std::vector<Complex> zeros;  // all inside the disk
    double scale = 1.0;          // strictly below 1 for Schwarz draws
};

BlaschkeDraw draw_blaschke(std::mt19937_64& rng, int max_degree, double scale_lo,
                           double scale_hi) {
    BlaschkeDraw d;
    const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    for (int i = 0; i < degree; ++i) {
        const double radius = 0.8 * unit_uniform(rng);
        const double angle = 2.0 * std::numbers::pi * unit_uniform(rng);
        d.zeros.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
    d.scale = scale_lo + (scale_hi - scale_lo) * unit_uniform(rng);
    return d;
}

// Coefficients of scale * prod (a_j - z)/(1 - conj(a_j) z), truncated at M.
std::vector<Complex> blaschke_coeffs(const BlaschkeDraw& d, int M) {
    std::vector<Complex> acc(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
    acc[0] = Complex{d.scale, 0.0};
    std::vector<Complex> factor(static_cast<size_t>(M) + 1);
    std::vector<Complex> next(static_cast<size_t>(M) + 1);
    for (const Complex& a : d.zeros) {
        const Complex ac = std::conj(a);
        factor[0] = a;
        Complex pw{1.0, 0.0};
        for (int m = 1; m <= M; ++m) {
            factor[static_cast<size_t>(m)] = -(1.0 - std::norm(a)) * pw;
            pw *= ac;
        }
        std::fill(next.begin(), next.end(), Complex{0.0, 0.0});
        for (int i = 0; i <= M; ++i) {
            if (acc[static_cast<size_t>(i)] == Complex{0.0, 0.0}) continue;
            for (int j = 0; i + j <= M; ++j)
                next[static_cast<size_t>(i + j)] +=
                    acc[static_cast<size_t>(i)] * factor[static_cast<size_t>(j)];
        }
        acc.swap(next);
    }
    return acc;
}

Complex eval_blaschke(const BlaschkeDraw& d, const Complex& z) {
    Complex v{d.scale, 0.0};
    for (const Complex& a : d.zeros) v *= (a - z) / (1.0 - std::conj(a) * z);
    return v;
}

// h coefficients (index 0..M, h_0 = 0) for the class extremal composed with
// omega, via O(M^2) recurrences.
std::vector<Complex> compose_class(ClassTag tag, double alpha, const std::vector<Complex>& om,
                                   int M) {
    std::vector<Complex> h(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
    switch (tag) {
        case ClassTag::convex:
            // h = omega / (1 - omega):  h_n = om_n + sum om_j h_{n-j}
            for (int n = 1; n <= M; ++n) {
                Complex s = om[static_cast<size_t>(n)];
                for (int j = 1; j < n; ++j)
                    s += om[static_cast<size_t>(j)] * h[static_cast<size_t>(n - j)];
                h[static_cast<size_t>(n)] = s;
            }
            return h;
        case ClassTag::univalent: {
            // h = omega / (1 - omega)^2 via u = 1/(1 - omega), h = omega u^2
            std::vector<Complex> u(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
            u[0] = Complex{1.0, 0.0};
            for (int n = 1; n <= M; ++n) {
                Complex s{0.0, 0.0};
                for (int j = 1; j <= n; ++j)
                    s += om[static_cast<size_t>(j)] * u[static_cast<size_t>(n - j)];
                u[static_cast<size_t>(n)] = s;
            }
            std::vector<Complex> v(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
            for (int i = 0; i <= M; ++i)
                for (int j = 0; i + j <= M; ++j)
                    v[static_cast<size_t>(i + j)] +=
                        u[static_cast<size_t>(i)] * u[static_cast<size_t>(j)];
            for (int n = 1; n <= M; ++n) {
                Complex s{0.0, 0.0};
                for (int j = 1; j <= n; ++j)
                    s += om[static_cast<size_t>(j)] * v[static_cast<size_t>(n - j)];
                h[static_cast<size_t>(n)] = s;
            }
            return h;
        }
        case ClassTag::concave: {
            // w = ((1+omega)/(1-omega))^alpha from w'(1 - omega^2) = 2 alpha omega' w
            std::vector<Complex> s2(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
            for (int i = 1; i <= M; ++i)
                for (int j = 1; i + j <= M; ++j)
                    s2[static_cast<size_t>(i + j)] +=
                        om[static_cast<size_t>(i)] * om[static_cast<size_t>(j)];
            std::vector<Complex> w(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
            w[0] = Complex{1.0, 0.0};
            for (int n = 0; n < M; ++n) {
                Complex s{0.0, 0.0};
                for (int j = 2; j <= n; ++j)
                    s += s2[static_cast<size_t>(j)] * ((n - j + 1.0) * w[static_cast<size_t>(n - j + 1)]);
                for (int j = 0; j <= n; ++j)
                    s += 2.0 * alpha * ((j + 1.0) * om[static_cast<size_t>(j) + 1]) *
                         w[static_cast<size_t>(n - j)];
                w[static_cast<size_t>(n) + 1] = s / (n + 1.0);
            }
            for (int n = 1; n <= M; ++n)
                h[static_cast<size_t>(n)] = w[static_cast<size_t>(n)] / (2.0 * alpha);
            return h;
        }
    }
    throw std::logic_error("compose_class: unreachable");
}

}  // namespace

HarmonicPair sample_admissible(const SampleSpec& spec, int M) {
    if (M < 16) throw std::invalid_argument("sample_admissible: M must be >= 16");
    const double k = QuasiconformalParam::from_K(spec.K).k;

    std::mt19937_64 rng_s(spec.schwarz_seed);
    std::mt19937_64 rng_d(spec.dilatation_seed);
    const BlaschkeDraw bs = draw_blaschke(rng_s, spec.max_blaschke_degree, 0.3, 0.95);
    const BlaschkeDraw bd = draw_blaschke(rng_d, spec.max_blaschke_degree, 0.3, 0.95);

    // omega = scale * z * B1(z); omega_d = k * scale' * B2(z).
    const auto b1 = blaschke_coeffs(bs, M - 1);
    std::vector<Complex> om(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
    for (int n = 1; n <= M; ++n) om[static_cast<size_t>(n)] = b1[static_cast<size_t>(n) - 1];
    auto omd = blaschke_coeffs(bd, M);
    for (auto& c : omd) c *= k;

    // Admissibility on a boundary grid (exact rational-form evaluation).
    for (int i = 0; i < 64; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / 64.0;
        const Complex z{std::cos(theta), std::sin(theta)};
        if (std::abs(z * eval_blaschke(bs, z)) >= 1.0)
            throw std::logic_error("sample_admissible: |omega| >= 1 on the boundary grid");
        if (std::abs(k * eval_blaschke(bd, z)) > k + 1e-12)
            throw std::logic_error("sample_admissible: |omega_d| > k on the boundary grid");
    }

    const auto a = compose_class(spec.class_tag, spec.alpha, om, M);

    // g' = omega_d h': b_n = (1/n) sum_{j<n} omd_j (n-j) a_{n-j}.
    std::vector<Complex> b(static_cast<size_t>(M) + 1, Complex{0.0, 0.0});
    for (int n = 1; n <= M; ++n) {
        Complex s{0.0, 0.0};
        for (int j = 0; j < n; ++j)
            s += omd[static_cast<size_t>(j)] *
                 (static_cast<double>(n - j) * a[static_cast<size_t>(n - j)]);
        b[static_cast<size_t>(n)] = s / static_cast<double>(n);
    }

    HarmonicPair p;
    p.a.coeffs = a;
    p.b.coeffs = b;
    p.k_bound = k;
    p.phi0_abs = 0.0;
    switch (spec.class_tag) {
        case ClassTag::convex:
            p.lambda = 0.5;
            p.a_majorant = {1.0};
            p.b_majorant = {0.0, k};
            break;
        case ClassTag::univalent:
            p.lambda = 0.25;
            p.a_majorant = {0.0, 1.0};
            p.b_majorant = {0.0, 0.0, k};
            break;
        case ClassTag::concave:
            p.lambda = 1.0 / (2.0 * spec.alpha);
            p.a_majorant = {0.0, 1.0};
            p.b_majorant = {0.0, 0.0, k};
            break;
    }

    // Dilatation-consistency invariant on the produced coefficients.
    for (const double r : {0.1, 0.25, 0.3}) {
        double lhs = 0.0, rhs = 0.0, r2n = r * r;
        for (int n = 1; n <= M; ++n) {
            lhs += n * std::norm(b[static_cast<size_t>(n)]) * r2n;
            rhs += n * std::norm(a[static_cast<size_t>(n)]) * r2n;
            r2n *= r * r;
        }
        if (lhs > k * k * rhs * (1.0 + 1e-9) + 1e-18)
            throw std::logic_error("sample_admissible: coefficient inequality violated");
    }
    return p;
}

SharpnessReport sharpness_probe(Theorem t, double K, double alpha, double mu, double delta,
                                int M) {
    if (delta <= 0.0 || delta >= 0.1)
        throw std::invalid_argument("sharpness_probe: delta must lie in (0, 0.1)");
    SharpnessReport rep;
    rep.theorem = t;
    rep.K = K;
    rep.alpha = alpha;
    rep.mu = mu;
    rep.delta = delta;

    Params params;
    params.K = K;
    params.alpha = alpha;
    params.mu = mu;
    rep.r0 = solve_radius(make_problem(t, params)).estimate;
    rep.r_below = rep.r0 * (1.0 - delta);
    rep.r_above = rep.r0 * (1.0 + delta);
    if (rep.r_above >= 0.99)
        throw ParameterDomainError("sharpness_probe: probe point exceeds the convergence guard");

    WitnessSpec wspec;
    wspec.theorem = t;
    wspec.K = K;
    wspec.alpha = alpha;
    const HarmonicPair w = build_witness(wspec, M);
    rep.below = check_inequality(t, w, rep.r_below, mu).verdict;
    rep.above = check_inequality(t, w, rep.r_above, mu).verdict;

    switch (t) {
        case Theorem::ThmC:
        case Theorem::ThmD:
        case Theorem::ThmF:
        case Theorem::ThmG:
        case Theorem::ThmH:
        case Theorem::T41:
        case Theorem::T42:
        case Theorem::T43:
        case Theorem::T44:
        case Theorem::T51:
        case Theorem::T52:
            rep.sharp_claim = true;
            break;
        default:
            rep.sharp_claim = false;  // one-sided probe only
            break;
    }
    rep.ok = (rep.below == Verdict::holds) &&
             (!rep.sharp_claim || rep.above == Verdict::fails);
    return rep;
}

CampaignReport falsify(Theorem t, int trials, double r_fraction, std::uint64_t seed, double K,
                       double alpha, int M) {
    if (r_fraction <= 0.0 || r_fraction >= 1.0)
        throw std::invalid_argument("falsify: r_fraction must lie in (0, 1)");
    if (trials < 1) throw std::invalid_argument("falsify: trials must be >= 1");

    CampaignReport rep;
    rep.theorem = t;
    rep.K = K;
    rep.alpha = alpha;
    rep.r_fraction = r_fraction;
    rep.seed = seed;
    rep.trials = trials;

    Params params;
    params.K = K;
    params.alpha = alpha;
    rep.r0 = solve_radius(make_problem(t, params)).estimate;
    rep.r = r_fraction * rep.r0;

    SampleSpec sspec;
    sspec.class_tag = falsify_class(t);
    sspec.K = K;
    sspec.alpha = alpha;
    rep.verdicts.reserve(static_cast<size_t>(trials));
    constexpr std::uint64_t kMix = 0x9E3779B97F4A7C15ull;
    for (int i = 0; i < trials; ++i) {
        sspec.schwarz_seed = seed ^ (kMix * (2ull * static_cast<std::uint64_t>(i) + 1));
        sspec.dilatation_seed = seed ^ (kMix * (2ull * static_cast<std::uint64_t>(i) + 2));
        const HarmonicPair p = sample_admissible(sspec, M);
        const Verdict v = check_inequality(t, p, rep.r).verdict;
        rep.verdicts.push_back(v);
        if (v == Verdict::holds)
            ++rep.holds;
        else if (v == Verdict::fails)
            ++rep.fails;
        else
            ++rep.inconclusive;
    }
    return rep;
}

}  // namespace bohr
