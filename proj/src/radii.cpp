#include "bohr/radii.hpp"

#include <cmath>
#include <map>

#include "bohr/errors.hpp"
#include "bohr/series.hpp"

namespace bohr {

QuasiconformalParam QuasiconformalParam::from_K(double K) {
    if (!(K >= 1.0)) throw ParameterDomainError("K must be >= 1");
    return {K, (K - 1.0) / (K + 1.0)};
}

std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::ThmA: return "ThmA";
        case Theorem::ThmB: return "ThmB";
        case Theorem::ThmC: return "ThmC";
        case Theorem::ThmD: return "ThmD";
        case Theorem::ThmE: return "ThmE";
        case Theorem::ThmF: return "ThmF";
        case Theorem::ThmG: return "ThmG";
        case Theorem::ThmH: return "ThmH";
        case Theorem::ThmI: return "ThmI";
        case Theorem::T31: return "T31";
        case Theorem::T32: return "T32";
        case Theorem::T41: return "T41";
        case Theorem::T41R: return "T41R";
        case Theorem::T42: return "T42";
        case Theorem::T43: return "T43";
        case Theorem::T44: return "T44";
        case Theorem::T51: return "T51";
        case Theorem::T52: return "T52";
    }
    return "?";
}

Theorem theorem_from_string(const std::string& name) {
    static const std::map<std::string, Theorem> table = {
        {"ThmA", Theorem::ThmA}, {"ThmB", Theorem::ThmB}, {"ThmC", Theorem::ThmC},
        {"ThmD", Theorem::ThmD}, {"ThmE", Theorem::ThmE}, {"ThmF", Theorem::ThmF},
        {"ThmG", Theorem::ThmG}, {"ThmH", Theorem::ThmH}, {"ThmI", Theorem::ThmI},
        {"T31", Theorem::T31},   {"T32", Theorem::T32},   {"T41", Theorem::T41},
        {"T41R", Theorem::T41R}, {"T42", Theorem::T42},   {"T43", Theorem::T43},
        {"T44", Theorem::T44},   {"T51", Theorem::T51},   {"T52", Theorem::T52},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown theorem id: " + name);
    return it->second;
}

namespace {

Rational k_rational(double K) {
    const Rational Kr = rational_from_double(K);
    return (Kr - 1) / (Kr + 1);
}

RationalPolynomial t31_poly(const Rational& k) {
    // (3+2k) r^3 - (5+4k^2) r^2 - (3+2k) r + 1
    return RationalPolynomial({Rational(1), -(3 + 2 * k), -(5 + 4 * k * k), 3 + 2 * k});
}

RationalPolynomial thmA_poly(int N) {
    // 2(1+r) r^N - (1-r)^2
    auto p = RationalPolynomial::from_ints({-1, 2, -1});
    return p + RationalPolynomial::monomial(N, Rational(2)) +
           RationalPolynomial::monomial(N + 1, Rational(2));
}

RationalPolynomial thmG_poly() {
    // (1-6r+r^2)(1-r)^2(1+r)^3 - 16 r^2 (1+r^2)
    const auto one_minus = RationalPolynomial::from_ints({1, -1});
    const auto one_plus = RationalPolynomial::from_ints({1, 1});
    const auto lead = RationalPolynomial::from_ints({1, -6, 1});
    return lead * pow(one_minus, 2) * pow(one_plus, 3) -
           RationalPolynomial::from_ints({0, 0, 16, 0, 16});
}

RationalPolynomial t43_poly(const Rational& k) {
    // (1-r)^2 - 2(r^2 + (k+1) r)(1-r) - 2r
    const auto one_minus = RationalPolynomial::from_ints({1, -1});
    const auto inner = RationalPolynomial({Rational(0), k + 1, Rational(1)});
    return pow(one_minus, 2) - (inner * one_minus) * Rational(2) -
           RationalPolynomial::from_ints({0, 2});
}

RationalPolynomial t44_poly(const Rational& k) {
    // (1-r)^3 - 4(r^2(2-r) + (1+k) r)(1-r) - 4r(1+r)
    const auto one_minus = RationalPolynomial::from_ints({1, -1});
    const auto inner = RationalPolynomial({Rational(0), k + 1, Rational(2), Rational(-1)});
    return pow(one_minus, 3) - (inner * one_minus) * Rational(4) -
           RationalPolynomial::from_ints({0, 4, 4});
}

RationalPolynomial t42_poly(const Rational& k, const Rational& mu) {
    // (2k+3) r^2 + 2(mu+k+1) r - 1
    return RationalPolynomial({Rational(-1), 2 * (mu + k + 1), 2 * k + 3});
}

double power_ratio(double r, double alpha) { return std::pow((1 + r) / (1 - r), alpha); }

}  // namespace

RationalPolynomial t32_statement_poly(const Rational& k) {
    return RationalPolynomial({Rational(1), -(5 + 4 * k), -(21 + 4 * k + 16 * k * k), Rational(1),
                               -(16 + 16 * k * k)});
}

RationalPolynomial t32_proof_poly(const Rational& k) {
    // 16 (k^2+1)(r^2+1) r^3 - R1(r) + R2(r), i.e. G2(1, r) assembled from the
    // proof's R1, R2. (The flat degree-7 coefficient list printed alongside
    // it has a transcription slip: it has no root in (0,1) at all.)
    const Rational k2 = k * k;
    const RationalPolynomial R1({Rational(1), -(5 + 4 * k), 9 - 4 * k + 16 * k2,
                                 27 + 8 * k + 16 * k2, 27 + 8 * k + 16 * k2, 9 - 4 * k + 16 * k2,
                                 -(5 + 4 * k), Rational(1)});
    const RationalPolynomial R2({Rational(2), -(10 + 8 * k), -(14 + 8 * k), 22 + 16 * k,
                                 22 + 16 * k, -(14 + 8 * k), -(10 + 8 * k), Rational(2)});
    const RationalPolynomial lead({Rational(0), Rational(0), Rational(0), 16 * (k2 + 1),
                                   Rational(0), 16 * (k2 + 1)});
    return lead - R1 + R2;
}

RadiusProblem make_problem(Theorem t, const Params& params) {
    RadiusProblem p;
    p.theorem = t;
    p.params = params;
    p.qc = QuasiconformalParam::from_K(params.K);
    const double k = p.qc.k;

    const bool needs_alpha = (t == Theorem::ThmH || t == Theorem::ThmI || t == Theorem::T51 ||
                              t == Theorem::T52);
    if (needs_alpha && (params.alpha < 1.0 || params.alpha > 2.0))
        throw ParameterDomainError("alpha must lie in [1, 2]");
    if ((t == Theorem::T41 || t == Theorem::T41R || t == Theorem::T42) && params.mu < 0.0)
        throw ParameterDomainError("mu must be >= 0");
    if ((t == Theorem::ThmA || t == Theorem::ThmI) && params.N < 1)
        throw ParameterDomainError("N must be >= 1");
    if (t == Theorem::ThmB && std::abs(params.a0) > 1.0)
        throw ParameterDomainError("|a0| must be <= 1");

    switch (t) {
        case Theorem::ThmA:
            p.kind = ProblemKind::polynomial;
            p.hi = 1.0;
            p.increasing = true;
            break;
        case Theorem::ThmB:
        case Theorem::ThmD:
            p.kind = ProblemKind::closed_form;
            p.hi = 1.0;
            p.increasing = true;
            break;
        case Theorem::ThmC:
            p.kind = ProblemKind::closed_form;
            p.hi = 1.0;
            p.increasing = false;
            break;
        case Theorem::ThmE:
            p.kind = ProblemKind::transcendental;
            p.hi = 1.0;
            p.increasing = false;
            break;
        case Theorem::ThmF:
            p.kind = ProblemKind::polynomial;
            p.hi = 1.0 / 3.0;
            p.increasing = false;
            break;
        case Theorem::ThmG:
            p.kind = ProblemKind::polynomial;
            p.hi = 1.0;
            p.increasing = false;
            break;
        case Theorem::ThmH:
            p.kind = ProblemKind::closed_form;
            p.hi = 0.5;
            p.increasing = true;
            break;
        case Theorem::ThmI:
            p.kind = ProblemKind::transcendental;
            p.hi = 1.0 / 3.0;
            p.increasing = true;
            break;
        case Theorem::T31:
            p.kind = ProblemKind::polynomial;
            p.hi = 1.0 / (3.0 + 2.0 * k);
            p.increasing = false;
            break;
        case Theorem::T32:
            p.kind = ProblemKind::polynomial;
            p.hi = 3.0 + 2.0 * k - 2.0 * std::sqrt(2.0 + 3.0 * k + k * k);
            p.increasing = false;
            break;
        case Theorem::T41:
        case Theorem::T41R:
            p.kind = ProblemKind::transcendental;
            p.hi = 1.0 / 3.0;
            p.increasing = false;
            break;
        case Theorem::T42:
            p.kind = ProblemKind::closed_form;
            p.hi = 1.0;
            p.increasing = true;
            break;
        case Theorem::T43:
            p.kind = ProblemKind::polynomial;
            p.hi = 1.0;
            p.increasing = false;
            break;
        case Theorem::T44:
            p.kind = ProblemKind::polynomial;
            p.hi = 1.0 / 3.0;
            p.increasing = false;
            break;
        case Theorem::T51:
        case Theorem::T52:
            p.kind = ProblemKind::closed_form;
            p.hi = 0.35;  // roots stay <= 1/3; the defining function is positive here
            p.increasing = true;
            break;
    }
    return p;
}

DefiningFunction defining_function(const RadiusProblem& problem) {
    const double k = problem.qc.k;
    const double alpha = problem.params.alpha;
    const double mu = problem.params.mu;
    const int N = problem.params.N;
    DefiningFunction df;

    switch (problem.theorem) {
        case Theorem::ThmA:
            df.poly = thmA_poly(N);
            break;
        case Theorem::ThmB: {
            const double a0 = std::abs(problem.params.a0);
            df.f = [a0](double r) { return (2 + a0) * r - 1; };
            df.poly = RationalPolynomial(
                {Rational(-1), Rational(2) + rational_from_double(a0)});
            return df;
        }
        case Theorem::ThmC:
            df.f = [](double r) { return (1 - r) * (1 - r) - 4 * r; };
            df.poly = RationalPolynomial::from_ints({1, -6, 1});
            return df;
        case Theorem::ThmD:
            df.f = [k](double r) { return (3 + 2 * k) * r - 1; };
            df.poly = RationalPolynomial({Rational(-1), 3 + 2 * k_rational(problem.params.K)});
            return df;
        case Theorem::ThmE:
            df.f = [k](double r) {
                return (1 - r) * (1 - r) - 4 * r * (1 + k * std::sqrt(1 + r));
            };
            return df;
        case Theorem::ThmF:
            df.poly = RationalPolynomial::from_ints({1, -3, -5, 3});
            break;
        case Theorem::ThmG:
            df.poly = thmG_poly();
            break;
        case Theorem::ThmH:
            df.f = [alpha](double r) { return power_ratio(r, alpha) - 2.0; };
            return df;
        case Theorem::ThmI: {
            // F(x) = sum_{n>=N} A_n x^n + f_alpha(x) - 1/(2 alpha); the head
            // sum_{n<N} A_n x^n is subtracted from the closed form, so the
            // series tail is exact.
            const auto head = concave_coefficients(alpha, std::max(1, N)).values;
            df.f = [alpha, N, head](double x) {
                double head_sum = 0.0, xn = x;
                for (int n = 1; n < N; ++n) {
                    head_sum += head[static_cast<size_t>(n) - 1] * xn;
                    xn *= x;
                }
                const double fa = closed_form(SumId::f_alpha, x, alpha);
                return 2.0 * fa - head_sum - 1.0 / (2.0 * alpha);
            };
            return df;
        }
        case Theorem::T31:
            df.poly = t31_poly(k_rational(problem.params.K));
            break;
        case Theorem::T32:
            df.poly = t32_proof_poly(k_rational(problem.params.K));
            break;
        case Theorem::T41:
            df.f = [k, mu](double r) {
                const double r2 = r * r;
                return (1 - r2) * (1 - r2) - 4 * (1 + k) * r * (1 + r) * (1 + r) -
                       4 * mu * r * std::sqrt(r2 * r2 + 4 * r2 + 1);
            };
            return df;
        case Theorem::T41R:
            df.f = [k, mu](double r) {
                const double r2 = r * r;
                return (1 - r2) * (1 - r2) -
                       4 * (1 + k * std::sqrt(1 + r)) * r * (1 + r) * (1 + r) -
                       4 * mu * r * std::sqrt(r2 * r2 + 4 * r2 + 1);
            };
            return df;
        case Theorem::T42:
            df.f = [k, mu](double r) { return (2 * k + 3) * r * r + 2 * (mu + k + 1) * r - 1; };
            df.poly = t42_poly(k_rational(problem.params.K), rational_from_double(mu));
            return df;
        case Theorem::T43:
            df.poly = t43_poly(k_rational(problem.params.K));
            break;
        case Theorem::T44:
            df.poly = t44_poly(k_rational(problem.params.K));
            break;
        case Theorem::T51:
            df.f = [k, alpha](double r) { return (k + 1) * (power_ratio(r, alpha) - 1) - 1; };
            return df;
        case Theorem::T52:
            df.f = [k, alpha](double r) { return (k + 2) * (power_ratio(r, alpha) - 1) - 1; };
            return df;
    }
    // Polynomial-only cases fall through to here.
    const auto poly = *df.poly;
    df.f = [poly](double r) { return poly.evaluate(r); };
    return df;
}

double thmH_verbatim(double alpha) {
    const double t = std::pow(2.0, 1.0 / alpha);
    const double printed = (t - 1) * (t + 1);
    throw CatalogError(
        "ThmH verbatim form (2^{1/alpha}-1)(2^{1/alpha}+1) = " + std::to_string(printed) +
        " is >= 1 for alpha in [1,2] and cannot be a radius; the quotient form "
        "(2^{1/alpha}-1)/(2^{1/alpha}+1) is what solve_radius implements");
}

namespace {

double closed_form_value(const RadiusProblem& p) {
    const double k = p.qc.k;
    switch (p.theorem) {
        case Theorem::ThmB: return 1.0 / (2.0 + std::abs(p.params.a0));
        case Theorem::ThmC: return 3.0 - 2.0 * std::sqrt(2.0);
        case Theorem::ThmD: return (p.params.K + 1.0) / (5.0 * p.params.K + 1.0);
        case Theorem::ThmH: {
            const double t = std::pow(2.0, 1.0 / p.params.alpha);
            return (t - 1) / (t + 1);
        }
        case Theorem::T42: {
            const double b = p.params.mu + k + 1.0, a = 2.0 * k + 3.0;
            return (-b + std::sqrt(b * b + a)) / a;
        }
        case Theorem::T51: {
            const double t = std::pow((k + 2.0) / (k + 1.0), 1.0 / p.params.alpha);
            return (t - 1) / (t + 1);
        }
        case Theorem::T52: {
            const double t = std::pow((k + 3.0) / (k + 2.0), 1.0 / p.params.alpha);
            return (t - 1) / (t + 1);
        }
        default: throw std::logic_error("closed_form_value: not a closed-form problem");
    }
}

}  // namespace

CertifiedRoot solve_radius_via_bisection(const RadiusProblem& problem, double tol) {
    const auto df = defining_function(problem);
    return bisect_monotone(df.f, problem.lo, problem.hi, tol);
}

CertifiedRoot solve_radius(const RadiusProblem& problem, double tol) {
    const auto df = defining_function(problem);
    switch (problem.kind) {
        case ProblemKind::closed_form: {
            const double v = closed_form_value(problem);
            const double h = std::max(tol, 1e-13);
            CertifiedRoot root;
            root.lo = rational_from_double(v - h);
            root.hi = rational_from_double(v + h);
            root.estimate = v;
            root.certificate = Certificate::monotone_sign_change;
            root.residual = std::abs(df.f(v));
            const double flo = df.f(v - h), fhi = df.f(v + h);
            if (flo != 0.0 && fhi != 0.0 && (flo > 0) == (fhi > 0))
                throw CatalogError("solve_radius: closed form for " + to_string(problem.theorem) +
                                   " does not bracket a sign change of its defining function");
            return root;
        }
        case ProblemKind::polynomial: {
            const auto& poly = *df.poly;
            const Rational lo = rational_from_double(problem.lo);
            const Rational hi = rational_from_double(problem.hi);
            if (problem.theorem == Theorem::T43) return isolate_smallest_root(poly, lo, hi, tol);
            return isolate_root(poly, lo, hi, tol);
        }
        case ProblemKind::transcendental:
            return bisect_monotone(df.f, problem.lo, problem.hi, tol);
    }
    throw std::logic_error("solve_radius: unreachable");
}

double g1(double lambda, double r, double k) {
    const double r2 = r * r, r3 = r2 * r, k2 = k * k;
    return 4 * (k2 + 1) * r3 * lambda * lambda -
           ((7 + 2 * k + 4 * k2) * r3 + (3 + 4 * k2) * r2 - (3 + 2 * k) * r + 1) * lambda +
           (6 + 4 * k) * r3 - 2 * r2 - (6 + 4 * k) * r + 2;
}

LambdaBranch lambda_branch(double r, double K, double tol) {
    const auto qc = QuasiconformalParam::from_K(K);
    const double k = qc.k;
    const auto r0 = solve_radius(make_problem(Theorem::T31, {.K = K}));
    const double band_hi = (K + 1.0) / (5.0 * K + 1.0);
    if (!(r > r0.estimate && r < band_hi))
        throw ParameterDomainError("lambda_branch: r must lie in (r0(K), (K+1)/(5K+1))");
    if (g1(0.0, r, k) < 0.0 || g1(1.0, r, k) >= 0.0)
        throw CatalogError("lambda_branch: sign pattern G1(0,r) >= 0 > G1(1,r) violated");

    const double a = 4 * (k * k + 1) * r * r * r;
    const double b = -((7 + 2 * k + 4 * k * k) * r * r * r + (3 + 4 * k * k) * r * r -
                       (3 + 2 * k) * r + 1);
    const double c = g1(0.0, r, k);
    const double disc = b * b - 4 * a * c;
    if (disc < 0.0) throw CatalogError("lambda_branch: negative discriminant");
    const double q = -(b + (b >= 0 ? 1.0 : -1.0) * std::sqrt(disc)) / 2.0;
    double lambda = c / q;           // smaller root of the upward parabola
    if (!(lambda > 0.0 && lambda < 1.0)) lambda = q / a;
    if (!(lambda > 0.0 && lambda < 1.0))
        throw CatalogError("lambda_branch: no root in (0, 1)");
    if (std::abs(g1(lambda, r, k)) > std::max(tol, 1e-10) * (1 + std::abs(b)))
        throw CatalogError("lambda_branch: residual check failed");
    return {r, lambda};
}

T32CrossCheck cross_check_T32(double K, double tol) {
    T32CrossCheck rep;
    rep.K = K;
    const auto qc = QuasiconformalParam::from_K(K);
    rep.k = qc.k;
    rep.interval_hi = 3 + 2 * qc.k - 2 * std::sqrt(2 + 3 * qc.k + qc.k * qc.k);
    const Rational kr = k_rational(K);
    const auto stmt = t32_statement_poly(kr);
    const auto proof = t32_proof_poly(kr);
    const Rational lo(0), hi = rational_from_double(rep.interval_hi);
    rep.statement_count = sturm_count(stmt, lo, hi);
    rep.proof_count = sturm_count(proof, lo, hi);
    if (rep.statement_count == 1) rep.statement_root = isolate_root(stmt, lo, hi, tol).estimate;
    if (rep.proof_count == 1) rep.proof_root = isolate_root(proof, lo, hi, tol).estimate;
    rep.root_gap = std::abs(rep.statement_root - rep.proof_root);
    rep.statement_divides_proof = proof.divmod(stmt).second.is_zero();
    return rep;
}

}  // namespace bohr
