#include "bohr/functionals.hpp"

#include <cmath>

#include "bohr/errors.hpp"

namespace bohr {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

void require_r(const HarmonicPair& p, double r) {
    if (r < 0.0 || r > p.a.r_max)
        throw ParameterDomainError("functional: r outside [0, r_max]");
}

// Polynomial-in-n helpers for the majorant tails.
std::vector<double> poly_square(const std::vector<double>& c) {
    if (c.empty()) return {};
    std::vector<double> out(2 * c.size() - 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) out[i + j] += c[i] * c[j];
    return out;
}

std::vector<double> poly_times_n(const std::vector<double>& c) {
    std::vector<double> out(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i];
    return out;
}

double tail_or_stored(const std::vector<double>& maj, const TruncatedSeries& s, double rho) {
    if (!maj.empty()) return tail_poly_sum(maj, rho, s.order());
    return s.tail_bound;
}

// sum_{n >= from_n} w(n) |c_n|^e r^{?n} building blocks, truncated part only.
double partial_sum(const TruncatedSeries& s, double r, int from_n,
                   double (*weight)(int), bool squared) {
    double acc = 0.0;
    const double base = squared ? r * r : r;
    double rn = std::pow(base, from_n);
    for (int n = from_n; n <= s.order(); ++n) {
        const double m = std::abs(s.coeffs[static_cast<size_t>(n)]);
        acc += weight(n) * (squared ? m * m : m) * rn;
        rn *= base;
    }
    return acc;
}

double w_one(int) { return 1.0; }
double w_n(int n) { return static_cast<double>(n); }

}  // namespace

FunctionalValue majorant_sum(const HarmonicPair& p, double r, int from_n) {
    require_r(p, r);
    if (from_n < 1) throw std::invalid_argument("majorant_sum: from_n must be >= 1");
    FunctionalValue out;
    out.value = partial_sum(p.a, r, from_n, w_one, false) +
                partial_sum(p.b, r, from_n, w_one, false);
    out.tail_error = tail_or_stored(p.a_majorant, p.a, r) + tail_or_stored(p.b_majorant, p.b, r);
    return out;
}

FunctionalValue refined_sum(const HarmonicPair& p, double r) {
    require_r(p, r);
    if (p.lambda <= 0.0 || p.lambda > 1.0)
        throw ParameterDomainError("refined_sum: lambda must lie in (0, 1]");
    const double weight = 1.0 / (2.0 - p.lambda) + r / (1.0 - r);
    const double sq = partial_sum(p.a, r, 1, w_one, true) + partial_sum(p.b, r, 1, w_one, true);
    FunctionalValue lin = majorant_sum(p, r);
    // Per series: majorant-based tail when available, otherwise the
    // sum_{n>M} x_n^2 <= (sum_{n>M} x_n)^2 bound for x_n = |c_n| r^n.
    auto sq_tail_of = [r](const std::vector<double>& maj, const TruncatedSeries& s) {
        if (!maj.empty()) return tail_poly_sum(poly_square(maj), r * r, s.order());
        return s.tail_bound * s.tail_bound;
    };
    const double sq_tail = sq_tail_of(p.a_majorant, p.a) + sq_tail_of(p.b_majorant, p.b);
    FunctionalValue out;
    out.value = lin.value + weight * sq;
    out.tail_error = lin.tail_error + weight * sq_tail;
    return out;
}

FunctionalValue area_term(const HarmonicPair& p, double r) {
    require_r(p, r);
    const double s = partial_sum(p.a, r, 1, w_n, true);
    double tail = 0.0;
    if (!p.a_majorant.empty())
        tail = tail_poly_sum(poly_times_n(poly_square(p.a_majorant)), r * r, p.a.order());
    else if (p.a.tail_bound != 0.0)
        throw CatalogError("area_term: no coefficient majorant available for the tail");
    FunctionalValue out;
    out.value = std::sqrt(s);
    out.tail_error = std::sqrt(s + tail) - out.value;
    return out;
}

FunctionalValue rogosinski_sum(const HarmonicPair& p, double r, RogosinskiVariant variant,
                               int from_n) {
    require_r(p, r);
    if (from_n < 1) throw std::invalid_argument("rogosinski_sum: from_n must be >= 1");
    const double h_abs = p.phi0_abs + partial_sum(p.a, r, 1, w_one, false);
    const double tail_a = tail_or_stored(p.a_majorant, p.a, r);
    const double tail_b = tail_or_stored(p.b_majorant, p.b, r);
    FunctionalValue out;
    if (variant == RogosinskiVariant::with_h_abs) {
        out.value = h_abs + partial_sum(p.a, r, from_n, w_one, false) +
                    partial_sum(p.b, r, from_n, w_one, false);
        out.tail_error = 2.0 * tail_a + tail_b;
        return out;
    }
    // |h| + |h'| r + sum_{n>=2} |a_n| r^n + sum_{n>=1} |b_n| r^n, with
    // |h'| r surrogate sum n |a_n| r^n.
    const double hp = partial_sum(p.a, r, 1, w_n, false);
    double hp_tail;
    if (!p.a_majorant.empty())
        hp_tail = tail_poly_sum(poly_times_n(p.a_majorant), r, p.a.order());
    else if (p.a.tail_bound == 0.0)
        hp_tail = 0.0;
    else
        throw CatalogError("rogosinski_sum: no coefficient majorant for the derivative tail");
    out.value = h_abs + hp + partial_sum(p.a, r, 2, w_one, false) +
                partial_sum(p.b, r, 1, w_one, false);
    out.tail_error = 2.0 * tail_a + hp_tail + tail_b;
    return out;
}

double pointwise_h_abs(const HarmonicPair& p, double r) {
    require_r(p, r);
    std::complex<double> acc{0.0, 0.0};
    double rn = 1.0;
    for (const auto& c : p.a.coeffs) {
        acc += c * rn;
        rn *= r;
    }
    return std::abs(acc);
}

CheckResult check_inequality(Theorem t, const HarmonicPair& p, double r, double mu, int N) {
    FunctionalValue fv;
    double bound;
    switch (t) {
        case Theorem::ThmC:
        case Theorem::ThmD:
        case Theorem::ThmE:
        case Theorem::ThmH:
        case Theorem::T51:
            fv = majorant_sum(p, r);
            bound = p.lambda;
            break;
        case Theorem::ThmF:
        case Theorem::ThmG:
        case Theorem::T31:
        case Theorem::T32: {
            fv = refined_sum(p, r);
            bound = p.lambda;
            break;
        }
        case Theorem::T41:
        case Theorem::T41R:
        case Theorem::T42: {
            fv = majorant_sum(p, r);
            const FunctionalValue area = area_term(p, r);
            fv.value += mu * area.value;
            fv.tail_error += mu * area.tail_error;
            bound = p.lambda;
            break;
        }
        case Theorem::T43:
        case Theorem::T44:
            fv = rogosinski_sum(p, r, RogosinskiVariant::with_h_and_hprime);
            bound = p.phi0_abs + p.lambda;
            break;
        case Theorem::T52:
        case Theorem::ThmI:
            fv = rogosinski_sum(p, r, RogosinskiVariant::with_h_abs, N);
            bound = p.phi0_abs + p.lambda;
            break;
        default:
            throw std::invalid_argument("check_inequality: no functional catalogued for " +
                                        to_string(t));
    }
    CheckResult out;
    out.value = fv.value;
    out.tail_error = fv.tail_error;
    out.bound = bound;
    if (fv.value + fv.tail_error <= bound)
        out.verdict = Verdict::holds;
    else if (fv.value > bound)
        out.verdict = Verdict::fails;
    else
        out.verdict = Verdict::inconclusive;
    return out;
}

}  // namespace bohr
