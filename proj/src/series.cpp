#include "bohr/series.hpp"

#include <cmath>
#include <map>

#include "bohr/errors.hpp"

namespace bohr {

ConcaveCoefficients concave_coefficients(double alpha, int M) {
    if (alpha < 1.0 || alpha > 2.0)
        throw ParameterDomainError("concave_coefficients: alpha must lie in [1, 2]");
    if (M < 1) throw std::invalid_argument("concave_coefficients: M must be >= 1");
    // w = ((1+z)/(1-z))^alpha satisfies (1 - z^2) w' = 2 alpha w.
    std::vector<double> w(static_cast<size_t>(M) + 1);
    w[0] = 1.0;
    w[1] = 2.0 * alpha;
    for (int n = 1; n < M; ++n)
        w[static_cast<size_t>(n) + 1] =
            (2.0 * alpha * w[static_cast<size_t>(n)] + (n - 1.0) * w[static_cast<size_t>(n) - 1]) /
            (n + 1.0);
    ConcaveCoefficients out;
    out.alpha = alpha;
    out.values.resize(static_cast<size_t>(M));
    for (int n = 1; n <= M; ++n) out.values[static_cast<size_t>(n) - 1] = w[static_cast<size_t>(n)] / (2.0 * alpha);
    return out;
}

SumId sum_id_from_string(const std::string& name) {
    static const std::map<std::string, SumId> table = {
        {"geometric", SumId::geometric},   {"n_rn", SumId::n_rn},
        {"n_rn_from2", SumId::n_rn_from2}, {"n2_rn_minus1", SumId::n2_rn_minus1},
        {"r2n", SumId::r2n},               {"n_r2n", SumId::n_r2n},
        {"n2_r2n", SumId::n2_r2n},         {"n3_r2n", SumId::n3_r2n},
        {"f_alpha", SumId::f_alpha},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown closed-form identifier: " + name);
    return it->second;
}

double closed_form(SumId id, double r, double alpha) {
    if (r < 0.0 || r >= 1.0) throw ParameterDomainError("closed_form: r must lie in [0, 1)");
    const double r2 = r * r;
    switch (id) {
        case SumId::geometric: return r / (1 - r);
        case SumId::n_rn: return r / ((1 - r) * (1 - r));
        case SumId::n_rn_from2: return r2 * (2 - r) / ((1 - r) * (1 - r));
        case SumId::n2_rn_minus1: return (1 + r) / std::pow(1 - r, 3);
        case SumId::r2n: return r2 / (1 - r2);
        case SumId::n_r2n: return r2 / ((1 - r2) * (1 - r2));
        case SumId::n2_r2n: return r2 * (1 + r2) / std::pow(1 - r2, 3);
        case SumId::n3_r2n: return r2 * (r2 * r2 + 4 * r2 + 1) / std::pow(1 - r2, 4);
        case SumId::f_alpha:
            if (alpha < 1.0 || alpha > 2.0)
                throw ParameterDomainError("closed_form: alpha must lie in [1, 2]");
            return (std::pow((1 + r) / (1 - r), alpha) - 1.0) / (2.0 * alpha);
    }
    throw std::invalid_argument("closed_form: unknown identifier");
}

namespace {

double abs_sum(const TruncatedSeries& s, double r) {
    double acc = 0.0, rn = 1.0;
    for (const auto& c : s.coeffs) {
        acc += std::abs(c) * rn;
        rn *= r;
    }
    return acc;
}

}  // namespace

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.r_max != b.r_max)
        throw std::invalid_argument("multiply: operands must share a common r_max");
    const int M = std::min(a.order(), b.order());
    TruncatedSeries out;
    out.r_max = a.r_max;
    out.coeffs.assign(static_cast<size_t>(M) + 1, {0.0, 0.0});
    for (int i = 0; i <= M; ++i) {
        if (i >= static_cast<int>(a.coeffs.size())) break;
        for (int j = 0; i + j <= M && j < static_cast<int>(b.coeffs.size()); ++j)
            out.coeffs[static_cast<size_t>(i + j)] += a.coeffs[static_cast<size_t>(i)] * b.coeffs[static_cast<size_t>(j)];
    }
    const double sa = abs_sum(a, a.r_max), sb = abs_sum(b, b.r_max);
    out.tail_bound = sa * b.tail_bound + sb * a.tail_bound + a.tail_bound * b.tail_bound;
    return out;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!inner.coeffs.empty() && std::abs(inner.coeffs[0]) != 0.0)
        throw std::invalid_argument("compose: inner constant term must be zero (omega(0)=0)");
    const int M = outer.order();
    TruncatedSeries in = inner;
    in.coeffs.resize(static_cast<size_t>(M) + 1, {0.0, 0.0});
    in.r_max = outer.r_max;
    TruncatedSeries acc;
    acc.r_max = outer.r_max;
    acc.coeffs.assign(static_cast<size_t>(M) + 1, {0.0, 0.0});
    for (int i = M; i >= 0; --i) {
        acc = multiply(acc, in);
        acc.coeffs.resize(static_cast<size_t>(M) + 1, {0.0, 0.0});
        acc.coeffs[0] += outer.coeffs[static_cast<size_t>(i)];
    }
    acc.tail_bound = outer.tail_bound;  // |inner| <= r on |z| = r when inner is a Schwarz-type map
    return acc;
}

double tail_poly_sum(const std::vector<double>& cs, double rho, int M) {
    if (rho < 0.0 || rho >= 1.0) throw ParameterDomainError("tail_poly_sum: rho must lie in [0, 1)");
    if (rho == 0.0) return 0.0;
    auto maj = [&](double n) {
        double acc = 0.0, p = 1.0;
        for (double c : cs) {
            acc += c * p;
            p *= n;
        }
        return acc;
    };
    const int deg = static_cast<int>(cs.size()) - 1;
    double sum = 0.0;
    double rn = std::pow(rho, M + 1);
    int n = M + 1;
    for (; n < M + 200000; ++n) {
        const double term = maj(static_cast<double>(n)) * rn;
        sum += term;
        if (term <= sum * 1e-18 && n > M + 4) break;
        rn *= rho;
    }
    // Geometric bound on whatever is left.
    const double q = rho * std::pow((n + 1.0) / n, deg);
    if (q < 1.0) sum += maj(static_cast<double>(n + 1)) * rn * q / (1 - q);
    return sum * (1.0 + 1e-12) + 1e-300;
}

}  // namespace bohr
