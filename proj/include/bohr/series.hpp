#pragma once

#include <complex>
#include <string>
#include <vector>

namespace bohr {

/// Finite coefficient list c_0..c_M with a rigorous bound on the suppressed
/// remainder: tail_bound >= sum_{n>M} |c_n| r^n for every r <= r_max.
struct TruncatedSeries {
    std::vector<std::complex<double>> coeffs;
    double r_max = 0.99;
    double tail_bound = 0.0;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Coefficients A_1..A_M of f_alpha(z) = ((1+z)/(1-z))^alpha - 1) / (2 alpha).
struct ConcaveCoefficients {
    double alpha = 1.0;
    std::vector<double> values;  // values[n-1] = A_n
};

/// O(M) three-term recurrence (n+1) w_{n+1} = 2 alpha w_n + (n-1) w_{n-1},
/// w_0 = 1, A_n = w_n / (2 alpha). For integer alpha the arithmetic is exact
/// in doubles (every intermediate is a small integer).
ConcaveCoefficients concave_coefficients(double alpha, int M);

enum class SumId {
    geometric,        // sum r^n            = r/(1-r)
    n_rn,             // sum n r^n          = r/(1-r)^2
    n_rn_from2,       // sum_{n>=2} n r^n   = r^2 (2-r)/(1-r)^2
    n2_rn_minus1,     // sum n^2 r^{n-1}    = (1+r)/(1-r)^3
    r2n,              // sum r^{2n}         = r^2/(1-r^2)
    n_r2n,            // sum n r^{2n}       = r^2/(1-r^2)^2
    n2_r2n,           // sum n^2 r^{2n}     = r^2 (1+r^2)/(1-r^2)^3
    n3_r2n,           // sum n^3 r^{2n}     = r^2 (r^4+4r^2+1)/(1-r^2)^4
    f_alpha,          // ((1+r)/(1-r))^alpha - 1) / (2 alpha)
};

SumId sum_id_from_string(const std::string& name);

double closed_form(SumId id, double r, double alpha = 1.0);

/// Cauchy product truncated at the smaller order; tails propagate as
/// |a| tail_b + |b| tail_a + tail_a tail_b with majorant sums at r_max.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Horner-style composition (outer o inner), truncated at outer's order.
/// inner must have zero constant term; exact for polynomial inputs whose
/// total degree stays below the truncation order.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// sum_{n>M} (c0 + c1 n + c2 n^2 + ...) rho^n, with a small safety factor.
/// Used for tail bounds of series whose coefficients obey a polynomial
/// majorant; rho in [0, 1).
double tail_poly_sum(const std::vector<double>& cs, double rho, int M);

}  // namespace bohr
