#pragma once

#include <functional>
#include <string>

#include "bohr/polynomial.hpp"

namespace bohr {

enum class Certificate { sturm_count_one, monotone_sign_change };

std::string to_string(Certificate c);

/// An isolating interval together with the evidence that it isolates: either
/// a Sturm count of exactly one, or a caller-asserted monotone sign change.
struct CertifiedRoot {
    Rational lo;
    Rational hi;
    double estimate = 0.0;
    Certificate certificate = Certificate::sturm_count_one;
    double residual = 0.0;

    double width() const { return to_double(hi - lo); }
};

/// Exact number of distinct real roots of p in (lo, hi). Endpoints that land
/// on a root are nudged by 1/10^9 once; a second hit is an error.
int sturm_count(const RationalPolynomial& p, const Rational& lo, const Rational& hi);

/// Certified bisection for a polynomial known (via Sturm) to have exactly one
/// root in (lo, hi). The point estimate is the interval midpoint, refined by
/// one Newton step when that step stays inside the interval.
CertifiedRoot isolate_root(const RationalPolynomial& p, const Rational& lo, const Rational& hi,
                           double tol);

/// Narrows (lo, hi) to an interval containing only the smallest root, then
/// isolates it. Needed where a theorem asks for "the smallest positive root".
CertifiedRoot isolate_smallest_root(const RationalPolynomial& p, const Rational& lo,
                                    const Rational& hi, double tol);

/// Plain bisection for a function the caller asserts is monotone on [lo, hi].
CertifiedRoot bisect_monotone(const std::function<double(double)>& f, double lo, double hi,
                              double tol);

}  // namespace bohr
