#include "bohr/roots.hpp"

#include <cmath>

#include "bohr/errors.hpp"

namespace bohr {

std::string to_string(Certificate c) {
    return c == Certificate::sturm_count_one ? "sturm_count_one" : "monotone_sign_change";
}

namespace {

int sign_variations(const std::vector<RationalPolynomial>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign(p.evaluate(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

const Rational kEndpointNudge = Rational(1, 1000000000);

}  // namespace

int sturm_count(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (lo >= hi) throw std::invalid_argument("sturm_count: lo >= hi");
    const auto sf = p.squarefree_part();
    Rational a = lo, b = hi;
    if (sf.evaluate(a) == 0) a += kEndpointNudge;
    if (sf.evaluate(b) == 0) b -= kEndpointNudge;
    if (sf.evaluate(a) == 0 || sf.evaluate(b) == 0 || a >= b)
        throw std::invalid_argument("sturm_count: endpoint is a root even after perturbation");
    const auto chain = sturm_chain(sf);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

CertifiedRoot isolate_root(const RationalPolynomial& p, const Rational& lo, const Rational& hi,
                           double tol) {
    if (tol <= 0) throw std::invalid_argument("isolate_root: tol must be positive");
    const int count = sturm_count(p, lo, hi);
    if (count != 1)
        throw CatalogError("isolate_root: Sturm count on interval is " + std::to_string(count) +
                           ", expected exactly 1");
    const auto sf = p.squarefree_part();
    Rational a = lo, b = hi;
    if (sf.evaluate(a) == 0) a += kEndpointNudge;
    if (sf.evaluate(b) == 0) b -= kEndpointNudge;
    int sa = sign(sf.evaluate(a));
    const Rational tol_r = rational_from_double(tol);

    while (b - a > tol_r) {
        const Rational mid = (a + b) / 2;
        const int sm = sign(sf.evaluate(mid));
        if (sm == 0) {
            // Exact hit; shrink symmetrically around the root.
            const Rational h = tol_r / 2;
            a = mid - h;
            b = mid + h;
            break;
        }
        if (sm == sa) {
            a = mid;
        } else {
            b = mid;
        }
    }

    CertifiedRoot root;
    root.lo = a;
    root.hi = b;
    root.certificate = Certificate::sturm_count_one;
    double est = to_double((a + b) / 2);
    const double deriv = sf.derivative().evaluate(est);
    if (deriv != 0.0) {
        const double refined = est - sf.evaluate(est) / deriv;
        if (refined > to_double(a) && refined < to_double(b)) est = refined;
    }
    root.estimate = est;
    root.residual = std::abs(p.evaluate(est));
    return root;
}

CertifiedRoot isolate_smallest_root(const RationalPolynomial& p, const Rational& lo,
                                    const Rational& hi, double tol) {
    int count = sturm_count(p, lo, hi);
    if (count == 0) throw CatalogError("isolate_smallest_root: no roots in interval");
    Rational a = lo, b = hi;
    while (count > 1) {
        const Rational mid = (a + b) / 2;
        const int left = sturm_count(p, a, mid);
        if (left > 0) {
            b = mid;
            count = left;
        } else {
            a = mid;
            count = sturm_count(p, a, b);
        }
    }
    return isolate_root(p, a, b, tol);
}

CertifiedRoot bisect_monotone(const std::function<double(double)>& f, double lo, double hi,
                              double tol) {
    if (tol <= 0) throw std::invalid_argument("bisect_monotone: tol must be positive");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0 || fhi == 0.0 || (flo > 0) == (fhi > 0))
        throw CatalogError("bisect_monotone: endpoints do not bracket a sign change");
    double a = lo, b = hi;
    while (b - a > tol) {
        const double mid = a + (b - a) / 2;
        if (mid <= a || mid >= b) break;  // hit floating resolution
        const double fm = f(mid);
        if (fm == 0.0) {
            a = mid - tol / 2;
            b = mid + tol / 2;
            break;
        }
        if ((fm > 0) == (flo > 0)) {
            a = mid;
            flo = fm;
        } else {
            b = mid;
        }
    }
    CertifiedRoot root;
    root.lo = rational_from_double(a);
    root.hi = rational_from_double(b);
    root.estimate = a + (b - a) / 2;
    root.certificate = Certificate::monotone_sign_change;
    root.residual = std::abs(f(root.estimate));
    return root;
}

}  // namespace bohr
