#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "bohr/rational.hpp"

namespace bohr {

/// Univariate polynomial with exact rational coefficients, ascending degree
/// order. All arithmetic is exact; this is the substrate for Sturm
/// certification, so no floating point enters any sign decision.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    RationalPolynomial(std::initializer_list<Rational> coeffs);

    static RationalPolynomial from_ints(std::initializer_list<long long> coeffs);
    static RationalPolynomial monomial(int degree, const Rational& c = Rational(1));

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const;

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;

    RationalPolynomial derivative() const;

    RationalPolynomial operator-() const;
    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& s) const;
    bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }

    // Euclidean division; exact over the rationals.
    std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const;

    // Monic gcd via the Euclidean algorithm.
    static RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

    // p / gcd(p, p'); same distinct roots, all simple.
    RationalPolynomial squarefree_part() const;

private:
    std::vector<Rational> c_;
    void normalize();
};

RationalPolynomial pow(const RationalPolynomial& p, int e);

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& squarefree);

}  // namespace bohr
