#pragma once

#include <functional>
#include <optional>
#include <string>

#include "bohr/roots.hpp"

namespace bohr {

/// Quasiconformality parameter; k = (K-1)/(K+1) is the dilatation bound.
struct QuasiconformalParam {
    double K = 1.0;
    double k = 0.0;

    static QuasiconformalParam from_K(double K);
};

enum class Theorem {
    ThmA,  // bounded analytic Bohr-Rogosinski: 2(1+r) r^N - (1-r)^2 = 0
    ThmB,  // refined radius 1/(2+|a0|)
    ThmC,  // univalent subordination radius 3 - 2 sqrt(2)
    ThmD,  // convex harmonic radius (K+1)/(5K+1)
    ThmE,  // univalent harmonic: (1-r)^2 - 4r(1 + k sqrt(1+r)) = 0
    ThmF,  // refined convex: 3r^3 - 5r^2 - 3r + 1 = 0 (T31 at K=1)
    ThmG,  // refined univalent: (1-6r+r^2)(1-r)^2(1+r)^3 - 16r^2(1+r^2) = 0
    ThmH,  // concave family: (2^{1/alpha}-1)/(2^{1/alpha}+1)
    ThmI,  // concave Bohr-Rogosinski series equation F_{alpha,1}^N
    T31,   // refined convex, K-quasiconformal (cubic in r)
    T32,   // refined univalent, K-quasiconformal (degree-7 proof polynomial)
    T41,   // improved univalent with area term (G3)
    T41R,  // remark variant with k sqrt(1+r) (G4)
    T42,   // improved convex with area term (G5, quadratic)
    T43,   // convex Bohr-Rogosinski with |h|, |h'| (cubic)
    T44,   // univalent Bohr-Rogosinski with |h|, |h'| (G6, quartic)
    T51,   // concave harmonic Bohr radius (G7)
    T52,   // concave harmonic Bohr-Rogosinski (G8)
};

std::string to_string(Theorem t);
Theorem theorem_from_string(const std::string& name);

struct Params {
    double K = 1.0;
    double alpha = 1.0;
    double mu = 0.0;
    int N = 1;
    double a0 = 0.0;  // |a0| for ThmB
};

enum class ProblemKind { closed_form, polynomial, transcendental };

/// One theorem's defining equation bound to a parameter set, with its
/// published search interval and monotonicity direction.
struct RadiusProblem {
    Theorem theorem;
    Params params;
    QuasiconformalParam qc;
    ProblemKind kind;
    double lo = 0.0;
    double hi = 1.0;
    bool increasing = true;  // direction of the defining function across the root
};

RadiusProblem make_problem(Theorem t, const Params& params = {});

struct DefiningFunction {
    std::function<double(double)> f;
    std::optional<RationalPolynomial> poly;  // present when kind == polynomial
};

DefiningFunction defining_function(const RadiusProblem& problem);

/// Dispatch: closed forms evaluate exactly, polynomial kinds go through
/// Sturm + certified bisection, transcendental kinds through monotone
/// bisection.
CertifiedRoot solve_radius(const RadiusProblem& problem, double tol = 1e-12);

/// Alternative route for closed-form problems: bisect the defining function
/// instead of evaluating the formula. Used as a cross-check.
CertifiedRoot solve_radius_via_bisection(const RadiusProblem& problem, double tol = 1e-12);

/// The printed form of ThmH's radius, (2^{1/a}-1)(2^{1/a}+1), is >= 1 for
/// alpha in [1,2] and cannot be a radius; calling this throws with the
/// explanation. The quotient form is what solve_radius implements.
double thmH_verbatim(double alpha);

/// lambda_1(r) branch of the refined convex theorem: unique root in (0,1) of
/// the quadratic G1(lambda, r) = 0, valid for r strictly between the sharp
/// radius and (K+1)/(5K+1).
struct LambdaBranch {
    double r;
    double lambda1;
};

LambdaBranch lambda_branch(double r, double K, double tol = 1e-12);

double g1(double lambda, double r, double k);

/// Both published defining equations for T32: the statement's quartic and
/// the degree-7 polynomial the proof derives from G2(1, r). They are not
/// equal; this report measures the discrepancy without picking a winner.
struct T32CrossCheck {
    double K;
    double k;
    double interval_hi;
    int statement_count = 0;
    int proof_count = 0;
    double statement_root = 0.0;
    double proof_root = 0.0;
    double root_gap = 0.0;
    bool statement_divides_proof = false;
};

T32CrossCheck cross_check_T32(double K, double tol = 1e-12);

// Exact polynomials used by T32 (exposed for the cross-check and tests).
RationalPolynomial t32_statement_poly(const Rational& k);
RationalPolynomial t32_proof_poly(const Rational& k);

}  // namespace bohr
