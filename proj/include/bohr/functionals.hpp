#pragma once

#include <string>

#include "bohr/radii.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// f = h + conj(g) with analytic part a (h) and co-analytic part b (g).
/// a_majorant / b_majorant are coefficients c_i of a polynomial in n with
/// |a_n| <= sum c_i n^i for every n beyond the truncation order; they feed
/// the rigorous tail bounds.
struct HarmonicPair {
    TruncatedSeries a;
    TruncatedSeries b;
    double k_bound = 0.0;
    double lambda = 0.5;    // d(phi(0), boundary of phi's image)
    double phi0_abs = 0.0;  // |phi(0)|
    std::vector<double> a_majorant;
    std::vector<double> b_majorant;
};

/// value is a lower bound, value + tail_error an upper bound, for the true
/// infinite-series functional.
struct FunctionalValue {
    double value = 0.0;
    double tail_error = 0.0;
};

/// sum_{n >= from_n} (|a_n| + |b_n|) r^n.
FunctionalValue majorant_sum(const HarmonicPair& p, double r, int from_n = 1);

/// Majorant sum plus the weighted square correction
/// (1/(2-lambda) + r/(1-r)) * (sum |a_n|^2 r^{2n} + sum |b_n|^2 r^{2n}).
FunctionalValue refined_sum(const HarmonicPair& p, double r);

/// sqrt(sum n |a_n|^2 r^{2n}), the normalized area quantity of h.
FunctionalValue area_term(const HarmonicPair& p, double r);

enum class RogosinskiVariant { with_h_abs, with_h_and_hprime };

/// |h| (and |h'| r when requested) via the proofs' upper surrogate
/// |phi(0)| + sum |a_n| r^n (resp. sum n |a_n| r^{n-1}), plus the
/// coefficient tail starting at from_n (from 2 for the |h'| variant's
/// analytic tail, per the statements).
FunctionalValue rogosinski_sum(const HarmonicPair& p, double r, RogosinskiVariant variant,
                               int from_n = 1);

/// Pointwise |h(r)| on the positive real axis; strictly below the surrogate
/// for nontrivial pairs. Sanity value only.
double pointwise_h_abs(const HarmonicPair& p, double r);

enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);

struct CheckResult {
    Verdict verdict = Verdict::inconclusive;
    double value = 0.0;
    double tail_error = 0.0;
    double bound = 0.0;
};

/// Dispatches the theorem's left-hand functional and bound:
/// majorant vs lambda (ThmC/D/E, T51), refined vs lambda (ThmF/G, T31/T32),
/// majorant + mu * area vs lambda (T41/T41R/T42), Rogosinski forms vs
/// |phi(0)| + lambda (T43/T44, T52, ThmI). holds when value + tail <= bound,
/// fails when value > bound, inconclusive when only the tail overshoots.
CheckResult check_inequality(Theorem t, const HarmonicPair& p, double r, double mu = 0.0,
                             int N = 1);

}  // namespace bohr
