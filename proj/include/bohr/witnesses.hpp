#pragma once

#include <cstdint>
#include <vector>

#include "bohr/functionals.hpp"

namespace bohr {

struct WitnessSpec {
    Theorem theorem;
    double K = 1.0;
    double alpha = 1.0;
    std::complex<double> unimodular_phase{1.0, 0.0};
};

/// Coefficient-explicit extremal pair for the theorem: half-plane pattern
/// (a_n constant), Koebe pattern (a_n proportional to n), or the concave
/// family pattern (a_n = A_n(alpha)), with b_n = k * phase * a_n and the
/// matching lambda and |phi(0)|.
HarmonicPair build_witness(const WitnessSpec& spec, int M);

enum class ClassTag { convex, univalent, concave };

std::string to_string(ClassTag c);
ClassTag class_tag_from_string(const std::string& name);

/// The subordination class each theorem's hypotheses live in.
ClassTag falsify_class(Theorem t);

struct SampleSpec {
    ClassTag class_tag = ClassTag::convex;
    double K = 1.0;
    double alpha = 1.0;
    std::uint64_t schwarz_seed = 0;
    std::uint64_t dilatation_seed = 1;
    int max_blaschke_degree = 3;
};

/// Random admissible pair: omega = rho * z * B1(z) for a random finite
/// Blaschke product B1 (scaled so sup |omega| < 1 on the boundary), h the
/// class extremal composed with omega, dilatation omega_d = k * rho' * B2,
/// g integrated from g' = omega_d * h'. Verified against the coefficient
/// inequality sum n |b_n|^2 r^{2n} <= k^2 sum n |a_n|^2 r^{2n} at
/// r in {0.1, 0.25, 0.3}; a violation throws (sampler bug, fail loudly).
HarmonicPair sample_admissible(const SampleSpec& spec, int M);

struct SharpnessReport {
    Theorem theorem;
    double K = 1.0;
    double alpha = 1.0;
    double mu = 0.0;
    double delta = 1e-3;
    double r0 = 0.0;
    double r_below = 0.0;
    double r_above = 0.0;
    Verdict below = Verdict::inconclusive;
    Verdict above = Verdict::inconclusive;
    bool sharp_claim = false;  // whether a sharpness statement is catalogued
    bool ok = false;           // holds below, and fails above when sharp_claim
};

/// Evaluate the theorem's functional on its witness at r0 (1 - delta) and
/// r0 (1 + delta). Theorems without a catalogued sharpness claim are probed
/// one-sided (below only).
SharpnessReport sharpness_probe(Theorem t, double K = 1.0, double alpha = 1.0, double mu = 0.0,
                                double delta = 1e-3, int M = 400);

struct CampaignReport {
    Theorem theorem;
    double K = 1.0;
    double alpha = 1.0;
    double r_fraction = 0.99;
    double r = 0.0;
    double r0 = 0.0;
    std::uint64_t seed = 42;
    int trials = 0;
    int holds = 0;
    int fails = 0;
    int inconclusive = 0;
    std::vector<Verdict> verdicts;  // per trial, in order
};

/// Check the theorem on `trials` sampled pairs at r = r_fraction * r0.
/// Any fails verdict is a finding (it would contradict a proven theorem).
CampaignReport falsify(Theorem t, int trials, double r_fraction, std::uint64_t seed,
                       double K = 1.0, double alpha = 1.0, int M = 200);

}  // namespace bohr
