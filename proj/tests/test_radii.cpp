#include <cmath>

#include "doctest.h"

#include "bohr/errors.hpp"
#include "bohr/radii.hpp"

using namespace bohr;

namespace {

double radius(Theorem t, Params p = {}, double tol = 1e-12) {
    return solve_radius(make_problem(t, p), tol).estimate;
}

}  // namespace

TEST_CASE("quasiconformal parameter") {
    CHECK(QuasiconformalParam::from_K(1.0).k == 0.0);
    CHECK(QuasiconformalParam::from_K(2.0).k == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(QuasiconformalParam::from_K(3.0).k == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(QuasiconformalParam::from_K(0.5), ParameterDomainError);
}

TEST_CASE("theorem id round trip") {
    for (const char* name : {"ThmA", "ThmB", "ThmC", "ThmD", "ThmE", "ThmF", "ThmG", "ThmH",
                             "ThmI", "T31", "T32", "T41", "T41R", "T42", "T43", "T44", "T51",
                             "T52"})
        CHECK(to_string(theorem_from_string(name)) == name);
    CHECK_THROWS_AS(theorem_from_string("Nope"), std::invalid_argument);
}

TEST_CASE("defining functions at rational parameters") {
    const auto t31 = make_problem(Theorem::T31, {});
    REQUIRE(defining_function(t31).poly.has_value());
    CHECK(*defining_function(t31).poly == RationalPolynomial::from_ints({1, -3, -5, 3}));

    const auto t42 = make_problem(Theorem::T42, {});
    REQUIRE(defining_function(t42).poly.has_value());
    CHECK(*defining_function(t42).poly == RationalPolynomial::from_ints({-1, 2, 3}));

    Params p51;
    p51.K = 2.0;
    const auto f = defining_function(make_problem(Theorem::T51, p51)).f;
    const double r = 0.2;
    CHECK(f(r) ==
          doctest::Approx((4.0 / 3.0) * ((1 + r) / (1 - r) - 1) - 1).epsilon(1e-14));
}

TEST_CASE("polynomial radii against frozen oracles") {
    CHECK(radius(Theorem::T31) == doctest::Approx(0.24683).epsilon(3e-5));
    CHECK(radius(Theorem::T31) == doctest::Approx(0.246829826210459).epsilon(1e-11));
    Params k2;
    k2.K = 2.0;
    CHECK(radius(Theorem::T31, k2) == doctest::Approx(0.214352033608098).epsilon(1e-11));
    CHECK(radius(Theorem::ThmF) == radius(Theorem::T31));

    CHECK(radius(Theorem::ThmG) == doctest::Approx(0.128445081600688).epsilon(1e-11));
    CHECK(radius(Theorem::T32) == doctest::Approx(0.128445081600688).epsilon(1e-11));

    CHECK(radius(Theorem::T43) == doctest::Approx(0.173417356840).epsilon(1e-10));
    CHECK(radius(Theorem::T44) == doctest::Approx(0.0880460930644).epsilon(1e-10));

    Params n;
    n.N = 1;
    CHECK(radius(Theorem::ThmA, n) ==
          doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
    n.N = 2;
    CHECK(radius(Theorem::ThmA, n) == doctest::Approx(0.376085889442).epsilon(1e-10));
    n.N = 3;
    CHECK(radius(Theorem::ThmA, n) == doctest::Approx(0.462351139268).epsilon(1e-10));
}

TEST_CASE("closed-form radii") {
    CHECK(radius(Theorem::ThmC) == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(radius(Theorem::ThmD) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    Params b;
    b.a0 = 0.0;
    CHECK(radius(Theorem::ThmB, b) == doctest::Approx(0.5).epsilon(1e-14));
    b.a0 = 1.0;
    CHECK(radius(Theorem::ThmB, b) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    Params h;
    h.alpha = 1.0;
    CHECK(radius(Theorem::ThmH, h) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    h.alpha = 2.0;
    CHECK(radius(Theorem::ThmH, h) ==
          doctest::Approx((std::sqrt(2.0) - 1) / (std::sqrt(2.0) + 1)).epsilon(1e-14));

    Params m;
    m.mu = 1.0;
    CHECK(radius(Theorem::T42, m) ==
          doctest::Approx((-2.0 + std::sqrt(7.0)) / 3.0).epsilon(1e-14));
    for (const double K : {1.0, 2.0, 5.0, 10.0}) {
        Params p;
        p.K = K;
        p.mu = 0.0;
        CHECK(std::abs(radius(Theorem::T42, p) - (K + 1) / (5 * K + 1)) < 1e-10);
    }

    Params c;
    c.K = 2.0;
    CHECK(radius(Theorem::T51, c) == doctest::Approx(3.0 / 11.0).epsilon(1e-12));
    c.K = 1.0;
    c.alpha = 2.0;
    // t = ((3K+1)/(2K))^{1/alpha} = sqrt(2) at K = 1
    CHECK(radius(Theorem::T51, c) ==
          doctest::Approx((std::sqrt(2.0) - 1) / (std::sqrt(2.0) + 1)).epsilon(1e-12));
    // t = ((4K+2)/(3K+1))^{1/alpha} = sqrt(3/2) at K = 1
    CHECK(radius(Theorem::T52, c) == doctest::Approx(0.10102051443364381).epsilon(1e-12));
    c.alpha = 1.0;
    CHECK(radius(Theorem::T52, c) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("transcendental radii against frozen oracles") {
    CHECK(radius(Theorem::ThmE) == doctest::Approx(0.17157287525381).epsilon(1e-11));
    Params k2;
    k2.K = 2.0;
    CHECK(radius(Theorem::ThmE, k2) == doctest::Approx(0.137275278107262).epsilon(1e-11));

    Params m;
    m.mu = 0.0;
    CHECK(radius(Theorem::T41, m) == doctest::Approx(0.17157287525381).epsilon(1e-11));
    m.mu = 0.5;
    CHECK(radius(Theorem::T41, m) == doctest::Approx(0.133740329708899).epsilon(1e-11));
    m.mu = 1.0;
    CHECK(radius(Theorem::T41, m) == doctest::Approx(0.108422216345073).epsilon(1e-11));

    // The remark variant is dominated by the main version for K > 1 and
    // equals it at K = 1 (the extra k sqrt(1+r) term vanishes).
    m.mu = 0.0;
    CHECK(radius(Theorem::T41R, m) == doctest::Approx(radius(Theorem::T41, m)).epsilon(1e-11));
    m.K = 2.0;
    CHECK(radius(Theorem::T41R, m) < radius(Theorem::T41, m));

    Params i;
    i.alpha = 1.0;
    i.N = 2;
    CHECK(radius(Theorem::ThmI, i) ==
          doctest::Approx((-3.0 + std::sqrt(17.0)) / 4.0).epsilon(1e-11));
}

TEST_CASE("closed-form and bisection paths agree") {
    for (const Theorem t : {Theorem::ThmC, Theorem::ThmD, Theorem::T42, Theorem::T51,
                            Theorem::T52, Theorem::ThmH}) {
        Params p;
        p.K = 2.0;
        p.mu = 0.5;
        p.alpha = 1.5;
        const auto problem = make_problem(t, p);
        const double a = solve_radius(problem, 1e-13).estimate;
        const double b = solve_radius_via_bisection(problem, 1e-13).estimate;
        CHECK(std::abs(a - b) < 1e-10);
    }
}

TEST_CASE("containment in the stated search intervals") {
    for (const double K : {1.0, 2.0, 10.0}) {
        Params p;
        p.K = K;
        const double k = QuasiconformalParam::from_K(K).k;
        CHECK(radius(Theorem::T31, p) < 1.0 / (3.0 + 2.0 * k));
        CHECK(radius(Theorem::T41, p) < 1.0 / 3.0);
        CHECK(radius(Theorem::T44, p) < 1.0 / 3.0);
        CHECK(radius(Theorem::T32, p) <
              3 + 2 * k - 2 * std::sqrt(2 + 3 * k + k * k));
        if (K > 1.0) {
            CHECK(radius(Theorem::T51, p) < 1.0 / 3.0);
            CHECK(radius(Theorem::T52, p) < 1.0 / 3.0);
        }
    }
}

TEST_CASE("radius is nonincreasing in K") {
    for (const Theorem t : {Theorem::T31, Theorem::T41, Theorem::T42, Theorem::T43,
                            Theorem::T44, Theorem::T51, Theorem::T52}) {
        double prev = 2.0;
        for (const double K : {1.0, 1.5, 2.0, 4.0, 8.0, 100.0}) {
            Params p;
            p.K = K;
            p.mu = 0.5;
            const double r = radius(t, p);
            CHECK(r <= prev + 1e-13);
            prev = r;
        }
    }
}

TEST_CASE("radius strictly decreases in mu") {
    for (const Theorem t : {Theorem::T41, Theorem::T42}) {
        double prev = 2.0;
        for (const double mu : {0.0, 0.5, 1.0, 2.0}) {
            Params p;
            p.mu = mu;
            const double r = radius(t, p);
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("three independent routes to 1/3") {
    Params p;
    const double a = radius(Theorem::T51, p);
    const double b = radius(Theorem::ThmD, p);
    CHECK(std::abs(a - 1.0 / 3.0) < 1e-10);
    CHECK(std::abs(b - 1.0 / 3.0) < 1e-10);
    CHECK(std::abs(radius(Theorem::ThmH, p) - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("verbatim product form is refused with an explanation") {
    bool threw = false;
    try {
        thmH_verbatim(1.0);
    } catch (const CatalogError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("cannot be a radius") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("lambda branch of the refined convex quadratic") {
    const auto br = lambda_branch(0.3, 1.0);
    CHECK(br.lambda1 == doctest::Approx(0.349131322914330).epsilon(1e-9));
    CHECK(std::abs(g1(br.lambda1, 0.3, 0.0)) < 1e-10);
    CHECK(g1(0.0, 0.3, 0.0) > 0.0);
    CHECK(g1(1.0, 0.3, 0.0) < 0.0);
    // G1(lambda, r) >= 0 below the branch (sampled).
    for (const double f : {0.1, 0.5, 0.9})
        CHECK(g1(f * br.lambda1, 0.3, 0.0) >= 0.0);

    CHECK_THROWS_AS(lambda_branch(0.2, 1.0), ParameterDomainError);   // below r0
    CHECK_THROWS_AS(lambda_branch(0.34, 1.0), ParameterDomainError);  // above the band

    // Mid-band point for K = 2 validates the sign checks.
    const double r0 = radius(Theorem::T31, {.K = 2.0});
    const double hi = 3.0 / 11.0;
    const auto br2 = lambda_branch(r0 + (hi - r0) / 3.0, 2.0);
    CHECK(br2.lambda1 > 0.0);
    CHECK(br2.lambda1 < 1.0);
}

TEST_CASE("both defining equations for the refined univalent radius") {
    for (const double K : {1.0, 3.0}) {
        const auto rep = cross_check_T32(K);
        CHECK(rep.statement_count == 1);
        CHECK(rep.proof_count == 1);
        CHECK(rep.statement_root > 0.0);
        CHECK(rep.proof_root > 0.0);
        CHECK(rep.root_gap == std::abs(rep.statement_root - rep.proof_root));
        CHECK_FALSE(rep.statement_divides_proof);
    }
    const auto r1 = cross_check_T32(1.0);
    CHECK(r1.statement_root == doctest::Approx(0.129309628687).epsilon(1e-9));
    CHECK(r1.proof_root == doctest::Approx(0.128445081601).epsilon(1e-9));
    const auto r3 = cross_check_T32(3.0);
    CHECK(r3.statement_root == doctest::Approx(0.102317276763).epsilon(1e-9));
    CHECK(r3.proof_root == doctest::Approx(0.101964225579).epsilon(1e-9));
    CHECK(r3.interval_hi == doctest::Approx(0.127016653793).epsilon(1e-9));
}

TEST_CASE("parameter domain errors") {
    Params bad;
    bad.alpha = 0.5;
    CHECK_THROWS_AS(make_problem(Theorem::T51, bad), ParameterDomainError);
    bad.alpha = 1.0;
    bad.mu = -1.0;
    CHECK_THROWS_AS(make_problem(Theorem::T41, bad), ParameterDomainError);
    Params badn;
    badn.N = 0;
    CHECK_THROWS_AS(make_problem(Theorem::ThmA, badn), ParameterDomainError);
    Params bada;
    bada.a0 = 1.5;
    CHECK_THROWS_AS(make_problem(Theorem::ThmB, bada), ParameterDomainError);
}
