#include <cmath>
#include <random>

#include "doctest.h"

#include "bohr/errors.hpp"
#include "bohr/roots.hpp"

using namespace bohr;

TEST_CASE("sturm_count on the catalog polynomials") {
    const auto cubic = RationalPolynomial::from_ints({1, -3, -5, 3});
    CHECK(sturm_count(cubic, Rational(0), Rational(1)) == 1);
    CHECK(sturm_count(cubic, Rational(0), Rational(1, 3)) == 1);

    const auto sextic = RationalPolynomial::from_ints({-5, -22, 33, 0, -35, -30, 7});
    CHECK(sturm_count(sextic, Rational(0), Rational(1)) == 0);

    const auto cubic2 = RationalPolynomial::from_ints({11, 6, -33, 16});
    CHECK(sturm_count(cubic2, Rational(0), Rational(1)) == 0);
}

TEST_CASE("sturm_count invariances and edge handling") {
    const auto p = RationalPolynomial::from_ints({1, -3, -5, 3});
    const auto scaled = p * Rational(7, 3);
    CHECK(sturm_count(scaled, Rational(0), Rational(1)) ==
          sturm_count(p, Rational(0), Rational(1)));

    // Repeated root: squarefree reduction still counts it once.
    const auto dbl = RationalPolynomial{Rational(1, 9), Rational(-2, 3), Rational(1)};  // (r-1/3)^2
    CHECK(sturm_count(dbl, Rational(0), Rational(1)) == 1);

    // Endpoint lands on a root: nudged once, interior root still counted.
    const auto pz = RationalPolynomial::from_ints({0, -1, 2});  // r (2r - 1)
    CHECK(sturm_count(pz, Rational(0), Rational(1)) == 1);

    CHECK_THROWS_AS(sturm_count(RationalPolynomial{}, Rational(0), Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(sturm_count(p, Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("isolate_root matches known roots") {
    const auto cubic = RationalPolynomial::from_ints({1, -3, -5, 3});
    const auto r1 = isolate_root(cubic, Rational(0), Rational(1), 1e-8);
    CHECK(r1.estimate == doctest::Approx(0.24683).epsilon(1e-4));
    CHECK(r1.certificate == Certificate::sturm_count_one);
    CHECK(r1.lo < r1.hi);
    CHECK(sign(cubic.evaluate(r1.lo)) != sign(cubic.evaluate(r1.hi)));

    const auto quad = RationalPolynomial::from_ints({-1, 4, 1});
    const auto r2 = isolate_root(quad, Rational(0), Rational(1), 1e-12);
    CHECK(r2.estimate == doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
    CHECK(r2.residual < 1e-12);
    CHECK(r2.width() <= 1e-12 * 1.0001);

    CHECK_THROWS_AS(isolate_root(RationalPolynomial::from_ints({-5, -22, 33, 0, -35, -30, 7}),
                                 Rational(0), Rational(1), 1e-8),
                    CatalogError);
}

TEST_CASE("isolate_smallest_root picks the leftmost of several") {
    // roots at 1/4 and 3/4
    const auto p = RationalPolynomial{Rational(3, 16), Rational(-1), Rational(1)};
    CHECK(sturm_count(p, Rational(0), Rational(1)) == 2);
    const auto r = isolate_smallest_root(p, Rational(0), Rational(1), 1e-12);
    CHECK(r.estimate == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("bisect_monotone on the transcendental catalog equations") {
    const auto g7 = [](double r) { return (1 + r) / (1 - r) - 2.0; };
    const auto r1 = bisect_monotone(g7, 0.0, 0.35, 1e-13);
    CHECK(r1.estimate == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(r1.certificate == Certificate::monotone_sign_change);

    const auto g8 = [](double r) { return 2.0 * ((1 + r) / (1 - r) - 1.0) - 1.0; };
    CHECK(bisect_monotone(g8, 0.0, 1.0 / 3.0, 1e-13).estimate ==
          doctest::Approx(0.2).epsilon(1e-12));

    const auto ge = [](double r) { return (1 - r) * (1 - r) - 4 * r; };
    CHECK(bisect_monotone(ge, 0.0, 1.0, 1e-13).estimate ==
          doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(bisect_monotone([](double) { return 1.0; }, 0.0, 1.0, 1e-8), CatalogError);
}

TEST_CASE("sturm_count cross-oracle against fine-grid sign scanning") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> cs;
        const int deg = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i <= deg; ++i)
            cs.emplace_back(static_cast<long long>(rng() % 21) - 10);
        RationalPolynomial p(cs);
        if (p.degree() < 1) continue;
        const auto sf = p.squarefree_part();
        // Sign changes of the squarefree part on a fine rational grid; grid
        // points are generic for these small integer polynomials.
        const int G = 20000;
        int scan = 0;
        int prev = 0;
        for (int i = 0; i <= G; ++i) {
            const int s = sign(sf.evaluate(Rational(2 * i + 1, 2 * G)));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++scan;
            prev = s;
        }
        CHECK(sturm_count(p, Rational(1, 2 * G), Rational(2 * G + 1, 2 * G)) == scan);
    }
}

TEST_CASE("rational string round trip is bit exact") {
    const Rational q(-123456789, 987654321);
    CHECK(rational_from_string(to_string(q)) == q);
    const Rational d = rational_from_double(0.1);
    CHECK(to_double(d) == 0.1);
    CHECK(rational_from_string(to_string(d)) == d);
}

TEST_CASE("polynomial arithmetic is exact") {
    const auto a = RationalPolynomial::from_ints({1, 2, 3});
    const auto b = RationalPolynomial::from_ints({0, -1, 1});
    const auto [q, r] = (a * b).divmod(b);
    CHECK(q == a);
    CHECK(r.is_zero());
    const auto g = RationalPolynomial::gcd(a * b, b);
    CHECK((b).divmod(g).second.is_zero());
    CHECK(pow(RationalPolynomial::from_ints({1, 1}), 3) ==
          RationalPolynomial::from_ints({1, 3, 3, 1}));
}
