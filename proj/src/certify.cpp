#include "bohr/certify.hpp"

#include "bohr/roots.hpp"

namespace bohr {

RationalPolynomial certify_R3() {
    return RationalPolynomial::from_ints(
        {97732, 432283, 843432, 951408, 672704, 296704, 74752, 8192});
}

RationalPolynomial certify_R4() {
    return RationalPolynomial::from_ints({69107, 253840, 408176, 372928, 204032, 62464, 8192});
}

FigureCert certify_F1() {
    FigureCert cert{"F1", true,
                    "r1(k) > 1/(3+2k) for k = 0.01..0.99 via exact squared comparison"};
    for (int j = 1; j <= 99; ++j) {
        const Rational k(j, 100);
        const Rational lhs = 2 + 7 * k - 2 * k * k;
        const Rational rhs_sq = (3 + 2 * k) * (3 + 2 * k) * (4 * k - 3 * k * k);
        if (!(lhs > 0 && lhs * lhs > rhs_sq)) {
            cert.pass = false;
            cert.detail = "F1 fails at k = " + to_string(k);
            break;
        }
    }
    return cert;
}

FigureCert certify_F2() {
    FigureCert cert{"F2", true,
                    "R3(k) <= R4(k) sqrt(2+3k+k^2) for k = 0.01..0.99 via exact squared "
                    "comparison"};
    const auto R3 = certify_R3();
    const auto R4 = certify_R4();
    for (int j = 1; j <= 99; ++j) {
        const Rational k(j, 100);
        const Rational r3 = R3.evaluate(k);
        const Rational r4 = R4.evaluate(k);
        if (!(r3 > 0 && r4 > 0 && r4 * r4 * (2 + 3 * k + k * k) - r3 * r3 >= 0)) {
            cert.pass = false;
            cert.detail = "F2 fails at k = " + to_string(k);
            break;
        }
    }
    return cert;
}

FigureCert certify_F3() {
    const auto p = RationalPolynomial::from_ints({-5, -22, 33, 0, -35, -30, 7});
    const int count = sturm_count(p, Rational(0), Rational(1));
    return {"F3", count == 0,
            "Sturm count on (0,1) for 7r^6-30r^5-35r^4+33r^2-22r-5 is " + std::to_string(count)};
}

FigureCert certify_F4() {
    const auto p = RationalPolynomial::from_ints({11, 6, -33, 16});
    const int count = sturm_count(p, Rational(0), Rational(1));
    return {"F4", count == 0,
            "Sturm count on (0,1) for 16r^3-33r^2+6r+11 is " + std::to_string(count)};
}

std::vector<FigureCert> certify_figures() {
    return {certify_F1(), certify_F2(), certify_F3(), certify_F4()};
}

}  // namespace bohr
