#pragma once

#include <string>
#include <vector>

#include "bohr/polynomial.hpp"

namespace bohr {

struct FigureCert {
    std::string name;     // F1..F4
    bool pass = false;
    std::string detail;   // human-readable summary of what was checked
};

/// F1: on the grid k = j/100, j = 1..99, the univalent-to-refined interval
/// endpoint r1(k) = (1+k - sqrt(4k - 3k^2)) / (4k^2 - 2k + 1) exceeds
/// 1/(3+2k); certified by the equivalent squared comparison
/// (2 + 7k - 2k^2)^2 > (3+2k)^2 (4k - 3k^2) in exact rational arithmetic.
FigureCert certify_F1();

/// F2: R3(k) <= R4(k) sqrt(2 + 3k + k^2) on the same grid, certified by
/// R4^2 (2 + 3k + k^2) - R3^2 >= 0 exactly.
FigureCert certify_F2();

/// F3: 7r^6 - 30r^5 - 35r^4 + 33r^2 - 22r - 5 has no roots in (0, 1)
/// (Sturm count 0).
FigureCert certify_F3();

/// F4: 16r^3 - 33r^2 + 6r + 11 has no roots in (0, 1) (Sturm count 0).
FigureCert certify_F4();

std::vector<FigureCert> certify_figures();

// The two degree-7/6 auxiliary polynomials in k behind F2 (exposed for tests).
RationalPolynomial certify_R3();
RationalPolynomial certify_R4();

}  // namespace bohr
