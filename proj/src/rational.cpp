#include "bohr/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace bohr {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double m = std::frexp(x, &exp);  // |m| in [0.5, 1)
    const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rational q(mant);
    if (exp >= 0) {
        q *= Rational(Int(1) << exp);
    } else {
        q /= Rational(Int(1) << -exp);
    }
    return q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
        Int num(std::string(s.substr(0, slash)));
        Int den(std::string(s.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("rational_from_string: cannot parse '" + std::string(s) + "'");
    }
}

}  // namespace bohr
