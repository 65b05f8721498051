#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace bohr {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

double to_double(const Rational& q);

// Serializes as "num/den" with den > 0; round-trips bit-exactly.
std::string to_string(const Rational& q);
Rational rational_from_string(std::string_view s);

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace bohr
