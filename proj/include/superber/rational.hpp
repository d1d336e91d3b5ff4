#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "superber/errors.hpp"

namespace superber {

/* Exact arbitrary-precision arithmetic. cpp_rational keeps values in
   lowest terms with a positive denominator, which is exactly the
   invariant the scalar field needs. */
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

/* "p" or "p/q" with q > 0 and gcd(p,q)=1. */
std::string rational_to_string(const Rational& q);

Rational rational_from_string(const std::string& s);

} // namespace superber
