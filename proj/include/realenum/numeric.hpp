#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace realenum {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) from cached Pascal rows, exact. Returns 0 outside 0 <= k <= n.
Integer binomial(long long n, long long k);

Integer factorial(long long n);

}  // namespace realenum
