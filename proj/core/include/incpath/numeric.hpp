#ifndef INCPATH_NUMERIC_HPP
#define INCPATH_NUMERIC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace incpath {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// At least 50 significant decimal digits.
using HighPrecision = boost::multiprecision::mpf_float_50;

// Table of 0!, 1!, ..., max!.
std::vector<Integer> factorial_table(std::size_t max);

Integer factorial(std::size_t n);

// C(n, r); zero when r < 0 or r > n, and for negative n.
Integer binomial(long long n, long long r);

// Number of ordered compositions of `total` into `parts` parts, each at
// least `min_part`. The empty composition of 0 counts once.
Integer composition_count(long long total, long long parts, long long min_part);

// "numerator/denominator" in lowest terms, decimal.
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace incpath

#endif  // INCPATH_NUMERIC_HPP
