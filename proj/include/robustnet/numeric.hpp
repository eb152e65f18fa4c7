#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace robustnet {

// Exact arithmetic used wherever results must match published fractions
// bit-for-bit: path counts, betweenness credits, spanning-tree counts,
// reliability coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// How a measure value is populated. `finite` carries a number, `infinite`
// renders as "inf", `undefined` as "-", `failed` as "n/a(reason)".
enum class ValueState { finite, infinite, undefined, failed };

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact dyadic embedding of a double into the rational domain.
inline Rational rational_of(double v) { return Rational(v); }

std::string bigint_string(const BigInt& v);

// "a" when integral, "a/b" otherwise.
std::string rational_string(const Rational& r);

// Shortest round-trip decimal form.
std::string double_string(double v);

BigInt binomial(int n, int k);

}  // namespace robustnet
