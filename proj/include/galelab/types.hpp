#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace galelab {

using Integer = mpz_class;
using Rational = mpq_class;

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

/// Index subsets are 0-based and sorted ascending.
using IndexSet = std::vector<int>;

/// Exact conversion: every finite binary double is a dyadic rational.
Rational rationalize(double x);
Vector rationalize(const std::vector<double>& xs);

/// Nearest double to q, ties to even. (mpq_get_d truncates instead.)
double to_double(const Rational& q);

/// Shortest decimal text that reads back as exactly x.
std::string format_double(double x);

Rational dot(const Vector& a, const Vector& b);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Decimal rendering of q truncated toward zero after `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits = 20);

}  // namespace galelab
