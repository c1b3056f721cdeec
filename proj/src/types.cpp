#include "galelab/types.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "galelab/errors.hpp"

namespace galelab {

Rational rationalize(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot rationalize a non-finite double");
  Rational q(x);  // mpq_set_d is exact
  return q;
}

Vector rationalize(const std::vector<double>& xs) {
  Vector out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(rationalize(x));
  return out;
}

double to_double(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  const double t = q.get_d();
  if (!std::isfinite(t)) return t;
  const double away = std::nextafter(t, sgn(q) < 0 ? -std::numeric_limits<double>::infinity()
                                                   : std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return t;
  const Rational gap_t = abs(q - Rational(t));
  const Rational gap_a = abs(Rational(away) - q);
  if (gap_t < gap_a) return t;
  if (gap_a < gap_t) return away;
  int e = 0;
  const double m = std::frexp(t, &e);
  const auto last_bit = static_cast<long long>(std::ldexp(std::abs(m), 53)) & 1;
  return last_bit == 0 ? t : away;
}

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  Integer num = q.get_num();
  const Integer& den = q.get_den();
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  Integer whole = num / den;
  Integer rem = num % den;
  out += whole.get_str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      Integer digit = rem / den;
      rem %= den;
      out += digit.get_str();
    }
  }
  return out;
}

}  // namespace galelab
