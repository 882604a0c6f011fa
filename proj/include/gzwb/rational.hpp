#ifndef GZWB_RATIONAL_HPP
#define GZWB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzwb {

/// Exact rational scalar. All arithmetic in the library goes through this type.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Normalized textual form: "p/q" with q > 1, or "p" for integers.
inline std::string to_string(const Rational& q)
{
  return q.get_str();
}

inline Rational parse_rational(const std::string& text)
{
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline bool is_zero(const RationalVector& v)
{
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

} // namespace gzwb

#endif // GZWB_RATIONAL_HPP
