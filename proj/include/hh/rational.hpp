#ifndef HH_RATIONAL_HPP
#define HH_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace hh {

// Exact scalar type. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after canonicalize(), which every construction path below enforces.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return mpq_sgn(q.get_mpq_t()) == 0; }
inline bool is_one(const Rational& q) { return mpq_cmp_si(q.get_mpq_t(), 1, 1) == 0; }

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

/// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);

inline Rational rat(long n, long d = 1) { Rational q(n, d); q.canonicalize(); return q; }

} // namespace hh

#endif
