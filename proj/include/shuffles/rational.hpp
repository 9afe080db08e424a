#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace shuffles {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as arithmetic goes through its operators;
// anything built from raw numerator/denominator pairs goes through
// make_rational so it gets canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class lacks a long long constructor; on LP64 targets long is wide
// enough for every count this library produces.
inline Rational rat_int(long long v) { return Rational(static_cast<long>(v)); }

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Serialized form: "p" or "p/q" with q > 1, always in lowest terms.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace shuffles
