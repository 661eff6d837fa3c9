#pragma once

// Exact rational scalars, backed by GMP's mpq_class. Values are kept
// canonical (reduced fraction, positive denominator), which makes equality
// comparisons between independently computed results meaningful.

#include <gmpxx.h>

#include <string>

#include "tuttex/errors.hpp"

namespace tuttex {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw parse_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// x^e with e possibly negative. 0^0 = 1 by the convention the evaluation
// formulas rely on; negative powers of zero are rejected.
inline Rational rational_pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (sgn(x) == 0) {
    if (e > 0) return Rational(0);
    throw inapplicable_error("negative power of zero");
  }
  unsigned long mag =
      e < 0 ? 0ul - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(x.get_mpq_t()), mag);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(x.get_mpq_t()), mag);
  if (e < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  // powers of a canonical fraction are canonical; this is a cheap safety net
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Accepts exactly the forms "p", "-p" and "p/q" in decimal.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&]() { throw parse_error("not a rational: '" + text + "'"); };
  if (text.empty()) bad();
  std::size_t start = text[0] == '-' ? 1 : 0;
  std::size_t slash = text.find('/');
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t p = from; p < to; ++p)
      if (text[p] < '0' || text[p] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!all_digits(start, text.size())) bad();
  } else {
    if (!all_digits(start, slash) || !all_digits(slash + 1, text.size())) bad();
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) bad();
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw parse_error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace tuttex
