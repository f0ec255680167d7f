#pragma once

/// @file rational.hpp
/// @brief Exact rational scalars used for series exponents and coefficients.
///
/// Exponents of every truncated series in this library are arbitrary-precision
/// rationals (GMP mpq), kept canonical (lowest terms, positive denominator).
/// This header wraps the handful of operations the engine needs beyond what
/// gmpxx already provides: canonical construction from machine integers,
/// floor / fractional part, parsing, and the "a/b" rendering used by the
/// text output format (the denominator is omitted when it equals one).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qf {

using Rat = mpq_class;

/// Canonical rational from machine integers.  mpq_class(n, d) does not reduce
/// by itself, so all construction funnels through here.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// Largest integer <= x, as an exact integer.
inline mpz_class floor_z(const Rat& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

/// x - floor(x), always in [0, 1).
inline Rat frac_part(const Rat& x) {
  Rat r = x - Rat(floor_z(x));
  return r;
}

/// "a/b" with the "/b" omitted for integers: "-1", "1/2", "19/24".
inline std::string rat_str(const Rat& x) {
  std::string s = x.get_num().get_str();
  if (x.get_den() != 1) s += "/" + x.get_den().get_str();
  return s;
}

/// Parse "a", "-a", or "a/b".  Returns nullopt on malformed input or zero
/// denominator; the result is canonicalized.
inline std::optional<Rat> rat_parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, text.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    return std::nullopt;
  }
  mpq_canonicalize(q);
  Rat r(q);
  mpq_clear(q);
  return r;
}

inline double rat_double(const Rat& x) { return x.get_d(); }

}  // namespace qf
