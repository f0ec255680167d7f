#pragma once

/// @file indefinite.hpp
/// @brief Signed lattice sums over wedge regions of an indefinite quadratic
///        form, with certified enumeration bounds.
///
/// The object computed here is
///
///     sum_{(j,r) in wedge} (+/-) (-1)^{sigma(j)+c} zeta^{lambda j + mu r + nu}
///                                q^{A (j+alpha)^2 - B (r+beta)^2}
///
/// over a rank-2 lattice (either Z^2 or (Z+1/2)^2), where the "wedge" is the
/// difference of two triangular index sets pinched between r = 0 and r = j.
/// Four boundary conventions occur in practice and are kept apart explicitly:
///
///     v1:  { 0 <= r <  j }  minus  { j <= r <  0 }
///     v2:  { 0 <= r <= j }  minus  { j <  r <  0 }
///     v3:  { 0 <  r <= j }  minus  { j <  r <= 0 }
///     v4:  { 0 <  r <= j }  minus  { j <  r <  0 }
///
/// (On the half-odd lattice r = 0 never occurs, so v4 and v2 coincide there.)
/// The sign alternates with sigma(j) = j on the integer lattice and j - 1/2
/// on the half-odd lattice, shifted by the integer offset c.
///
/// Positivity of A - B makes the exponent bounded below on each wedge column
/// and growing quadratically with |j|: inside the wedge |r| <= |j|, so
///
///     A (j+alpha)^2 - B (r+beta)^2  >=  A(|j|-|alpha|)^2 - B(|j|+c0)^2
///
/// with c0 = max(|alpha|, |beta|) + 1.  The enumeration bound solves this
/// minorant against the cutoff with floating point *as a hint only*, then
/// certifies the result with exact rational arithmetic before it is used.

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "qf/qseries.hpp"

namespace qf {

enum class Lattice { integers, half_odd_integers };

enum class Region { v1, v2, v3, v4 };

/// Exponent rule for the formal unit:  zeta^{lambda j + mu r + nu}.
struct ZetaRule {
  Rat lambda;
  Rat mu;
  Rat nu;
  bool operator==(const ZetaRule&) const = default;
};

struct IndefSumSpec {
  Lattice lattice = Lattice::integers;
  Region region = Region::v2;
  Rat A;      // coefficient of (j+alpha)^2, must exceed B
  Rat alpha;  // shift of the j variable
  Rat B;      // coefficient of (r+beta)^2, must be positive
  Rat beta;   // shift of the r variable
  int sign_offset = 0;  // c in (-1)^{sigma(j)+c}
  std::optional<ZetaRule> zeta;

  /// Hyperbolic growth needs A > B > 0; anything else cannot be truncated.
  void validate() const;

  bool operator==(const IndefSumSpec&) const = default;
};

/// Certified bound: every lattice column with |j| > bound consists solely of
/// terms with exponent >= cutoff.  The returned value is an exact integer.
Rat enumeration_bound(const IndefSumSpec& spec, const Rat& cutoff);

/// Exact q-expansion below `cutoff` (zeta rule, if any, is ignored).
RationalSeries indef_sum(const IndefSumSpec& spec, const Rat& cutoff);

/// Exact q-expansion with coefficients in the formal-unit ring; the spec must
/// carry a zeta rule.
ZetaSeries indef_sum_zeta(const IndefSumSpec& spec, const Rat& cutoff);

/// Reference implementation: scan every column with |2 j| <= box_doubled,
/// ignoring the certified bound entirely.  Exists to validate enumeration.
RationalSeries indef_sum_bruteforce(const IndefSumSpec& spec, const Rat& cutoff,
                                    long box_doubled);
ZetaSeries indef_sum_zeta_bruteforce(const IndefSumSpec& spec,
                                     const Rat& cutoff, long box_doubled);

/// Analytic bound on sum |q|^{exponent} over all omitted terms (exponent >=
/// cutoff), 0 < q_abs < 1.
double indef_tail_bound(const IndefSumSpec& spec, const Rat& cutoff,
                        double q_abs);

/// Truncated evaluation at tau with the omitted-terms bound folded into the
/// reported error.
EvalResult indef_eval(const IndefSumSpec& spec, std::complex<double> tau,
                      const Rat& cutoff);

// JSON round-trip for specs (rationals as canonical "a/b" strings).
void to_json(nlohmann::json& out, const IndefSumSpec& spec);
void from_json(const nlohmann::json& in, IndefSumSpec& spec);

}  // namespace qf
