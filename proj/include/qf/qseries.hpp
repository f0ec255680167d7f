#pragma once

/// @file qseries.hpp
/// @brief Exactly truncated q-series with rational exponents.
///
/// A QSeries<Ring> represents sum_e c_e q^e where the exponents e are
/// arbitrary rationals (not necessarily nonnegative, not necessarily on a
/// common denominator) and the coefficients live in a CoefficientRing.  Every
/// series carries an *exclusive* cutoff N: the stored terms are exactly the
/// nonzero coefficients with e < N, and nothing is claimed about e >= N.
///
/// Arithmetic propagates cutoffs pessimistically as min(N_a, N_b).  For
/// products whose factors contain negative exponents this min is *not*
/// automatically sound: a factor's unknown tail (e >= N_a) times the other
/// factor's most negative exponent can reach below min(N_a, N_b).  Producers
/// of such series are responsible for padding the factor cutoffs before
/// multiplying and truncating afterwards; the higher-level constructors in
/// this library all do so.
///
/// divide_by_unit implements exact long division by a series whose leading
/// coefficient is invertible.  All exponents in play live on the lattice
/// (1/D) Z for the common denominator D of the finitely many exponents
/// involved, and each elimination step strictly increases the remainder's
/// leading exponent along that lattice, so the loop terminates at the result
/// cutoff min(N_num, N_den) - d0 (d0 = leading exponent of the denominator).

#include <algorithm>
#include <complex>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qf/rational.hpp"
#include "qf/rings.hpp"

namespace qf {

template <CoefficientRing Ring>
class QSeries {
 public:
  using value_type = typename Ring::value_type;
  using term_map = std::map<Rat, value_type>;

  explicit QSeries(Rat cutoff) : cutoff_(std::move(cutoff)) {}

  static QSeries zero(Rat cutoff) { return QSeries(std::move(cutoff)); }

  static QSeries monomial(const Rat& exponent, value_type coeff, Rat cutoff) {
    QSeries s(std::move(cutoff));
    s.add_term(exponent, std::move(coeff));
    return s;
  }

  const Rat& cutoff() const { return cutoff_; }
  const term_map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Merge a single term; silently drops exponents at or past the cutoff and
  /// never stores a zero coefficient.
  void add_term(const Rat& exponent, const value_type& coeff) {
    if (!(exponent < cutoff_) || Ring::is_zero(coeff)) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      terms_.emplace(exponent, coeff);
    } else {
      it->second = Ring::add(it->second, coeff);
      if (Ring::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::optional<std::pair<Rat, value_type>> leading() const {
    if (terms_.empty()) return std::nullopt;
    return *terms_.begin();
  }

  value_type coefficient_at(const Rat& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Ring::zero() : it->second;
  }

  bool operator==(const QSeries& o) const {
    return cutoff_ == o.cutoff_ && terms_ == o.terms_;
  }

 private:
  Rat cutoff_;
  term_map terms_;
};

// --------------------------------------------------------------------------
// arithmetic
// --------------------------------------------------------------------------

template <CoefficientRing Ring>
QSeries<Ring> add(const QSeries<Ring>& a, const QSeries<Ring>& b) {
  QSeries<Ring> out(std::min(a.cutoff(), b.cutoff()));
  for (const auto& [e, c] : a.terms()) out.add_term(e, c);
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

template <CoefficientRing Ring>
QSeries<Ring> neg(const QSeries<Ring>& a) {
  QSeries<Ring> out(a.cutoff());
  for (const auto& [e, c] : a.terms()) out.add_term(e, Ring::neg(c));
  return out;
}

template <CoefficientRing Ring>
QSeries<Ring> sub(const QSeries<Ring>& a, const QSeries<Ring>& b) {
  return add(a, neg(b));
}

template <CoefficientRing Ring>
QSeries<Ring> mul(const QSeries<Ring>& a, const QSeries<Ring>& b) {
  QSeries<Ring> out(std::min(a.cutoff(), b.cutoff()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Rat e = ea + eb;
      if (e < out.cutoff()) out.add_term(e, Ring::mul(ca, cb));
    }
  return out;
}

/// Product truncated at an explicit cutoff, ignoring the operands' own
/// cutoffs.  Sound only when the caller guarantees both operands are complete
/// wherever their terms can influence exponents below `cutoff` (the usual
/// case: one finite Laurent factor with negative exponents, one long series
/// padded accordingly).
template <CoefficientRing Ring>
QSeries<Ring> mul_to(const QSeries<Ring>& a, const QSeries<Ring>& b,
                     Rat cutoff) {
  QSeries<Ring> out(std::move(cutoff));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Rat e = ea + eb;
      if (e < out.cutoff()) out.add_term(e, Ring::mul(ca, cb));
    }
  return out;
}

template <CoefficientRing Ring>
QSeries<Ring> scale(const QSeries<Ring>& a, const typename Ring::value_type& k) {
  QSeries<Ring> out(a.cutoff());
  for (const auto& [e, c] : a.terms()) out.add_term(e, Ring::mul(c, k));
  return out;
}

template <CoefficientRing Ring>
QSeries<Ring> scale_rat(const QSeries<Ring>& a, const Rat& k) {
  return scale(a, Ring::from_rational(k));
}

/// Multiply by the monomial c * q^{shift}; the cutoff shifts along.
template <CoefficientRing Ring>
QSeries<Ring> shift_mul(const QSeries<Ring>& a, const Rat& shift,
                        const typename Ring::value_type& c) {
  QSeries<Ring> out(a.cutoff() + shift);
  for (const auto& [e, k] : a.terms()) out.add_term(e + shift, Ring::mul(k, c));
  return out;
}

template <CoefficientRing Ring>
QSeries<Ring> truncate(const QSeries<Ring>& a, const Rat& new_cutoff) {
  QSeries<Ring> out(std::min(a.cutoff(), new_cutoff));
  for (const auto& [e, c] : a.terms()) out.add_term(e, c);
  return out;
}

/// First exponent (scanning upward) where the two series disagree, if any.
/// Compares the overlap region below min(cutoffs).
template <CoefficientRing Ring>
std::optional<std::tuple<Rat, typename Ring::value_type, typename Ring::value_type>>
first_mismatch(const QSeries<Ring>& a, const QSeries<Ring>& b) {
  Rat bound = std::min(a.cutoff(), b.cutoff());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    bool take_a = ib == b.terms().end() ||
                  (ia != a.terms().end() && ia->first < ib->first);
    bool take_b = ia == a.terms().end() ||
                  (ib != b.terms().end() && ib->first < ia->first);
    if (take_a) {
      if (ia->first >= bound) break;
      return {{ia->first, ia->second, Ring::zero()}};
    }
    if (take_b) {
      if (ib->first >= bound) break;
      return {{ib->first, Ring::zero(), ib->second}};
    }
    if (ia->first >= bound) break;
    if (!Ring::eq(ia->second, ib->second))
      return {{ia->first, ia->second, ib->second}};
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------
// division by a unit
// --------------------------------------------------------------------------

template <CoefficientRing Ring>
  requires DivisionCapable<Ring>
QSeries<Ring> divide_by_unit(const QSeries<Ring>& num, const QSeries<Ring>& den) {
  auto lead = den.leading();
  if (!lead || !Ring::invertible(lead->second))
    throw std::domain_error("divide_by_unit: denominator is not a unit");
  const Rat d0 = lead->first;
  const auto c0_inv = Ring::inv(lead->second);
  const Rat out_cutoff = std::min(num.cutoff(), den.cutoff()) - d0;

  QSeries<Ring> out(out_cutoff);
  std::map<Rat, typename Ring::value_type> rem(num.terms().begin(),
                                               num.terms().end());
  while (!rem.empty()) {
    auto it = rem.begin();
    Rat e = it->first;
    auto c = it->second;
    rem.erase(it);
    if (Ring::is_zero(c)) continue;
    Rat t = e - d0;
    if (!(t < out_cutoff)) break;
    auto w = Ring::mul(c, c0_inv);
    out.add_term(t, w);
    for (const auto& [ed, cd] : den.terms()) {
      if (ed == d0) continue;
      Rat k = t + ed;
      auto jt = rem.find(k);
      auto delta = Ring::neg(Ring::mul(w, cd));
      if (jt == rem.end()) {
        rem.emplace(std::move(k), std::move(delta));
      } else {
        jt->second = Ring::add(jt->second, delta);
        if (Ring::is_zero(jt->second)) rem.erase(jt);
      }
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// T-twist: q^e picks up the unit e^{2 pi i e}
// --------------------------------------------------------------------------

template <CoefficientRing Ring>
  requires TwistCapable<Ring>
QSeries<Ring> twist_T(const QSeries<Ring>& a) {
  QSeries<Ring> out(a.cutoff());
  for (const auto& [e, c] : a.terms()) out.add_term(e, Ring::twist(c, e));
  return out;
}

// --------------------------------------------------------------------------
// numeric evaluation
// --------------------------------------------------------------------------

struct EvalResult {
  std::complex<double> value{0.0, 0.0};
  /// Rigorous-style bound: floating-point accumulation estimate plus the
  /// caller-supplied analytic bound on everything past the cutoff.
  double error = 0.0;
};

/// Evaluate sum c_e q^e at q = e^{2 pi i tau}, Im tau > 0.  `tail_bound`
/// is the producer's analytic bound for the omitted terms (e >= cutoff).
template <CoefficientRing Ring>
  requires ComplexEmbeddable<Ring>
EvalResult eval_complex(const QSeries<Ring>& a, std::complex<double> tau,
                        double tail_bound = 0.0) {
  if (!(tau.imag() > 0.0))
    throw std::domain_error("eval_complex: tau must lie in the upper half-plane");
  const double two_pi = 6.28318530717958647692;
  std::complex<double> acc{0.0, 0.0};
  double abs_sum = 0.0;
  for (const auto& [e, c] : a.terms()) {
    double x = rat_double(e);
    std::complex<double> term =
        Ring::to_complex(c) * std::exp(std::complex<double>(0.0, two_pi) * tau *
                                       std::complex<double>(x, 0.0));
    acc += term;
    abs_sum += std::abs(term);
  }
  double eps = std::numeric_limits<double>::epsilon();
  double fp_error =
      abs_sum * eps * (static_cast<double>(a.size()) + 8.0);
  return {acc, fp_error + tail_bound};
}

// --------------------------------------------------------------------------
// rendering
// --------------------------------------------------------------------------

/// Canonical text rendering, one term per line, ascending exponents:
///   q^(1/8): -1
template <CoefficientRing Ring>
std::string to_text(const QSeries<Ring>& a) {
  std::string out;
  for (const auto& [e, c] : a.terms())
    out += "q^(" + rat_str(e) + "): " + Ring::to_string(c) + "\n";
  return out;
}

using RationalSeries = QSeries<RationalRing>;
using ZetaSeries = QSeries<ZetaRing>;
using PhaseSeries = QSeries<PhaseRing>;
using ComplexSeries = QSeries<ComplexRing>;

/// Re-embed an exact rational series into any other coefficient ring.
template <CoefficientRing Ring>
QSeries<Ring> lift_series(const RationalSeries& a) {
  QSeries<Ring> out(a.cutoff());
  for (const auto& [e, c] : a.terms()) out.add_term(e, Ring::from_rational(c));
  return out;
}

/// Lift an exact rational series into the phase ring (phase class 0).
inline PhaseSeries to_phase_series(const RationalSeries& a) {
  return lift_series<PhaseRing>(a);
}

}  // namespace qf
