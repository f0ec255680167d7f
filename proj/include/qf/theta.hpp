#pragma once

/// @file theta.hpp
/// @brief Theta components, eta products, and formal theta-combination blocks.
///
/// The basic building block is the one-variable theta component
///
///     theta_{j,mu}(tau) = sum_{n in Z + j/(2 mu)} q^{mu n^2},        q = e^{2 pi i tau}
///
/// over a positive rational weight mu and rational characteristic j, together
/// with its signed variant that inserts (-1)^{n - j/(2 mu)} (an integer power,
/// since n - j/(2 mu) runs over Z).  At the level of q-expansions both are
/// supported on the quadratic progression mu (j/(2 mu) + t)^2, t in Z, so the
/// expansion routine walks t away from the parabola vertex in both directions
/// and stops exactly when the exponent reaches the cutoff.
///
/// Eta is provided twice on purpose -- as the lacunary quadratic-progression
/// sum and as the plain product prod (1 - q^n) shifted by q^{1/24} -- so the
/// two can be compared coefficient-by-coefficient as an internal consistency
/// check of the engine.  The odd-square expansion of eta^3 plays the same
/// role for cubes.
///
/// A ThetaBlock<Ring> is a formal combination  sum_j d_j(q) theta_j  with the
/// index j read modulo 2m (the theta components of weight m are periodic in j
/// with period 2m).  Blocks are how multi-component identities are compared:
/// two derivations of the same function must produce identical slot series.
/// Slot k and slot -k describe the same *paired* component, so the paired
/// accessor `coefficient` halves the boundary slots k = 0, m (which a
/// symmetric pair hits twice) and insists the interior slots are mirror
/// symmetric.

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qf/qseries.hpp"

namespace qf {

/// q-expansion of theta_{j,mu}(tau) (z = 0), exact below `cutoff`.
/// `minus_signed` selects the (-1)^{n - j/(2 mu)} variant.
RationalSeries theta_q(const Rat& j, const Rat& mu, bool minus_signed,
                       const Rat& cutoff);

/// Dedekind eta as the signed quadratic progression sum_k (-1)^k q^{(6k+1)^2/24}.
RationalSeries eta_q(const Rat& cutoff);

/// Dedekind eta as q^{1/24} prod_{n>=1} (1 - q^n); same function, different
/// derivation, used to cross-check the engine.
RationalSeries eta_q_euler(const Rat& cutoff);

/// eta^3 via the odd-square expansion sum_{n>=0} (-1)^n (2n+1) q^{(2n+1)^2/8}.
RationalSeries eta_cube_odd_q(const Rat& cutoff);

/// eta^power by repeated exact multiplication, power >= 1.
RationalSeries eta_pow_q(int power, const Rat& cutoff);

// ---------------------------------------------------------------------------
// numeric evaluation (direct lattice sums, not via the q-expansion)
// ---------------------------------------------------------------------------

/// theta_{j,mu}(tau, z) = sum_{n in Z + j/(2 mu)} e^{2 pi i mu n z} q^{mu n^2},
/// summed to machine-precision convergence.  Im tau must be positive.
EvalResult theta_eval(const Rat& j, const Rat& mu, bool minus_signed,
                      std::complex<double> tau, std::complex<double> z);

/// eta(tau) via the pentagonal-progression sum.
EvalResult eta_eval(std::complex<double> tau);

/// Global sign of the two-variable odd Jacobi theta used here.  The classical
/// normalization is -i * sum_n (-1)^n q^{(n+1/2)^2/2} e^{(2n+1) pi i z}; this
/// library flips it (sign -1 below), which is the choice under which the
/// quasi-period shift identities hold with the signs used downstream.  All
/// consumers read the convention from this one constant.
inline constexpr int kTheta11Sign = -1;

/// Odd Jacobi theta  kTheta11Sign * (-i) sum_{n in Z} (-1)^n q^{(n+1/2)^2/2}
/// e^{(2n+1) pi i z}.
EvalResult vartheta11_eval(std::complex<double> tau, std::complex<double> z);

// ---------------------------------------------------------------------------
// analytic tails for |q|^... remainders beyond a cutoff
// ---------------------------------------------------------------------------

/// Upper bound for sum of |q|^{exponent} over all theta_{j,mu} terms with
/// exponent >= cutoff, 0 < q_abs < 1.  Signs are immaterial to the bound, so
/// it covers both the plain and the signed variant.
double theta_series_tail(const Rat& j, const Rat& mu, const Rat& cutoff,
                         double q_abs);

/// Tail of `weight * theta`: every omitted term is multiplied by `weight`
/// before summation, while the absolute safety floor is added once,
/// unscaled.  Use this when bounding a product c * q^{e} * theta past a
/// cutoff (weight = |c| |q|^{e}); scaling theta_series_tail directly would
/// amplify the floor astronomically for deeply negative e.
double theta_series_tail_scaled(const Rat& j, const Rat& mu,
                                const Rat& cutoff, double q_abs,
                                double weight);

/// Same for the eta progression (unit coefficients).
double eta_series_tail(const Rat& cutoff, double q_abs);

// ---------------------------------------------------------------------------
// formal theta-combination blocks
// ---------------------------------------------------------------------------

template <CoefficientRing Ring>
class ThetaBlock {
 public:
  ThetaBlock(int two_m, Rat cutoff) : two_m_(two_m), cutoff_(std::move(cutoff)) {
    if (two_m_ <= 0)
      throw std::domain_error("theta block needs a positive modulus");
  }

  int two_m() const { return two_m_; }
  const Rat& cutoff() const { return cutoff_; }

  /// Add `s` to the single component slot j (mod 2m).  The series must carry
  /// at least the block's own precision.
  void add_theta(long j, const QSeries<Ring>& s) {
    if (s.cutoff() < cutoff_)
      throw std::invalid_argument("theta block: term cutoff below block cutoff");
    long r = mod(j);
    auto it = slots_.find(r);
    if (it == slots_.end())
      slots_.emplace(r, truncate(s, cutoff_));
    else
      it->second = add(it->second, truncate(s, cutoff_));
  }

  /// Add `s` to both slots of the symmetric pair +k / -k.  When the two slots
  /// coincide (k = 0 or k = m mod 2m) the slot legitimately receives 2 s.
  void add_pair(long k, const QSeries<Ring>& s) {
    add_theta(k, s);
    add_theta(-k, s);
  }

  /// Component series at slot j (mod 2m); zero series when nothing was added.
  QSeries<Ring> slot(long j) const {
    auto it = slots_.find(mod(j));
    return it == slots_.end() ? QSeries<Ring>(cutoff_) : it->second;
  }

  /// Coefficient of the *paired* component at 0 <= k <= m (2m even): the
  /// boundary slots absorb a symmetric pair twice, so they are halved here,
  /// and interior slots must agree with their mirror.
  QSeries<Ring> coefficient(long k) const {
    if (two_m_ % 2 != 0)
      throw std::logic_error("paired coefficients need an even modulus");
    long r = mod(k);
    long m = two_m_ / 2;
    if (r == 0 || r == m)
      return scale(slot(r), Ring::from_rational(rat(1, 2)));
    if (!(slot(r) == slot(two_m_ - r)))
      throw std::logic_error("theta block is not mirror symmetric at slot " +
                             std::to_string(r));
    return slot(r);
  }

  /// Blocks are equal when every slot series agrees (absent = zero).
  friend bool operator==(const ThetaBlock& a, const ThetaBlock& b) {
    if (a.two_m_ != b.two_m_ || a.cutoff_ != b.cutoff_) return false;
    for (long j = 0; j < a.two_m_; ++j)
      if (!(a.slot(j) == b.slot(j))) return false;
    return true;
  }

 private:
  long mod(long x) const {
    long r = x % two_m_;
    return r < 0 ? r + two_m_ : r;
  }

  int two_m_;
  Rat cutoff_;
  std::map<long, QSeries<Ring>> slots_;
};

/// First disagreeing (slot, exponent, lhs, rhs) between two blocks, scanning
/// slots in order; nullopt when equal.
template <CoefficientRing Ring>
std::optional<std::tuple<long, Rat, std::string, std::string>>
block_first_mismatch(const ThetaBlock<Ring>& a, const ThetaBlock<Ring>& b) {
  if (a.two_m() != b.two_m())
    return {{-1, Rat(0), std::to_string(a.two_m()), std::to_string(b.two_m())}};
  for (long j = 0; j < a.two_m(); ++j) {
    auto m = first_mismatch(a.slot(j), b.slot(j));
    if (m)
      return {{j, std::get<0>(*m), Ring::to_string(std::get<1>(*m)),
               Ring::to_string(std::get<2>(*m))}};
  }
  return std::nullopt;
}

using RationalBlock = ThetaBlock<RationalRing>;
using ZetaBlock = ThetaBlock<ZetaRing>;

}  // namespace qf
