#pragma once

/// @file mockforms.hpp
/// @brief The completed coefficient system g, its theta-block assembly, the
///        additional correction blocks, eta/theta quotients, and the exact
///        data of the modular transformations.
///
/// For integers m >= 1, 0 <= p <= 2m+1 - 1, the system consists of m+1
/// series g_k, 0 <= k <= m, each of the shape
///
///     g_k = -(wedge sums over the half-odd lattice, A = m + 1/2, B = m)
///           -(signed correction theta) * (finite companion Laurent sum),
///
/// where the wedge shifts are alpha = 2pm/(2m+1) in j and -+k/(2m) + p in r.
/// Two sign flavors of the same system occur (differing in how the
/// alternating sign is distributed); they satisfy the exact relation
/// flavor2 = (-1)^{k+p} flavor1, which the tests verify rather than assume.
///
/// The same function has a second life as a *block*: a formal combination
/// sum_j d_j theta_{j,m} with the slot index mod 2m.  G_star assembles the
/// block directly from its five constituent families; block coefficient k
/// must then reproduce g_k, an end-to-end consistency check of all the
/// bookkeeping (pairing, boundary halving, mirror symmetry).
///
/// phi_add is the additional correction attached to characteristics
/// (a, b) with 2a in {0, 1, 2, ...} and 2b in Z: a block whose slot series
/// are finite q-Laurent sums; for 2a = 1 it collapses to the closed
/// single-row form phi_add_special.
///
/// The m = 1 system admits integer-lattice rewrites and eta-quotients
/// f_0..f_3 that coincide with the theta-quotients h_0..h_3; both families
/// and their shared inversion matrix are provided for the verification
/// harness.

#include <complex>
#include <utility>
#include <vector>

#include "qf/indefinite.hpp"
#include "qf/qseries.hpp"
#include "qf/theta.hpp"

namespace qf {

struct GIndex {
  int flavor = 1;  // 1 or 2
  int m = 1;       // >= 1
  int p = 0;       // 0 <= p <= 2m
  int k = 0;       // 0 <= k <= m
  void validate() const;
};

// ---------------------------------------------------------------------------
// constituents
// ---------------------------------------------------------------------------

/// Signed half-integral theta multiplying every finite companion sum:
/// characteristic 2mp + m + 1/2 at weight m + 1/2.
RationalSeries g_correction_theta(int m, int p, const Rat& cutoff);

/// Finite companions (Laurent polynomials in q with exponents <= 0; the
/// returned series carry cutoff 1, which holds every term):
///   interior 0 < k < m :  sum_{-p < r <= p} (+-1)^k q^{-(m(2r-1)+k)^2 / 4m}
///   k = 0             :  sum_{0 <= r <= p-1} q^{-m (r + 1/2)^2}
///   k = m             :  sum_{-(p-1) <= r <= p-1} q^{-m r^2}
RationalSeries g_companion_interior(int m, int p, int k, bool alternating);
RationalSeries g_companion_zero(int m, int p);
RationalSeries g_companion_boundary(int m, int p);

/// Wedge specs used by g_k (exposed so the harness can cross-check the
/// enumeration against brute force on the real thing).  `first` is the
/// region-v1 wedge (interior k only), `second` the region-v2 wedge.
IndefSumSpec g_wedge_v1(int flavor, int m, int p, int k);
IndefSumSpec g_wedge_v2(int flavor, int m, int p, int k);

// ---------------------------------------------------------------------------
// the system itself
// ---------------------------------------------------------------------------

/// g_k as an exact q-series below `cutoff` (boundary k returns the
/// single-slot normalization, i.e. half the paired-theta weight).
RationalSeries g_star(const GIndex& idx, const Rat& cutoff);

/// The full decomposition assembled directly as a theta block over slots
/// j mod 2m, independently of g_star.
RationalBlock G_star(int flavor, int m, int p, const Rat& cutoff);

/// Analytic bound on sum |q|^e over every term of g_k dropped at `cutoff`.
double g_star_tail(const GIndex& idx, const Rat& cutoff, double q_abs);

// ---------------------------------------------------------------------------
// additional correction blocks
// ---------------------------------------------------------------------------

/// Correction block at elliptic characteristic (a, b), passed as the
/// integers 2a >= 0 and 2b (so the multiplier e^{2 pi i j b} = (-1)^{j 2b}
/// stays rational).
RationalBlock phi_add(int m, int two_a, int two_b, const Rat& cutoff);

/// Closed form of the same block at 2a = 1:
/// -sum_{0 <= j <= 2m} (+-1)^j q^{-j(j-2m)/4m} theta_j, the sign alternating
/// exactly when `shifted`.
RationalBlock phi_add_special(int m, bool shifted, const Rat& cutoff);

// ---------------------------------------------------------------------------
// m = 1 specials
// ---------------------------------------------------------------------------

/// Integer-lattice rewrites of the four m = 1 series, p in {0,1}, k in {0,1}.
RationalSeries g_m1_integer_form(int p, int k, const Rat& cutoff);

/// Eta-quotients f_0..f_3 (numerators are m = 1 members, denominator eta^2).
RationalSeries f_series(int i, const Rat& cutoff);

/// Theta-quotients h_0..h_3 = theta_{j,3}(tau,0) / eta.
RationalSeries h_series(int j, const Rat& cutoff);

/// The shared inversion matrix of both quotient families ((1/sqrt 6) M).
extern const int kQuotientSMatrix[4][4];

// ---------------------------------------------------------------------------
// exact transformation data
// ---------------------------------------------------------------------------

/// Exponent r in [0,1) with g_j(tau + 1) = e^{2 pi i r} g_j(tau); every
/// exponent of g_j is congruent to r mod 1.
Rat g_T_phase(int m, int p, int j);

/// Finite sum  sum_i w_i e^{2 pi i r_i}  with exact rational data, evaluated
/// late so transformation matrices stay exact until the final comparison.
class PhasedSum {
 public:
  void add(const Rat& weight, const Rat& phase) {
    terms_.emplace_back(weight, frac_part(phase));
  }
  const std::vector<std::pair<Rat, Rat>>& terms() const { return terms_; }
  std::complex<double> to_complex() const;

 private:
  std::vector<std::pair<Rat, Rat>> terms_;
};

/// Coefficient data of the modular inversion on the g-system:
///
///   g_j^{[m,p]}(-1/tau) = (-i tau) / sqrt(m (m + 1/2)) *
///                         sum_{p'=0}^{2m} sum_{k=0}^{m} entry(j,p,k,p') g_k^{[m,p']}(tau)
///
/// entry(j,p,k,p') = rho_j [ e(pp'/(2m+1) + jk/(2m)) + e(pp'/(2m+1) - jk/(2m)) ] / 2
/// with rho_j = 1/2 at the boundary rows j in {0, m} and 1 otherwise.
struct GTransformMatrix {
  int m = 1;
  PhasedSum entry(int j, int p, int k, int pprime) const;
  double scale() const;  // 1 / sqrt(m (m + 1/2))
};

// ---------------------------------------------------------------------------
// two-variable reshuffle blocks (coefficients in the formal-unit ring)
// ---------------------------------------------------------------------------

/// Left side: single sum over j in Z, 0 < k <= 2mj (minus the mirrored range
/// for j < 0), term (-1)^j q^{(m+1/2)(j+c)^2 - k^2/(4m)} zeta^{2m(j+c) - k}
/// with c = 1/(2(2m+1)), filed in slot k mod 2m (both mirrors).
ZetaBlock reshuffle_lhs(int m, const Rat& cutoff);

/// Right side: the same block reassembled from 2m+1 genuine wedge sums on
/// the integer lattice (regions v3 and v1 with r-shifts -+ s/(2m)).
ZetaBlock reshuffle_rhs(int m, const Rat& cutoff);

}  // namespace qf
