/// @file mockforms.cpp
/// @brief Assembly of the completed coefficient system and its companions.

#include "qf/mockforms.hpp"

#include <cmath>
#include <stdexcept>

namespace qf {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

void GIndex::validate() const {
  if (flavor != 1 && flavor != 2)
    throw std::domain_error("flavor must be 1 or 2");
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (p < 0 || p > 2 * m) throw std::domain_error("p out of range [0, 2m]");
  if (k < 0 || k > m) throw std::domain_error("k out of range [0, m]");
}

// ---------------------------------------------------------------------------
// constituents
// ---------------------------------------------------------------------------

RationalSeries g_correction_theta(int m, int p, const Rat& cutoff) {
  Rat j = rat(2L * m * p) + rat(m) + rat(1, 2);
  Rat mu = rat(m) + rat(1, 2);
  return theta_q(j, mu, true, cutoff);
}

RationalSeries g_companion_interior(int m, int p, int k, bool alternating) {
  RationalSeries out(Rat(1));  // every exponent is <= 0
  const Rat s = (alternating && k % 2 != 0) ? Rat(-1) : Rat(1);
  for (int r = -p + 1; r <= p; ++r) {
    long base = static_cast<long>(m) * (2 * r - 1) + k;
    out.add_term(rat(-base * base, 4L * m), s);
  }
  return out;
}

RationalSeries g_companion_zero(int m, int p) {
  RationalSeries out(Rat(1));
  for (int r = 0; r < p; ++r) {
    Rat h = Rat(r) + rat(1, 2);
    Rat e = rat(m) * h * h;
    out.add_term(Rat(-e), Rat(1));
  }
  return out;
}

RationalSeries g_companion_boundary(int m, int p) {
  RationalSeries out(Rat(1));
  for (int r = -(p - 1); r <= p - 1; ++r)
    out.add_term(rat(-static_cast<long>(m) * r * r), Rat(1));
  return out;
}

namespace {

IndefSumSpec g_wedge_base(int m, int p) {
  IndefSumSpec s;
  s.lattice = Lattice::half_odd_integers;
  s.A = rat(2 * m + 1, 2);
  s.alpha = rat(2L * p * m, 2 * m + 1);
  s.B = rat(m);
  return s;
}

int g_sign_offset(int flavor, int k) { return flavor == 1 ? (k % 2) : 0; }

}  // namespace

IndefSumSpec g_wedge_v1(int flavor, int m, int p, int k) {
  IndefSumSpec s = g_wedge_base(m, p);
  s.region = Region::v1;
  s.beta = Rat(rat(k, 2 * m) + p);
  s.sign_offset = g_sign_offset(flavor, k);
  return s;
}

IndefSumSpec g_wedge_v2(int flavor, int m, int p, int k) {
  IndefSumSpec s = g_wedge_base(m, p);
  s.region = Region::v2;
  s.beta = Rat(rat(-k, 2 * m) + p);
  s.sign_offset = g_sign_offset(flavor, k);
  return s;
}

// ---------------------------------------------------------------------------
// the system
// ---------------------------------------------------------------------------

RationalSeries g_star(const GIndex& idx, const Rat& cutoff) {
  idx.validate();
  const int m = idx.m, p = idx.p, k = idx.k;

  /* Companion sums reach below q^0, so the correction theta must be expanded
   * past the cutoff by exactly the deepest companion exponent. */
  auto with_theta = [&](const RationalSeries& fin) -> RationalSeries {
    if (fin.empty()) return RationalSeries(cutoff);
    Rat pad = Rat(-fin.leading()->first);
    RationalSeries th = g_correction_theta(m, p, Rat(cutoff + pad));
    return mul_to(th, fin, cutoff);
  };

  RationalSeries g(cutoff);
  if (0 < k && k < m) {
    auto s1 = indef_sum(g_wedge_v1(idx.flavor, m, p, k), cutoff);
    auto s2 = indef_sum(g_wedge_v2(idx.flavor, m, p, k), cutoff);
    auto fin = g_companion_interior(m, p, k, idx.flavor == 1);
    g = neg(add(add(s1, s2), with_theta(fin)));
  } else if (k == 0) {
    auto s2 = indef_sum(g_wedge_v2(idx.flavor, m, p, 0), cutoff);
    g = neg(add(s2, with_theta(g_companion_zero(m, p))));
  } else {  // k == m: plain sign convention in the wedge, halved boundary sum
    IndefSumSpec spec = g_wedge_v2(idx.flavor, m, p, m);
    spec.sign_offset = 0;
    auto s2 = indef_sum(spec, cutoff);
    g = neg(add(s2, scale_rat(with_theta(g_companion_boundary(m, p)),
                              rat(1, 2))));
    if (idx.flavor == 1 && m % 2 != 0) g = neg(g);
  }
  if (idx.flavor == 2 && p % 2 != 0) g = neg(g);
  return g;
}

RationalBlock G_star(int flavor, int m, int p, const Rat& cutoff) {
  GIndex{flavor, m, p, 0}.validate();
  RationalBlock blk(2 * m, cutoff);
  const Rat gl = (flavor == 2 && p % 2 != 0) ? Rat(-1) : Rat(1);

  // paired indefinite wedges, k = 0..m
  for (int k = 0; k <= m; ++k) {
    auto s2 = indef_sum(g_wedge_v2(flavor, m, p, k), cutoff);
    blk.add_pair(k, scale_rat(neg(s2), gl));
    if (0 < k && k < m) {
      auto s1 = indef_sum(g_wedge_v1(flavor, m, p, k), cutoff);
      blk.add_pair(k, scale_rat(neg(s1), gl));
    }
  }

  // finite companions multiplied by the correction theta (shared padding)
  std::vector<RationalSeries> fins;
  fins.reserve(m);
  for (int k = 0; k < m; ++k)
    fins.push_back(g_companion_interior(m, p, k, flavor == 1));
  auto z0 = g_companion_zero(m, p);
  auto bm = g_companion_boundary(m, p);
  Rat pad(0);
  auto deepen = [&pad](const RationalSeries& s) {
    if (!s.empty() && -s.leading()->first > pad) pad = Rat(-s.leading()->first);
  };
  for (const auto& f : fins) deepen(f);
  deepen(z0);
  deepen(bm);
  auto th = g_correction_theta(m, p, Rat(cutoff + pad));

  for (int k = 0; k < m; ++k)
    blk.add_pair(k, scale_rat(neg(mul_to(th, fins[k], cutoff)), gl));
  blk.add_theta(0, scale_rat(mul_to(th, z0, cutoff), Rat(2 * gl)));
  const Rat sgn_m = (flavor == 1 && m % 2 != 0) ? Rat(-1) : Rat(1);
  blk.add_theta(m, scale_rat(neg(mul_to(th, bm, cutoff)), Rat(gl * sgn_m)));
  return blk;
}

double g_star_tail(const GIndex& idx, const Rat& cutoff, double q_abs) {
  idx.validate();
  const int m = idx.m, p = idx.p, k = idx.k;
  double total = 0.0;

  if (0 < k && k < m) {
    total += indef_tail_bound(g_wedge_v1(idx.flavor, m, p, k), cutoff, q_abs);
    total += indef_tail_bound(g_wedge_v2(idx.flavor, m, p, k), cutoff, q_abs);
  } else {
    total += indef_tail_bound(g_wedge_v2(idx.flavor, m, p, k), cutoff, q_abs);
  }

  /* Correction theta times companion: omitted terms split as
   * sum_s |q|^{e_s} * (theta tail past cutoff - e_s); the boundary case's
   * extra 1/2 only shrinks this. */
  RationalSeries fin = (0 < k && k < m)
                           ? g_companion_interior(m, p, k, idx.flavor == 1)
                       : (k == 0) ? g_companion_zero(m, p)
                                  : g_companion_boundary(m, p);
  Rat jj = Rat(rat(2L * m * p) + rat(m) + rat(1, 2));
  Rat mu = Rat(rat(m) + rat(1, 2));
  for (const auto& [e, c] : fin.terms()) {
    double w = std::abs(rat_double(c)) * std::pow(q_abs, rat_double(e));
    total += theta_series_tail_scaled(jj, mu, Rat(cutoff - e), q_abs, w);
  }
  return total;
}

// ---------------------------------------------------------------------------
// additional correction blocks
// ---------------------------------------------------------------------------

RationalBlock phi_add(int m, int two_a, int two_b, const Rat& cutoff) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (two_a < 0) throw std::domain_error("2a must be >= 0");
  RationalBlock blk(2 * m, cutoff);

  RationalSeries zero_row(cutoff);
  for (int k = 0; k <= two_a; ++k)
    zero_row.add_term(rat(static_cast<long>(m) * k * (two_a - k)), Rat(1));
  blk.add_theta(0, neg(zero_row));

  for (int j = 1; j < 2 * m; ++j) {
    const Rat ph = ((static_cast<long>(j) * two_b) % 2 != 0) ? Rat(-1) : Rat(1);
    RationalSeries fin(cutoff);
    for (int k = 1; k <= two_a; ++k) {
      long num = static_cast<long>(j + 2 * m * (two_a - k)) * (j - 2 * m * k);
      fin.add_term(rat(-num, 4L * m), Rat(1));
    }
    blk.add_pair(j, scale_rat(fin, Rat(rat(-1, 2) * ph)));
  }
  return blk;
}

RationalBlock phi_add_special(int m, bool shifted, const Rat& cutoff) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  RationalBlock blk(2 * m, cutoff);
  for (int j = 0; j <= 2 * m; ++j) {
    const Rat sgn = (shifted && j % 2 != 0) ? Rat(-1) : Rat(1);
    RationalSeries s(cutoff);
    s.add_term(rat(-static_cast<long>(j) * (j - 2 * m), 4L * m), Rat(-sgn));
    blk.add_theta(j, s);
  }
  return blk;
}

// ---------------------------------------------------------------------------
// m = 1 specials
// ---------------------------------------------------------------------------

RationalSeries g_m1_integer_form(int p, int k, const Rat& cutoff) {
  IndefSumSpec s;
  s.lattice = Lattice::integers;
  s.A = rat(3, 2);
  s.B = Rat(1);
  s.sign_offset = 0;
  if (p == 0 && k == 0) {
    s.region = Region::v2;
    s.alpha = rat(1, 2);
    s.beta = rat(1, 2);
    return neg(indef_sum(s, cutoff));
  }
  if (p == 0 && k == 1) {
    s.region = Region::v2;
    s.alpha = rat(1, 2);
    s.beta = Rat(0);
    return indef_sum(s, cutoff);
  }
  if (p == 1 && k == 0) {
    s.region = Region::v1;
    s.alpha = rat(1, 6);
    s.beta = rat(1, 2);
    return indef_sum(s, cutoff);
  }
  if (p == 1 && k == 1) {
    s.region = Region::v1;
    s.alpha = rat(1, 6);
    s.beta = Rat(0);
    return add(neg(indef_sum(s, cutoff)),
               scale_rat(theta_q(rat(1, 2), rat(3, 2), true, cutoff),
                         rat(1, 2)));
  }
  throw std::domain_error("integer-lattice form exists for p, k in {0, 1}");
}

RationalSeries f_series(int i, const Rat& cutoff) {
  const Rat inner = Rat(cutoff + 2);
  RationalSeries num(inner);
  switch (i) {
    case 0:
      num = scale_rat(g_star({1, 1, 1, 1}, inner), Rat(-2));
      break;
    case 1:
      num = neg(g_star({1, 1, 0, 0}, inner));
      break;
    case 2:
      num = g_star({1, 1, 0, 1}, inner);
      break;
    case 3:
      num = scale_rat(g_star({1, 1, 1, 0}, inner), Rat(2));
      break;
    default:
      throw std::domain_error("eta-quotient index must be 0..3");
  }
  return truncate(divide_by_unit(num, eta_pow_q(2, inner)), cutoff);
}

RationalSeries h_series(int j, const Rat& cutoff) {
  if (j < 0 || j > 3)
    throw std::domain_error("theta-quotient index must be 0..3");
  const Rat inner = Rat(cutoff + 2);
  return truncate(
      divide_by_unit(theta_q(Rat(j), Rat(3), false, inner), eta_q(inner)),
      cutoff);
}

const int kQuotientSMatrix[4][4] = {
    {1, 2, 2, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -2, 2, -1}};

// ---------------------------------------------------------------------------
// exact transformation data
// ---------------------------------------------------------------------------

Rat g_T_phase(int m, int p, int j) {
  Rat a = Rat(Rat(p) + rat(2 * m + 1, 2));
  Rat t = Rat(a * a / (2 * m + 1));
  Rat u = rat(static_cast<long>(j + m) * (j + m), 2L * m);
  Rat r = Rat((t - u) / 2);
  return frac_part(r);
}

std::complex<double> PhasedSum::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [w, r] : terms_) {
    double x = rat_double(r);
    acc += rat_double(w) *
           std::complex<double>(std::cos(kTwoPi * x), std::sin(kTwoPi * x));
  }
  return acc;
}

PhasedSum GTransformMatrix::entry(int j, int p, int k, int pprime) const {
  const Rat rho = (j == 0 || j == m) ? rat(1, 2) : Rat(1);
  const Rat w = Rat(rho / 2);
  const Rat base = rat(static_cast<long>(p) * pprime, 2 * m + 1);
  const Rat off = rat(static_cast<long>(j) * k, 2L * m);
  PhasedSum out;
  out.add(w, Rat(base + off));
  out.add(w, Rat(base - off));
  return out;
}

double GTransformMatrix::scale() const {
  return 1.0 / std::sqrt(static_cast<double>(m) *
                         (static_cast<double>(m) + 0.5));
}

// ---------------------------------------------------------------------------
// two-variable reshuffle
// ---------------------------------------------------------------------------

ZetaBlock reshuffle_lhs(int m, const Rat& cutoff) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  ZetaBlock blk(2 * m, cutoff);
  std::vector<ZetaSeries> slots(2 * m, ZetaSeries(cutoff));
  const Rat lam = rat(2 * m + 1, 2);
  const Rat cc = rat(1, 2 * (2 * m + 1));

  /* Row |j| contributes nothing below the cutoff once the smallest exponent
   * in the row, lam (j+c)^2 - m j^2 (at |k| = 2m|j|), has cleared it. */
  long jmax = 2;
  while (true) {
    Rat x = Rat(jmax - 1);
    Rat ap = Rat(x + cc), an = Rat(-x + cc);
    Rat ep = Rat(lam * ap * ap - rat(m) * x * x);
    Rat en = Rat(lam * an * an - rat(m) * x * x);
    if (!(ep < cutoff) && !(en < cutoff)) break;
    if (++jmax > 100000)
      throw std::overflow_error("reshuffle row bound overflow");
  }
  jmax += 3;

  auto slot_of = [&](long k) {
    long r = k % (2 * m);
    return r < 0 ? r + 2 * m : r;
  };
  for (long j = -jmax; j <= jmax; ++j) {
    if (j == 0) continue;
    Rat w = (j % 2 != 0) ? Rat(-1) : Rat(1);
    if (j < 0) w = Rat(-w);
    Rat a = Rat(Rat(j) + cc);
    Rat base = Rat(lam * a * a);
    Rat zbase = Rat(rat(2 * m) * a);
    const long k_lo = j > 0 ? 1 : 2 * m * j + 1;
    const long k_hi = j > 0 ? 2 * m * j : 0;
    for (long k = k_lo; k <= k_hi; ++k) {
      Rat e = Rat(base - rat(k * k, 4L * m));
      if (!(e < cutoff)) continue;
      auto mono = ZetaRing::monomial(Rat(zbase - k), w);
      slots[slot_of(k)].add_term(e, mono);
      slots[slot_of(-k)].add_term(e, mono);
    }
  }
  for (int s = 0; s < 2 * m; ++s) blk.add_theta(s, slots[s]);
  return blk;
}

ZetaBlock reshuffle_rhs(int m, const Rat& cutoff) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  ZetaBlock blk(2 * m, cutoff);
  const Rat cc = rat(1, 2 * (2 * m + 1));
  auto add_part = [&](Region reg, const Rat& beta, const Rat& znu, int s) {
    IndefSumSpec spec;
    spec.lattice = Lattice::integers;
    spec.region = reg;
    spec.A = rat(2 * m + 1, 2);
    spec.alpha = cc;
    spec.B = rat(m);
    spec.beta = beta;
    spec.sign_offset = 0;
    spec.zeta = ZetaRule{rat(2 * m), rat(-2 * m), znu};
    blk.add_pair(s, indef_sum_zeta(spec, cutoff));
  };
  for (int s = 0; s <= m; ++s)
    add_part(Region::v3, rat(-s, 2L * m), Rat(rat(2 * m) * cc + s), s);
  for (int s = 1; s < m; ++s)
    add_part(Region::v1, rat(s, 2L * m), Rat(rat(2 * m) * cc - s), s);
  return blk;
}

}  // namespace qf
