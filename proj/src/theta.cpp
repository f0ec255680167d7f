/// @file theta.cpp
/// @brief Theta / eta expansions, direct numeric sums, and tail bounds.

#include "qf/theta.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>

namespace qf {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
/* Numeric lattice sums stop once terms drop below this; the stop itself is
 * charged to the reported error with a generous factor. */
constexpr double kStopTol = 1e-30;

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("lattice index does not fit a machine integer");
  return z.get_si();
}

/* exp(2 pi i w) for complex w. */
std::complex<double> e2pi(std::complex<double> w) {
  return std::exp(std::complex<double>(0.0, kTwoPi) * w);
}

}  // namespace

RationalSeries theta_q(const Rat& j, const Rat& mu, bool minus_signed,
                       const Rat& cutoff) {
  if (!(mu > 0)) throw std::domain_error("theta weight must be positive");
  RationalSeries out(cutoff);
  const Rat c = j / (2 * mu);  // lattice offset: n = c + t, t in Z

  /* The exponent mu (c+t)^2 is a parabola with vertex at t = -c; walking away
   * from the vertex it increases strictly, so each direction stops at the
   * first exponent >= cutoff. */
  auto emit = [&](long t) -> bool {
    Rat n = c + Rat(t);
    Rat e = mu * n * n;
    if (e >= cutoff) return false;
    Rat coeff = (minus_signed && (t % 2 != 0)) ? Rat(-1) : Rat(1);
    out.add_term(e, coeff);
    return true;
  };
  const long t_up = to_long(-floor_z(c));  // smallest t with c + t >= 0
  for (long t = t_up; emit(t); ++t) {
  }
  for (long t = t_up - 1; emit(t); --t) {
  }
  return out;
}

RationalSeries eta_q(const Rat& cutoff) {
  RationalSeries out(cutoff);
  auto emit = [&](long k) -> bool {
    Rat e = rat(6 * k + 1) * rat(6 * k + 1) / 24;
    if (e >= cutoff) return false;
    out.add_term(e, (k % 2 != 0) ? Rat(-1) : Rat(1));
    return true;
  };
  for (long k = 0; emit(k); ++k) {
  }
  for (long k = -1; emit(k); --k) {
  }
  return out;
}

RationalSeries eta_q_euler(const Rat& cutoff) {
  /* prod (1 - q^n) at integer exponents, then the global q^{1/24} shift.
   * Factors with n + 1/24 >= cutoff cannot change any kept coefficient. */
  RationalSeries prod = RationalSeries::monomial(Rat(0), Rat(1), cutoff);
  for (long n = 1; Rat(n) + rat(1, 24) < cutoff; ++n) {
    RationalSeries factor(cutoff);
    factor.add_term(Rat(0), Rat(1));
    factor.add_term(Rat(n), Rat(-1));
    prod = mul(prod, factor);
  }
  return truncate(shift_mul(prod, rat(1, 24), Rat(1)), cutoff);
}

RationalSeries eta_cube_odd_q(const Rat& cutoff) {
  RationalSeries out(cutoff);
  for (long n = 0;; ++n) {
    Rat e = rat(2 * n + 1) * rat(2 * n + 1) / 8;
    if (e >= cutoff) break;
    out.add_term(e, (n % 2 != 0) ? rat(-(2 * n + 1)) : rat(2 * n + 1));
  }
  return out;
}

RationalSeries eta_pow_q(int power, const Rat& cutoff) {
  if (power < 1) throw std::domain_error("eta power must be >= 1");
  /* All exponents are >= 1/24 > 0, so min-cutoff products lose nothing. */
  RationalSeries base = eta_q(cutoff);
  RationalSeries out = base;
  for (int i = 1; i < power; ++i) out = mul(out, base);
  return out;
}

// ---------------------------------------------------------------------------
// numeric sums
// ---------------------------------------------------------------------------

EvalResult theta_eval(const Rat& j, const Rat& mu, bool minus_signed,
                      std::complex<double> tau, std::complex<double> z) {
  if (!(mu > 0)) throw std::domain_error("theta weight must be positive");
  if (!(tau.imag() > 0.0))
    throw std::domain_error("theta_eval: tau must lie in the upper half-plane");

  const Rat c = j / (2 * mu);
  const double cd = rat_double(c);
  const double mud = rat_double(mu);

  /* |term(n)| = exp(-2 pi mu (n^2 Im tau + n Im z)) peaks at
   * n* = -Im z / (2 Im tau); start there and walk both ways. */
  const double n_star = -z.imag() / (2.0 * tau.imag());
  const long t0 = std::lround(n_star - cd);

  std::complex<double> acc{0.0, 0.0};
  double abs_sum = 0.0;
  std::size_t count = 0;
  auto emit = [&](long t) -> bool {
    double n = cd + static_cast<double>(t);
    std::complex<double> term =
        e2pi(tau * (mud * n * n) + z * (mud * n));
    if (minus_signed && (t % 2 != 0)) term = -term;
    acc += term;
    abs_sum += std::abs(term);
    ++count;
    return std::abs(term) > kStopTol;
  };
  for (long t = t0; emit(t); ++t) {
  }
  for (long t = t0 - 1; emit(t); --t) {
  }

  double eps = std::numeric_limits<double>::epsilon();
  double error = abs_sum * eps * (static_cast<double>(count) + 8.0) +
                 32.0 * kStopTol;
  return {acc, error};
}

EvalResult eta_eval(std::complex<double> tau) {
  if (!(tau.imag() > 0.0))
    throw std::domain_error("eta_eval: tau must lie in the upper half-plane");
  std::complex<double> acc{0.0, 0.0};
  double abs_sum = 0.0;
  std::size_t count = 0;
  auto emit = [&](long k) -> bool {
    double e = static_cast<double>(6 * k + 1) * static_cast<double>(6 * k + 1) /
               24.0;
    std::complex<double> term = e2pi(tau * e);
    if (k % 2 != 0) term = -term;
    acc += term;
    abs_sum += std::abs(term);
    ++count;
    return std::abs(term) > kStopTol;
  };
  for (long k = 0; emit(k); ++k) {
  }
  for (long k = -1; emit(k); --k) {
  }
  double eps = std::numeric_limits<double>::epsilon();
  return {acc, abs_sum * eps * (static_cast<double>(count) + 8.0) +
                   32.0 * kStopTol};
}

EvalResult vartheta11_eval(std::complex<double> tau, std::complex<double> z) {
  if (!(tau.imag() > 0.0))
    throw std::domain_error(
        "vartheta11_eval: tau must lie in the upper half-plane");

  /* |term(n)| = exp(-2 pi (Im tau (n+1/2)^2/2 + (n+1/2) Im z)),
   * peak at n + 1/2 = -Im z / Im tau. */
  const double nu_star = -z.imag() / tau.imag();
  const long n0 = std::lround(nu_star - 0.5);

  std::complex<double> acc{0.0, 0.0};
  double abs_sum = 0.0;
  std::size_t count = 0;
  auto emit = [&](long n) -> bool {
    double nu = static_cast<double>(n) + 0.5;
    std::complex<double> term = e2pi(tau * (nu * nu / 2.0) + z * nu);
    if (n % 2 != 0) term = -term;
    acc += term;
    abs_sum += std::abs(term);
    ++count;
    return std::abs(term) > kStopTol;
  };
  for (long n = n0; emit(n); ++n) {
  }
  for (long n = n0 - 1; emit(n); --n) {
  }

  std::complex<double> value =
      std::complex<double>(0.0, -1.0) * acc * static_cast<double>(kTheta11Sign);
  double eps = std::numeric_limits<double>::epsilon();
  return {value, abs_sum * eps * (static_cast<double>(count) + 8.0) +
                     32.0 * kStopTol};
}

// ---------------------------------------------------------------------------
// tails
// ---------------------------------------------------------------------------

namespace {

/* Sum |q|^{exp(t)} over all t with exp(t) >= cutoff, where exp is the given
 * parabola-like map; the caller provides the same walk as the expansion.
 * Exponents grow quadratically, so the numeric sum converges after a handful
 * of terms; a tiny floor is added to stay an upper bound. */
double parabola_tail(const Rat& cutoff, double q_abs,
                     const std::function<Rat(long)>& exponent, long t_vertex) {
  if (!(q_abs > 0.0 && q_abs < 1.0))
    throw std::domain_error("tail bound needs 0 < |q| < 1");
  double total = 0.0;
  auto walk = [&](long start, long step) {
    long t = start;
    /* skip the kept prefix in this direction */
    while (exponent(t) < cutoff) t += step;
    for (int i = 0; i < 100000; ++i) {
      double term = std::pow(q_abs, rat_double(exponent(t)));
      total += term;
      if (term < 1e-34) break;
      t += step;
    }
  };
  walk(t_vertex, +1);
  walk(t_vertex - 1, -1);
  /* The caller adds the absolute safety floor; keeping it out of the raw
   * sum lets weighted callers scale the sum without amplifying the floor. */
  return total * (1.0 + 1e-12);
}

}  // namespace

double theta_series_tail(const Rat& j, const Rat& mu, const Rat& cutoff,
                         double q_abs) {
  return theta_series_tail_scaled(j, mu, cutoff, q_abs, 1.0);
}

double theta_series_tail_scaled(const Rat& j, const Rat& mu,
                                const Rat& cutoff, double q_abs,
                                double weight) {
  if (!(mu > 0)) throw std::domain_error("theta weight must be positive");
  const Rat c = j / (2 * mu);
  const long t_up = to_long(-floor_z(c));
  return weight * parabola_tail(
                      cutoff, q_abs,
                      [&](long t) -> Rat {
                        Rat n = c + Rat(t);
                        return Rat(mu * n * n);
                      },
                      t_up) +
         1e-33;
}

double eta_series_tail(const Rat& cutoff, double q_abs) {
  return parabola_tail(
             cutoff, q_abs,
             [](long k) -> Rat {
               return Rat(rat(6 * k + 1) * rat(6 * k + 1) / 24);
             },
             0) +
         1e-33;
}

}  // namespace qf
