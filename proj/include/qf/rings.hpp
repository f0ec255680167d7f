#pragma once

/// @file rings.hpp
/// @brief Coefficient rings a truncated q-series can be formed over.
///
/// A coefficient ring supplies exact zero / one / add / mul / negate and an
/// exact equality test, plus an embedding of the rationals (used for scaling
/// and for building series from integer data).  Optional capabilities are
/// detected per ring:
///
///   * `twist(v, e)`  -- multiply by the unit e^{2 pi i e}; available where
///     the ring can absorb a phase exactly (PhaseRing) or numerically
///     (ComplexRing).  This is what the exact T-transformation check uses.
///   * `to_complex(v)` -- numeric embedding, required by series evaluation.
///
/// Four rings are provided:
///   RationalRing  -- exact rationals; the workhorse for coefficient series.
///   ZetaRing      -- finite Laurent combinations  sum_a c_a z^a  with
///                    rational exponents a in a formal unit z; used by the
///                    two-variable identities where the second elliptic
///                    variable survives as powers of z.
///   PhaseRing     -- exact monomials c * e^{2 pi i r} with rational c, r.
///                    Addition is partial: it requires equal phase classes
///                    (that is exactly what uniform T-phase checks need).
///   ComplexRing   -- machine complex numbers for numeric work.

#include <cmath>
#include <complex>
#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qf/rational.hpp"

namespace qf {

template <class R>
concept CoefficientRing = requires(const typename R::value_type& a,
                                   const typename R::value_type& b,
                                   const Rat& r) {
  typename R::value_type;
  { R::zero() } -> std::same_as<typename R::value_type>;
  { R::one() } -> std::same_as<typename R::value_type>;
  { R::add(a, b) } -> std::same_as<typename R::value_type>;
  { R::mul(a, b) } -> std::same_as<typename R::value_type>;
  { R::neg(a) } -> std::same_as<typename R::value_type>;
  { R::eq(a, b) } -> std::same_as<bool>;
  { R::is_zero(a) } -> std::same_as<bool>;
  { R::from_rational(r) } -> std::same_as<typename R::value_type>;
  { R::to_string(a) } -> std::same_as<std::string>;
};

template <class R>
concept TwistCapable = requires(const typename R::value_type& a, const Rat& e) {
  { R::twist(a, e) } -> std::same_as<typename R::value_type>;
};

template <class R>
concept ComplexEmbeddable = requires(const typename R::value_type& a) {
  { R::to_complex(a) } -> std::same_as<std::complex<double>>;
};

template <class R>
concept DivisionCapable = requires(const typename R::value_type& a) {
  { R::invertible(a) } -> std::same_as<bool>;
  { R::inv(a) } -> std::same_as<typename R::value_type>;
};

// ---------------------------------------------------------------------------

struct RationalRing {
  using value_type = Rat;
  static value_type zero() { return Rat(0); }
  static value_type one() { return Rat(1); }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static bool eq(const value_type& a, const value_type& b) { return a == b; }
  static bool is_zero(const value_type& a) { return a == 0; }
  static value_type from_rational(const Rat& r) { return r; }
  static std::string to_string(const value_type& a) { return rat_str(a); }
  static bool invertible(const value_type& a) { return a != 0; }
  static value_type inv(const value_type& a) {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  static std::complex<double> to_complex(const value_type& a) {
    return {rat_double(a), 0.0};
  }
};

// ---------------------------------------------------------------------------

/// Finite rational-linear combination sum_a c_a z^a, exponents rational.
/// The unit z is purely formal: no relation is imposed, so equality means
/// equality of every (exponent -> coefficient) entry.
struct ZetaRing {
  using value_type = std::map<Rat, Rat>;  // exponent -> coefficient, no zeros

  static value_type zero() { return {}; }
  static value_type one() { return {{Rat(0), Rat(1)}}; }
  static value_type add(const value_type& a, const value_type& b) {
    value_type out = a;
    for (const auto& [e, c] : b) {
      Rat v = out.count(e) ? out[e] + c : c;
      if (v == 0)
        out.erase(e);
      else
        out[e] = v;
    }
    return out;
  }
  static value_type mul(const value_type& a, const value_type& b) {
    value_type out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        Rat e = ea + eb;
        Rat v = (out.count(e) ? out[e] : Rat(0)) + ca * cb;
        if (v == 0)
          out.erase(e);
        else
          out[e] = v;
      }
    return out;
  }
  static value_type neg(const value_type& a) {
    value_type out;
    for (const auto& [e, c] : a) out.emplace(e, -c);
    return out;
  }
  static bool eq(const value_type& a, const value_type& b) { return a == b; }
  static bool is_zero(const value_type& a) { return a.empty(); }
  static value_type from_rational(const Rat& r) {
    if (r == 0) return {};
    return {{Rat(0), r}};
  }
  static value_type monomial(const Rat& exponent, const Rat& coeff) {
    if (coeff == 0) return {};
    return {{exponent, coeff}};
  }
  static std::string to_string(const value_type& a) {
    if (a.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : a) {
      if (!out.empty()) out += " + ";
      if (e == 0)
        out += rat_str(c);
      else
        out += rat_str(c) + "*z^(" + rat_str(e) + ")";
    }
    return out;
  }
};

// ---------------------------------------------------------------------------

/// Exact phased rational c * e^{2 pi i r}.  Canonical form keeps r in [0, 1/2)
/// by absorbing e^{pi i} = -1 into the coefficient; zero has phase 0.
/// Addition of unequal phase classes has no representation here and throws --
/// the uniform-phase transformation checks rely on that exactness.
struct PhaseRing {
  struct value_type {
    Rat coeff;
    Rat phase;
    bool operator==(const value_type& o) const = default;
  };

  static value_type make(Rat coeff, Rat phase) {
    if (coeff == 0) return {Rat(0), Rat(0)};
    Rat r = frac_part(phase);
    if (r >= rat(1, 2)) {
      r -= rat(1, 2);
      coeff = -coeff;
    }
    return {std::move(coeff), std::move(r)};
  }
  static value_type zero() { return {Rat(0), Rat(0)}; }
  static value_type one() { return {Rat(1), Rat(0)}; }
  static value_type add(const value_type& a, const value_type& b) {
    if (a.coeff == 0) return b;
    if (b.coeff == 0) return a;
    if (a.phase != b.phase)
      throw std::domain_error("phase ring: sum of distinct phase classes");
    return make(a.coeff + b.coeff, a.phase);
  }
  static value_type mul(const value_type& a, const value_type& b) {
    return make(a.coeff * b.coeff, a.phase + b.phase);
  }
  static value_type neg(const value_type& a) { return {-a.coeff, a.phase}; }
  static bool eq(const value_type& a, const value_type& b) { return a == b; }
  static bool is_zero(const value_type& a) { return a.coeff == 0; }
  static value_type from_rational(const Rat& r) { return make(r, Rat(0)); }
  static value_type twist(const value_type& a, const Rat& e) {
    return make(a.coeff, a.phase + e);
  }
  static bool invertible(const value_type& a) { return a.coeff != 0; }
  static value_type inv(const value_type& a) {
    if (a.coeff == 0) throw std::domain_error("inverse of zero");
    return make(1 / a.coeff, -a.phase);
  }
  static std::string to_string(const value_type& a) {
    if (a.phase == 0) return rat_str(a.coeff);
    return rat_str(a.coeff) + "*e(" + rat_str(a.phase) + ")";
  }
  static std::complex<double> to_complex(const value_type& a) {
    const double two_pi = 6.28318530717958647692;
    double r = rat_double(a.phase);
    return rat_double(a.coeff) *
           std::complex<double>(std::cos(two_pi * r), std::sin(two_pi * r));
  }
};

// ---------------------------------------------------------------------------

struct ComplexRing {
  using value_type = std::complex<double>;
  static value_type zero() { return {0.0, 0.0}; }
  static value_type one() { return {1.0, 0.0}; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static bool eq(const value_type& a, const value_type& b) { return a == b; }
  static bool is_zero(const value_type& a) { return a == value_type{0.0, 0.0}; }
  static value_type from_rational(const Rat& r) { return {rat_double(r), 0.0}; }
  static value_type twist(const value_type& a, const Rat& e) {
    const double two_pi = 6.28318530717958647692;
    double r = rat_double(frac_part(e));
    return a * value_type(std::cos(two_pi * r), std::sin(two_pi * r));
  }
  static bool invertible(const value_type& a) { return a != value_type{0.0, 0.0}; }
  static value_type inv(const value_type& a) {
    if (!invertible(a)) throw std::domain_error("inverse of zero");
    return 1.0 / a;
  }
  static std::string to_string(const value_type& a) {
    return "(" + std::to_string(a.real()) + "," + std::to_string(a.imag()) + ")";
  }
  static std::complex<double> to_complex(const value_type& a) { return a; }
};

}  // namespace qf
