/// @file test_series.cpp
/// @brief Core truncated-series tests: arithmetic, cutoff propagation,
///        division by units, twisting, numeric evaluation, rendering.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "qf/qseries.hpp"

using namespace qf;

namespace {

RationalSeries poly(std::initializer_list<std::pair<long, long>> exp_coeff,
                    Rat cutoff, long exp_den = 1) {
  RationalSeries s(cutoff);
  for (auto [e, c] : exp_coeff) s.add_term(rat(e, exp_den), rat(c));
  return s;
}

/* Random polynomial with nonnegative exponents on the (1/24)Z lattice.
 * Bounded degree keeps products of two factors complete below cutoff 100. */
RationalSeries random_poly(std::mt19937_64& rng, int max_terms) {
  RationalSeries s(Rat(100));
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < terms; ++i) {
    long e24 = static_cast<long>(rng() % (40 * 24));
    long c = static_cast<long>(rng() % 19) - 9;
    s.add_term(rat(e24, 24), rat(c));
  }
  return s;
}

}  // namespace

TEST_CASE("term storage honors cutoff and drops zeros") {
  RationalSeries s(rat(2));
  s.add_term(rat(1, 2), rat(3));
  s.add_term(rat(2), rat(5));   // at the cutoff: excluded (cutoff is exclusive)
  s.add_term(rat(7, 2), rat(1));  // beyond: excluded
  s.add_term(rat(1, 2), rat(-3));  // cancels the first term entirely
  CHECK(s.empty());

  s.add_term(rat(-5, 8), rat(1));  // negative exponents are fine
  CHECK(s.size() == 1);
  CHECK(s.leading()->first == rat(-5, 8));
  CHECK(s.coefficient_at(rat(-5, 8)) == 1);
  CHECK(s.coefficient_at(rat(0)) == 0);
}

TEST_CASE("addition, negation, subtraction propagate the min cutoff") {
  auto a = poly({{0, 1}, {1, 2}}, rat(10));
  auto b = poly({{1, -2}, {3, 4}}, rat(5));
  auto s = add(a, b);
  CHECK(s.cutoff() == rat(5));
  CHECK(s == poly({{0, 1}, {3, 4}}, rat(5)));
  CHECK(sub(s, s).empty());
  CHECK(neg(s).coefficient_at(rat(3)) == -4);
}

TEST_CASE("multiplication on integer and fractional exponents") {
  auto a = poly({{0, 1}, {1, 1}}, rat(10));   // 1 + q
  auto b = poly({{0, 1}, {1, -1}}, rat(10));  // 1 - q
  CHECK(mul(a, b) == poly({{0, 1}, {2, -1}}, rat(10)));  // 1 - q^2

  auto u = RationalSeries::monomial(rat(1, 3), rat(2), rat(10));
  auto v = RationalSeries::monomial(rat(1, 2), rat(3), rat(10));
  auto w = mul(u, v);
  CHECK(w.size() == 1);
  CHECK(w.coefficient_at(rat(5, 6)) == 6);

  // geometric-style growth stays below the cutoff
  auto g = poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}}, rat(4));
  auto gg = mul(g, g);  // (1+q+q^2+q^3)^2 truncated below q^4
  CHECK(gg == poly({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, rat(4)));
}

TEST_CASE("scaling and monomial shifts") {
  auto a = poly({{0, 1}, {2, -3}}, rat(6));
  auto h = scale_rat(a, rat(1, 2));
  CHECK(h.coefficient_at(rat(0)) == rat(1, 2));
  CHECK(h.coefficient_at(rat(2)) == rat(-3, 2));
  CHECK(scale_rat(a, Rat(0)).empty());

  auto sh = shift_mul(a, rat(-1, 2), rat(2));  // multiply by 2 q^{-1/2}
  CHECK(sh.cutoff() == rat(11, 2));
  CHECK(sh.coefficient_at(rat(-1, 2)) == 2);
  CHECK(sh.coefficient_at(rat(3, 2)) == -6);
}

TEST_CASE("truncate and equality include the cutoff") {
  auto a = poly({{0, 1}, {1, 1}, {2, 1}}, rat(10));
  auto t = truncate(a, rat(2));
  CHECK(t == poly({{0, 1}, {1, 1}}, rat(2)));
  CHECK(t.cutoff() == rat(2));
  // same terms, different cutoff: not equal
  CHECK(!(t == poly({{0, 1}, {1, 1}}, rat(3))));
  // truncate never widens
  CHECK(truncate(t, rat(100)).cutoff() == rat(2));
}

TEST_CASE("first_mismatch scans the overlap in ascending order") {
  auto a = poly({{0, 1}, {1, 2}, {2, 3}}, rat(10));
  auto b = poly({{0, 1}, {1, 5}, {2, 3}}, rat(10));
  auto m = first_mismatch(a, b);
  REQUIRE(m.has_value());
  CHECK(std::get<0>(*m) == rat(1));
  CHECK(std::get<1>(*m) == 2);
  CHECK(std::get<2>(*m) == 5);

  // missing term on one side reports a zero
  auto c = poly({{0, 1}, {2, 3}}, rat(10));
  auto n = first_mismatch(a, c);
  REQUIRE(n.has_value());
  CHECK(std::get<0>(*n) == rat(1));
  CHECK(std::get<2>(*n) == 0);

  // differences at or past the smaller cutoff are invisible
  auto d = poly({{0, 1}, {1, 2}, {2, 99}}, rat(10));
  CHECK(!first_mismatch(truncate(a, rat(2)), d).has_value());
  CHECK(!first_mismatch(a, a).has_value());
}

TEST_CASE("divide_by_unit inverts multiplication") {
  std::mt19937_64 rng(0x5eed'0001);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_poly(rng, 12);
    auto b = random_poly(rng, 12);
    b.add_term(Rat(0), Rat(1));  // force an invertible constant term
    if (!b.leading() || b.leading()->second == 0) continue;
    auto q = divide_by_unit(mul(a, b), b);
    // quotient cutoff: min(100, 100) - leading exponent of b
    CHECK(q.cutoff() == Rat(100) - b.leading()->first);
    CHECK(!first_mismatch(q, a).has_value());
  }
}

TEST_CASE("divide_by_unit geometric series and negative leading exponents") {
  // 1 / (1 - q) = 1 + q + q^2 + ... below the cutoff
  auto one = poly({{0, 1}}, rat(8));
  auto den = poly({{0, 1}, {1, -1}}, rat(8));
  auto geo = divide_by_unit(one, den);
  CHECK(geo.cutoff() == rat(8));
  for (long n = 0; n < 8; ++n) CHECK(geo.coefficient_at(rat(n)) == 1);

  // denominator led by q^{-1}: quotient cutoff grows by 1
  auto den2 = shift_mul(den, rat(-1), rat(1));  // q^{-1} - 1, cutoff 7
  auto q2 = divide_by_unit(one, den2);
  CHECK(q2.cutoff() == rat(8));  // min(8, 7) - (-1)
  // q^{-1}(1 - q) inverted: q * (1 + q + q^2 + ...)
  for (long n = 1; n < 8; ++n) CHECK(q2.coefficient_at(rat(n)) == 1);
  CHECK(q2.coefficient_at(rat(0)) == 0);

  CHECK_THROWS_AS(divide_by_unit(one, RationalSeries(rat(8))),
                  std::domain_error);
}

TEST_CASE("twist_T multiplies each term by its exponent phase") {
  PhaseSeries s(rat(3));
  s.add_term(rat(1, 8), PhaseRing::make(rat(-1), Rat(0)));
  s.add_term(rat(9, 8), PhaseRing::make(rat(1), Rat(0)));
  auto t = twist_T(s);
  // q^{1/8} and q^{9/8} both pick up e(1/8); coefficients keep their signs.
  CHECK(t.coefficient_at(rat(1, 8)) == PhaseRing::make(rat(-1), rat(1, 8)));
  CHECK(t.coefficient_at(rat(9, 8)) == PhaseRing::make(rat(1), rat(9, 8)));
  CHECK(t.coefficient_at(rat(9, 8)) == PhaseRing::make(rat(1), rat(1, 8)));

  auto lifted = to_phase_series(poly({{0, 2}, {1, -5}}, rat(4)));
  CHECK(lifted.coefficient_at(Rat(0)) == PhaseRing::make(rat(2), Rat(0)));
  CHECK(twist_T(lifted).coefficient_at(rat(1)) ==
        PhaseRing::make(rat(-5), Rat(0)));  // integer exponents twist trivially
}

TEST_CASE("eval_complex matches direct computation") {
  const double two_pi = 6.28318530717958647692;
  auto s = poly({{0, 2}, {1, -3}}, rat(5));
  s.add_term(rat(1, 2), rat(7));

  std::complex<double> tau(0.3, 1.1);
  auto r = eval_complex(s, tau, /*tail_bound=*/0.0);
  auto q_at = [&](double e) {
    return std::exp(std::complex<double>(0, two_pi) * tau *
                    std::complex<double>(e, 0));
  };
  std::complex<double> direct = 2.0 * q_at(0) + 7.0 * q_at(0.5) - 3.0 * q_at(1);
  CHECK(std::abs(r.value - direct) < 1e-14);
  CHECK(r.error >= 0.0);
  CHECK(r.error < 1e-12);

  auto r2 = eval_complex(s, tau, 0.25);
  CHECK(r2.error >= 0.25);

  CHECK_THROWS_AS(eval_complex(s, std::complex<double>(0.5, 0.0), 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(eval_complex(s, std::complex<double>(0.5, -1.0), 0.0),
                  std::domain_error);
}

TEST_CASE("evaluation is a ring homomorphism within reported error") {
  std::mt19937_64 rng(0x5eed'0002);
  std::complex<double> tau(-0.21, 0.9);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_poly(rng, 15);
    auto b = random_poly(rng, 15);
    // exponents < 40 each, so the full product sits below cutoff 100
    auto ra = eval_complex(a, tau);
    auto rb = eval_complex(b, tau);
    auto rab = eval_complex(mul(a, b), tau);
    double slack = rab.error + std::abs(ra.value) * rb.error +
                   std::abs(rb.value) * ra.error + 1e-12;
    CHECK(std::abs(rab.value - ra.value * rb.value) <= slack);

    auto rsum = eval_complex(add(a, b), tau);
    CHECK(std::abs(rsum.value - (ra.value + rb.value)) <=
          rsum.error + ra.error + rb.error + 1e-12);
  }
}

TEST_CASE("text rendering is ascending with rational exponents") {
  RationalSeries s(rat(3));
  s.add_term(rat(25, 24), rat(-1));
  s.add_term(rat(1, 24), rat(1));
  CHECK(to_text(s) == "q^(1/24): 1\nq^(25/24): -1\n");

  RationalSeries t(rat(2));
  t.add_term(rat(-1, 8), rat(-1, 2));
  t.add_term(rat(1), rat(3));
  CHECK(to_text(t) == "q^(-1/8): -1/2\nq^(1): 3\n");

  CHECK(to_text(RationalSeries(rat(1))).empty());
}
