/// @file test_rings.cpp
/// @brief Ring-law and behavior tests for the coefficient rings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qf/rings.hpp"

using namespace qf;

namespace {

/* Deterministic small rationals for property tests: numerators in [-9, 9],
 * denominators from a fixed palette so sums stay cheap. */
std::vector<Rat> random_rats(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const long dens[] = {1, 2, 3, 4, 6, 8, 12, 24};
  std::vector<Rat> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    long n = static_cast<long>(rng() % 19) - 9;
    long d = dens[rng() % 8];
    out.push_back(rat(n, d));
  }
  return out;
}

template <class R>
void check_ring_laws(const typename R::value_type& a,
                     const typename R::value_type& b,
                     const typename R::value_type& c) {
  CHECK(R::eq(R::add(a, R::add(b, c)), R::add(R::add(a, b), c)));
  CHECK(R::eq(R::add(a, b), R::add(b, a)));
  CHECK(R::eq(R::add(a, R::zero()), a));
  CHECK(R::eq(R::add(a, R::neg(a)), R::zero()));
  CHECK(R::eq(R::mul(a, R::mul(b, c)), R::mul(R::mul(a, b), c)));
  CHECK(R::eq(R::mul(a, b), R::mul(b, a)));
  CHECK(R::eq(R::mul(a, R::one()), a));
  CHECK(R::eq(R::mul(a, R::add(b, c)), R::add(R::mul(a, b), R::mul(a, c))));
  CHECK(R::eq(R::mul(a, R::zero()), R::zero()));
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, 4) == rat(-1, 2));
  CHECK(rat(3, -6) == rat(-1, 2));  // canonical denominator is positive
  CHECK_THROWS_AS(rat(1, 0), std::domain_error);

  CHECK(is_integer(rat(6, 3)));
  CHECK(!is_integer(rat(1, 3)));

  CHECK(floor_z(rat(7, 2)) == 3);
  CHECK(floor_z(rat(-7, 2)) == -4);
  CHECK(frac_part(rat(-7, 2)) == rat(1, 2));
  CHECK(frac_part(rat(5)) == 0);

  CHECK(rat_str(rat(-1)) == "-1");
  CHECK(rat_str(rat(19, 24)) == "19/24");
  CHECK(rat_str(rat(-3, 8)) == "-3/8");

  CHECK(rat_parse("19/24") == rat(19, 24));
  CHECK(rat_parse("-5") == rat(-5));
  CHECK(rat_parse("2/4") == rat(1, 2));  // canonicalized on input
  CHECK(!rat_parse("banana").has_value());
  CHECK(!rat_parse("1/0").has_value());
  CHECK(!rat_parse("").has_value());
}

TEST_CASE("rational ring laws on random values") {
  auto xs = random_rats(0xa5a5'0001, 30);
  for (std::size_t i = 0; i + 2 < xs.size(); i += 3)
    check_ring_laws<RationalRing>(xs[i], xs[i + 1], xs[i + 2]);
  CHECK(RationalRing::inv(rat(3, 4)) == rat(4, 3));
  CHECK_THROWS_AS(RationalRing::inv(Rat(0)), std::domain_error);
  CHECK(RationalRing::to_string(rat(-7, 8)) == "-7/8");
}

TEST_CASE("zeta ring laws and arithmetic") {
  auto xs = random_rats(0xa5a5'0002, 36);
  for (std::size_t i = 0; i + 5 < xs.size(); i += 6) {
    auto a = ZetaRing::add(ZetaRing::monomial(xs[i], xs[i + 1]),
                           ZetaRing::monomial(xs[i + 2], xs[i + 3]));
    auto b = ZetaRing::monomial(xs[i + 4], xs[i + 5]);
    auto c = ZetaRing::from_rational(xs[i + 1]);
    check_ring_laws<ZetaRing>(a, b, c);
  }

  // (z + z^{-1})^2 = z^2 + 2 + z^{-2}
  auto u = ZetaRing::add(ZetaRing::monomial(rat(1), rat(1)),
                         ZetaRing::monomial(rat(-1), rat(1)));
  auto sq = ZetaRing::mul(u, u);
  ZetaRing::value_type expect{{rat(-2), rat(1)}, {rat(0), rat(2)}, {rat(2), rat(1)}};
  CHECK(ZetaRing::eq(sq, expect));

  // cancellation erases entries entirely
  auto diff = ZetaRing::add(u, ZetaRing::neg(u));
  CHECK(ZetaRing::is_zero(diff));

  CHECK(ZetaRing::to_string(expect) == "1*z^(-2) + 2 + 1*z^(2)");
  CHECK(ZetaRing::to_string(ZetaRing::zero()) == "0");
}

TEST_CASE("phase ring canonical form") {
  // e^{2 pi i r} with r >= 1/2 folds the half turn into the sign.
  auto v = PhaseRing::make(rat(3), rat(5, 8));
  CHECK(v.coeff == rat(-3));
  CHECK(v.phase == rat(1, 8));

  auto w = PhaseRing::make(rat(3), rat(13, 8));  // phases are mod 1 first
  CHECK(w == v);

  auto half = PhaseRing::make(rat(2), rat(1, 2));
  CHECK(half.coeff == rat(-2));
  CHECK(half.phase == 0);

  CHECK(PhaseRing::make(Rat(0), rat(3, 7)) == PhaseRing::zero());
  CHECK(PhaseRing::to_string(PhaseRing::make(rat(-1, 2), rat(1, 8))) ==
        "-1/2*e(1/8)");
  CHECK(PhaseRing::to_string(PhaseRing::one()) == "1");
}

TEST_CASE("phase ring arithmetic") {
  auto a = PhaseRing::make(rat(2), rat(1, 8));
  auto b = PhaseRing::make(rat(5), rat(1, 8));
  auto c = PhaseRing::make(rat(-7), rat(1, 8));
  check_ring_laws<PhaseRing>(a, b, c);  // one phase class is a valid subring

  // Adding distinct phase classes has no exact representation.
  auto d = PhaseRing::make(rat(1), rat(1, 3));
  CHECK_THROWS_AS(PhaseRing::add(a, d), std::domain_error);
  // ... but adding zero never throws.
  CHECK(PhaseRing::eq(PhaseRing::add(a, PhaseRing::zero()), a));

  // Multiplication composes phases: e(1/8) * e(1/3) = e(11/24).
  auto prod = PhaseRing::mul(a, d);
  CHECK(prod.coeff == rat(2));
  CHECK(prod.phase == rat(11, 24));

  // twist(c*e(r), e) = c*e(r+e); 1 twisted by 5/8 lands at -e(1/8).
  auto t = PhaseRing::twist(PhaseRing::one(), rat(5, 8));
  CHECK(t.coeff == rat(-1));
  CHECK(t.phase == rat(1, 8));

  // inverse inverts both coefficient and phase
  auto ai = PhaseRing::inv(a);
  CHECK(PhaseRing::eq(PhaseRing::mul(a, ai), PhaseRing::one()));
}

TEST_CASE("phase ring numeric embedding") {
  auto a = PhaseRing::make(rat(2), rat(1, 4));
  auto z = PhaseRing::to_complex(a);  // 2 * e^{pi i / 2} = 2i
  CHECK(std::abs(z - std::complex<double>(0.0, 2.0)) < 1e-15);
  auto h = PhaseRing::to_complex(PhaseRing::make(rat(1), rat(1, 2)));
  CHECK(std::abs(h - std::complex<double>(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("complex ring laws on dyadic rationals") {
  // Dyadic rationals with small numerators are exact in double precision,
  // so the ring laws hold with exact equality.
  std::mt19937_64 rng(0xa5a5'0003);
  for (int trial = 0; trial < 10; ++trial) {
    auto dyadic = [&rng]() {
      double n = static_cast<double>(static_cast<long>(rng() % 17) - 8);
      double d = static_cast<double>(1u << (rng() % 4));
      return std::complex<double>(n / d, 0.0);
    };
    check_ring_laws<ComplexRing>(dyadic(), dyadic(), dyadic());
  }
  // twist by a half turn is an exact sign flip up to 1 ulp of sin(pi)
  auto t = ComplexRing::twist(ComplexRing::one(), rat(1, 2));
  CHECK(std::abs(t - std::complex<double>(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(ComplexRing::from_rational(rat(1, 3)).real() - 1.0 / 3.0) <
        1e-15);
}
