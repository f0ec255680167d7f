/// @file indefinite.cpp
/// @brief Wedge enumeration, certified bounds, tails, JSON round-trip.

#include "qf/indefinite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qf {

namespace {

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

struct RegionFlags {
  bool pos_lo, pos_hi;  // inclusion of r = 0 and r = j in the added set
  bool neg_lo, neg_hi;  // inclusion of r = j and r = 0 in the subtracted set
};

RegionFlags region_flags(Region r) {
  switch (r) {
    case Region::v1: return {true, false, true, false};
    case Region::v2: return {true, true, false, false};
    case Region::v3: return {false, true, false, true};
    case Region::v4: return {false, true, false, false};
  }
  throw std::logic_error("unreachable region");
}

bool half_lattice(Lattice l) { return l == Lattice::half_odd_integers; }

/* Integer part sigma(j): j itself on the integer lattice, j - 1/2 on the
 * half-odd lattice.  Input is assumed to be a lattice point. */
bool sigma_odd(const Rat& j, Lattice lattice) {
  Rat s = half_lattice(lattice) ? Rat(j - rat(1, 2)) : j;
  if (!is_integer(s)) throw std::logic_error("not a lattice point");
  return mpz_odd_p(s.get_num().get_mpz_t()) != 0;
}

/* All lattice points x (in Z or Z + 1/2) with lo <? x <? hi, inclusion of the
 * endpoints controlled by the flags.  Endpoints need not be lattice points. */
template <class Fn>
void for_lattice_range(const Rat& lo, const Rat& hi, bool incl_lo, bool incl_hi,
                       bool half, Fn&& fn) {
  long first = floor_z(lo).get_si() - 1;
  long last = floor_z(hi).get_si() + 1;
  for (long X = first; X <= last; ++X) {
    Rat x = half ? Rat(Rat(X) + rat(1, 2)) : Rat(X);
    bool above = (x > lo) || (incl_lo && x == lo);
    bool below = (x < hi) || (incl_hi && x == hi);
    if (above && below) fn(x);
  }
}

using TermSink = std::function<void(const Rat& j, const Rat& r, int sign,
                                    const Rat& exponent)>;

/* Emit every wedge term in column j whose exponent clears the cutoff. */
void emit_column(const IndefSumSpec& spec, const Rat& cutoff, const Rat& j,
                 const TermSink& sink) {
  const RegionFlags fl = region_flags(spec.region);
  const bool half = half_lattice(spec.lattice);
  const int base = sigma_odd(j, spec.lattice) != ((spec.sign_offset % 2) != 0)
                       ? -1
                       : 1;
  auto handle = [&](const Rat& r, int orientation) {
    Rat d = j + spec.alpha;
    Rat s = r + spec.beta;
    Rat e = spec.A * d * d - spec.B * s * s;
    if (e < cutoff) sink(j, r, base * orientation, e);
  };
  // added set: r between 0 and j
  for_lattice_range(Rat(0), j, fl.pos_lo, fl.pos_hi, half,
                    [&](const Rat& r) { handle(r, +1); });
  // subtracted set: r between j and 0
  for_lattice_range(j, Rat(0), fl.neg_lo, fl.neg_hi, half,
                    [&](const Rat& r) { handle(r, -1); });
}

/* Minorant of the wedge exponent over column |j| = x, valid for x >= |alpha|:
 * m(x) = A (x - |alpha|)^2 - B (x + c0)^2 with c0 = max(|alpha|, |beta|) + 1. */
Rat column_minorant(const IndefSumSpec& spec, const Rat& x) {
  Rat a = abs_rat(spec.alpha);
  Rat c0 = std::max(a, abs_rat(spec.beta)) + 1;
  Rat u = x - a;
  Rat v = x + c0;
  return Rat(spec.A * u * u - spec.B * v * v);
}

}  // namespace

void IndefSumSpec::validate() const {
  if (!(A > B)) throw std::domain_error("wedge form needs A > B");
  if (!(B > 0)) throw std::domain_error("wedge form needs B > 0");
}

Rat enumeration_bound(const IndefSumSpec& spec, const Rat& cutoff) {
  spec.validate();
  const Rat a = abs_rat(spec.alpha);
  const Rat c0 = std::max(a, abs_rat(spec.beta)) + 1;

  /* Hint from the quadratic formula on (A-B) x^2 - 2(A a + B c0) x +
   * (A a^2 - B c0^2 - N) >= 0; never trusted as-is. */
  const double Ad = rat_double(spec.A), Bd = rat_double(spec.B);
  const double ad = rat_double(a), cd = rat_double(c0);
  const double lead = Ad - Bd;
  const double mid = Ad * ad + Bd * cd;
  const double low = Ad * ad * ad - Bd * cd * cd - rat_double(cutoff);
  const double disc = mid * mid - lead * low;
  double hint = mid / lead;  // parabola vertex
  if (disc > 0.0) hint = (mid + std::sqrt(disc)) / lead;

  double start = std::max({hint, mid / lead, ad}) + 2.0;
  if (!(start < 1e15)) throw std::overflow_error("enumeration bound overflow");
  Rat bound = rat(static_cast<long>(std::ceil(start)));

  /* Certify: bound must sit at or past the minorant's vertex (exactly), and
   * the minorant there must clear the cutoff (exactly).  The minorant is a
   * parabola with positive leading coefficient, so past its vertex it is
   * nondecreasing and the certificate extends to every larger |j|. */
  const Rat vertex_num = spec.A * a + spec.B * c0;
  const Rat vertex = Rat(vertex_num / (spec.A - spec.B));
  while (bound < vertex || bound < a || column_minorant(spec, bound) < cutoff)
    bound += 1;
  return bound;
}

namespace {

void run_columns(const IndefSumSpec& spec, const Rat& cutoff, const Rat& bound,
                 const TermSink& sink) {
  const bool half = half_lattice(spec.lattice);
  for_lattice_range(Rat(-bound), bound, true, true, half,
                    [&](const Rat& j) { emit_column(spec, cutoff, j, sink); });
}

}  // namespace

RationalSeries indef_sum(const IndefSumSpec& spec, const Rat& cutoff) {
  spec.validate();
  RationalSeries out(cutoff);
  run_columns(spec, cutoff, enumeration_bound(spec, cutoff),
              [&](const Rat&, const Rat&, int sign, const Rat& e) {
                out.add_term(e, Rat(sign));
              });
  return out;
}

ZetaSeries indef_sum_zeta(const IndefSumSpec& spec, const Rat& cutoff) {
  spec.validate();
  if (!spec.zeta)
    throw std::domain_error("indef_sum_zeta needs a zeta rule on the spec");
  const ZetaRule zr = *spec.zeta;
  ZetaSeries out(cutoff);
  run_columns(spec, cutoff, enumeration_bound(spec, cutoff),
              [&](const Rat& j, const Rat& r, int sign, const Rat& e) {
                Rat zexp = zr.lambda * j + zr.mu * r + zr.nu;
                out.add_term(e, ZetaRing::monomial(zexp, Rat(sign)));
              });
  return out;
}

RationalSeries indef_sum_bruteforce(const IndefSumSpec& spec, const Rat& cutoff,
                                    long box_doubled) {
  spec.validate();
  RationalSeries out(cutoff);
  run_columns(spec, cutoff, rat(box_doubled, 2),
              [&](const Rat&, const Rat&, int sign, const Rat& e) {
                out.add_term(e, Rat(sign));
              });
  return out;
}

ZetaSeries indef_sum_zeta_bruteforce(const IndefSumSpec& spec,
                                     const Rat& cutoff, long box_doubled) {
  spec.validate();
  if (!spec.zeta)
    throw std::domain_error("indef_sum_zeta needs a zeta rule on the spec");
  const ZetaRule zr = *spec.zeta;
  ZetaSeries out(cutoff);
  run_columns(spec, cutoff, rat(box_doubled, 2),
              [&](const Rat& j, const Rat& r, int sign, const Rat& e) {
                Rat zexp = zr.lambda * j + zr.mu * r + zr.nu;
                out.add_term(e, ZetaRing::monomial(zexp, Rat(sign)));
              });
  return out;
}

double indef_tail_bound(const IndefSumSpec& spec, const Rat& cutoff,
                        double q_abs) {
  if (!(q_abs > 0.0 && q_abs < 1.0))
    throw std::domain_error("tail bound needs 0 < |q| < 1");
  spec.validate();
  const Rat bound = enumeration_bound(spec, cutoff);
  const bool half = half_lattice(spec.lattice);

  /* Columns inside the certified bound: each holds at most 2|j| + 2 lattice
   * points, and every omitted term there has exponent >= cutoff. */
  double inside_count = 0.0;
  for_lattice_range(Rat(-bound), bound, true, true, half, [&](const Rat& j) {
    inside_count += 2.0 * std::abs(rat_double(j)) + 2.0;
  });
  double total = inside_count * std::pow(q_abs, rat_double(cutoff));

  /* Columns beyond the bound: +/- pair at |j| = x contributes at most
   * 2 (2x+2) |q|^{minorant(x)}; the minorant grows quadratically so the sum
   * converges after a handful of steps. */
  Rat x = bound + (half ? rat(1, 2) : Rat(1));
  for (int i = 0; i < 100000; ++i) {
    double xd = rat_double(x);
    double term =
        2.0 * (2.0 * xd + 2.0) *
        std::pow(q_abs, rat_double(column_minorant(spec, x)));
    total += term;
    if (term < 1e-33) break;
    x += 1;
  }
  return total * (1.0 + 1e-12) + 1e-33;
}

EvalResult indef_eval(const IndefSumSpec& spec, std::complex<double> tau,
                      const Rat& cutoff) {
  if (!(tau.imag() > 0.0))
    throw std::domain_error("indef_eval: tau must lie in the upper half-plane");
  const double q_abs = std::exp(-6.28318530717958647692 * tau.imag());
  return eval_complex(indef_sum(spec, cutoff), tau,
                      indef_tail_bound(spec, cutoff, q_abs));
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

std::string lattice_name(Lattice l) {
  return l == Lattice::integers ? "integers" : "half_odd_integers";
}

Lattice lattice_from(const std::string& s) {
  if (s == "integers") return Lattice::integers;
  if (s == "half_odd_integers") return Lattice::half_odd_integers;
  throw std::invalid_argument("unknown lattice: " + s);
}

std::string region_name(Region r) {
  switch (r) {
    case Region::v1: return "v1";
    case Region::v2: return "v2";
    case Region::v3: return "v3";
    case Region::v4: return "v4";
  }
  throw std::logic_error("unreachable region");
}

Region region_from(const std::string& s) {
  if (s == "v1") return Region::v1;
  if (s == "v2") return Region::v2;
  if (s == "v3") return Region::v3;
  if (s == "v4") return Region::v4;
  throw std::invalid_argument("unknown region: " + s);
}

Rat rat_from_json(const nlohmann::json& j, const char* key) {
  auto parsed = rat_parse(j.at(key).get<std::string>());
  if (!parsed) throw std::invalid_argument(std::string("bad rational: ") + key);
  return *parsed;
}

}  // namespace

void to_json(nlohmann::json& out, const IndefSumSpec& spec) {
  out = nlohmann::json{{"lattice", lattice_name(spec.lattice)},
                       {"region", region_name(spec.region)},
                       {"A", rat_str(spec.A)},
                       {"alpha", rat_str(spec.alpha)},
                       {"B", rat_str(spec.B)},
                       {"beta", rat_str(spec.beta)},
                       {"sign_offset", spec.sign_offset}};
  if (spec.zeta)
    out["zeta"] = nlohmann::json{{"lambda", rat_str(spec.zeta->lambda)},
                                 {"mu", rat_str(spec.zeta->mu)},
                                 {"nu", rat_str(spec.zeta->nu)}};
}

void from_json(const nlohmann::json& in, IndefSumSpec& spec) {
  spec.lattice = lattice_from(in.at("lattice").get<std::string>());
  spec.region = region_from(in.at("region").get<std::string>());
  spec.A = rat_from_json(in, "A");
  spec.alpha = rat_from_json(in, "alpha");
  spec.B = rat_from_json(in, "B");
  spec.beta = rat_from_json(in, "beta");
  spec.sign_offset = in.at("sign_offset").get<int>();
  spec.zeta.reset();
  if (in.contains("zeta")) {
    const auto& z = in.at("zeta");
    ZetaRule zr;
    zr.lambda = rat_from_json(z, "lambda");
    zr.mu = rat_from_json(z, "mu");
    zr.nu = rat_from_json(z, "nu");
    spec.zeta = zr;
  }
}

}  // namespace qf
