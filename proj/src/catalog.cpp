/// @file catalog.cpp
/// @brief The registered identity catalog: every exact identity and numeric
///        transformation law the library claims, as named runnable records.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qf/transform.hpp"

namespace qf {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kPi = 3.14159265358979323846;

// |j|, |r| <= 60 box for every brute-force cross-check.
constexpr long kBruteBox = 120;

Rat cut(const CheckConfig& cfg, long dflt) {
  return cfg.cutoff.value_or(Rat(dflt));
}

CheckReport exact_report(const std::string& id, CheckMode mode,
                         const Rat& N) {
  CheckReport r;
  r.id = id;
  r.mode = mode;
  r.cutoff = rat_str(N);
  r.status = CheckStatus::pass;
  return r;
}

void fail_with(CheckReport& r, const std::string& label,
               const std::string& mm) {
  r.status = CheckStatus::fail;
  r.first_mismatch = label.empty() ? mm : label + " " + mm;
}

// The four integer-lattice wedges whose products of eta and theta close in
// closed form; `which` is 1-based.
IndefSumSpec basic_wedge(int which) {
  IndefSumSpec s;
  s.lattice = Lattice::integers;
  s.A = rat(3, 2);
  s.B = Rat(1);
  s.sign_offset = 0;
  switch (which) {
    case 1:
      s.region = Region::v2;
      s.alpha = rat(1, 2);
      s.beta = rat(1, 2);
      break;
    case 2:
      s.region = Region::v2;
      s.alpha = rat(1, 2);
      s.beta = Rat(0);
      break;
    case 3:
      s.region = Region::v1;
      s.alpha = rat(1, 6);
      s.beta = rat(1, 2);
      break;
    default:
      s.region = Region::v1;
      s.alpha = rat(1, 6);
      s.beta = Rat(0);
      break;
  }
  return s;
}

RationalSeries basic_wedge_closed_form(int which, const Rat& N) {
  const auto e = eta_q(N);
  switch (which) {
    case 1:
      return mul(e, theta_q(Rat(1), Rat(3), false, N));
    case 2:
      return mul(e, theta_q(Rat(2), Rat(3), false, N));
    case 3:
      return scale_rat(mul(e, theta_q(Rat(3), Rat(3), false, N)),
                       rat(1, 2));
    default:
      return scale_rat(add(mul(e, theta_q(Rat(0), Rat(3), false, N)),
                           theta_q(rat(1, 2), rat(3, 2), true, N)),
                       rat(1, 2));
  }
}

// One wedge of the two-variable reshuffle right-hand side, for the
// brute-force whitelist.
IndefSumSpec reshuffle_wedge(int m, int s) {
  IndefSumSpec spec;
  spec.lattice = Lattice::integers;
  spec.region = Region::v3;
  spec.A = rat(2 * m + 1, 2);
  spec.alpha = rat(1, 2 * (2 * m + 1));
  spec.B = rat(m);
  spec.beta = rat(-s, 2L * m);
  spec.sign_offset = 0;
  spec.zeta = ZetaRule{rat(2 * m), rat(-2 * m),
                       Rat(rat(2 * m) * rat(1, 2 * (2 * m + 1)) + s)};
  return spec;
}

std::complex<double> expi(double arg) {
  return {std::cos(arg), std::sin(arg)};
}

// ---------------------------------------------------------------------------
// record builders
// ---------------------------------------------------------------------------

IdentityRecord exact(std::string id, CheckMode mode, long dflt,
                     std::string note,
                     std::function<CheckReport(const CheckConfig&)> run) {
  IdentityRecord rec;
  rec.id = std::move(id);
  rec.mode = mode;
  rec.default_cutoff = Rat(dflt);
  rec.note = std::move(note);
  rec.run = std::move(run);
  return rec;
}

IdentityRecord numeric(std::string id, double tol, long dflt,
                       std::string note,
                       std::function<CheckReport(const CheckConfig&)> run) {
  IdentityRecord rec;
  rec.id = std::move(id);
  rec.mode = CheckMode::numeric;
  rec.default_cutoff = Rat(dflt);
  rec.default_tol = tol;
  rec.note = std::move(note);
  rec.run = std::move(run);
  return rec;
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> recs;

  // ---- eta identities -----------------------------------------------------

  recs.push_back(exact(
      "eta-euler-vs-pentagonal", CheckMode::exact_series, 200,
      "product form of eta equals its pentagonal-number expansion",
      [](const CheckConfig& cfg) {
        const Rat N = cut(cfg, 200);
        return compare_series("eta-euler-vs-pentagonal", eta_q_euler(N),
                              eta_q(N));
      }));

  recs.push_back(exact(
      "eta-cube-vs-odd-squares", CheckMode::exact_series, 100,
      "eta^3 equals the signed odd-square series",
      [](const CheckConfig& cfg) {
        const Rat N = cut(cfg, 100);
        return compare_series("eta-cube-vs-odd-squares", eta_pow_q(3, N),
                              eta_cube_odd_q(N));
      }));

  recs.push_back(exact(
      "eta-as-signed-theta", CheckMode::exact_series, 30,
      "eta equals the signed theta of characteristic 1/2 at level 3/2",
      [](const CheckConfig& cfg) {
        const Rat N = cut(cfg, 30);
        return compare_series("eta-as-signed-theta", eta_q(N),
                              theta_q(rat(1, 2), rat(3, 2), true, N));
      }));

  // ---- the four closed-form wedge identities ------------------------------

  const char* prop_names[4] = {"m1-prop-i", "m1-prop-ii", "m1-prop-iii",
                               "m1-prop-iv"};
  const char* prop_notes[4] = {
      "integer v2 wedge (alpha=1/2, beta=1/2) equals eta * theta_{1,3}",
      "integer v2 wedge (alpha=1/2, beta=0) equals eta * theta_{2,3}",
      "integer v1 wedge (alpha=1/6, beta=1/2) equals eta * theta_{3,3} / 2",
      "integer v1 wedge (alpha=1/6, beta=0) equals "
      "(eta * theta_{0,3} + signed theta) / 2"};
  for (int w = 1; w <= 4; ++w) {
    recs.push_back(exact(
        prop_names[w - 1], CheckMode::exact_series, 10, prop_notes[w - 1],
        [w, name = std::string(prop_names[w - 1])](const CheckConfig& cfg) {
          const Rat N = cut(cfg, 10);
          return compare_series(name, indef_sum(basic_wedge(w), N),
                                basic_wedge_closed_form(w, N));
        }));
  }

  // ---- the system's own exact identities ----------------------------------

  recs.push_back(exact(
      "leading-terms-m1", CheckMode::exact_series, 1,
      "the four m=1 members open with -q^(1/8), q^(3/8), q^(19/24), "
      "-1/2 q^(1/24)",
      [](const CheckConfig& cfg) {
        const Rat N = cut(cfg, 1);
        auto r = exact_report("leading-terms-m1", CheckMode::exact_series, N);
        const std::pair<GIndex, std::pair<Rat, Rat>> want[4] = {
            {{1, 1, 0, 0}, {rat(1, 8), Rat(-1)}},
            {{1, 1, 0, 1}, {rat(3, 8), Rat(1)}},
            {{1, 1, 1, 0}, {rat(19, 24), Rat(1)}},
            {{1, 1, 1, 1}, {rat(1, 24), rat(-1, 2)}}};
        for (const auto& [idx, lead] : want) {
          RationalSeries expect(N);
          expect.add_term(lead.first, lead.second);
          if (auto mm = mismatch_text(g_star(idx, N), expect)) {
            fail_with(r,
                      "p=" + std::to_string(idx.p) +
                          " k=" + std::to_string(idx.k),
                      *mm);
            return r;
          }
        }
        return r;
      }));

  for (int m = 1; m <= 3; ++m) {
    recs.push_back(exact(
        "g2-vs-g1-m" + std::to_string(m), CheckMode::exact_series, 10,
        "second sign flavor equals (-1)^{k+p} times the first",
        [m](const CheckConfig& cfg) {
          const Rat N = cut(cfg, 10);
          auto r = exact_report("g2-vs-g1-m" + std::to_string(m),
                                CheckMode::exact_series, N);
          for (int p = 0; p <= 2 * m; ++p)
            for (int k = 0; k <= m; ++k) {
              const auto g1 = g_star({1, m, p, k}, N);
              const auto g2 = g_star({2, m, p, k}, N);
              const auto want = (k + p) % 2 != 0 ? neg(g1) : g1;
              if (auto mm = mismatch_text(g2, want)) {
                fail_with(r,
                          "p=" + std::to_string(p) +
                              " k=" + std::to_string(k),
                          *mm);
                return r;
              }
            }
          return r;
        }));
  }

  recs.push_back(exact(
      "m1-degenerate-p12", CheckMode::exact_series, 10,
      "the m=1 system coincides at shift parameters p=1 and p=2",
      [](const CheckConfig& cfg) {
        const Rat N = cut(cfg, 10);
        auto r = exact_report("m1-degenerate-p12", CheckMode::exact_series,
                              N);
        for (int k = 0; k <= 1; ++k)
          if (auto mm = mismatch_text(g_star({1, 1, 1, k}, N),
                                      g_star({1, 1, 2, k}, N))) {
            fail_with(r, "k=" + std::to_string(k), *mm);
            return r;
          }
        return r;
      }));

  for (int p = 0; p <= 1; ++p)
    for (int k = 0; k <= 1; ++k) {
      const std::string id = "m1-int-lattice-p" + std::to_string(p) + "-k" +
                             std::to_string(k);
      recs.push_back(exact(
          id, CheckMode::exact_series, 10,
          "integer-lattice rewrite agrees with the half-odd wedge form",
          [p, k, id](const CheckConfig& cfg) {
            const Rat N = cut(cfg, 10);
            return compare_series(id, g_m1_integer_form(p, k, N),
                                  g_star({1, 1, p, k}, N));
          }));
    }

  recs.push_back(exact(
      "m1-quotients-fh", CheckMode::exact_series, 8,
      "eta-quotients f_i equal theta-quotients h_i",
      [](const CheckConfig& cfg) {
        const Rat N = cut(cfg, 8);
        auto r =
            exact_report("m1-quotients-fh", CheckMode::exact_series, N);
        for (int i = 0; i < 4; ++i)
          if (auto mm = mismatch_text(f_series(i, N), h_series(i, N))) {
            fail_with(r, "i=" + std::to_string(i), *mm);
            return r;
          }
        return r;
      }));

  for (const auto& [m, p] : {std::pair{1, 1}, std::pair{2, 1}}) {
    const std::string id = "block-roundtrip-m" + std::to_string(m) + "-p" +
                           std::to_string(p);
    recs.push_back(exact(
        id, CheckMode::exact_block, 8,
        "block assembly's slot combination reproduces every member",
        [m = m, p = p, id](const CheckConfig& cfg) {
          const Rat N = cut(cfg, 8);
          auto r = exact_report(id, CheckMode::exact_block, N);
          const auto blk = G_star(1, m, p, N);
          for (int k = 0; k <= m; ++k)
            if (auto mm = mismatch_text(blk.coefficient(k),
                                        g_star({1, m, p, k}, N))) {
              fail_with(r, "k=" + std::to_string(k), *mm);
              return r;
            }
          return r;
        }));
  }

  // ---- additional correction blocks ----------------------------------------

  for (int m = 1; m <= 4; ++m)
    for (const bool shifted : {true, false}) {
      const std::string id = "phi-special-m" + std::to_string(m) +
                             (shifted ? "-shifted" : "-plain");
      recs.push_back(exact(
          id, CheckMode::exact_block, 12,
          "half-characteristic correction block equals its closed "
          "single-row form",
          [m, shifted, id](const CheckConfig& cfg) {
            const Rat N = cut(cfg, 12);
            return compare_blocks(id, phi_add(m, 1, shifted ? -1 : 0, N),
                                  phi_add_special(m, shifted, N));
          }));
    }

  // ---- two-variable reshuffle ----------------------------------------------

  for (int m = 1; m <= 2; ++m) {
    const std::string id = "reshuffle-zeta-m" + std::to_string(m);
    recs.push_back(exact(
        id, CheckMode::exact_block, 8,
        "single two-variable sum reassembles into genuine wedge sums",
        [m, id](const CheckConfig& cfg) {
          const Rat N = cut(cfg, 8);
          return compare_zeta_blocks(id, reshuffle_lhs(m, N),
                                     reshuffle_rhs(m, N));
        }));
  }

  // ---- brute-force whitelist (certified enumeration vs naive box scan) ----

  struct BruteEntry {
    const char* id;
    const char* note;
    IndefSumSpec spec;
  };
  const BruteEntry brutes[] = {
      {"wedge-vs-brute-1", "integer v2 wedge, alpha=1/2 beta=1/2",
       basic_wedge(1)},
      {"wedge-vs-brute-2", "integer v2 wedge, alpha=1/2 beta=0",
       basic_wedge(2)},
      {"wedge-vs-brute-3", "integer v1 wedge, alpha=1/6 beta=1/2",
       basic_wedge(3)},
      {"wedge-vs-brute-4", "integer v1 wedge, alpha=1/6 beta=0",
       basic_wedge(4)},
      {"wedge-vs-brute-5", "half-odd v2 wedge of the m=1 system",
       g_wedge_v2(1, 1, 0, 0)},
      {"wedge-vs-brute-6", "half-odd v1 wedge of the m=2 system",
       g_wedge_v1(1, 2, 3, 1)},
      {"wedge-vs-brute-7", "half-odd v2 wedge of the m=2 system",
       g_wedge_v2(1, 2, 3, 1)},
      {"wedge-vs-brute-8", "half-odd v2 boundary wedge, second flavor",
       g_wedge_v2(2, 2, 3, 2)},
  };
  for (const auto& b : brutes) {
    recs.push_back(exact(
        b.id, CheckMode::exact_series, 6, b.note,
        [spec = b.spec, id = std::string(b.id)](const CheckConfig& cfg) {
          const Rat N = cut(cfg, 6);
          return compare_series(id, indef_sum(spec, N),
                                indef_sum_bruteforce(spec, N, kBruteBox));
        }));
  }
  recs.push_back(exact(
      "wedge-vs-brute-9-zeta", CheckMode::exact_series, 6,
      "integer v3 wedge with monomial weights (reshuffle member)",
      [](const CheckConfig& cfg) {
        const Rat N = cut(cfg, 6);
        const auto spec = reshuffle_wedge(2, 1);
        CheckReport r = exact_report("wedge-vs-brute-9-zeta",
                                     CheckMode::exact_series, N);
        if (auto mm = mismatch_text(
                indef_sum_zeta(spec, N),
                indef_sum_zeta_bruteforce(spec, N, kBruteBox)))
          fail_with(r, "", *mm);
        return r;
      }));

  // ---- exact translation checks --------------------------------------------

  for (int m = 1; m <= 3; ++m) {
    recs.push_back(exact(
        "T-g-m" + std::to_string(m), CheckMode::exact_series, 8,
        "translation multiplies each member by its exact unit phase",
        [m](const CheckConfig& cfg) { return check_T_g(m, cfg); }));
  }
  recs.push_back(exact(
      "T-theta-km", CheckMode::exact_series, 8,
      "translation multiplies theta_{k,m} by e(k^2/4m)",
      [](const CheckConfig& cfg) {
        for (int m = 1; m <= 3; ++m) {
          auto r = check_T_theta(m, cfg);
          if (r.status != CheckStatus::pass) {
            r.first_mismatch = "m=" + std::to_string(m) + " " +
                               r.first_mismatch;
            return r;
          }
          if (m == 3) return r;
        }
        return check_T_theta(3, cfg);
      }));

  // ---- numeric inversion checks --------------------------------------------

  recs.push_back(numeric(
      "S-eta", 1e-9, 0, "eta(-1/tau) = sqrt(-i tau) eta(tau)",
      [](const CheckConfig& cfg) {
        const double tol = cfg.tol.value_or(1e-9);
        const auto taus = config_taus(cfg);
        NumericTally tally;
        for (const auto tau : taus) {
          const auto lhs = eta_eval(-1.0 / tau);
          const auto at = eta_eval(tau);
          const auto pref =
              std::sqrt(std::complex<double>(0.0, -1.0) * tau);
          tally.add(lhs.value, lhs.error, pref * at.value,
                    std::abs(pref) * at.error);
        }
        return finish_numeric("S-eta", tol, taus, tally);
      }));

  for (int m = 1; m <= 2; ++m) {
    recs.push_back(numeric(
        "S-g-m" + std::to_string(m), 1e-8, 16,
        "inversion carries the system to itself through the phased matrix",
        [m](const CheckConfig& cfg) { return check_S_g(m, cfg); }));
  }

  for (int m = 1; m <= 3; ++m) {
    recs.push_back(numeric(
        "S-theta-km-m" + std::to_string(m), 1e-9, 0,
        "inversion of the paired integer-index theta family",
        [m](const CheckConfig& cfg) {
          return check_S_theta(ThetaFamily::paired_index_m, m, cfg);
        }));
    recs.push_back(numeric(
        "S-theta-mhalf-m" + std::to_string(m), 1e-9, 0,
        "inversion of the signed half-level theta family",
        [m](const CheckConfig& cfg) {
          return check_S_theta(ThetaFamily::signed_half_level, m, cfg);
        }));
  }

  recs.push_back(numeric(
      "S-h", 1e-9, 0, "inversion of the theta-quotients h_0..h_3",
      [](const CheckConfig& cfg) {
        return check_S_theta(ThetaFamily::quotient_h, 3, cfg);
      }));

  // ---- elliptic shift identities (numeric; shift parameter p = 0 keeps
  // every magnitude within double-precision range at absolute tolerance) ----

  recs.push_back(numeric(
      "theta-shift-half-phase", 1e-9, 0,
      "signed theta at the shifted argument equals a unit phase times a "
      "q-power times the shifted-characteristic theta",
      [](const CheckConfig& cfg) {
        const double tol = cfg.tol.value_or(1e-9);
        const auto taus = config_taus(cfg);
        NumericTally tally;
        for (const auto tau : taus)
          for (int m = 1; m <= 2; ++m) {
            const int p = 0;
            const Rat mu = Rat(rat(m) + rat(1, 2));
            const double mu_d = m + 0.5;
            const std::complex<double> zz =
                (static_cast<double>(m) * (2 * p + 1) * tau -
                 static_cast<double>(m)) /
                mu_d;
            const auto lhs = theta_eval(rat(1, 2), mu, true, tau, zz);
            const auto ph = expi(-kPi * m / (2 * m + 1));
            const double ee = -static_cast<double>(m) * m * (2 * p + 1) *
                              (2 * p + 1) / (2.0 * (2 * m + 1));
            const std::complex<double> qq =
                std::exp(std::complex<double>(0.0, kTwoPi) * tau * ee);
            const auto th = theta_eval(
                Rat(rat(2L * m * p) + rat(m) + rat(1, 2)), mu, true, tau,
                0.0);
            tally.add(lhs.value, lhs.error, ph * qq * th.value,
                      std::abs(qq) * th.error);
          }
        return finish_numeric("theta-shift-half-phase", tol, taus, tally);
      }));

  recs.push_back(numeric(
      "theta-shift-half-plain", 1e-9, 0,
      "same shift without the lattice half-translation: no unit phase",
      [](const CheckConfig& cfg) {
        const double tol = cfg.tol.value_or(1e-9);
        const auto taus = config_taus(cfg);
        NumericTally tally;
        for (const auto tau : taus)
          for (int m = 1; m <= 2; ++m) {
            const int p = 0;
            const Rat mu = Rat(rat(m) + rat(1, 2));
            const double mu_d = m + 0.5;
            const std::complex<double> zz =
                static_cast<double>(m) * (2 * p + 1) * tau / mu_d;
            const auto lhs = theta_eval(rat(1, 2), mu, true, tau, zz);
            const double ee = -static_cast<double>(m) * m * (2 * p + 1) *
                              (2 * p + 1) / (2.0 * (2 * m + 1));
            const std::complex<double> qq =
                std::exp(std::complex<double>(0.0, kTwoPi) * tau * ee);
            const auto th = theta_eval(
                Rat(rat(2L * m * p) + rat(m) + rat(1, 2)), mu, true, tau,
                0.0);
            tally.add(lhs.value, lhs.error, qq * th.value,
                      std::abs(qq) * th.error);
          }
        return finish_numeric("theta-shift-half-plain", tol, taus, tally);
      }));

  // The four odd-theta shift identities at a fixed elliptic point.
  struct VarthetaShift {
    const char* id;
    int zsign;       // sign of the tau-shift in the argument
    bool half_odd;   // true: (p+1/2) tau shift; false: ((2p+1) tau - 1)/2
  };
  const VarthetaShift vshifts[] = {
      {"vartheta-shift-1i", +1, false},
      {"vartheta-shift-1ii", -1, false},
      {"vartheta-shift-2i", +1, true},
      {"vartheta-shift-2ii", -1, true},
  };
  for (const auto& vs : vshifts) {
    recs.push_back(numeric(
        vs.id, 1e-9, 0,
        "odd theta at a shifted argument reduces to a level-1/2 theta",
        [vs, id = std::string(vs.id)](const CheckConfig& cfg) {
          const double tol = cfg.tol.value_or(1e-9);
          const auto taus = config_taus(cfg);
          const std::complex<double> z0{7.0 / 25.0, 3.0 / 20.0};
          NumericTally tally;
          for (const auto tau : taus) {
            const int p = 0;
            const double sg = vs.zsign;
            const std::complex<double> shift =
                vs.half_odd ? (p + 0.5) * tau
                            : ((2.0 * p + 1.0) * tau - 1.0) / 2.0;
            const auto lhs = vartheta11_eval(tau, z0 / 2.0 + sg * shift);
            const std::complex<double> qq = std::exp(
                std::complex<double>(0.0, kTwoPi) * tau *
                (-(2.0 * p + 1.0) * (2.0 * p + 1.0) / 8.0));
            const std::complex<double> zph = std::exp(
                std::complex<double>(0.0, -sg * kPi * (2 * p + 1)) * z0 /
                2.0);
            std::complex<double> pref = qq * zph;
            if (vs.half_odd)
              pref *= std::complex<double>(0.0, -sg) *
                      ((p % 2 != 0) ? -1.0 : 1.0);
            else if (sg < 0)
              pref = -pref;
            const auto th =
                theta_eval(Rat(0), rat(1, 2), vs.half_odd, tau, z0);
            tally.add(lhs.value, lhs.error, pref * th.value,
                      std::abs(pref) * th.error);
          }
          return finish_numeric(id, tol, taus, tally);
        }));
  }

  std::sort(recs.begin(), recs.end(),
            [](const IdentityRecord& a, const IdentityRecord& b) {
              return a.id < b.id;
            });
  return recs;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> all = build_catalog();
  return all;
}

}  // namespace qf
