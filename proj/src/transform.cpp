/// @file transform.cpp
/// @brief Verification engine: sampling, exact comparisons, and the direct
///        T/S transformation checks.

#include "qf/transform.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace qf {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kPi = 3.14159265358979323846;

std::string fmt_g(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

template <class Ring>
std::optional<std::string> series_mismatch(const QSeries<Ring>& a,
                                           const QSeries<Ring>& b) {
  if (auto mm = first_mismatch(a, b)) {
    const auto& [e, va, vb] = *mm;
    return "q^(" + rat_str(e) + "): " + Ring::to_string(va) + " vs " +
           Ring::to_string(vb);
  }
  return std::nullopt;
}

template <class Ring>
std::optional<std::string> block_mismatch(const ThetaBlock<Ring>& a,
                                          const ThetaBlock<Ring>& b) {
  if (a.two_m() != b.two_m())
    return "slot count " + std::to_string(a.two_m()) + " vs " +
           std::to_string(b.two_m());
  if (auto mm = block_first_mismatch(a, b)) {
    const auto& [j, e, sa, sb] = *mm;
    return "slot " + std::to_string(j) + " q^(" + rat_str(e) + "): " + sa +
           " vs " + sb;
  }
  return std::nullopt;
}

template <class T>
CheckReport compare_generic(const std::string& id, CheckMode mode,
                            const Rat& cutoff,
                            const std::optional<std::string>& mm) {
  CheckReport r;
  r.id = id;
  r.mode = mode;
  r.cutoff = rat_str(cutoff);
  if (mm) {
    r.status = CheckStatus::fail;
    r.first_mismatch = *mm;
  } else {
    r.status = CheckStatus::pass;
  }
  return r;
}

}  // namespace

std::string to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::exact_series: return "exact_series";
    case CheckMode::exact_block: return "exact_block";
    case CheckMode::numeric: return "numeric";
  }
  return "?";
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "?";
}

std::vector<std::complex<double>> sample_taus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  auto u53 = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  std::vector<std::complex<double>> out;
  out.reserve(count > 0 ? count : 0);
  for (int i = 0; i < count; ++i) {
    double re = -0.5 + u53();
    double im = 0.8 + 1.2 * u53();
    out.emplace_back(re, im);
  }
  return out;
}

std::vector<std::complex<double>> config_taus(const CheckConfig& config) {
  if (!config.taus.empty()) return config.taus;
  return sample_taus(config.seed, config.tau_count);
}

bool matches_filter(const std::string& id, const std::string& pattern) {
  if (pattern.empty()) return true;
  size_t i = 0, p = 0;
  size_t star = std::string::npos, mark = 0;
  while (i < id.size()) {
    if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = i;
    } else if (p < pattern.size() && pattern[p] == id[i]) {
      ++i;
      ++p;
    } else if (star != std::string::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

// ---------------------------------------------------------------------------
// exact comparison plumbing
// ---------------------------------------------------------------------------

std::optional<std::string> mismatch_text(const RationalSeries& lhs,
                                         const RationalSeries& rhs) {
  return series_mismatch(lhs, rhs);
}
std::optional<std::string> mismatch_text(const PhaseSeries& lhs,
                                         const PhaseSeries& rhs) {
  return series_mismatch(lhs, rhs);
}
std::optional<std::string> mismatch_text(const ZetaSeries& lhs,
                                         const ZetaSeries& rhs) {
  return series_mismatch(lhs, rhs);
}
std::optional<std::string> mismatch_text(const RationalBlock& lhs,
                                         const RationalBlock& rhs) {
  return block_mismatch(lhs, rhs);
}
std::optional<std::string> mismatch_text(const ZetaBlock& lhs,
                                         const ZetaBlock& rhs) {
  return block_mismatch(lhs, rhs);
}

CheckReport compare_series(const std::string& id, const RationalSeries& lhs,
                           const RationalSeries& rhs) {
  return compare_generic<RationalSeries>(
      id, CheckMode::exact_series, Rat(std::min(lhs.cutoff(), rhs.cutoff())),
      mismatch_text(lhs, rhs));
}

CheckReport compare_blocks(const std::string& id, const RationalBlock& lhs,
                           const RationalBlock& rhs) {
  return compare_generic<RationalBlock>(
      id, CheckMode::exact_block, Rat(std::min(lhs.cutoff(), rhs.cutoff())),
      mismatch_text(lhs, rhs));
}

CheckReport compare_zeta_blocks(const std::string& id, const ZetaBlock& lhs,
                                const ZetaBlock& rhs) {
  return compare_generic<ZetaBlock>(
      id, CheckMode::exact_block, Rat(std::min(lhs.cutoff(), rhs.cutoff())),
      mismatch_text(lhs, rhs));
}

// ---------------------------------------------------------------------------
// numeric accounting
// ---------------------------------------------------------------------------

void NumericTally::add(std::complex<double> lhs, double lhs_err,
                       std::complex<double> rhs, double rhs_err) {
  max_residual = std::max(max_residual, std::abs(lhs - rhs));
  max_budget =
      std::max(max_budget, lhs_err + rhs_err +
                               1e-14 * (std::abs(lhs) + std::abs(rhs)));
}

std::string format_taus(const std::vector<std::complex<double>>& taus) {
  std::string out = "tau=[";
  char buf[80];
  for (size_t i = 0; i < taus.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", taus[i].real(),
                  taus[i].imag());
    if (i) out += ", ";
    out += buf;
  }
  return out + "]";
}

CheckReport finish_numeric(const std::string& id, double tol,
                           const std::vector<std::complex<double>>& taus,
                           const NumericTally& tally,
                           const std::string& detail) {
  CheckReport r;
  r.id = id;
  r.mode = CheckMode::numeric;
  r.cutoff = format_taus(taus);
  r.tolerance = tol;
  r.max_abs_residual = tally.max_residual;
  r.detail = detail;
  if (tally.max_budget > tol) {
    r.status = CheckStatus::error;
    r.detail = "insufficient cutoff: error bound " + fmt_g(tally.max_budget) +
               " exceeds tolerance " + fmt_g(tol) +
               (detail.empty() ? "" : "; " + detail);
  } else {
    r.status = tally.max_residual <= tol + tally.max_budget
                   ? CheckStatus::pass
                   : CheckStatus::fail;
  }
  return r;
}

// ---------------------------------------------------------------------------
// direct transformation checks
// ---------------------------------------------------------------------------

CheckReport check_T_g(int m, const CheckConfig& config) {
  const Rat N = config.cutoff.value_or(Rat(8));
  CheckReport r;
  r.id = "T-g-m" + std::to_string(m);
  r.mode = CheckMode::exact_series;
  r.cutoff = rat_str(N);
  for (int p = 0; p <= 2 * m; ++p)
    for (int j = 0; j <= m; ++j) {
      const auto g = to_phase_series(g_star({1, m, p, j}, N));
      const auto lhs = twist_T(g);
      const auto rhs =
          scale(g, PhaseRing::make(Rat(1), g_T_phase(m, p, j)));
      if (auto mm = mismatch_text(lhs, rhs)) {
        r.status = CheckStatus::fail;
        r.first_mismatch = "p=" + std::to_string(p) + " j=" +
                           std::to_string(j) + " " + *mm;
        return r;
      }
    }
  r.status = CheckStatus::pass;
  return r;
}

CheckReport check_T_theta(int m, const CheckConfig& config) {
  const Rat N = config.cutoff.value_or(Rat(8));
  CheckReport r;
  r.id = "T-theta-km";
  r.mode = CheckMode::exact_series;
  r.cutoff = rat_str(N);
  for (int k = 0; k <= m; ++k) {
    const auto th = to_phase_series(theta_q(Rat(k), Rat(m), false, N));
    const auto lhs = twist_T(th);
    const auto rhs = scale(
        th, PhaseRing::make(Rat(1), rat(static_cast<long>(k) * k, 4L * m)));
    if (auto mm = mismatch_text(lhs, rhs)) {
      r.status = CheckStatus::fail;
      r.first_mismatch = "k=" + std::to_string(k) + " " + *mm;
      return r;
    }
  }
  r.status = CheckStatus::pass;
  return r;
}

CheckReport check_S_g(int m, const CheckConfig& config) {
  const std::string id = "S-g-m" + std::to_string(m);
  const double tol = config.tol.value_or(1e-8);
  const Rat N = config.cutoff.value_or(Rat(16));
  const auto taus = config_taus(config);

  // Expand the whole system once; evaluation is cheap per sample.
  std::map<std::pair<int, int>, RationalSeries> g;
  for (int p = 0; p <= 2 * m; ++p)
    for (int k = 0; k <= m; ++k)
      g.emplace(std::pair{p, k}, g_star({1, m, p, k}, N));

  const GTransformMatrix M{m};
  const double scale = M.scale();
  NumericTally tally;

  for (const auto tau : taus) {
    const std::complex<double> tau_inv = -1.0 / tau;
    const double qa = std::exp(-kTwoPi * tau.imag());
    const double qa_inv = std::exp(-kTwoPi * tau_inv.imag());

    std::map<std::pair<int, int>, EvalResult> at_tau;
    for (const auto& [pk, series] : g)
      at_tau.emplace(pk,
                     eval_complex(series, tau,
                                  g_star_tail({1, m, pk.first, pk.second}, N,
                                              qa)));

    for (int p = 0; p <= 2 * m; ++p)
      for (int j = 0; j <= m; ++j) {
        const auto lhs =
            eval_complex(g.at({p, j}), tau_inv,
                         g_star_tail({1, m, p, j}, N, qa_inv));
        std::complex<double> acc{0.0, 0.0};
        double acc_err = 0;
        for (int pp = 0; pp <= 2 * m; ++pp)
          for (int k = 0; k <= m; ++k) {
            const auto ent = M.entry(j, p, k, pp);
            double weight_abs = 0;
            for (const auto& [w, ph] : ent.terms())
              weight_abs += std::abs(rat_double(w));
            const auto& val = at_tau.at({pp, k});
            acc += ent.to_complex() * val.value;
            acc_err += weight_abs * val.error;
          }
        const std::complex<double> pref =
            std::complex<double>(0.0, -1.0) * tau;
        const std::complex<double> rhs = pref * scale * acc;
        tally.add(lhs.value, lhs.error, rhs,
                  std::abs(pref) * scale * acc_err);
      }
  }
  return finish_numeric(id, tol, taus, tally,
                        "series cutoff " + rat_str(N));
}

CheckReport check_S_theta(ThetaFamily family, int m,
                          const CheckConfig& config) {
  const double tol = config.tol.value_or(1e-9);
  const auto taus = config_taus(config);
  NumericTally tally;
  std::string id;

  switch (family) {
    case ThetaFamily::paired_index_m: {
      id = "S-theta-km-m" + std::to_string(m);
      for (const auto tau : taus) {
        const std::complex<double> tau_inv = -1.0 / tau;
        const std::complex<double> pref =
            std::sqrt(std::complex<double>(0.0, -1.0) * tau) *
            std::sqrt(2.0 / m);
        for (int k = 0; k <= m; ++k) {
          const auto lhs = theta_eval(Rat(k), Rat(m), false, tau_inv, 0.0);
          std::complex<double> acc{0.0, 0.0};
          double acc_err = 0;
          for (int j = 0; j <= m; ++j) {
            const double w = (j == 0 || j == m) ? 0.5 : 1.0;
            const double c = std::cos(kPi * j * k / m);
            const auto v = theta_eval(Rat(j), Rat(m), false, tau, 0.0);
            acc += w * c * 2.0 * v.value;
            acc_err += w * std::abs(c) * 2.0 * v.error;
          }
          tally.add(2.0 * lhs.value, 2.0 * lhs.error, pref * acc,
                    std::abs(pref) * acc_err);
        }
      }
      break;
    }
    case ThetaFamily::signed_half_level: {
      id = "S-theta-mhalf-m" + std::to_string(m);
      const Rat mu = Rat(rat(m) + rat(1, 2));
      for (const auto tau : taus) {
        const std::complex<double> tau_inv = -1.0 / tau;
        const std::complex<double> root =
            std::sqrt(std::complex<double>(0.0, -1.0) * tau) /
            std::sqrt(2.0 * m + 1.0);
        for (int p = 0; p <= 2 * m; ++p) {
          const Rat jchar = Rat(Rat(p) - mu);
          const auto lhs = theta_eval(jchar, mu, true, tau_inv, 0.0);
          std::complex<double> acc{0.0, 0.0};
          double acc_err = 0;
          for (int pp = 0; pp <= 2 * m; ++pp) {
            const double arg = -kTwoPi * p * pp / (2 * m + 1);
            const std::complex<double> ph{std::cos(arg), std::sin(arg)};
            const double sgn = (pp % 2 != 0) ? -1.0 : 1.0;
            const auto v =
                theta_eval(Rat(Rat(pp) - mu), mu, true, tau, 0.0);
            acc += sgn * ph * v.value;
            acc_err += v.error;
          }
          const std::complex<double> pref =
              std::complex<double>(0.0, -1.0) *
              ((m + p) % 2 != 0 ? -1.0 : 1.0) * root;
          tally.add(lhs.value, lhs.error, pref * acc,
                    std::abs(pref) * acc_err);
        }
      }
      break;
    }
    case ThetaFamily::quotient_h: {
      id = "S-h";
      for (const auto tau : taus) {
        const std::complex<double> tau_inv = -1.0 / tau;
        const auto eta_at = eta_eval(tau);
        const auto eta_inv = eta_eval(tau_inv);
        std::complex<double> hv[4];
        double hv_err[4];
        for (int k = 0; k < 4; ++k) {
          const auto v = theta_eval(Rat(k), Rat(3), false, tau, 0.0);
          hv[k] = v.value / eta_at.value;
          hv_err[k] = (v.error + std::abs(hv[k]) * eta_at.error) /
                      std::abs(eta_at.value) * 1.01;
        }
        for (int j = 0; j < 4; ++j) {
          const auto t = theta_eval(Rat(j), Rat(3), false, tau_inv, 0.0);
          const std::complex<double> lhs = t.value / eta_inv.value;
          const double lhs_err =
              (t.error + std::abs(lhs) * eta_inv.error) /
              std::abs(eta_inv.value) * 1.01;
          std::complex<double> acc{0.0, 0.0};
          double acc_err = 0;
          for (int k = 0; k < 4; ++k) {
            acc += static_cast<double>(kQuotientSMatrix[j][k]) * hv[k];
            acc_err += std::abs(kQuotientSMatrix[j][k]) * hv_err[k];
          }
          const double inv_root6 = 1.0 / std::sqrt(6.0);
          tally.add(lhs, lhs_err, inv_root6 * acc, inv_root6 * acc_err);
        }
      }
      break;
    }
  }
  return finish_numeric(id, tol, taus, tally);
}

// ---------------------------------------------------------------------------
// catalog runner and rendering
// ---------------------------------------------------------------------------

std::vector<const IdentityRecord*> catalog_matches(
    const std::string& pattern) {
  std::vector<const IdentityRecord*> out;
  for (const auto& rec : catalog())
    if (matches_filter(rec.id, pattern)) out.push_back(&rec);
  return out;
}

std::vector<CheckReport> run_catalog(const std::string& pattern,
                                     const CheckConfig& config) {
  std::vector<CheckReport> out;
  for (const IdentityRecord* rec : catalog_matches(pattern)) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    try {
      r = rec->run(config);
    } catch (const std::exception& e) {
      r.id = rec->id;
      r.mode = rec->mode;
      r.status = CheckStatus::error;
      r.detail = e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string report_text(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    std::string status = to_string(r.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
    status.resize(6, ' ');
    std::string id = r.id;
    if (id.size() < 28) id.resize(28, ' ');
    std::string mode = to_string(r.mode);
    if (mode.size() < 13) mode.resize(13, ' ');
    std::string info;
    switch (r.status) {
      case CheckStatus::pass:
      case CheckStatus::fail:
        if (r.mode == CheckMode::numeric)
          info = "max|residual| " + fmt_g(r.max_abs_residual) + " (tol " +
                 fmt_g(r.tolerance) + ")";
        else
          info = "cutoff " + r.cutoff;
        if (!r.first_mismatch.empty()) info += "  " + r.first_mismatch;
        break;
      case CheckStatus::error:
        info = r.detail;
        break;
    }
    out += status + id + " " + mode + " " + info + "\n";
  }
  return out;
}

std::string report_json(const std::vector<CheckReport>& reports,
                        bool with_timings) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"id", r.id},
                   {"status", to_string(r.status)},
                   {"mode", to_string(r.mode)},
                   {"cutoff", r.cutoff},
                   {"max_abs_residual", r.max_abs_residual},
                   {"first_mismatch", r.first_mismatch},
                   {"seconds", with_timings ? r.seconds : 0.0}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace qf
