#pragma once

/// @file transform.hpp
/// @brief Verification engine: exact translation (T) checks in the
///        phase-carrying ring, numeric inversion (S) residuals with
///        propagated error budgets, and a catalog of named identity records.
///
/// Every identity the library claims is registered here as an
/// IdentityRecord with a stable id, a mode, and a runner.  Exact modes
/// compare coefficient maps literally below the cutoff and report the first
/// mismatching exponent with both coefficients.  Numeric mode evaluates both
/// sides at sampled points of the upper half-plane and compares against a
/// tolerance; the propagated bound (dropped series tail + floating-point
/// accumulation) is tracked separately, and a record whose bound exceeds the
/// tolerance reports `error` ("insufficient cutoff") rather than a
/// meaningless pass.
///
/// Branch convention: all square roots of -i*tau use the principal branch,
/// which is well-defined on Im tau > 0 where Re(-i*tau) > 0.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qf/mockforms.hpp"

namespace qf {

enum class CheckMode { exact_series, exact_block, numeric };
enum class CheckStatus { pass, fail, error };

std::string to_string(CheckMode mode);
std::string to_string(CheckStatus status);

/// Overrides applied on top of a record's defaults.
struct CheckConfig {
  std::optional<Rat> cutoff;                // exact cutoff / numeric series depth
  std::optional<double> tol;                // numeric tolerance
  std::vector<std::complex<double>> taus;   // empty => seeded samples
  std::uint64_t seed = 2026;
  int tau_count = 5;
};

struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::error;
  CheckMode mode = CheckMode::exact_series;
  std::string cutoff;           // exact: rational cutoff; numeric: tau samples
  double max_abs_residual = 0;  // numeric mode only
  double tolerance = 0;         // numeric mode only
  std::string first_mismatch;   // exact-mode failure location
  std::string detail;           // free-form note or error message
  double seconds = 0;           // wall time, filled by the runner
};

/// Deterministic sample points: Re in [-0.5, 0.5), Im in [0.8, 2.0),
/// drawn from mt19937_64(seed) via 53-bit uniforms (two draws per point).
std::vector<std::complex<double>> sample_taus(std::uint64_t seed, int count);

/// The configured explicit list, or seeded samples when the list is empty.
std::vector<std::complex<double>> config_taus(const CheckConfig& config);

/// Shell-style id matching: '*' matches any (possibly empty) substring.
bool matches_filter(const std::string& id, const std::string& pattern);

struct IdentityRecord {
  std::string id;
  CheckMode mode = CheckMode::exact_series;
  Rat default_cutoff{0};    // exact modes (and numeric series depth)
  double default_tol = 0;   // numeric mode
  std::string note;
  std::function<CheckReport(const CheckConfig&)> run;
};

/// All registered identities, sorted by id.
const std::vector<IdentityRecord>& catalog();

/// Records whose id matches the pattern (empty pattern matches all).
std::vector<const IdentityRecord*> catalog_matches(const std::string& pattern);

/// Run every matching record (sorted by id) and stamp wall times.
std::vector<CheckReport> run_catalog(const std::string& pattern,
                                     const CheckConfig& config);

// ---------------------------------------------------------------------------
// direct transformation checks (the catalog wraps these; the CLI `transform`
// subcommand calls them directly)
// ---------------------------------------------------------------------------

/// Exact: twist_T(g_j) equals e(r) g_j in the phase-carrying ring for every
/// 0 <= p <= 2m, 0 <= j <= m.
CheckReport check_T_g(int m, const CheckConfig& config);

/// Exact: twist_T(theta_{k,m}|_{z=0}) picks up the uniform phase e(k^2/4m).
CheckReport check_T_theta(int m, const CheckConfig& config);

/// Numeric: the full inversion system of the completed coefficients,
/// g_j(-1/tau) = (-i tau) / sqrt(m(m+1/2)) * sum entry(j,p,k,p') g_k(tau).
CheckReport check_S_g(int m, const CheckConfig& config);

enum class ThetaFamily {
  paired_index_m,     // 2 theta_{k,m}: sqrt(-i tau) sqrt(2/m), cosine weights
  signed_half_level,  // theta^(-)_{p-m-1/2, m+1/2}: -i(-1)^{m+p} / sqrt(2m+1)
  quotient_h          // h_j = theta_{j,3}/eta: the integer matrix over sqrt 6
};

/// Numeric inversion checks for the three finite theta families.
CheckReport check_S_theta(ThetaFamily family, int m, const CheckConfig& config);

// ---------------------------------------------------------------------------
// exact comparison plumbing (exposed for harness self-tests)
// ---------------------------------------------------------------------------

/// First differing exponent rendered as "q^(e): lhs vs rhs" (block overloads
/// prefix the slot), or nullopt when both sides agree below the joint cutoff.
std::optional<std::string> mismatch_text(const RationalSeries& lhs,
                                         const RationalSeries& rhs);
std::optional<std::string> mismatch_text(const PhaseSeries& lhs,
                                         const PhaseSeries& rhs);
std::optional<std::string> mismatch_text(const ZetaSeries& lhs,
                                         const ZetaSeries& rhs);
std::optional<std::string> mismatch_text(const RationalBlock& lhs,
                                         const RationalBlock& rhs);
std::optional<std::string> mismatch_text(const ZetaBlock& lhs,
                                         const ZetaBlock& rhs);

CheckReport compare_series(const std::string& id, const RationalSeries& lhs,
                           const RationalSeries& rhs);
CheckReport compare_blocks(const std::string& id, const RationalBlock& lhs,
                           const RationalBlock& rhs);
CheckReport compare_zeta_blocks(const std::string& id, const ZetaBlock& lhs,
                                const ZetaBlock& rhs);

// ---------------------------------------------------------------------------
// numeric accounting shared by the checks and the catalog records
// ---------------------------------------------------------------------------

/// Worst residual / worst pointwise error bound over a battery of numeric
/// comparisons.  The bound combines both sides' propagated errors plus a
/// relative floating-point allowance on the compared magnitudes.
struct NumericTally {
  double max_residual = 0;
  double max_budget = 0;
  void add(std::complex<double> lhs, double lhs_err, std::complex<double> rhs,
           double rhs_err);
};

/// Render the sample list ("tau=[...]") for CheckReport::cutoff.
std::string format_taus(const std::vector<std::complex<double>>& taus);

/// Fold a tally into a report: `error` ("insufficient cutoff") when the
/// bound exceeds the tolerance, otherwise pass iff the residual is within
/// tolerance + bound.
CheckReport finish_numeric(const std::string& id, double tol,
                           const std::vector<std::complex<double>>& taus,
                           const NumericTally& tally,
                           const std::string& detail = "");

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

/// One line per record; contains no wall times, so identical configurations
/// produce byte-identical text.
std::string report_text(const std::vector<CheckReport>& reports);

/// JSON array with the fields id, status, mode, cutoff, max_abs_residual,
/// first_mismatch, seconds.  `seconds` is emitted as 0 unless
/// `with_timings` is set, keeping default output deterministic.
std::string report_json(const std::vector<CheckReport>& reports,
                        bool with_timings = false);

}  // namespace qf
