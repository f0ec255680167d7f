/// @file main.cpp
/// @brief Command-line driver.  Four subcommands:
///
///   expand     print the exact q-expansion of a named function or block
///   verify     run identity-catalog records matching a filter
///   transform  run one S/T transformation check directly
///   catalog    list the registered identity records
///
/// Output is deterministic: the same arguments and seed produce
/// byte-identical bytes (timings are suppressed unless --timings is given,
/// and text reports never contain them).  All failures exit nonzero; usage
/// errors (unknown names, empty filter matches, malformed numbers) exit
/// with status 2 and a message on stderr.

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qf/transform.hpp"

namespace {

using qf::Rat;

constexpr int kUsageExit = 2;

[[noreturn]] void usage_fail(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  std::exit(kUsageExit);
}

/* "g 1 1 0 0" may arrive as one quoted argument or as five; flatten on
 * whitespace so both spellings hit the same grammar. */
std::vector<std::string> split_tokens(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::istringstream in(a);
    std::string tok;
    while (in >> tok) out.push_back(tok);
  }
  return out;
}

Rat parse_rat(const std::string& text, const char* what) {
  auto r = qf::rat_parse(text);
  if (!r)
    usage_fail(std::string("cannot parse ") + what + " '" + text +
               "' as a rational");
  return *r;
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    usage_fail(std::string("cannot parse ") + what + " '" + text +
               "' as an integer");
  }
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

template <typename Ring>
nlohmann::ordered_json series_json(const qf::QSeries<Ring>& s) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : s.terms())
    arr.push_back({{"exponent", qf::rat_str(e)},
                   {"coefficient", Ring::to_string(c)}});
  return arr;
}

template <typename Ring>
nlohmann::ordered_json block_json(const qf::ThetaBlock<Ring>& b) {
  nlohmann::ordered_json out;
  out["two_m"] = b.two_m();
  auto slots = nlohmann::ordered_json::object();
  for (long j = 0; j < b.two_m(); ++j)
    slots[std::to_string(j)] = series_json(b.slot(j));
  out["slots"] = slots;
  return out;
}

template <typename Ring>
std::string block_text(const qf::ThetaBlock<Ring>& b) {
  std::string out;
  for (long j = 0; j < b.two_m(); ++j) {
    out += "slot " + std::to_string(j) + ":\n";
    out += qf::to_text(b.slot(j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

const char* const kExpandGrammar =
    "eta | eta-euler | eta-cube | eta-pow <k> | theta <j> <mu> | "
    "theta- <j> <mu> | g <flavor> <m> <p> <k> | g-block <flavor> <m> <p> | "
    "f <i> | h <j> | phi <m> <2a> <2b> | phi-special <m> shifted|unshifted";

int cmd_expand(const std::vector<std::string>& raw, const Rat& cutoff,
               const std::string& format) {
  const auto t = split_tokens(raw);
  if (t.empty()) usage_fail(std::string("expand expects: ") + kExpandGrammar);
  const std::string& name = t[0];
  const std::size_t argc = t.size() - 1;

  std::string text;
  nlohmann::ordered_json js;
  auto series = [&](const qf::RationalSeries& s) {
    text = qf::to_text(s);
    js = series_json(s);
  };
  auto block = [&](const qf::RationalBlock& b) {
    text = block_text(b);
    js = block_json(b);
  };

  try {
    if (name == "eta" && argc == 0) {
      series(qf::eta_q(cutoff));
    } else if (name == "eta-euler" && argc == 0) {
      series(qf::eta_q_euler(cutoff));
    } else if (name == "eta-cube" && argc == 0) {
      series(qf::eta_cube_odd_q(cutoff));
    } else if (name == "eta-pow" && argc == 1) {
      series(qf::eta_pow_q(parse_int(t[1], "power"), cutoff));
    } else if ((name == "theta" || name == "theta-") && argc == 2) {
      series(qf::theta_q(parse_rat(t[1], "characteristic"),
                         parse_rat(t[2], "weight"), name == "theta-",
                         cutoff));
    } else if (name == "g" && argc == 4) {
      series(qf::g_star({parse_int(t[1], "flavor"), parse_int(t[2], "m"),
                         parse_int(t[3], "p"), parse_int(t[4], "k")},
                        cutoff));
    } else if (name == "g-block" && argc == 3) {
      block(qf::G_star(parse_int(t[1], "flavor"), parse_int(t[2], "m"),
                       parse_int(t[3], "p"), cutoff));
    } else if (name == "f" && argc == 1) {
      series(qf::f_series(parse_int(t[1], "index"), cutoff));
    } else if (name == "h" && argc == 1) {
      series(qf::h_series(parse_int(t[1], "index"), cutoff));
    } else if (name == "phi" && argc == 3) {
      block(qf::phi_add(parse_int(t[1], "m"), parse_int(t[2], "2a"),
                        parse_int(t[3], "2b"), cutoff));
    } else if (name == "phi-special" && argc == 2) {
      bool shifted = false;
      if (t[2] == "shifted")
        shifted = true;
      else if (t[2] != "unshifted")
        usage_fail("phi-special variant must be 'shifted' or 'unshifted'");
      block(qf::phi_add_special(parse_int(t[1], "m"), shifted, cutoff));
    } else {
      usage_fail("unknown function '" + name + "' (or wrong argument count)" +
                 "; expand expects: " + kExpandGrammar);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  if (format == "json")
    std::fputs((js.dump(2) + "\n").c_str(), stdout);
  else
    std::fputs(text.c_str(), stdout);
  return 0;
}

// ---------------------------------------------------------------------------
// verify / transform / catalog
// ---------------------------------------------------------------------------

int print_reports(const std::vector<qf::CheckReport>& reports,
                  const std::string& format, bool timings, bool summary) {
  int fails = 0, errors = 0;
  for (const auto& r : reports) {
    fails += r.status == qf::CheckStatus::fail;
    errors += r.status == qf::CheckStatus::error;
  }
  if (format == "json") {
    std::fputs(qf::report_json(reports, timings).c_str(), stdout);
  } else {
    std::fputs(qf::report_text(reports).c_str(), stdout);
    if (summary)
      std::printf("-- %zu records: %zu pass, %d fail, %d error\n",
                  reports.size(), reports.size() - fails - errors, fails,
                  errors);
  }
  return (fails + errors) ? 1 : 0;
}

int cmd_verify(const std::string& filter, const qf::CheckConfig& cfg,
               const std::string& format, bool timings) {
  if (qf::catalog_matches(filter).empty())
    usage_fail("filter '" + filter + "' matches no catalog records");
  return print_reports(qf::run_catalog(filter, cfg), format, timings, true);
}

int cmd_transform(const std::string& kind, const std::string& family, int m,
                  const qf::CheckConfig& cfg, const std::string& format,
                  bool timings) {
  qf::CheckReport r;
  try {
    if (kind == "T" && family == "g")
      r = qf::check_T_g(m, cfg);
    else if (kind == "T" && family == "theta")
      r = qf::check_T_theta(m, cfg);
    else if (kind == "S" && family == "g")
      r = qf::check_S_g(m, cfg);
    else if (kind == "S" && family == "theta")
      r = qf::check_S_theta(qf::ThetaFamily::paired_index_m, m, cfg);
    else if (kind == "S" && family == "theta-")
      r = qf::check_S_theta(qf::ThetaFamily::signed_half_level, m, cfg);
    else if (kind == "S" && family == "h")
      r = qf::check_S_theta(qf::ThetaFamily::quotient_h, m, cfg);
    else
      usage_fail("unknown transform '" + kind + " " + family +
                 "' (supported: T g, T theta, S g, S theta, S theta-, S h)");
  } catch (const std::exception& e) {
    r.id = kind + "-" + family + "-m" + std::to_string(m);
    r.status = qf::CheckStatus::error;
    r.detail = e.what();
  }
  return print_reports({r}, format, timings, false);
}

int cmd_catalog(const std::string& filter, const std::string& format) {
  const auto recs = qf::catalog_matches(filter);
  if (recs.empty())
    usage_fail("filter '" + filter + "' matches no catalog records");
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto* r : recs)
      arr.push_back({{"id", r->id},
                     {"mode", qf::to_string(r->mode)},
                     {"default_cutoff", qf::rat_str(r->default_cutoff)},
                     {"default_tol", r->default_tol},
                     {"note", r->note}});
    std::fputs((arr.dump(2) + "\n").c_str(), stdout);
  } else {
    for (const auto* r : recs) {
      std::string id = r->id;
      if (id.size() < 28) id.resize(28, ' ');
      std::string mode = qf::to_string(r->mode);
      if (mode.size() < 13) mode.resize(13, ' ');
      /* Some numeric records pick their own evaluation depth; a zero
       * default cutoff means "not configurable" and is not shown. */
      std::string defaults;
      if (r->default_cutoff > 0)
        defaults = "cutoff " + qf::rat_str(r->default_cutoff);
      if (r->mode == qf::CheckMode::numeric) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%stol %g", defaults.empty() ? "" : " ",
                      r->default_tol);
        defaults += buf;
      }
      if (defaults.size() < 20) defaults.resize(20, ' ');
      std::printf("%s %s %s %s\n", id.c_str(), mode.c_str(), defaults.c_str(),
                  r->note.c_str());
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// argument plumbing
// ---------------------------------------------------------------------------

struct NumericFlags {
  std::string cutoff;
  double tol = 0;
  bool tol_set = false;
  std::vector<std::string> taus;
  std::uint64_t seed = 2026;
  int count = 5;
};

void add_numeric_flags(CLI::App* cmd, NumericFlags* f) {
  cmd->add_option("--cutoff", f->cutoff,
                  "series cutoff, a positive rational like 10 or 21/2");
  cmd->add_option("--tol", f->tol, "numeric tolerance")
      ->check(CLI::PositiveNumber)
      ->each([f](const std::string&) { f->tol_set = true; });
  cmd->add_option("--tau", f->taus,
                  "explicit sample point 're,im' with im > 0 (repeatable; "
                  "overrides seeded sampling)");
  cmd->add_option("--seed", f->seed, "seed for deterministic tau sampling");
  cmd->add_option("--count", f->count, "number of seeded tau samples")
      ->check(CLI::PositiveNumber);
}

qf::CheckConfig build_config(const NumericFlags& f) {
  qf::CheckConfig cfg;
  if (!f.cutoff.empty()) {
    auto c = qf::rat_parse(f.cutoff);
    if (!c || !(*c > 0))
      usage_fail("cutoff must be a positive rational, got '" + f.cutoff + "'");
    cfg.cutoff = *c;
  }
  if (f.tol_set) cfg.tol = f.tol;
  for (const auto& s : f.taus) {
    double re = 0, im = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &tail) != 2 ||
        !(im > 0))
      usage_fail("tau must be 're,im' with im > 0, got '" + s + "'");
    cfg.taus.emplace_back(re, im);
  }
  cfg.seed = f.seed;
  cfg.tau_count = f.count;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series engine and modular-transformation "
               "verification harness"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"text", "json"});

  auto* expand = app.add_subcommand(
      "expand", "print the exact q-expansion of a named function");
  std::vector<std::string> expand_name;
  std::string expand_cutoff = "10";
  std::string expand_format = "text";
  expand->add_option("name", expand_name, kExpandGrammar)
      ->required()
      ->expected(-1);
  expand->add_option("--cutoff", expand_cutoff,
                     "expansion cutoff, a positive rational like 10 or 21/2");
  expand->add_option("--format", expand_format, "text | json")
      ->check(format_check);

  auto* verify = app.add_subcommand(
      "verify", "run identity-catalog records matching a filter");
  std::string verify_filter = "*";
  std::string verify_format = "text";
  bool verify_timings = false;
  NumericFlags verify_flags;
  verify->add_option("--filter", verify_filter,
                     "record-id pattern; '*' matches any substring");
  verify->add_option("--format", verify_format, "text | json")
      ->check(format_check);
  verify->add_flag("--timings", verify_timings,
                   "emit real wall times in JSON output");
  add_numeric_flags(verify, &verify_flags);

  auto* transform = app.add_subcommand(
      "transform", "run one S/T transformation check directly");
  std::string tr_kind, tr_family;
  int tr_m = 1;
  std::string tr_format = "text";
  bool tr_timings = false;
  NumericFlags tr_flags;
  transform->add_option("kind", tr_kind, "S | T")->required();
  transform->add_option("family", tr_family, "g | theta | theta- | h")
      ->required();
  transform->add_option("m", tr_m, "family parameter m >= 1")->required();
  transform->add_option("--format", tr_format, "text | json")
      ->check(format_check);
  transform->add_flag("--timings", tr_timings,
                      "emit real wall times in JSON output");
  add_numeric_flags(transform, &tr_flags);

  auto* catalog = app.add_subcommand(
      "catalog", "list registered identity records");
  std::string cat_filter = "*";
  std::string cat_format = "text";
  catalog->add_option("--filter", cat_filter,
                      "record-id pattern; '*' matches any substring");
  catalog->add_option("--format", cat_format, "text | json")
      ->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (expand->parsed()) {
    auto c = qf::rat_parse(expand_cutoff);
    if (!c || !(*c > 0))
      usage_fail("cutoff must be a positive rational, got '" + expand_cutoff +
                 "'");
    return cmd_expand(expand_name, *c, expand_format);
  }
  if (verify->parsed())
    return cmd_verify(verify_filter, build_config(verify_flags),
                      verify_format, verify_timings);
  if (transform->parsed())
    return cmd_transform(tr_kind, tr_family, tr_m, build_config(tr_flags),
                         tr_format, tr_timings);
  if (catalog->parsed()) return cmd_catalog(cat_filter, cat_format);
  return 0;
}
