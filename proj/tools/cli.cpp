#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "escrate/serialization.hpp"

namespace escrate::cli {

namespace {

struct CommonOpts {
  bool digits = false;
  std::string format = "text";
  double tol = 1e-12;
  std::uint64_t seed = 1;
  int jobs = 1;
};

ParseMode mode_of(const CommonOpts& c) { return c.digits ? ParseMode::Digit : ParseMode::Abstract; }

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_flag("--digits", c.digits, "parse words as digits 0-9a-z instead of abstract letters");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  cmd->add_option("--tol", c.tol, "bracket tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "seed for sampled suites");
  cmd->add_option("--jobs", c.jobs, "worker threads for batch suites")->check(CLI::PositiveNumber);
}

// Words on the command line do not always need an explicit alphabet size; for
// the q-independent commands we default to the largest parseable one.
int parse_q_or_default(const std::optional<int>& q, const CommonOpts& c) {
  if (q) return *q;
  return c.digits ? 36 : 26;
}

struct TextOrJson {
  const CommonOpts& c;
  std::ostream& out;
  void emit(const std::string& json_payload, const std::string& text_payload) const {
    out << (c.format == "json" ? json_payload : text_payload) << "\n";
  }
};

std::string perron_text(const std::string& name, const PerronResult& p) {
  std::string s = name + " = " + format_g12(p.value) + "  bracket [" + rational_str(p.lo) + ", " +
                  rational_str(p.hi) + "]  method=" + p.method;
  return s;
}

// Batch runner: a JSON config lists suites with their ranges, seeds and
// output paths. Example entry:
//   {"suite": "min-period", "p": 3, "t": 2, "q": 5, "mode": "exhaustive",
//    "output": "minperiod.json", "format": "json"}
int run_verify_config(const std::string& path, const CommonOpts& c, std::ostream& out,
                      std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error[DataFileNotFound]: cannot open config " << path << "\n";
    return 1;
  }
  nlohmann::json cfg = nlohmann::json::parse(in);
  const auto& suites = cfg.contains("suites") ? cfg.at("suites") : cfg;
  bool all_passed = true;
  for (const auto& s : suites) {
    const std::string suite = s.at("suite").get<std::string>();
    int jobs = s.value("jobs", c.jobs);
    std::uint64_t seed = s.value("seed", c.seed);
    VerificationReport report;
    if (suite == "p2") {
      report = verify_p2_theorem(s.value("qmax", 10));
    } else if (suite == "r-order") {
      int p = s.value("p", 3), t = s.value("t", 2);
      BigInt d = s.contains("d") ? BigInt(s.at("d").get<std::string>())
                                 : d_threshold_two_words(p);
      report = verify_r_order(p, t, s.value("q", 30), d, s.value("samples", 100), seed, jobs);
    } else if (suite == "min-period") {
      report = verify_min_period(s.value("p", 3), s.value("t", 2), s.value("q", 5),
                                 s.value("mode", std::string("exhaustive")) == "sampled"
                                     ? SuiteMode::Sampled
                                     : SuiteMode::Exhaustive,
                                 s.value("samples", 100), seed, jobs);
    } else if (suite == "counterexamples") {
      report = run_counterexamples();
    } else {
      err << "error[BadArgument]: unknown suite \"" << suite << "\" in config\n";
      return 1;
    }
    all_passed = all_passed && report.passed();
    const std::string format = s.value("format", std::string("json"));
    std::string payload = format == "csv" ? csv_verification(report) : json_verification(report) + "\n";
    if (s.contains("output")) {
      std::ofstream of(s.at("output").get<std::string>());
      of << payload;
    } else {
      out << payload;
    }
    out << suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.instances
        << " instances)\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"escape rates of shift maps into Markov holes"};
  app.require_subcommand(1);

  CommonOpts c;

  // ---- corr u w ----------------------------------------------------------
  std::string corr_u, corr_w;
  std::optional<int> corr_q;
  CLI::App* corr = app.add_subcommand("corr", "correlation polynomial of two words");
  corr->add_option("u", corr_u)->required();
  corr->add_option("w", corr_w)->required();
  corr->add_option("--q", corr_q, "alphabet size (validation only)");
  add_common(corr, c);

  // ---- period WORDS ------------------------------------------------------
  std::string period_words;
  std::optional<int> period_q;
  CLI::App* period = app.add_subcommand("period", "minimal periods of a hole");
  period->add_option("words", period_words)->required();
  period->add_option("--q", period_q, "alphabet size (validation only)");
  add_common(period, c);

  // ---- rfunc WORDS -------------------------------------------------------
  std::string rfunc_words;
  std::optional<int> rfunc_q;
  CLI::App* rfunc = app.add_subcommand("rfunc", "correlation rational function r(z)");
  rfunc->add_option("words", rfunc_words)->required();
  rfunc->add_option("--q", rfunc_q, "alphabet size (validation only)");
  add_common(rfunc, c);

  // ---- entropy -----------------------------------------------------------
  int entropy_q = 0;
  std::string entropy_forbidden;
  bool entropy_matrix = false;
  CLI::App* entropy = app.add_subcommand("entropy", "topological entropy of an avoidance subshift");
  entropy->add_option("--q", entropy_q)->required();
  entropy->add_option("--forbidden", entropy_forbidden, "forbidden words (empty = full shift)");
  entropy->add_flag("--matrix", entropy_matrix, "include the transfer matrix (dimension, triples)");
  add_common(entropy, c);

  // ---- escape ------------------------------------------------------------
  int escape_q = 0;
  std::string escape_hole, escape_base;
  std::string escape_engine = "auto";
  CLI::App* escape_cmd = app.add_subcommand("escape", "escape rate into a hole");
  escape_cmd->add_option("--q", escape_q)->required();
  escape_cmd->add_option("--hole", escape_hole)->required();
  escape_cmd->add_option("--base", escape_base, "forbidden words of the ambient subshift");
  escape_cmd->add_option("--engine", escape_engine)->check(CLI::IsMember({"auto", "poly", "matrix"}));
  add_common(escape_cmd, c);

  // ---- compare -----------------------------------------------------------
  int compare_q = 0;
  std::string compare_h1, compare_h2, compare_base;
  CLI::App* compare_cmd = app.add_subcommand("compare", "certified comparison of two escape rates");
  compare_cmd->add_option("--q", compare_q)->required();
  compare_cmd->add_option("--hole1", compare_h1)->required();
  compare_cmd->add_option("--hole2", compare_h2)->required();
  compare_cmd->add_option("--base", compare_base);
  add_common(compare_cmd, c);

  // ---- series ------------------------------------------------------------
  int series_q = 0, series_n = 10;
  std::string series_hole;
  CLI::App* series_cmd = app.add_subcommand("series", "generating-function coefficients f(0..n)");
  series_cmd->add_option("--q", series_q)->required();
  series_cmd->add_option("--hole", series_hole)->required();
  series_cmd->add_option("--n", series_n)->required();
  add_common(series_cmd, c);

  // ---- count -------------------------------------------------------------
  int count_q = 0, count_n = 0;
  std::string count_hole;
  bool count_brute = false;
  CLI::App* count_cmd = app.add_subcommand("count", "number of length-n words avoiding the hole");
  count_cmd->add_option("--q", count_q)->required();
  count_cmd->add_option("--hole", count_hole)->required();
  count_cmd->add_option("--n", count_n)->required();
  count_cmd->add_flag("--brute", count_brute, "count by explicit enumeration instead");
  add_common(count_cmd, c);

  // ---- parry -------------------------------------------------------------
  int parry_q = 0;
  std::string parry_forbidden, parry_cylinder;
  CLI::App* parry_cmd = app.add_subcommand("parry", "Parry measure data and cylinder measures");
  parry_cmd->add_option("--q", parry_q)->required();
  parry_cmd->add_option("--forbidden", parry_forbidden);
  parry_cmd->add_option("--cylinder", parry_cylinder, "word whose cylinder measure to report");
  add_common(parry_cmd, c);

  // ---- threshold ---------------------------------------------------------
  int thr_t = 2, thr_p = 0, thr_p2 = 0;
  std::string thr_variant = "two_words";
  CLI::App* thr_cmd = app.add_subcommand("threshold", "r-order thresholds D(t, p)");
  thr_cmd->add_option("--t", thr_t);
  thr_cmd->add_option("--p", thr_p)->required();
  thr_cmd->add_option("--p2", thr_p2, "second length for the mixed variant");
  thr_cmd->add_option("--variant", thr_variant)->check(CLI::IsMember({"two_words", "mixed", "generic"}));
  add_common(thr_cmd, c);

  // ---- verify ------------------------------------------------------------
  std::string verify_suite;
  int verify_qmax = 10, verify_p = 3, verify_t = 2, verify_q = 5, verify_samples = 100;
  std::string verify_d, verify_mode = "exhaustive", verify_config;
  CLI::App* verify_cmd = app.add_subcommand("verify", "theorem verification suites");
  verify_cmd->add_option("suite", verify_suite)
      ->check(CLI::IsMember({"p2", "r-order", "min-period", "counterexamples"}));
  verify_cmd->add_option("--qmax", verify_qmax);
  verify_cmd->add_option("--p", verify_p);
  verify_cmd->add_option("--t", verify_t);
  verify_cmd->add_option("--q", verify_q);
  verify_cmd->add_option("--d", verify_d, "threshold D (default from --t/--p)");
  verify_cmd->add_option("--samples", verify_samples);
  verify_cmd->add_option("--mode", verify_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify_cmd->add_option("--config", verify_config, "JSON config driving a batch of suites");
  add_common(verify_cmd, c);

  // ---- table -------------------------------------------------------------
  int table_id = 0;
  double table_tol = 5e-4;
  CLI::App* table_cmd = app.add_subcommand("table", "recompute a golden escape-rate table");
  table_cmd->add_option("id", table_id)->required()->check(CLI::Range(1, 5));
  table_cmd->add_option("--tolerance", table_tol)->check(CLI::PositiveNumber);
  add_common(table_cmd, c);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  TextOrJson emit{c, out};
  try {
    if (corr->parsed()) {
      int q = parse_q_or_default(corr_q, c);
      Word u = parse_word(corr_u, q, mode_of(c));
      Word w = parse_word(corr_w, q, mode_of(c));
      IntPolynomial p = correlation(u, w);
      emit.emit(json_correlation(u, w, p), p.str());
    } else if (period->parsed()) {
      int q = parse_q_or_default(period_q, c);
      WordCollection g = WordCollection::parse(period_words, q, mode_of(c));
      std::string text = "tau = " + std::to_string(minimal_period_hole(g));
      for (const auto& w : g.words())
        text += "\n  tau(" + w.str() + ") = " + std::to_string(minimal_period_word(w));
      emit.emit(json_period(g), text);
    } else if (rfunc->parsed()) {
      int q = parse_q_or_default(rfunc_q, c);
      WordCollection g = WordCollection::parse(rfunc_words, q, mode_of(c));
      RFunction r = r_function(g);
      std::string text = "r(z)         = " + r.paper_form.str() + "\nr(z) reduced = " +
                         r.reduced.str();
      emit.emit(json_rfunc(g, r), text);
    } else if (entropy->parsed()) {
      WordCollection forbidden =
          entropy_forbidden.empty()
              ? WordCollection(entropy_q, {})
              : WordCollection::parse(entropy_forbidden, entropy_q, mode_of(c));
      EntropyResult e = topological_entropy(forbidden, entropy_q, c.tol);
      TransferMatrix tm;
      if (entropy_matrix) tm = transfer_matrix(build_avoidance_automaton(forbidden, entropy_q));
      emit.emit(json_entropy(entropy_q, forbidden.str(), e, entropy_matrix ? &tm : nullptr),
                "h_top = " + format_g12(e.value) + "\n" + perron_text("theta", e.theta) +
                    (entropy_matrix ? "\nmatrix: " + json_transfer_matrix(tm) : ""));
    } else if (escape_cmd->parsed()) {
      std::optional<WordCollection> base;
      if (!escape_base.empty())
        base = WordCollection::parse(escape_base, escape_q, mode_of(c));
      HoleSpec h(escape_q, WordCollection::parse(escape_hole, escape_q, mode_of(c)), base);
      EngineOptions opts;
      opts.tol = c.tol;
      if (escape_engine == "poly") opts.engine = EngineOptions::Engine::Polynomial;
      if (escape_engine == "matrix") opts.engine = EngineOptions::Engine::Matrix;
      if (escape_engine == "auto") opts.crosscheck = true;
      EscapeRateResult r = escape_rate(h, opts);
      if (c.format == "csv") {
        out << "q,hole,base,rho,bracket_width\n" << csv_escape(h, r);
      } else {
        emit.emit(json_escape(h, r), "rho = " + format_g12(r.rho) + "\n" +
                                         perron_text("lambda", r.lambda) + "\n" +
                                         perron_text("theta", r.theta));
      }
    } else if (compare_cmd->parsed()) {
      std::optional<WordCollection> base;
      if (!compare_base.empty())
        base = WordCollection::parse(compare_base, compare_q, mode_of(c));
      HoleSpec h1(compare_q, WordCollection::parse(compare_h1, compare_q, mode_of(c)), base);
      HoleSpec h2(compare_q, WordCollection::parse(compare_h2, compare_q, mode_of(c)), base);
      ComparisonResult r = compare_escape(h1, h2, c.tol);
      std::string text = ordering_str(r.ordering);
      text += r.certified ? "  (certified, gap >= " + rational_str(r.gap_lower) + ")"
                          : "  (residual <= " + rational_str(r.residual) + ")";
      emit.emit(json_compare(h1, h2, r), text);
    } else if (series_cmd->parsed()) {
      WordCollection g = WordCollection::parse(series_hole, series_q, mode_of(c));
      RFunction r = r_function(g);
      IntPolynomial fnum = IntPolynomial::variable() * r.reduced.den;
      IntPolynomial fden = survivor_char_poly(g, series_q);
      std::vector<BigInt> coeffs = series_coefficients(fnum, fden, series_n);
      std::string text;
      for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) text += " ";
        text += coeffs[i].get_str();
      }
      emit.emit(json_series(series_q, g, coeffs), text);
    } else if (count_cmd->parsed()) {
      WordCollection g = WordCollection::parse(count_hole, count_q, mode_of(c));
      BigInt v;
      std::string method;
      if (count_brute) {
        v = brute_force_count(g, count_q, count_n);
        method = "brute";
      } else {
        v = count_words(build_avoidance_automaton(g, count_q), count_n);
        method = "automaton";
      }
      emit.emit(json_count(count_q, g, count_n, v, method), v.get_str());
    } else if (parry_cmd->parsed()) {
      WordCollection forbidden =
          parry_forbidden.empty()
              ? WordCollection(parry_q, {})
              : WordCollection::parse(parry_forbidden, parry_q, mode_of(c));
      ParryData pd = parry_data(forbidden, parry_q);
      double mu = 0;
      bool has_cyl = !parry_cylinder.empty();
      if (has_cyl) mu = cylinder_measure(parse_word(parry_cylinder, parry_q, mode_of(c)), pd);
      std::string text = perron_text("theta", pd.theta);
      text += "\nstates:";
      for (const auto& s : pd.states) text += " " + s.str();
      text += "\nu:";
      for (double x : pd.u) text += " " + format_g12(x);
      text += "\nv:";
      for (double x : pd.v) text += " " + format_g12(x);
      if (has_cyl) text += "\nmu(C_" + parry_cylinder + ") = " + format_g12(mu);
      emit.emit(json_parry(pd, parry_cylinder, has_cyl, mu), text);
    } else if (thr_cmd->parsed()) {
      BigInt v;
      if (thr_variant == "two_words") {
        if (thr_t != 2) raise("BadArgument", "two_words threshold requires t = 2");
        v = d_threshold_two_words(thr_p);
      } else if (thr_variant == "mixed") {
        if (thr_p2 <= 0) raise("BadArgument", "mixed threshold requires --p2");
        v = d_threshold_mixed(thr_p, thr_p2);
      } else {
        v = d_threshold_generic(thr_t, thr_p);
      }
      emit.emit(json_threshold(thr_t, thr_p, thr_p2, thr_variant, v), v.get_str());
    } else if (verify_cmd->parsed()) {
      if (verify_config.empty() && verify_suite.empty()) {
        err << "usage error: verify needs a suite name or --config\n";
        return 2;
      }
      if (!verify_config.empty()) return run_verify_config(verify_config, c, out, err);
      VerificationReport report;
      if (verify_suite == "p2") {
        report = verify_p2_theorem(verify_qmax);
      } else if (verify_suite == "r-order") {
        BigInt d = verify_d.empty() ? d_threshold_two_words(verify_p) : BigInt(verify_d);
        report = verify_r_order(verify_p, verify_t, verify_q, d, verify_samples, c.seed, c.jobs);
      } else if (verify_suite == "min-period") {
        report = verify_min_period(verify_p, verify_t, verify_q,
                                   verify_mode == "sampled" ? SuiteMode::Sampled
                                                            : SuiteMode::Exhaustive,
                                   verify_samples, c.seed, c.jobs);
      } else {
        report = run_counterexamples();
      }
      if (c.format == "csv") {
        out << csv_verification(report);
      } else if (c.format == "json") {
        out << json_verification(report) << "\n";
      } else {
        out << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << "  instances="
            << report.instances << " failures=" << report.failures.size()
            << " observations=" << report.observations.size()
            << (report.exploratory ? " (exploratory)" : "") << "\n";
        for (const auto& f : report.failures)
          out << "  failure: " << f.instance << " -- " << f.detail << "\n";
        for (const auto& f : report.observations)
          out << "  observation: " << f.instance << " -- " << f.detail << "\n";
      }
      return report.passed() ? 0 : 1;
    } else if (table_cmd->parsed()) {
      std::vector<TableRow> rows = reproduce_table(table_id, table_tol);
      if (c.format == "csv") {
        out << csv_table(rows);
      } else if (c.format == "json") {
        out << json_table(rows, table_tol) << "\n";
      } else {
        for (const auto& r : rows) {
          out << "table " << r.table_id << " " << r.row_name << " q=" << r.q;
          if (!r.base.empty()) out << " base=" << r.base;
          if (!r.collection.empty()) out << " {" << r.collection << "}";
          if (r.expected) out << " expected=" << format_g12(*r.expected);
          if (r.computed) out << " computed=" << format_g12(*r.computed);
          out << " " << cell_status_str(r.status);
          if (!r.note.empty()) out << "  [" << r.note << "]";
          out << "\n";
        }
      }
      bool all_ok = true;
      for (const auto& r : rows)
        if (r.status == CellStatus::Fail) all_ok = false;
      return all_ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error[" << e.name() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace escrate::cli
