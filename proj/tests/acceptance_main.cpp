// Acceptance suite: certifies the artifact against its published targets.
// One criterion per function, one PASS/FAIL line per criterion, nonzero exit
// when anything fails. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include "escrate/experiments.hpp"
#include "escrate/serialization.hpp"

using namespace escrate;

namespace {

struct Harness {
  int failures = 0;
  int index = 0;

  void run(const std::string& title, const std::function<std::string()>& body) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d. %s — %s [%.2fs]\n", ok ? "PASS" : "FAIL", index, title.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void expect(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

WordCollection abstract(const std::string& csv, int q) {
  return WordCollection::parse(csv, q, ParseMode::Abstract);
}

struct StatusCounts {
  int pass = 0, failc = 0, erratum = 0, impossible = 0;
};

StatusCounts count_statuses(const std::vector<TableRow>& rows) {
  StatusCounts s;
  for (const auto& r : rows) switch (r.status) {
      case CellStatus::Pass:
        ++s.pass;
        break;
      case CellStatus::Fail:
        ++s.failc;
        break;
      case CellStatus::Erratum:
        ++s.erratum;
        break;
      case CellStatus::Impossible:
        ++s.impossible;
        break;
    }
  return s;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criteria ---------------------------------------------------------------

std::string criterion1_table1() {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = reproduce_table(1, 5e-4);
  StatusCounts s = count_statuses(rows);
  expect(s.failc == 0 && s.erratum == 0, "table 1 has failing cells");
  expect(s.pass == 33, "expected 33 numeric cells, got " + std::to_string(s.pass));
  expect(s.impossible == 3, "expected 3 impossible cells");
  double secs = elapsed_since(t0);
  expect(secs < 5.0, "runtime " + std::to_string(secs) + "s exceeds 5s");
  return "33 numeric cells within 5e-4, 3 impossible";
}

std::string criterion2_table2() {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = reproduce_table(2, 5e-4);
  StatusCounts s = count_statuses(rows);
  expect(s.failc == 0, "table 2 has failing cells");
  expect(s.erratum == 1, "expected exactly the G11 q=5 erratum");
  for (const auto& r : rows)
    if (r.status == CellStatus::Erratum) {
      expect(r.row_name == "G11" && r.q == 5, "unexpected erratum cell");
      expect(std::fabs(*r.computed - 0.016) <= 5e-4,
             "erratum recomputation should be ~0.016, got " + format_g12(*r.computed));
    }

  // the equal q=2 cells are certified ties at bracket width 1e-12
  const Rational max_residual = Rational(1, 1000000000) / 250;  // 4e-12
  std::vector<std::pair<std::string, std::string>> tie_pairs = {
      {"aaa,bbb", "aaa,aba"}, {"aaa,aba", "abb,bba"}, {"aaa,bbb", "abb,bba"},  // 0.212
      {"abb,bab", "aaa,bab"},                                                  // 0.311
      {"abb,aab", "abb,aba"},                                                  // 0.693
  };
  for (const auto& [g1, g2] : tie_pairs) {
    ComparisonResult cmp = compare_escape(HoleSpec(2, abstract(g1, 2)), HoleSpec(2, abstract(g2, 2)));
    expect(cmp.ordering == Ordering::Tie, g1 + " vs " + g2 + " at q=2 is not a TIE");
    expect(cmp.residual <= max_residual, g1 + " vs " + g2 + " residual too large");
  }
  double secs = elapsed_since(t0);
  expect(secs < 10.0, "runtime exceeds 10s");
  return "47 cells within 5e-4, G11 q=5 flagged ERRATUM (computed ~0.016), q=2 ties certified";
}

std::string criterion3_table3() {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = reproduce_table(3, 5e-4);
  StatusCounts s = count_statuses(rows);
  expect(s.failc == 0, "table 3 has failing cells");
  expect(s.impossible == 1, "expected one impossible cell (G3 at q=2)");
  // Three q=2 cells are printed truncated rather than rounded; they must
  // still match the print after truncation and sit within one unit in the
  // last printed place.
  int truncated = 0;
  for (const auto& r : rows) {
    if (r.status == CellStatus::Erratum) {
      ++truncated;
      expect(r.q == 2, "unexpected erratum cell outside q=2");
      expect(std::fabs(*r.computed - *r.expected) < 1e-3, "erratum off by more than 1e-3");
      long printed = std::lround(*r.expected * 1000);
      long trunc = static_cast<long>(std::floor(*r.computed * 1000 + 1e-12));
      expect(printed == trunc, "computed value does not truncate to the printed one");
    }
  }
  expect(truncated == 3, "expected the three truncated q=2 cells");

  // order reversal between G5 and G6: 0.072 vs 0.060 at q=2, flipped at q=3
  ComparisonResult q2 = compare_escape(HoleSpec(2, abstract("bbabb,bbbab,bbbba", 2)),
                                       HoleSpec(2, abstract("abbbb,bbbba,bbabb", 2)));
  expect(q2.ordering == Ordering::Greater && q2.certified, "q=2 reversal not certified");
  ComparisonResult q3 = compare_escape(HoleSpec(3, abstract("bbabb,bbbab,bbbba", 3)),
                                       HoleSpec(3, abstract("abbbb,bbbba,bbabb", 3)));
  expect(q3.ordering == Ordering::Less && q3.certified, "q=3 order not certified");
  double secs = elapsed_since(t0);
  expect(secs < 10.0, "runtime exceeds 10s");
  return "cells within 5e-4 (3 truncated prints verified digit-exact), G5/G6 reversal certified";
}

std::string criterion4_tables45() {
  auto t0 = std::chrono::steady_clock::now();
  auto rows4 = reproduce_table(4, 5e-4);
  auto rows5 = reproduce_table(5, 5e-4);
  StatusCounts s4 = count_statuses(rows4);
  StatusCounts s5 = count_statuses(rows5);
  expect(s4.failc == 0 && s5.failc == 0, "subshift tables have failing cells");
  expect(s4.pass == 48 && s4.erratum == 0 && s4.impossible == 0, "table 4 shape unexpected");
  expect(s5.pass == 39 && s5.erratum == 1, "table 5 shape unexpected");
  for (const auto& r : rows5)
    if (r.status == CellStatus::Erratum) {
      expect(r.row_name == "G2" && r.q == 6, "unexpected erratum cell in table 5");
      expect(std::fabs(*r.computed - 0.00443) < 5e-4, "table 5 erratum recomputation drifted");
    }
  double secs = elapsed_since(t0);
  expect(secs < 20.0, "runtime exceeds 20s");
  return "tables 4-5 within 5e-4 across q=3..10 (one print error flagged with its recomputation)";
}

std::string criterion5_spot_perron() {
  WordCollection g = WordCollection::parse("02,10,11,21,22", 3, ParseMode::Digit);
  PerronResult r = spectral_radius(transfer_matrix(build_avoidance_automaton(g, 3)), 1e-12);
  expect(std::fabs(r.value - 1.466) <= 5e-4,
         "Perron root " + format_g12(r.value) + " != 1.466 within 5e-4");
  PerronResult p = perron_root_poly(g, 3);
  expect(std::fabs(p.value - r.value) <= 1e-9, "engines disagree on the spot value");
  return "Perron root of the five-word q=3 instance = " + format_g12(r.value);
}

struct OracleInstance {
  int q;
  WordCollection survivor;
};

std::vector<OracleInstance> oracle_instances() {
  std::vector<OracleInstance> out;
  std::set<std::pair<int, std::string>> seen;
  auto add = [&](int q, const WordCollection& g) {
    if (seen.insert({q, g.str()}).second) out.push_back({q, g});
  };

  Rng rng(20260810);
  while (out.size() < 200) {
    int q = rng.range(2, 4), p = rng.range(2, 4), t = rng.range(1, 3);
    add(q, random_collection(rng, q, p, t));
  }

  for (int id : available_table_ids()) {
    for (const auto& cell : reproduce_table(id)) {
      if (cell.collection.empty()) continue;
      WordCollection hole = abstract(cell.collection, cell.q);
      if (cell.base.empty()) {
        add(cell.q, hole);
      } else {
        WordCollection base = abstract(cell.base, cell.q);
        std::vector<Word> all(base.words());
        for (const auto& w : hole.words()) all.push_back(w);
        add(cell.q, WordCollection(cell.q, all));
        add(cell.q, base);
      }
    }
  }
  return out;
}

std::vector<OracleInstance> g_instances;  // shared between criteria 6 and 7

std::string criterion6_triple_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  g_instances = oracle_instances();
  const BigInt cap(10000000);
  long brute_checks = 0;
  for (const auto& inst : g_instances) {
    auto counts = count_words_upto(build_avoidance_automaton(inst.survivor, inst.q), 12);
    std::vector<BigInt> series;
    if (inst.survivor.empty()) {
      IntPolynomial den = survivor_char_poly(inst.survivor, inst.q);
      series = series_coefficients(IntPolynomial::variable(), den, 12);
    } else {
      RFunction r = r_function(inst.survivor);
      IntPolynomial num = IntPolynomial::variable() * r.reduced.den;
      series = series_coefficients(num, survivor_char_poly(inst.survivor, inst.q), 12);
    }
    BigInt power(1);
    for (int n = 0; n <= 12; ++n) {
      expect(series[static_cast<size_t>(n)] == counts[static_cast<size_t>(n)],
             "series != automaton count at n=" + std::to_string(n) + " for {" +
                 inst.survivor.str() + "} q=" + std::to_string(inst.q));
      if (power <= cap) {
        expect(brute_force_count(inst.survivor, inst.q, n, cap) == counts[static_cast<size_t>(n)],
               "brute != automaton count at n=" + std::to_string(n) + " for {" +
                   inst.survivor.str() + "} q=" + std::to_string(inst.q));
        ++brute_checks;
      }
      power *= inst.q;
    }
  }
  double secs = elapsed_since(t0);
  expect(secs < 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
  std::ostringstream msg;
  msg << g_instances.size() << " instances, n<=12 series=automaton exact, " << brute_checks
      << " brute-force cells (q^n<=1e7) exact";
  return msg.str();
}

std::string criterion7_engine_agreement() {
  int checked = 0;
  for (const auto& inst : g_instances) {
    PerronResult mat =
        spectral_radius(transfer_matrix(build_avoidance_automaton(inst.survivor, inst.q)), 1e-12);
    if (!mat.irreducible || mat.hi == 0) continue;
    PerronResult poly = inst.survivor.empty()
                            ? perron_root_poly(WordCollection(inst.q, {}), inst.q)
                            : perron_root_poly(inst.survivor, inst.q);
    expect(std::fabs(poly.value - mat.value) <= 1e-9,
           "engines disagree on {" + inst.survivor.str() + "} q=" + std::to_string(inst.q));
    ++checked;
  }
  expect(checked > 100, "too few irreducible instances");
  return std::to_string(checked) + " irreducible instances, |poly - matrix| <= 1e-9";
}

std::string criterion8_p2_theorem() {
  VerificationReport r = verify_p2_theorem(10);
  expect(!r.exploratory, "suite unexpectedly exploratory");
  expect(r.passed(), "p=2 certification failed: " +
                         (r.failures.empty() ? "" : r.failures.front().detail));
  return "q=3..10 exhaustive, lambda1 > lambda2 > lambda3 > lambda4 certified, " +
         std::to_string(r.instances) + " collections classified";
}

std::string criterion9_min_period() {
  VerificationReport ex = verify_min_period(3, 2, 5, SuiteMode::Exhaustive, 0, 0, 1);
  expect(!ex.exploratory && ex.passed() && ex.instances > 0, "exhaustive p=3 q=5 suite failed");
  long sampled_instances = 0;
  for (int p : {4, 5})
    for (int q = 5; q <= 8; ++q) {
      VerificationReport r =
          verify_min_period(p, 2, q, SuiteMode::Sampled, 500, 20260810 + p * 100 + q, 4);
      expect(!r.exploratory, "sampled suite unexpectedly exploratory");
      expect(r.passed(), "sampled p=" + std::to_string(p) + " q=" + std::to_string(q) +
                             " failed: " + (r.failures.empty() ? "" : r.failures.front().detail));
      sampled_instances += r.instances;
    }
  ComparisonResult rev =
      compare_escape(HoleSpec(2, WordCollection::parse("10111011,01001000", 2, ParseMode::Digit)),
                     HoleSpec(2, WordCollection::parse("11100111,00011000", 2, ParseMode::Digit)));
  expect(rev.ordering == Ordering::Greater && rev.certified,
         "q=2 p=8 violation pair not certified GREATER");
  return "exhaustive p=3 q=5 (" + std::to_string(ex.instances) + " pairs) + " +
         std::to_string(sampled_instances) +
         " sampled ordered pairs clean; q=2 violation pair certified GREATER";
}

std::string criterion10_lemma2_bracket() {
  Rng rng(424242);
  int done = 0;
  while (done < 200) {
    int p = 3 + (done % 3);       // 3..5
    int q = 5 + (done % 5);       // 5..9
    WordCollection g = random_collection(rng, q, p, 2);
    PerronResult root = perron_root_poly(g, q);
    Rational lower = Rational(q) - Rational(1, int_pow(BigInt(q), static_cast<unsigned long>(p - 2)));
    expect(root.lo > lower, "lambda bracket leaks below q - q^(2-p) for {" + g.str() + "} q=" +
                                std::to_string(q));
    expect(root.hi < q, "lambda bracket reaches q for {" + g.str() + "}");
    ++done;
  }
  return "200 seeded t=2 instances (p=3..5, q=5..9): lambda in (q - q^(2-p), q)";
}

std::string criterion11_counterexamples() {
  VerificationReport r = run_counterexamples();
  expect(r.passed(),
         "counterexample replay failed: " + (r.failures.empty() ? "" : r.failures.front().detail));
  return "both remark pairs certified at q=4 (" + std::to_string(r.instances) + " checks)";
}

std::string criterion12_extremal_words() {
  long checked = 0;
  for (int q : {4, 5}) {
    for (const auto& wc : enumerate_canonical_collections(q, 3, 1)) {
      const Word& w = wc.words()[0];
      Word u0({0}), u1({0});
      try {
        std::tie(u0, u1) = extremal_words(w, q);
      } catch (const Error&) {
        continue;  // no two eligible symbols at this q
      }
      HoleSpec h0(q, WordCollection(q, {u0}), WordCollection(q, {w}));
      HoleSpec h1(q, WordCollection(q, {u1}), WordCollection(q, {w}));
      for (int code = 0; code < q * q * q; ++code) {
        std::vector<int> s{code / (q * q), (code / q) % q, code % q};
        Word u{s};
        if (u == w) continue;
        if (!correlation(u, w).is_zero() || !correlation(w, u).is_zero()) continue;
        HoleSpec hu(q, WordCollection(q, {u}), WordCollection(q, {w}));
        expect(compare_escape(h0, hu).ordering != Ordering::Greater,
               "rho(" + u0.str() + ") not minimal against " + u.str() + " (w=" +
                   w.str() + ", q=" + std::to_string(q) + ")");
        expect(compare_escape(h1, hu).ordering != Ordering::Less,
               "rho(" + u1.str() + ") not maximal against " + u.str() + " (w=" +
                   w.str() + ", q=" + std::to_string(q) + ")");
        ++checked;
      }
    }
  }
  return "exhaustive p=3, q=4,5: minimum at a^p, maximum at a b^(p-1) (" +
         std::to_string(checked) + " candidate comparisons)";
}

std::string criterion13_structural_r_order() {
  // t = 2, p = 3 at q = 30 > 3p^2+2 = 29.
  VerificationReport r2 = verify_r_order(3, 2, 30, d_threshold_two_words(3), 200, 20260810, 4);
  expect(!r2.exploratory && r2.passed() && r2.instances == 200,
         "t=2 structural suite failed" +
             (r2.failures.empty() ? std::string() : ": " + r2.failures.front().detail));

  // t = 3, p = 3 at the instance-specific threshold q = D(G1,G2) + 1.
  Rng rng(777719);
  int done = 0, ties = 0, degenerate = 0;
  while (done < 50) {
    WordCollection a4 = random_collection(rng, 4, 3, 3);
    WordCollection b4 = random_collection(rng, 4, 3, 3);
    BigInt d = d_instance(a4, b4);
    if (d < 4) {  // q = D+1 could not even hold the 4-symbol words
      ++degenerate;
      continue;
    }
    long q = d.get_si() + 1;
    WordCollection g1(static_cast<int>(q), a4.words());
    WordCollection g2(static_cast<int>(q), b4.words());

    RFunction r1 = r_function(g1), r2f = r_function(g2);
    IntPolynomial cross = r2f.delta * r1.adj_sum - r1.delta * r2f.adj_sum;
    ++done;
    if (cross.is_zero()) {
      ComparisonResult cmp = compare_escape(HoleSpec(static_cast<int>(q), g1),
                                            HoleSpec(static_cast<int>(q), g2));
      expect(cmp.ordering == Ordering::Tie, "identical r but distinct roots");
      ++ties;
      continue;
    }
    expect(lagrange_bound(cross) <= Rational(d),
           "cross-difference root bound exceeds D for " + g1.str() + " / " + g2.str());
    Rational v1 = r1.reduced.eval(Rational(d)), v2 = r2f.reduced.eval(Rational(d));
    expect(v1 != v2, "distinct r agree at D inside the root bound");
    const WordCollection& first = (v1 < v2) ? g1 : g2;
    const WordCollection& second = (v1 < v2) ? g2 : g1;
    ComparisonResult cmp = compare_escape(HoleSpec(static_cast<int>(q), first),
                                          HoleSpec(static_cast<int>(q), second), 1e-100);
    expect(cmp.ordering == Ordering::Less && cmp.certified,
           "r-order at D did not certify the escape-rate order for " + first.str() + " / " +
               second.str() + " at q=" + std::to_string(q));
  }
  return "200 t=2 pairs at q=30 and 50 t=3 pairs at q=D(G1,G2)+1: root bound <= D and "
         "r-order => certified rate order (" +
         std::to_string(ties) + " equal-r ties, " + std::to_string(degenerate) +
         " degenerate-D pairs resampled)";
}

}  // namespace

int main() {
  Harness h;
  h.run("table 1 reproduction (p=2, q=2..10, tolerance 5e-4, < 5s)", criterion1_table1);
  h.run("table 2 reproduction (p=3, q=2..5, erratum flagged, ties certified, < 10s)",
        criterion2_table2);
  h.run("table 3 reproduction (p=5, t=3, q=2..3, reversal certified, < 10s)", criterion3_table3);
  h.run("tables 4-5 reproduction (subshift bases, q=3..10, < 20s)", criterion4_tables45);
  h.run("spot Perron root 1.466 at q=3 within 5e-4", criterion5_spot_perron);
  h.run("triple oracle: series = automaton = brute force, n <= 12 (< 60s)",
        criterion6_triple_oracle);
  h.run("engine agreement <= 1e-9 on the irreducible instances", criterion7_engine_agreement);
  h.run("p=2 theorem: exhaustive certification for q=3..10", criterion8_p2_theorem);
  h.run("minimal-period theorem (t=2) exhaustive + sampled, violation pair reproduced",
        criterion9_min_period);
  h.run("root bracket lambda in (q - q^(2-p), q) on 200 seeded instances",
        criterion10_lemma2_bracket);
  h.run("counterexample remarks certified at q=4", criterion11_counterexamples);
  h.run("extremal words attain min/max escape rate (p=3, q=4..5, exhaustive)",
        criterion12_extremal_words);
  h.run("structural r-order certification (t=2 q=30; t=3 at q=D+1)", criterion13_structural_r_order);

  if (h.failures == 0) {
    std::printf("acceptance: all %d criteria passed\n", h.index);
    return 0;
  }
  std::printf("acceptance: %d of %d criteria FAILED\n", h.failures, h.index);
  return 1;
}
