#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "escrate/escape.hpp"

namespace escrate {

enum class CellStatus { Pass, Fail, Erratum, Impossible };
std::string cell_status_str(CellStatus s);

// One evaluated table cell.
struct TableRow {
  int table_id = 0;
  std::string row_name;
  int q = 0;
  std::string base;        // empty for full-shift tables
  std::string collection;  // variant used; empty when the cell is impossible
  std::optional<double> expected;
  std::optional<double> computed;
  std::optional<double> abs_error;
  CellStatus status = CellStatus::Impossible;
  std::string note;
};

// Recompute every cell of one golden table. Expected values, collection
// variants and pre-annotated errata come from the versioned data file.
std::vector<TableRow> reproduce_table(int id, double tolerance = 5e-4);
std::vector<int> available_table_ids();
std::string tables_data_path();

struct FailureRecord {
  std::string instance;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::string universe;
  std::vector<std::pair<std::string, std::string>> params;
  long instances = 0;
  std::vector<FailureRecord> failures;      // hypothesis met but conclusion failed
  std::vector<FailureRecord> observations;  // exploratory findings, not failures
  bool exploratory = false;
  double wall_seconds = 0.0;
  bool passed() const { return failures.empty(); }
};

// Exhaustive p=2 certification: canonical two-word collections fall into the
// four reduced r-classes and their Perron roots are strictly ordered.
VerificationReport verify_p2_theorem(int q_max);

// Sampled pairs of t-word length-p collections: when r_G1(D) < r_G2(D)
// exactly, the escape-rate comparison must certify LESS; the cross-difference
// polynomial Delta2*S1 - Delta1*S2 must have its Lagrange bound <= D.
// Runs marked exploratory when q <= D (violations recorded, not failed).
VerificationReport verify_r_order(int p, int t, int q, const BigInt& d, int samples,
                                  std::uint64_t seed, int jobs = 1);

enum class SuiteMode { Exhaustive, Sampled };

// Zero-cross-correlation collections: tau_G1 < tau_G2 must give LESS whenever
// the theorem hypothesis on (p, q, t) holds; otherwise exploratory.
VerificationReport verify_min_period(int p, int t, int q, SuiteMode mode, int samples,
                                     std::uint64_t seed, int jobs = 1);

// Replays the published counterexample pairs with certified comparisons.
VerificationReport run_counterexamples();

// One representative per orbit of the symbol-permutation action, in canonical
// (lexicographically minimal) form, deterministic order.
std::vector<WordCollection> enumerate_canonical_collections(int q, int p, int t);
std::vector<WordCollection> enumerate_canonical_collections(int q, int p, int t,
                                                            const BigInt& cap);
BigInt default_enum_cap();

WordCollection canonical_form(const WordCollection& g);
BigInt orbit_size(const WordCollection& g);

// Sampling helpers shared by the suites and the acceptance tests.
WordCollection random_collection(Rng& rng, int q, int p, int t);
WordCollection random_zero_cross_collection(Rng& rng, int q, int p, int t);
std::vector<int> random_permutation(Rng& rng, int q);

}  // namespace escrate
