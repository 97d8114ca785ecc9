#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>
#include <thread>

#include "escrate/experiments.hpp"

namespace escrate {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Deterministic indexed parallelism: slot i never depends on the partition.
template <typename Fn>
void parallel_indexed(long n, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n < 2 * jobs) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(jobs));
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w]() {
      for (long i = w; i < n; i += jobs) fn(i);
    });
  for (auto& t : workers) t.join();
}

std::string pair_str(const WordCollection& a, const WordCollection& b) {
  return "{" + a.str() + "} vs {" + b.str() + "}";
}

}  // namespace

BigInt default_enum_cap() {
  if (const char* env = std::getenv("ESCRATE_ENUM_CAP")) return BigInt(env);
  return BigInt(10000000);
}

WordCollection canonical_form(const WordCollection& g) {
  // Collect used symbols; the canonical representative maps them onto
  // {0..s-1}, minimizing the sorted word list over all s! assignments.
  std::vector<int> used;
  for (const auto& w : g.words())
    for (int v : w.symbols())
      if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
  std::sort(used.begin(), used.end());
  const int s = static_cast<int>(used.size());
  std::vector<int> rank(static_cast<size_t>(g.alphabet_size()), -1);
  for (int i = 0; i < s; ++i) rank[static_cast<size_t>(used[static_cast<size_t>(i)])] = i;

  std::vector<int> image(static_cast<size_t>(s));
  for (int i = 0; i < s; ++i) image[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> best;
  do {
    std::vector<std::vector<int>> candidate;
    for (const auto& w : g.words()) {
      std::vector<int> nw;
      nw.reserve(static_cast<size_t>(w.length()));
      for (int v : w.symbols())
        nw.push_back(image[static_cast<size_t>(rank[static_cast<size_t>(v)])]);
      candidate.push_back(std::move(nw));
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = std::move(candidate);
  } while (std::next_permutation(image.begin(), image.end()));

  std::vector<Word> words;
  for (auto& wv : best) words.emplace_back(std::move(wv));
  return WordCollection(g.alphabet_size(), std::move(words));
}

BigInt orbit_size(const WordCollection& g) {
  std::vector<int> used;
  for (const auto& w : g.words())
    for (int v : w.symbols())
      if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
  std::sort(used.begin(), used.end());
  const int s = static_cast<int>(used.size());
  std::vector<int> rank(static_cast<size_t>(g.alphabet_size()), -1);
  for (int i = 0; i < s; ++i) rank[static_cast<size_t>(used[static_cast<size_t>(i)])] = i;

  // Compact to symbols 0..s-1, then count relabelings fixing the set.
  std::vector<std::vector<int>> compact;
  for (const auto& w : g.words()) {
    std::vector<int> nw;
    for (int v : w.symbols()) nw.push_back(rank[static_cast<size_t>(v)]);
    compact.push_back(std::move(nw));
  }
  std::sort(compact.begin(), compact.end());

  std::vector<int> image(static_cast<size_t>(s));
  for (int i = 0; i < s; ++i) image[static_cast<size_t>(i)] = i;
  long stab = 0;
  do {
    std::vector<std::vector<int>> mapped;
    for (const auto& w : compact) {
      std::vector<int> nw;
      for (int v : w) nw.push_back(image[static_cast<size_t>(v)]);
      mapped.push_back(std::move(nw));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == compact) ++stab;
  } while (std::next_permutation(image.begin(), image.end()));

  // orbit = q (q-1) ... (q-s+1) / |stabilizer on used symbols|
  BigInt orbit(1);
  for (int i = 0; i < s; ++i) orbit *= g.alphabet_size() - i;
  return orbit / stab;
}

std::vector<WordCollection> enumerate_canonical_collections(int q, int p, int t) {
  return enumerate_canonical_collections(q, p, t, default_enum_cap());
}

std::vector<WordCollection> enumerate_canonical_collections(int q, int p, int t,
                                                            const BigInt& cap) {
  if (q < 2 || p < 1 || t < 1) raise("BadArgument", "need q >= 2, p >= 1, t >= 1");
  BigInt universe = int_pow(BigInt(q), static_cast<unsigned long>(p) * t);
  if (universe > cap)
    raise("CapExceeded", "q^(p t) = " + universe.get_str() + " exceeds the cap " + cap.get_str());

  // All words of length p, lexicographic.
  std::vector<std::vector<int>> words;
  std::vector<int> w(static_cast<size_t>(p), 0);
  while (true) {
    words.push_back(w);
    int pos = p - 1;
    while (pos >= 0 && w[static_cast<size_t>(pos)] == q - 1) w[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++w[static_cast<size_t>(pos)];
  }

  std::set<std::vector<std::vector<int>>> seen;
  std::vector<WordCollection> out;
  std::vector<size_t> idx(static_cast<size_t>(t));
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const size_t n = words.size();
  if (static_cast<size_t>(t) > n) return out;
  while (true) {
    std::vector<Word> ws;
    for (size_t i : idx) ws.emplace_back(words[i]);
    WordCollection g = canonical_form(WordCollection(q, std::move(ws)));
    std::vector<std::vector<int>> key;
    for (const auto& cw : g.words()) key.push_back(cw.symbols());
    if (seen.insert(key).second) out.push_back(std::move(g));

    // next t-combination
    int i = t - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - static_cast<size_t>(t - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < t; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end(), [](const WordCollection& a, const WordCollection& b) {
    return a.words() < b.words();
  });
  return out;
}

WordCollection random_collection(Rng& rng, int q, int p, int t) {
  std::set<std::vector<int>> chosen;
  while (static_cast<int>(chosen.size()) < t) {
    std::vector<int> w(static_cast<size_t>(p));
    for (auto& v : w) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
    chosen.insert(std::move(w));
  }
  std::vector<Word> ws;
  for (const auto& v : chosen) ws.emplace_back(v);
  return WordCollection(q, std::move(ws));
}

WordCollection random_zero_cross_collection(Rng& rng, int q, int p, int t) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    WordCollection g = random_collection(rng, q, p, t);
    if (has_zero_cross_correlations(g)) return g;
  }
  raise("BadArgument", "could not sample a zero-cross-correlation collection");
}

std::vector<int> random_permutation(Rng& rng, int q) {
  std::vector<int> pi(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) pi[static_cast<size_t>(i)] = i;
  for (int i = q - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(pi[static_cast<size_t>(i)], pi[static_cast<size_t>(j)]);
  }
  return pi;
}

VerificationReport verify_p2_theorem(int q_max) {
  auto start = Clock::now();
  VerificationReport report;
  report.suite = "p2-theorem";
  report.universe = "all canonical two-word collections of length 2, q = 2.." +
                    std::to_string(q_max);
  report.params = {{"q_max", std::to_string(q_max)}};

  // The four reduced r-forms, in increasing order on (1, inf).
  const IntPolynomial z = IntPolynomial::variable();
  const IntPolynomial one = IntPolynomial::constant(1);
  std::vector<RationalFunction> forms = {
      RationalFunction(IntPolynomial::constant(2), z + one),
      RationalFunction(z * 2 - one, z * z),
      RationalFunction(z * 2 + one, z * z + z),
      RationalFunction(IntPolynomial::constant(2), z),
  };

  for (int q = 2; q <= q_max; ++q) {
    auto collections = enumerate_canonical_collections(q, 2, 2);
    std::vector<std::optional<WordCollection>> representative(forms.size());
    for (const auto& g : collections) {
      ++report.instances;
      RFunction rf = r_function(g);
      bool classified = false;
      for (size_t k = 0; k < forms.size(); ++k)
        if (rf.reduced.equivalent(forms[k])) {
          classified = true;
          if (!representative[k]) representative[k] = g;
          break;
        }
      if (!classified)
        report.failures.push_back({"{" + g.str() + "} at q=" + std::to_string(q),
                                   "reduced r " + rf.reduced.canonical().str() +
                                       " is not one of the four forms"});
    }
    size_t expect_classes = (q == 2) ? 1 : forms.size();
    size_t found = 0;
    for (const auto& rep : representative)
      if (rep) ++found;
    if (found != expect_classes)
      report.failures.push_back({"q=" + std::to_string(q),
                                 "expected " + std::to_string(expect_classes) +
                                     " r-classes, found " + std::to_string(found)});

    // r_1(2) < r_2(2) < r_3(2) < r_4(2) exactly, and lambda strictly reverses.
    for (size_t i = 0; i + 1 < forms.size(); ++i) {
      if (!(forms[i].eval(2) < forms[i + 1].eval(2)))
        report.failures.push_back({"forms", "r-order at 2 is not increasing"});
    }
    for (size_t i = 0; i < forms.size(); ++i)
      for (size_t j = i + 1; j < forms.size(); ++j) {
        if (!representative[i] || !representative[j]) continue;
        HoleSpec hi(q, *representative[i]), hj(q, *representative[j]);
        ComparisonResult cmp = compare_escape(hi, hj);
        if (cmp.ordering != Ordering::Less || !cmp.certified)
          report.failures.push_back(
              {pair_str(*representative[i], *representative[j]) + " at q=" + std::to_string(q),
               "expected certified LESS, got " + ordering_str(cmp.ordering)});
      }
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_r_order(int p, int t, int q, const BigInt& d, int samples,
                                  std::uint64_t seed, int jobs) {
  auto start = Clock::now();
  VerificationReport report;
  report.suite = "r-order";
  report.universe = "seeded random pairs of " + std::to_string(t) + "-word collections, p=" +
                    std::to_string(p) + ", q=" + std::to_string(q);
  report.params = {{"p", std::to_string(p)}, {"t", std::to_string(t)},
                   {"q", std::to_string(q)}, {"D", d.get_str()},
                   {"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}};
  report.exploratory = BigInt(q) <= d;
  if (report.exploratory)
    report.universe += " (exploratory: q <= D)";

  struct Outcome {
    bool skip = false;
    bool failed = false;
    std::string instance, detail;
  };
  std::vector<Outcome> outcomes(static_cast<size_t>(samples));
  const Rational dq(d);

  parallel_indexed(samples, jobs, [&](long i) {
    Rng rng(seed + 0x100000001ull * static_cast<std::uint64_t>(i));
    WordCollection g1 = random_collection(rng, q, p, t);
    WordCollection g2 = random_collection(rng, q, p, t);
    Outcome& o = outcomes[static_cast<size_t>(i)];
    o.instance = pair_str(g1, g2);

    RFunction r1 = r_function(g1), r2 = r_function(g2);
    IntPolynomial cross = r2.delta * r1.adj_sum - r1.delta * r2.adj_sum;
    if (cross.is_zero()) {
      ComparisonResult cmp = compare_escape(HoleSpec(q, g1), HoleSpec(q, g2));
      if (cmp.ordering != Ordering::Tie) {
        o.failed = true;
        o.detail = "identical r but ordering " + ordering_str(cmp.ordering);
      }
      return;
    }
    Rational bound = lagrange_bound(cross);
    if (bound > dq) {
      o.failed = true;
      o.detail = "Lagrange bound " + rational_str(bound) + " of the cross-difference exceeds D";
      return;
    }
    Rational v1 = r1.reduced.eval(dq), v2 = r2.reduced.eval(dq);
    if (v1 == v2) {
      o.failed = true;
      o.detail = "distinct r with equal values at D, inside the root bound";
      return;
    }
    const WordCollection& a = (v1 < v2) ? g1 : g2;
    const WordCollection& b = (v1 < v2) ? g2 : g1;
    ComparisonResult cmp = compare_escape(HoleSpec(q, a), HoleSpec(q, b), 1e-100);
    if (cmp.ordering != Ordering::Less || !cmp.certified) {
      o.failed = true;
      o.detail = "r(" + rational_str(dq) + ")-order did not certify LESS (got " +
                 ordering_str(cmp.ordering) + ")";
    }
  });

  for (auto& o : outcomes) {
    if (o.skip) continue;
    ++report.instances;
    if (o.failed) {
      if (report.exploratory)
        report.observations.push_back({o.instance, o.detail});
      else
        report.failures.push_back({o.instance, o.detail});
    }
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_min_period(int p, int t, int q, SuiteMode mode, int samples,
                                     std::uint64_t seed, int jobs) {
  auto start = Clock::now();
  VerificationReport report;
  report.suite = "min-period";
  report.params = {{"p", std::to_string(p)}, {"t", std::to_string(t)},
                   {"q", std::to_string(q)},
                   {"mode", mode == SuiteMode::Exhaustive ? "exhaustive" : "sampled"},
                   {"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}};

  bool hypothesis = (t == 2) ? (p == 2 ? q >= 2 : q >= 5) : gen_period_condition(q, t);
  report.exploratory = !hypothesis;
  report.universe = "zero-cross-correlation " + std::to_string(t) + "-word collections, p=" +
                    std::to_string(p) + ", q=" + std::to_string(q) +
                    (hypothesis ? "" : " (exploratory: hypothesis not satisfied)");

  auto record = [&](const std::string& instance, const std::string& detail) {
    if (report.exploratory)
      report.observations.push_back({instance, detail});
    else
      report.failures.push_back({instance, detail});
  };

  if (mode == SuiteMode::Exhaustive) {
    std::vector<WordCollection> zero_cross;
    for (const auto& g : enumerate_canonical_collections(q, p, t))
      if (has_zero_cross_correlations(g)) zero_cross.push_back(g);
    for (const auto& g1 : zero_cross)
      for (const auto& g2 : zero_cross) {
        int t1 = minimal_period_hole(g1), t2 = minimal_period_hole(g2);
        if (t1 >= t2) continue;
        ++report.instances;
        ComparisonResult cmp = compare_escape(HoleSpec(q, g1), HoleSpec(q, g2));
        if (cmp.ordering != Ordering::Less || !cmp.certified)
          record(pair_str(g1, g2),
                 "tau " + std::to_string(t1) + " < " + std::to_string(t2) + " but ordering " +
                     ordering_str(cmp.ordering));
      }
  } else {
    struct Outcome {
      bool skip = true;
      bool failed = false;
      std::string instance, detail;
    };
    std::vector<Outcome> outcomes(static_cast<size_t>(samples));
    parallel_indexed(samples, jobs, [&](long i) {
      Rng rng(seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(i + 1));
      WordCollection g1 = random_zero_cross_collection(rng, q, p, t);
      WordCollection g2 = random_zero_cross_collection(rng, q, p, t);
      int t1 = minimal_period_hole(g1), t2 = minimal_period_hole(g2);
      if (t1 == t2) return;
      if (t1 > t2) std::swap(g1, g2), std::swap(t1, t2);
      Outcome& o = outcomes[static_cast<size_t>(i)];
      o.skip = false;
      o.instance = pair_str(g1, g2);
      ComparisonResult cmp = compare_escape(HoleSpec(q, g1), HoleSpec(q, g2));
      if (cmp.ordering != Ordering::Less || !cmp.certified) {
        o.failed = true;
        o.detail = "tau " + std::to_string(t1) + " < " + std::to_string(t2) +
                   " but ordering " + ordering_str(cmp.ordering);
      }
    });
    for (auto& o : outcomes) {
      if (o.skip) continue;
      ++report.instances;
      if (o.failed) record(o.instance, o.detail);
    }
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport run_counterexamples() {
  auto start = Clock::now();
  VerificationReport report;
  report.suite = "counterexamples";
  report.universe = "published counterexample pairs at q = 4";

  const int q = 4;
  auto parse = [&](const std::string& words) {
    return WordCollection::parse(words, q, ParseMode::Digit);
  };
  auto expect = [&](const std::string& name, const WordCollection& g1, const WordCollection& g2,
                    Ordering want) {
    ++report.instances;
    ComparisonResult cmp = compare_escape(HoleSpec(q, g1), HoleSpec(q, g2));
    bool ok = cmp.ordering == want && (want == Ordering::Tie || cmp.certified);
    if (!ok)
      report.failures.push_back({name + ": " + pair_str(g1, g2),
                                 "expected " + ordering_str(want) + ", got " +
                                     ordering_str(cmp.ordering)});
    // invariance under a symbol permutation applied to both sides
    std::vector<int> pi = {3, 1, 0, 2};
    ComparisonResult cmp2 =
        compare_escape(HoleSpec(q, permute_symbols(g1, pi)), HoleSpec(q, permute_symbols(g2, pi)));
    if (cmp2.ordering != cmp.ordering)
      report.failures.push_back({name, "ordering changed under symbol permutation"});
  };

  // Cross-correlations flip the union ordering: the singles tie / reverse,
  // the unions do not.
  expect("union", parse("012,123"), parse("102,333"), Ordering::Less);
  expect("singles-equal", parse("012"), parse("102"), Ordering::Tie);
  expect("singles-reversed", parse("123"), parse("333"), Ordering::Greater);

  // Larger minimal period yet smaller escape rate once a cross-correlation
  // is nonzero.
  {
    WordCollection g1 = parse("012,123");  // abc,bcd
    WordCollection g2 = parse("012,333");  // abc,ddd
    int t1 = minimal_period_hole(g1), t2 = minimal_period_hole(g2);
    ++report.instances;
    if (!(t1 == 3 && t2 == 1))
      report.failures.push_back({"periods", "expected tau 3 and 1, got " + std::to_string(t1) +
                                                " and " + std::to_string(t2)});
    expect("min-period-violation", g1, g2, Ordering::Less);
  }

  // Equal minimal periods with zero cross-correlations need not give equal
  // rates.
  {
    WordCollection g1 = parse("0000,1111");  // aaaa,bbbb
    WordCollection g2 = parse("0000,1212");  // aaaa,bcbc
    ++report.instances;
    ComparisonResult cmp = compare_escape(HoleSpec(q, g1), HoleSpec(q, g2));
    if (cmp.ordering == Ordering::Tie)
      report.failures.push_back({pair_str(g1, g2), "expected distinct rates, got TIE"});
  }

  report.wall_seconds = seconds_since(start);
  return report;
}

}  // namespace escrate
