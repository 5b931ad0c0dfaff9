// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "npa/constructions.hpp"
#include "npa/convex.hpp"
#include "npa/lrs.hpp"
#include "npa/metric.hpp"
#include "npa/semantics.hpp"
#include "random_automata.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace npa;
using npa::testing::Random;

namespace {

// Collects failures for one criterion without aborting it.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failed_) {
      s << ", " << failed_ << " failed";
      for (const auto& f : failures_) s << "\n      - " << f;
    }
    return s.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_seconds;
  std::function<void(Check&)> body;
};

std::string show(const Rat& r) { return to_string(r); }

Distribution dist(std::initializer_list<Rat> w) { return Distribution{std::vector<Rat>(w)}; }

void worked_example(Check& check) {
  const auto a = example_npa();
  const auto s0 = Distribution::point(4, 0);
  const auto half = dist({0, Rat(1, 2), Rat(1, 2), 0});
  const auto three_quarter = dist({0, Rat(3, 4), Rat(1, 4), 0});

  const auto after_a = step(a, initial_config(a), "a");
  check.expect(hulls_equal(after_a.set, GeneratorSet{{s0, half}}), "Conv{s0, 1/2 s1 + 1/2 s2} after a");
  const auto after_aa = step(a, after_a, "a");
  check.expect(hulls_equal(after_aa.set, GeneratorSet{{s0, half, three_quarter}}),
               "Conv{s0, 1/2 s1 + 1/2 s2, 3/4 s1 + 1/4 s2} after aa");
  const auto value = evaluate(a, Word{"a", "a"}, Algebra::Min);
  check.expect(value == Rat(1, 4), "min weight of aa is " + show(value) + ", expected 1/4");
}

void language_formula(Check& check) {
  const auto a = example_npa();
  std::size_t nonempty = 0;
  for (const auto& ids : npa::testing::all_words(2, 6)) {
    const auto word = npa::testing::spell(a.alphabet, ids);
    if (!word.empty()) ++nonempty;
    const auto lo = evaluate(a, ids, Algebra::Min);
    const auto hi = evaluate(a, ids, Algebra::Max);
    check.expect(lo == longest_run_reference(word), "min weight " + show(lo) + " differs from 2^-run");
    check.expect(hi == 1, "max weight " + show(hi) + " differs from 1");
  }
  check.expect(nonempty == 126, "expected 126 nonempty words of length <= 6");
}

// Shared randomized NPA corpus for criteria 3 and 4.
std::vector<Npa> npa_corpus() {
  Random r(20240601);
  std::vector<Npa> corpus;
  for (int i = 0; i < 200; ++i) corpus.push_back(npa::testing::random_npa(r, 3, 2, 2));
  return corpus;
}

void oracle_equivalence(Check& check) {
  const auto words = npa::testing::all_words(2, 4);
  for (const auto& a : npa_corpus())
    for (const auto& w : words)
      for (Algebra alg : {Algebra::Min, Algebra::Max}) {
        const auto got = evaluate(a, w, alg), want = oracle_evaluate(a, w, alg);
        check.expect(got == want, "evaluate " + show(got) + " != oracle " + show(want));
      }
}

void duality(Check& check) {
  const auto words = npa::testing::all_words(2, 4);
  for (const auto& a : npa_corpus()) {
    const auto dual = dualize(a);
    for (const auto& w : words) {
      const auto lhs = evaluate(dual, w, Algebra::Max);
      const Rat rhs = 1 - evaluate(a, w, Algebra::Min);
      check.expect(lhs == rhs, "dual max " + show(lhs) + " != 1 - min = " + show(rhs));
    }
  }
}

void dpa_coincidence(Check& check) {
  Random r(777);
  const auto words = npa::testing::all_words(2, 5);
  for (int i = 0; i < 200; ++i) {
    const auto d = npa::testing::random_dpa(r, 4, 2);
    const auto a = dpa_as_npa(d);
    const auto w = dpa_as_wfa(d);
    for (const auto& word : words) {
      const auto expected = evaluate_wfa(w, word);
      for (Algebra alg : {Algebra::Min, Algebra::Max}) {
        const auto got = evaluate(a, word, alg);
        check.expect(got == expected, "embedded " + show(got) + " != matrix product " + show(expected));
      }
    }
  }
}

void metric_guarantee(Check& check) {
  const Alphabet ab{"a", "b"};
  const auto one = LanguageHandle::constant(ab, 1);
  const auto zero = LanguageHandle::constant(ab, 0);
  const auto example = LanguageHandle::from_npa(example_npa(), Algebra::Min);
  for (const Rat kappa : {Rat(1), Rat(1, 10), Rat(1, 100)}) {
    const MetricQuery q{Rat(1, 2), kappa};
    const auto same = approx_metric(example, example, q);
    check.expect(same == 0, "identical pair gave " + show(same));

    const Rat d = 2;  // sum_i 2^i (1/4)^i
    const auto x = approx_metric(one, zero, q);
    check.expect(abs(x - d) <= kappa && x <= d,
                 "constant pair gave " + show(x) + " for kappa " + show(kappa));
  }
  const auto n = word_horizon({Rat(1, 2), Rat(1, 2)});
  check.expect(n == 2, "horizon for c=1/2, kappa=1/2 is " + std::to_string(n));
}

Dpa constant_dpa(const Rat& value) {
  Dpa d;
  d.states = {"m"};
  d.alphabet = {"a", "b"};
  d.output = {value};
  d.transitions[{0, 0}] = Distribution::point(1, 0);
  d.transitions[{0, 1}] = Distribution::point(1, 0);
  return d;
}

// Weight 1 on "a b", 1/4 on the empty word, 0 everywhere else.
Dpa single_word_dpa() {
  Dpa d;
  d.states = {"start", "seen_a", "seen_ab", "dead"};
  d.alphabet = {"a", "b"};
  d.initial = 0;
  d.output = {Rat(1, 4), 0, 1, 0};
  const auto to = [](StateId s) { return Distribution::point(4, s); };
  d.transitions[{0, 0}] = to(1);
  d.transitions[{0, 1}] = to(3);
  d.transitions[{1, 0}] = to(3);
  d.transitions[{1, 1}] = to(2);
  for (SymbolId a : {0, 1}) {
    d.transitions[{2, a}] = to(3);
    d.transitions[{3, a}] = to(3);
  }
  return d;
}

// Words (length <= 5) with a nonzero contribution in the Y-vs-Z report.
std::set<std::vector<SymbolId>> nonzero_words(const Dpa& x, const Rat& kappa, Algebra alg) {
  const auto [y, z] = threshold_reduction(x, kappa);
  // c = 1/2, kappa = 1/32: least n with (1/2)^n <= 1/64 is 6, so words up to length 5
  const MetricQuery q{Rat(1, 2), Rat(1, 32)};
  std::set<std::vector<SymbolId>> out;
  for (const auto& wc : difference_report(LanguageHandle::from_npa(y, alg), LanguageHandle::from_npa(z, alg), q))
    if (wc.contribution != 0) out.insert(wc.word);
  return out;
}

void threshold_semantics(Check& check) {
  const auto horizon = word_horizon({Rat(1, 2), Rat(1, 32)});
  check.expect(horizon == 6, "report horizon " + std::to_string(horizon) + ", expected 6");

  // L_X == kappa satisfies both thresholds: Y and Z agree everywhere.
  for (Algebra alg : {Algebra::Min, Algebra::Max})
    check.expect(nonzero_words(constant_dpa(Rat(1, 2)), Rat(1, 2), alg).empty(),
                 "constant X at kappa: nonzero report under " + std::string(to_string(alg)));

  // L_X == 3/4 >= 1/2 holds under min, fails at every word under max.
  check.expect(nonzero_words(constant_dpa(Rat(3, 4)), Rat(1, 2), Algebra::Min).empty(),
               "X >= kappa should give an all-zero min report");
  const auto above = nonzero_words(constant_dpa(Rat(3, 4)), Rat(1, 2), Algebra::Max);
  check.expect(above.size() == 62 && !above.contains({}), "X > kappa: every nonempty word should differ under max");

  // Single-word X with kappa = 1/2: under max the only violation is v = "a b",
  // so Y and Z differ exactly on "a a b" and "b a b".
  const auto x = single_word_dpa();
  const std::set<std::vector<SymbolId>> expected_max{{0, 0, 1}, {1, 0, 1}};
  check.expect(nonzero_words(x, Rat(1, 2), Algebra::Max) == expected_max,
               "max report should pinpoint the words s.a.b");

  // Under min, violations are all v with L_X(v) < 1/2, i.e. every v except "a b".
  const auto min_words = nonzero_words(x, Rat(1, 2), Algebra::Min);
  check.expect(min_words.contains({0}) && min_words.contains({1}), "min report should flag a and b (X(eps) = 1/4)");
  check.expect(!min_words.contains({0, 0, 1}) && !min_words.contains({1, 0, 1}),
               "min report should not flag s.a.b (X(ab) = 1)");
  check.expect(min_words.size() == 60, "min report flags " + std::to_string(min_words.size()) + " words, expected 60");

  const auto [y, z] = threshold_reduction(x, Rat(1, 2));
  const auto a_weight = evaluate(y, Word{"a"}, Algebra::Min);
  check.expect(a_weight == Rat(1, 4), "Y(a) under min is " + show(a_weight) + ", expected min(1/2, 1/4)");
}

void lrs_bridge(Check& check) {
  Wfa fib;
  fib.states = {"p0", "p1"};
  fib.alphabet = {"a"};
  fib.initial = {1, 0};
  fib.final = {0, 1};
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 1;
  fib.matrices = {m};
  const auto l = wfa_to_lrs(fib);
  Rat f0 = 0, f1 = 1;
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto u = lrs_eval(l, n);
    check.expect(u == f0, "Fib(" + std::to_string(n) + ") = " + show(u));
    const Rat next = f0 + f1;
    f0 = f1;
    f1 = next;
  }

  const auto re = real_part_lrs(Rat(3, 5), Rat(4, 5));
  check.expect(lrs_eval(re, 2) == Rat(-7, 25), "x2 = " + show(lrs_eval(re, 2)));
  check.expect(lrs_eval(re, 3) == Rat(-117, 125), "x3 = " + show(lrs_eval(re, 3)));
  check.expect(zero_set_prefix(re, 50).empty(), "zero set up to 50 should be empty");
}

void convex_soundness(Check& check) {
  Random r(5150);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = r.between(1, 4);
    GeneratorSet g;
    for (std::size_t i = 0, k = r.between(1, 6); i < k; ++i) {
      if (i >= 2 && r.coin())
        g.generators.push_back(
            mix(ConvexCombination{r.distribution(i).weights}, std::span(g.generators).first(i)));
      else
        g.generators.push_back(r.distribution(n));
    }
    const auto p = prune(g);
    check.expect(prune(p) == p, "prune is not idempotent");
    check.expect(hulls_equal(g, p), "prune changed the hull");

    // interval oracle on the two-state simplex
    std::vector<Distribution> gs;
    for (std::size_t i = 0, k = r.between(1, 4); i < k; ++i) gs.push_back(r.distribution(2));
    const auto d = r.distribution(2);
    Rat lo = gs.front()[0], hi = gs.front()[0];
    for (const auto& x : gs) {
      if (x[0] < lo) lo = x[0];
      if (x[0] > hi) hi = x[0];
    }
    check.expect(is_redundant(d, gs) == (d[0] >= lo && d[0] <= hi), "is_redundant disagrees with interval oracle");
    GeneratorSet two{gs};
    check.expect(hulls_equal(two, prune(two)), "two-state prune changed the hull");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example reproduction", 1, worked_example},
      {2, "language formula 2^-n / max = 1 on words of length <= 6", 5, language_formula},
      {3, "oracle equivalence on 200 random NPAs", 60, oracle_equivalence},
      {4, "duality on the same corpus", 60, duality},
      {5, "DPA coincidence on 200 random DPAs", 30, dpa_coincidence},
      {6, "metric guarantee and horizon formula", 10, metric_guarantee},
      {7, "threshold reduction semantics", 10, threshold_semantics},
      {8, "LRS bridge", 5, lrs_bridge},
      {9, "convex-geometry soundness on 500 instances", 30, convex_soundness},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < c.time_limit_seconds, "runtime over the limit");
    const bool ok = check.passed();
    if (!ok) ++failed;
    std::printf("[%s] AC%d %s: %s (%.3f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                check.summary().c_str(), seconds, c.time_limit_seconds);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
