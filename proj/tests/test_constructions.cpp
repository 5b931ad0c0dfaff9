#include "npa/constructions.hpp"
#include "npa/errors.hpp"
#include "npa/semantics.hpp"
#include "random_automata.hpp"

#include <doctest.h>

#include <algorithm>

using namespace npa;
using npa::testing::Random;

TEST_CASE("example_npa shape") {
  const auto a = example_npa();
  CHECK_NOTHROW(validate_npa(a));
  CHECK(a.states == std::vector<std::string>{"s0", "s1", "s2", "s3"});
  CHECK(a.output == std::vector<Rat>{1, 0, 1, 1});
  CHECK(a.choices(0, 0).size() == 2);
  CHECK(evaluate(a, Word{"a", "a"}, Algebra::Min) == Rat(1, 4));
  CHECK(evaluate(a, Word{"b", "a", "b"}, Algebra::Max) == 1);
}

TEST_CASE("longest_run_reference") {
  CHECK(longest_run_reference({}) == 1);
  CHECK(longest_run_reference({"a", "a"}) == Rat(1, 4));
  CHECK(longest_run_reference({"a", "b", "a", "a", "a", "b"}) == Rat(1, 8));
  CHECK(longest_run_reference({"b", "b"}) == 1);
  CHECK_THROWS_AS(longest_run_reference({"a", "c"}), UnknownSymbol);
}

TEST_CASE("dualize") {
  const auto a = example_npa();
  CHECK(dualize(dualize(a)) == a);
  const auto d = dualize(a);
  CHECK(d.transitions == a.transitions);
  CHECK(d.initial == a.initial);
  CHECK_NOTHROW(validate_npa(d));
  CHECK(evaluate(d, Word{"a", "a"}, Algebra::Max) == Rat(3, 4));

  Npa c;
  c.states = {"k"};
  c.alphabet = {"a"};
  c.output = {Rat(2, 7)};
  c.transitions[{0, 0}] = GeneratorSet{{Distribution::point(1, 0)}};
  CHECK(dualize(c).output == std::vector<Rat>{Rat(5, 7)});
}

TEST_CASE("property: dualize preserves validity and structure") {
  Random r(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = npa::testing::random_npa(r, 4, 2, 3);
    const auto d = dualize(a);
    CHECK_NOTHROW(validate_npa(d));
    CHECK(d.transitions == a.transitions);
    CHECK(d.states == a.states);
    for (std::size_t s = 0; s < a.state_count(); ++s) CHECK(d.output[s] + a.output[s] == 1);
  }
}

namespace {

Dpa constant_dpa(const Rat& value) {
  Dpa d;
  d.states = {"m"};
  d.alphabet = {"a", "b"};
  d.output = {value};
  d.transitions[{0, 0}] = Distribution::point(1, 0);
  d.transitions[{0, 1}] = Distribution::point(1, 0);
  return d;
}

}  // namespace

TEST_CASE("threshold_reduction builds valid Y and Z") {
  const auto [y, z] = threshold_reduction(constant_dpa(Rat(1, 2)), Rat(1, 3));
  CHECK_NOTHROW(validate_npa(y));
  CHECK_NOTHROW(validate_npa(z));
  CHECK(y.state_count() == 3);
  CHECK(z.state_count() == 1);
  CHECK(y.choices(y.initial, 0).size() == 2);
  CHECK(evaluate(y, Word{}, Algebra::Min) == Rat(1, 3));
  CHECK(evaluate(z, Word{"a", "b"}, Algebra::Max) == Rat(1, 3));
  CHECK_THROWS_AS(threshold_reduction(constant_dpa(Rat(1, 2)), Rat(4, 3)), std::invalid_argument);
}

TEST_CASE("property: threshold reduction per-word identities") {
  Random r(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = npa::testing::random_dpa(r, 3, 2);
    const auto kappa = r.unit();
    const auto [y, z] = threshold_reduction(x, kappa);
    const auto xa = dpa_as_npa(x);
    for (const auto& v : npa::testing::all_words(2, 3)) {
      const auto lx = evaluate(xa, v, Algebra::Min);
      for (SymbolId first = 0; first < 2; ++first) {
        std::vector<SymbolId> av{first};
        av.insert(av.end(), v.begin(), v.end());
        CHECK(evaluate(y, av, Algebra::Min) == std::min(kappa, lx));
        CHECK(evaluate(y, av, Algebra::Max) == std::max(kappa, lx));
        CHECK(oracle_evaluate(y, av, Algebra::Min) == std::min(kappa, lx));
      }
      for (Algebra alg : {Algebra::Min, Algebra::Max}) CHECK(evaluate(z, v, alg) == kappa);
    }
    CHECK(evaluate(y, std::vector<SymbolId>{}, Algebra::Min) == kappa);
  }
}

TEST_CASE("real_part_lrs") {
  const auto l = real_part_lrs(Rat(3, 5), Rat(4, 5));
  CHECK(l.initial == std::vector<Rat>{1, Rat(3, 5)});
  CHECK(l.coeffs == std::vector<Rat>{-1, Rat(6, 5)});
  CHECK(lrs_eval(l, 2) == Rat(-7, 25));
  CHECK(lrs_eval(l, 3) == Rat(-117, 125));
  CHECK_THROWS_AS(real_part_lrs(Rat(1, 2), Rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(real_part_lrs(1, 0), std::invalid_argument);
}

TEST_CASE("real_part_lrs matches powers of the complex point and stays bounded") {
  const Rat re(3, 5), im(4, 5);
  const auto l = real_part_lrs(re, im);
  const auto values = lrs_prefix(l, 60);
  // (x + iy)^n by repeated complex multiplication
  Rat x = 1, y = 0;
  for (std::size_t n = 0; n < values.size(); ++n) {
    CHECK(values[n] == x);
    CHECK(abs(values[n]) <= 1);
    const Rat nx = x * re - y * im;
    y = x * im + y * re;
    x = nx;
  }
}
