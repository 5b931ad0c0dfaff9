#include "npa/constructions.hpp"

#include "npa/errors.hpp"

#include <algorithm>

namespace npa {

Npa example_npa() {
  constexpr std::size_t n = 4;
  constexpr StateId s0 = 0, s1 = 1, s2 = 2, s3 = 3;
  constexpr SymbolId a = 0, b = 1;
  const auto point = [](StateId s) { return Distribution::point(n, s); };
  const Distribution half_s1_s2{{0, Rat(1, 2), Rat(1, 2), 0}};

  Npa npa;
  npa.states = {"s0", "s1", "s2", "s3"};
  npa.alphabet = {"a", "b"};
  npa.initial = s0;
  npa.output = {1, 0, 1, 1};
  npa.transitions[{s0, a}] = GeneratorSet{{point(s0), half_s1_s2}};
  npa.transitions[{s0, b}] = GeneratorSet{{point(s0)}};
  npa.transitions[{s1, a}] = GeneratorSet{{point(s1)}};
  npa.transitions[{s1, b}] = GeneratorSet{{point(s1)}};
  npa.transitions[{s2, a}] = GeneratorSet{{half_s1_s2}};
  npa.transitions[{s2, b}] = GeneratorSet{{point(s3)}};
  npa.transitions[{s3, a}] = GeneratorSet{{point(s3)}};
  npa.transitions[{s3, b}] = GeneratorSet{{point(s3)}};
  return npa;
}

Rat longest_run_reference(const Word& word) {
  std::size_t run = 0, longest = 0;
  for (const auto& sym : word) {
    if (sym == "a") {
      longest = std::max(longest, ++run);
    } else if (sym == "b") {
      run = 0;
    } else {
      throw UnknownSymbol(sym);
    }
  }
  Rat out(1);
  mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), longest);
  return out;
}

Npa dualize(const Npa& a) {
  Npa out = a;
  for (auto& w : out.output) w = 1 - w;
  return out;
}

ThresholdPair threshold_reduction(const Dpa& x, const Rat& kappa) {
  validate_dpa(x);
  if (!in_unit_interval(kappa)) throw std::invalid_argument("threshold_reduction: kappa outside [0,1]");

  // Y's states: fresh initial, kappa sink, then a disjoint copy of x.
  constexpr StateId start = 0, sink = 1, offset = 2;
  const auto n = x.state_count() + offset;
  const auto symbols = x.alphabet.size();

  Npa y;
  y.states = {"y_init", "y_sink"};
  for (const auto& s : x.states) y.states.push_back("x_" + s);
  y.alphabet = x.alphabet;
  y.initial = start;
  y.output = {kappa, kappa};
  y.output.insert(y.output.end(), x.output.begin(), x.output.end());

  for (SymbolId a = 0; a < symbols; ++a) {
    y.transitions[{start, a}] =
        GeneratorSet{{Distribution::point(n, sink), Distribution::point(n, x.initial + offset)}};
    y.transitions[{sink, a}] = GeneratorSet{{Distribution::point(n, sink)}};
    for (StateId s = 0; s < x.state_count(); ++s) {
      Distribution shifted{std::vector<Rat>(n)};
      const auto& d = x.next(s, a);
      for (StateId t = 0; t < x.state_count(); ++t) shifted.weights[t + offset] = d[t];
      y.transitions[{s + offset, a}] = GeneratorSet{{std::move(shifted)}};
    }
  }

  Npa z;
  z.states = {"z"};
  z.alphabet = x.alphabet;
  z.initial = 0;
  z.output = {kappa};
  for (SymbolId a = 0; a < symbols; ++a) z.transitions[{0, a}] = GeneratorSet{{Distribution::point(1, 0)}};

  return ThresholdPair{std::move(y), std::move(z)};
}

Lrs real_part_lrs(const Rat& re, const Rat& im) {
  if (re == 0 || im == 0) throw std::invalid_argument("real_part_lrs: components must be nonzero");
  const Rat modulus = re * re + im * im;
  if (modulus != 1) throw std::invalid_argument("real_part_lrs: not on the unit circle");
  return Lrs{{Rat(1), re}, {Rat(-modulus), Rat(2 * re)}};
}

}  // namespace npa
