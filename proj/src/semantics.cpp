#include "npa/semantics.hpp"

#include "npa/convex.hpp"
#include "npa/errors.hpp"

#include <optional>
#include <set>
#include <string>

namespace npa {

std::string_view to_string(Algebra alg) { return alg == Algebra::Min ? "min" : "max"; }

Configuration initial_config(const Npa& a) {
  return Configuration{GeneratorSet{{Distribution::point(a.state_count(), a.initial)}}};
}

namespace {

void dedupe(GeneratorSet& g) {
  std::set<std::vector<Rat>> seen;
  std::erase_if(g.generators, [&](const Distribution& d) { return !seen.insert(d.weights).second; });
}

// Generators of Conv{Sum_s g(s) * h(s) | h a choice function on supp(g)},
// pruning the partial Minkowski sums state by state.
GeneratorSet successors(const Npa& a, const Distribution& g, SymbolId sym) {
  GeneratorSet partial{{Distribution{std::vector<Rat>(a.state_count())}}};
  for (StateId s : g.support()) {
    const Rat& p = g[s];
    GeneratorSet next;
    for (const auto& base : partial.generators)
      for (const auto& chosen : a.choices(s, sym).generators) {
        Distribution d = base;
        for (StateId t = 0; t < d.size(); ++t)
          if (chosen[t] != 0) d.weights[t] += p * chosen[t];
        next.generators.push_back(std::move(d));
      }
    dedupe(next);
    partial = next.size() > 2 ? prune(next) : std::move(next);
  }
  return partial;
}

}  // namespace

Configuration step(const Npa& a, const Configuration& cfg, SymbolId sym) {
  if (sym >= a.alphabet.size()) throw UnknownSymbol("#" + std::to_string(sym));
  GeneratorSet candidates;
  for (const auto& g : cfg.set.generators)
    for (auto& d : successors(a, g, sym).generators) candidates.generators.push_back(std::move(d));
  dedupe(candidates);
  return Configuration{prune(candidates)};
}

Configuration step(const Npa& a, const Configuration& cfg, std::string_view sym) {
  const auto id = find_symbol(a.alphabet, sym);
  if (!id) throw UnknownSymbol(std::string(sym));
  return step(a, cfg, *id);
}

Rat output(const Npa& a, const Configuration& cfg, Algebra alg) {
  if (cfg.set.empty()) throw std::invalid_argument("output: empty configuration");
  Rat best = cfg.set.generators.front().expectation(a.output);
  for (std::size_t i = 1; i < cfg.set.size(); ++i) {
    Rat e = cfg.set.generators[i].expectation(a.output);
    if (alg == Algebra::Min ? e < best : e > best) best = std::move(e);
  }
  return best;
}

Rat evaluate(const Npa& a, std::span<const SymbolId> word, Algebra alg) {
  auto cfg = initial_config(a);
  for (SymbolId sym : word) cfg = step(a, cfg, sym);
  return output(a, cfg, alg);
}

Rat evaluate(const Npa& a, const Word& word, Algebra alg) {
  return evaluate(a, encode_word(a.alphabet, word), alg);
}

Rat evaluate_wfa(const Wfa& w, std::span<const SymbolId> word) {
  Vector row = w.initial;
  for (SymbolId sym : word) {
    if (sym >= w.matrices.size()) throw UnknownSymbol("#" + std::to_string(sym));
    row = row * w.matrices[sym];
  }
  return dot(row, w.final);
}

Rat evaluate_wfa(const Wfa& w, const Word& word) { return evaluate_wfa(w, encode_word(w.alphabet, word)); }

namespace {

class ExhaustiveOracle {
 public:
  ExhaustiveOracle(const Npa& a, std::span<const SymbolId> word, Algebra alg, std::size_t cap)
      : a_(a), word_(word), alg_(alg), cap_(cap) {}

  Rat run() {
    std::vector<Rat> start(a_.state_count());
    start[a_.initial] = 1;
    visit(start, 0);
    return *best_;
  }

 private:
  void visit(const std::vector<Rat>& dist, std::size_t pos) {
    if (pos == word_.size()) {
      if (++leaves_ > cap_)
        throw CapExceeded("oracle enumeration exceeded " + std::to_string(cap_) + " leaves");
      Rat value = 0;
      for (StateId s = 0; s < dist.size(); ++s) value += dist[s] * a_.output[s];
      if (!best_ || (alg_ == Algebra::Min ? value < *best_ : value > *best_)) best_ = value;
      return;
    }
    const SymbolId sym = word_[pos];
    if (sym >= a_.alphabet.size()) throw UnknownSymbol("#" + std::to_string(sym));

    std::vector<StateId> support;
    for (StateId s = 0; s < dist.size(); ++s)
      if (dist[s] != 0) support.push_back(s);

    // every assignment of one generator to each state in the support
    std::vector<std::size_t> pick(support.size(), 0);
    while (true) {
      std::vector<Rat> next(dist.size());
      for (std::size_t k = 0; k < support.size(); ++k) {
        const auto& gen = a_.choices(support[k], sym).generators[pick[k]];
        for (StateId t = 0; t < next.size(); ++t) next[t] += dist[support[k]] * gen[t];
      }
      visit(next, pos + 1);

      std::size_t k = 0;
      for (; k < support.size(); ++k) {
        if (++pick[k] < a_.choices(support[k], sym).size()) break;
        pick[k] = 0;
      }
      if (k == support.size()) return;
    }
  }

  const Npa& a_;
  std::span<const SymbolId> word_;
  Algebra alg_;
  std::size_t cap_;
  std::size_t leaves_ = 0;
  std::optional<Rat> best_;
};

}  // namespace

Rat oracle_evaluate(const Npa& a, std::span<const SymbolId> word, Algebra alg, std::size_t cap) {
  return ExhaustiveOracle(a, word, alg, cap).run();
}

Rat oracle_evaluate(const Npa& a, const Word& word, Algebra alg, std::size_t cap) {
  return oracle_evaluate(a, encode_word(a.alphabet, word), alg, cap);
}

}  // namespace npa
