#include "npa/automata.hpp"

#include "npa/errors.hpp"

#include <algorithm>
#include <set>

namespace npa {

Distribution Distribution::point(std::size_t state_count, StateId state) {
  Distribution d{std::vector<Rat>(state_count)};
  d.weights.at(state) = 1;
  return d;
}

std::vector<StateId> Distribution::support() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < weights.size(); ++s)
    if (weights[s] != 0) out.push_back(s);
  return out;
}

Rat Distribution::expectation(const std::vector<Rat>& values) const { return dot(weights, values); }

std::optional<std::string> distribution_defect(const Distribution& d) {
  Rat sum = 0;
  for (const Rat& w : d.weights) {
    if (w < 0) return "not a distribution: negative weight " + to_string(w);
    sum += w;
  }
  if (sum != 1) return "not a distribution: weights sum to " + to_string(sum);
  return std::nullopt;
}

std::optional<SymbolId> find_symbol(const Alphabet& alphabet, std::string_view name) {
  const auto it = std::find(alphabet.begin(), alphabet.end(), name);
  if (it == alphabet.end()) return std::nullopt;
  return static_cast<SymbolId>(it - alphabet.begin());
}

std::vector<SymbolId> encode_word(const Alphabet& alphabet, const Word& word) {
  std::vector<SymbolId> out;
  out.reserve(word.size());
  for (const auto& sym : word) {
    const auto id = find_symbol(alphabet, sym);
    if (!id) throw UnknownSymbol(sym);
    out.push_back(*id);
  }
  return out;
}

const GeneratorSet& Npa::choices(StateId s, SymbolId a) const {
  const auto it = transitions.find({s, a});
  if (it == transitions.end()) throw ValidationError("missing transition");
  return it->second;
}

const Distribution& Dpa::next(StateId s, SymbolId a) const {
  const auto it = transitions.find({s, a});
  if (it == transitions.end()) throw ValidationError("missing transition");
  return it->second;
}

namespace {

std::string edge_name(const std::vector<std::string>& states, const Alphabet& alphabet, StateId s,
                      SymbolId a) {
  return "(" + states[s] + ", " + alphabet[a] + ")";
}

void check_names(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) throw ValidationError(std::string("no ") + what);
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw ValidationError(std::string("duplicate ") + what + " '" + n + "'");
}

// Shared shape checks for the NPA and DPA forms.
template <class Automaton>
void check_header(const Automaton& a) {
  check_names(a.states, "states");
  check_names(a.alphabet, "symbols");
  if (a.initial >= a.state_count()) throw ValidationError("initial state out of range");
  if (a.output.size() != a.state_count()) throw ValidationError("output not defined on every state");
  for (StateId s = 0; s < a.state_count(); ++s)
    if (!in_unit_interval(a.output[s]))
      throw ValidationError("output of " + a.states[s] + " is " + to_string(a.output[s]) +
                            ", outside [0,1]");
  for (const auto& [key, _] : a.transitions)
    if (key.first >= a.state_count() || key.second >= a.alphabet.size())
      throw ValidationError("transition on unknown state or symbol");
}

void check_generator(const Distribution& g, std::size_t state_count, const std::string& where) {
  if (g.size() != state_count) throw ValidationError("generator over wrong state space at " + where);
  if (auto defect = distribution_defect(g)) throw ValidationError(*defect + " at " + where);
}

}  // namespace

void validate_npa(const Npa& a) {
  check_header(a);
  for (StateId s = 0; s < a.state_count(); ++s)
    for (SymbolId sym = 0; sym < a.alphabet.size(); ++sym) {
      const auto where = edge_name(a.states, a.alphabet, s, sym);
      const auto it = a.transitions.find({s, sym});
      if (it == a.transitions.end()) throw ValidationError("missing transition " + where);
      if (it->second.empty()) throw ValidationError("empty convex set at " + where);
      for (const auto& g : it->second.generators) check_generator(g, a.state_count(), where);
    }
}

void validate_dpa(const Dpa& d) {
  check_header(d);
  for (StateId s = 0; s < d.state_count(); ++s)
    for (SymbolId sym = 0; sym < d.alphabet.size(); ++sym) {
      const auto where = edge_name(d.states, d.alphabet, s, sym);
      const auto it = d.transitions.find({s, sym});
      if (it == d.transitions.end()) throw ValidationError("missing transition " + where);
      check_generator(it->second, d.state_count(), where);
    }
}

void validate_wfa(const Wfa& w) {
  check_names(w.states, "states");
  check_names(w.alphabet, "symbols");
  const auto n = w.state_count();
  if (w.initial.size() != n) throw ValidationError("initial vector has wrong dimension");
  if (w.final.size() != n) throw ValidationError("final vector has wrong dimension");
  if (w.matrices.size() != w.alphabet.size()) throw ValidationError("missing matrix for some symbol");
  for (SymbolId a = 0; a < w.matrices.size(); ++a)
    if (w.matrices[a].rows() != n || w.matrices[a].cols() != n)
      throw ValidationError("matrix for '" + w.alphabet[a] + "' has wrong dimension");
}

Npa dpa_as_npa(const Dpa& d) {
  Npa a;
  a.states = d.states;
  a.alphabet = d.alphabet;
  a.initial = d.initial;
  a.output = d.output;
  for (const auto& [key, dist] : d.transitions) a.transitions.emplace(key, GeneratorSet{{dist}});
  return a;
}

Wfa dpa_as_wfa(const Dpa& d) {
  const auto n = d.state_count();
  Wfa w;
  w.states = d.states;
  w.alphabet = d.alphabet;
  w.initial = Distribution::point(n, d.initial).weights;
  w.final = d.output;
  for (SymbolId a = 0; a < d.alphabet.size(); ++a) {
    Matrix m(n, n);
    for (StateId s = 0; s < n; ++s) {
      const auto& row = d.next(s, a);
      for (StateId t = 0; t < n; ++t) m(s, t) = row[t];
    }
    w.matrices.push_back(std::move(m));
  }
  return w;
}

}  // namespace npa
