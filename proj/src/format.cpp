#include "npa/format.hpp"

#include "npa/errors.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace npa {

namespace {

bool is_punct(char c) { return c == '{' || c == '}' || c == ':' || c == ';' || c == '='; }

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  const auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (is_punct(c)) {
      flush();
      out.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

// Cursor over one line's tokens with line-numbered errors.
class LineReader {
 public:
  LineReader(std::vector<std::string> tokens, std::size_t line) : toks_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ == toks_.size(); }
  const std::string& peek() const {
    if (done()) fail("unexpected end of line");
    return toks_[pos_];
  }
  std::string next() {
    const auto& t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view tok) {
    if (done() || toks_[pos_] != tok) fail("expected '" + std::string(tok) + "'");
    ++pos_;
  }
  bool accept(std::string_view tok) {
    if (!done() && toks_[pos_] == tok) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string name() {
    auto t = next();
    if (t.size() == 1 && is_punct(t[0])) fail("expected a name, got '" + t + "'");
    return t;
  }
  Rat rat() {
    const auto t = next();
    try {
      return parse_rat(t);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }
  void end() {
    if (!done()) fail("trailing tokens starting at '" + toks_[pos_] + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

 private:
  std::vector<std::string> toks_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Everything the three kinds share while reading.
struct Draft {
  std::string kind;
  std::optional<Alphabet> alphabet;
  std::optional<std::vector<std::string>> states;
  std::map<std::string, StateId> state_index;
  std::optional<StateId> initial;
  std::optional<std::vector<std::optional<Rat>>> output;
  std::map<std::pair<StateId, SymbolId>, GeneratorSet> transitions;
  std::optional<Vector> in, out;
  std::map<SymbolId, Matrix> matrices;

  void need_header(const LineReader& r) const {
    if (!alphabet || !states) r.fail("'alphabet:' and 'states:' must come first");
  }
  StateId state(LineReader& r) {
    const auto n = r.name();
    const auto it = state_index.find(n);
    if (it == state_index.end()) r.fail("unknown state '" + n + "'");
    return it->second;
  }
  SymbolId symbol(LineReader& r) {
    const auto n = r.name();
    const auto id = find_symbol(*alphabet, n);
    if (!id) r.fail("unknown symbol '" + n + "'");
    return *id;
  }
  // "{ s0=1/2 s1=1/2 }"
  Distribution brace_group(LineReader& r) {
    r.expect("{");
    Distribution d{std::vector<Rat>(states->size())};
    std::vector<bool> seen(states->size());
    while (!r.accept("}")) {
      const auto s = state(r);
      if (seen[s]) r.fail("state '" + (*states)[s] + "' repeated in one distribution");
      seen[s] = true;
      r.expect("=");
      d.weights[s] = r.rat();
    }
    return d;
  }
};

std::vector<std::string> name_list(LineReader& r, const char* what) {
  std::vector<std::string> names;
  while (!r.done()) names.push_back(r.name());
  if (names.empty()) r.fail(std::string("empty ") + what + " list");
  return names;
}

Vector rat_list(LineReader& r) {
  Vector v;
  while (!r.done() && r.peek() != ";") v.push_back(r.rat());
  return v;
}

void read_line(Draft& d, LineReader r) {
  const auto key = r.name();
  if (key == "alphabet" || key == "states") {
    r.expect(":");
    auto names = name_list(r, key.c_str());
    auto& slot = key == "alphabet" ? d.alphabet : d.states;
    if (slot) r.fail("duplicate '" + key + ":' line");
    if (key == "states") {
      for (StateId i = 0; i < names.size(); ++i)
        if (!d.state_index.emplace(names[i], i).second) r.fail("duplicate state '" + names[i] + "'");
    }
    slot = std::move(names);
    return;
  }

  d.need_header(r);
  if (key == "initial" && d.kind != "wfa") {
    r.expect(":");
    if (d.initial) r.fail("duplicate 'initial:' line");
    d.initial = d.state(r);
    r.end();
  } else if (key == "output" && d.kind != "wfa") {
    r.expect(":");
    if (d.output) r.fail("duplicate 'output:' line");
    d.output.emplace(d.states->size());
    while (!r.done()) {
      const auto s = d.state(r);
      r.expect("=");
      if ((*d.output)[s]) r.fail("output of '" + (*d.states)[s] + "' given twice");
      (*d.output)[s] = r.rat();
    }
  } else if (key == "trans" && d.kind != "wfa") {
    const auto s = d.state(r);
    const auto a = d.symbol(r);
    r.expect(":");
    GeneratorSet g;
    while (!r.done()) g.generators.push_back(d.brace_group(r));
    if (d.kind == "dpa" && g.size() != 1) r.fail("a dpa transition needs exactly one distribution");
    if (!d.transitions.emplace(std::pair{s, a}, std::move(g)).second) r.fail("duplicate transition");
  } else if ((key == "in" || key == "out") && d.kind == "wfa") {
    r.expect(":");
    auto& slot = key == "in" ? d.in : d.out;
    if (slot) r.fail("duplicate '" + key + ":' line");
    slot = rat_list(r);
    r.end();
  } else if (key == "matrix" && d.kind == "wfa") {
    const auto a = d.symbol(r);
    r.expect(":");
    const auto n = d.states->size();
    Matrix m(n, n);
    std::vector<bool> seen(n);
    do {
      r.expect("row");
      const auto s = d.state(r);
      r.expect(":");
      if (seen[s]) r.fail("row '" + (*d.states)[s] + "' given twice");
      seen[s] = true;
      const auto row = rat_list(r);
      if (row.size() != n) r.fail("row '" + (*d.states)[s] + "' needs " + std::to_string(n) + " entries");
      for (StateId t = 0; t < n; ++t) m(s, t) = row[t];
    } while (r.accept(";"));
    r.end();
    for (StateId s = 0; s < n; ++s)
      if (!seen[s]) r.fail("matrix '" + (*d.alphabet)[a] + "' is missing row '" + (*d.states)[s] + "'");
    if (!d.matrices.emplace(a, std::move(m)).second) r.fail("duplicate matrix");
  } else {
    r.fail("unexpected '" + key + "' line in a " + d.kind + " file");
  }
}

template <class Automaton>
void finish_header(Draft& d, Automaton& out) {
  out.states = *d.states;
  out.alphabet = *d.alphabet;
  if (!d.initial) throw ValidationError("no initial state");
  out.initial = *d.initial;
  if (!d.output) throw ValidationError("no output line");
  for (StateId s = 0; s < d.states->size(); ++s) {
    if (!(*d.output)[s]) throw ValidationError("output not defined on state '" + (*d.states)[s] + "'");
    out.output.push_back(*(*d.output)[s]);
  }
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  Draft d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (d.kind.empty()) {
      if (tokens.size() != 1 || (tokens[0] != "npa" && tokens[0] != "dpa" && tokens[0] != "wfa"))
        throw ParseError(lineno, "first line must be one of npa, dpa, wfa");
      d.kind = tokens[0];
      continue;
    }
    read_line(d, LineReader(std::move(tokens), lineno));
  }
  if (d.kind.empty()) throw ParseError("empty automaton file");
  if (!d.alphabet || !d.states) throw ParseError("missing 'alphabet:' or 'states:' line");

  if (d.kind == "npa") {
    Npa a;
    finish_header(d, a);
    a.transitions = std::move(d.transitions);
    validate_npa(a);
    return a;
  }
  if (d.kind == "dpa") {
    Dpa a;
    finish_header(d, a);
    for (auto& [key, g] : d.transitions) a.transitions.emplace(key, std::move(g.generators.front()));
    validate_dpa(a);
    return a;
  }
  Wfa w;
  w.states = *d.states;
  w.alphabet = *d.alphabet;
  if (!d.in || !d.out) throw ValidationError("a wfa needs 'in:' and 'out:' vectors");
  w.initial = std::move(*d.in);
  w.final = std::move(*d.out);
  for (SymbolId a = 0; a < w.alphabet.size(); ++a) {
    const auto it = d.matrices.find(a);
    if (it == d.matrices.end()) throw ValidationError("no matrix for symbol '" + w.alphabet[a] + "'");
    w.matrices.push_back(std::move(it->second));
  }
  validate_wfa(w);
  return w;
}

Automaton read_automaton_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

namespace {

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += " " + n;
  return out;
}

std::string group(const std::vector<std::string>& states, const Distribution& d) {
  std::string out = "{";
  for (StateId s = 0; s < d.size(); ++s)
    if (d[s] != 0) out += " " + states[s] + "=" + to_string(d[s]);
  return out + " }";
}

template <class Automaton>
std::string header(const char* kind, const Automaton& a) {
  std::string out = std::string(kind) + "\n";
  out += "alphabet:" + joined(a.alphabet) + "\n";
  out += "states:" + joined(a.states) + "\n";
  out += "initial: " + a.states[a.initial] + "\n";
  out += "output:";
  for (StateId s = 0; s < a.state_count(); ++s) out += " " + a.states[s] + "=" + to_string(a.output[s]);
  return out + "\n";
}

}  // namespace

std::string format_npa(const Npa& a) {
  std::string out = header("npa", a);
  for (StateId s = 0; s < a.state_count(); ++s)
    for (SymbolId sym = 0; sym < a.alphabet.size(); ++sym) {
      out += "trans " + a.states[s] + " " + a.alphabet[sym] + ":";
      for (const auto& g : a.choices(s, sym).generators) out += " " + group(a.states, g);
      out += "\n";
    }
  return out;
}

std::string format_dpa(const Dpa& d) {
  std::string out = header("dpa", d);
  for (StateId s = 0; s < d.state_count(); ++s)
    for (SymbolId sym = 0; sym < d.alphabet.size(); ++sym)
      out += "trans " + d.states[s] + " " + d.alphabet[sym] + ": " + group(d.states, d.next(s, sym)) + "\n";
  return out;
}

std::string format_wfa(const Wfa& w) {
  const auto vec = [](const Vector& v) {
    std::string out;
    for (const auto& x : v) out += " " + to_string(x);
    return out;
  };
  std::string out = "wfa\n";
  out += "alphabet:" + joined(w.alphabet) + "\n";
  out += "states:" + joined(w.states) + "\n";
  out += "in:" + vec(w.initial) + "\n";
  out += "out:" + vec(w.final) + "\n";
  for (SymbolId a = 0; a < w.alphabet.size(); ++a) {
    out += "matrix " + w.alphabet[a] + ":";
    for (StateId s = 0; s < w.state_count(); ++s) {
      if (s) out += " ;";
      out += " row " + w.states[s] + ":" + vec(w.matrices[a].row(s));
    }
    out += "\n";
  }
  return out;
}

std::string format_automaton(const Automaton& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Npa>)
          return format_npa(x);
        else if constexpr (std::is_same_v<T, Dpa>)
          return format_dpa(x);
        else
          return format_wfa(x);
      },
      a);
}

std::string_view kind_name(const Automaton& a) {
  static constexpr std::string_view names[] = {"npa", "dpa", "wfa"};
  return names[a.index()];
}

Npa as_npa(const Automaton& a) {
  if (const auto* n = std::get_if<Npa>(&a)) return *n;
  if (const auto* d = std::get_if<Dpa>(&a)) return dpa_as_npa(*d);
  throw ValidationError("expected an npa or dpa, got a wfa");
}

}  // namespace npa
