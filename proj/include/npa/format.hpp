#pragma once

#include "npa/automata.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace npa {

/// Line-oriented automaton files. The first non-comment line names the kind
/// (npa, dpa or wfa); the rest are header and transition lines:
///
///   npa
///   alphabet: a b
///   states: s0 s1 s2
///   initial: s0
///   output: s0=1 s1=0 s2=1
///   trans s0 a: { s0=1 } { s1=1/2 s2=1/2 }
///
/// A dpa has exactly one brace group per transition line. A wfa replaces
/// initial/output with positional "in:" and "out:" vectors and gives one
/// "matrix a: row s0: 1/2 1/2 ; row s1: 0 1" line per symbol. Lines starting
/// with '#' are comments; spacing around punctuation is free.
using Automaton = std::variant<Npa, Dpa, Wfa>;

/// Parses and validates. Syntax problems throw ParseError; well-formed files
/// describing invalid automata throw ValidationError.
Automaton parse_automaton(std::string_view text);
Automaton read_automaton_file(const std::filesystem::path& path);

/// Canonical form: headers in fixed order, states and symbols in declaration
/// order, zero weights omitted from brace groups, rationals in lowest terms.
std::string format_automaton(const Automaton& a);
std::string format_npa(const Npa& a);
std::string format_dpa(const Dpa& d);
std::string format_wfa(const Wfa& w);

std::string_view kind_name(const Automaton& a);

/// The automaton as an NPA; a DPA is embedded with singleton choices.
/// Throws ValidationError for a WFA.
Npa as_npa(const Automaton& a);

}  // namespace npa
