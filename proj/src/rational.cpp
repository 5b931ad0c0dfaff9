#include "npa/rational.hpp"

#include "npa/errors.hpp"

#include <cctype>

namespace npa {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_digits(den)))
    throw ParseError("malformed rational '" + std::string(text) + "'");

  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rat result;
  result.get_num() = mpz_class(n, 10);
  result.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (result.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  result.canonicalize();
  return result;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

std::string to_decimal(const Rat& value, unsigned digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

  Rat magnitude = abs(value);
  // round half away from zero: floor(|v| * 10^d + 1/2)
  Rat scaled = magnitude * scale + Rat(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());

  std::string body = rounded.get_str(10);
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  const bool negative = value < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

}  // namespace npa
