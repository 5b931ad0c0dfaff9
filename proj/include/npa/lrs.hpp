#pragma once

#include "npa/automata.hpp"
#include "npa/matrix.hpp"
#include "npa/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace npa {

/// Linear recurrence sequence of order k:
///   u_{n+k} = coeffs[k-1] u_{n+k-1} + ... + coeffs[0] u_n,
/// with u_0..u_{k-1} given by `initial`.
struct Lrs {
  std::vector<Rat> initial;
  std::vector<Rat> coeffs;

  std::size_t order() const noexcept { return coeffs.size(); }

  friend bool operator==(const Lrs&, const Lrs&) = default;
};

/// Throws ValidationError unless order >= 1 and both lists have length order.
void validate_lrs(const Lrs& l);

Rat lrs_eval(const Lrs& l, std::size_t n);
/// u_0..u_{count-1}.
std::vector<Rat> lrs_prefix(const Lrs& l, std::size_t count);

/// alpha*l1 + beta*l2, of order l1.order() + l2.order().
Lrs lrs_combine(const Rat& alpha, const Lrs& l1, const Rat& beta, const Lrs& l2);

/// Coefficients c_0..c_n of det(x I - m), lowest degree first (c_n = 1),
/// by the Faddeev-LeVerrier recursion.
std::vector<Rat> characteristic_polynomial(const Matrix& m);

/// The sequence n -> row * m^n * column as an LRS of order m.rows(), with
/// the recurrence read off the characteristic polynomial (Cayley-Hamilton).
Lrs lrs_from_matrix(const Vector& row, const Matrix& m, const Vector& column);

/// The weights of a, aa, aaa, ... of a one-letter WFA as an LRS whose order
/// equals the number of states. Throws ValidationError on a larger alphabet.
Lrs wfa_to_lrs(const Wfa& w);

/// All n <= bound with u_n = 0.
std::vector<std::size_t> zero_set_prefix(const Lrs& l, std::size_t bound);

/// "lrs k=2 init=0,1 coeffs=1,1"
std::string format_lrs(const Lrs& l);
/// Inverse of format_lrs; whitespace between fields is free. Throws ParseError.
Lrs parse_lrs(std::string_view text);

}  // namespace npa
