#include "npa/lrs.hpp"

#include "npa/errors.hpp"

#include <optional>
#include <sstream>

namespace npa {

void validate_lrs(const Lrs& l) {
  if (l.order() == 0) throw ValidationError("LRS order must be at least 1");
  if (l.initial.size() != l.order())
    throw ValidationError("LRS needs " + std::to_string(l.order()) + " initial values, got " +
                          std::to_string(l.initial.size()));
}

std::vector<Rat> lrs_prefix(const Lrs& l, std::size_t count) {
  validate_lrs(l);
  const auto k = l.order();
  std::vector<Rat> u(l.initial.begin(), l.initial.end());
  while (u.size() < count) {
    const auto n = u.size() - k;
    Rat next = 0;
    for (std::size_t i = 0; i < k; ++i) next += l.coeffs[i] * u[n + i];
    u.push_back(std::move(next));
  }
  u.resize(count);
  return u;
}

Rat lrs_eval(const Lrs& l, std::size_t n) { return lrs_prefix(l, n + 1).back(); }

namespace {

// The k x k matrix C with (u_n, ..., u_{n+k-1}) C = (u_{n+1}, ..., u_{n+k}),
// so that u_n = init * C^n * e_0.
Matrix companion(const Lrs& l) {
  const auto k = l.order();
  Matrix c(k, k);
  for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = l.coeffs[i];
  return c;
}

}  // namespace

Lrs lrs_combine(const Rat& alpha, const Lrs& l1, const Rat& beta, const Lrs& l2) {
  validate_lrs(l1);
  validate_lrs(l2);
  const Matrix m = direct_sum(companion(l1), companion(l2));

  Vector row(l1.initial);
  row.insert(row.end(), l2.initial.begin(), l2.initial.end());
  Vector column(m.rows());
  column[0] = alpha;
  column[l1.order()] = beta;
  return lrs_from_matrix(row, m, column);
}

std::vector<Rat> characteristic_polynomial(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  const auto n = m.rows();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * Matrix::identity(n);
    c[n - k] = -(m * mk).trace() / Rat(static_cast<long>(k));
  }
  return c;
}

Lrs lrs_from_matrix(const Vector& row, const Matrix& m, const Vector& column) {
  if (!m.square() || row.size() != m.rows() || column.size() != m.rows())
    throw std::invalid_argument("lrs_from_matrix: dimension mismatch");
  const auto k = m.rows();
  if (k == 0) throw std::invalid_argument("lrs_from_matrix: empty matrix");

  const auto poly = characteristic_polynomial(m);
  Lrs l;
  // m^k = -(c_0 I + ... + c_{k-1} m^{k-1})
  for (std::size_t i = 0; i < k; ++i) l.coeffs.push_back(-poly[i]);
  Vector current = row;
  for (std::size_t i = 0; i < k; ++i) {
    l.initial.push_back(dot(current, column));
    current = current * m;
  }
  return l;
}

Lrs wfa_to_lrs(const Wfa& w) {
  validate_wfa(w);
  if (w.alphabet.size() != 1)
    throw ValidationError("wfa_to_lrs needs a one-letter alphabet, got " + std::to_string(w.alphabet.size()));
  return lrs_from_matrix(w.initial, w.matrices.front(), w.final);
}

std::vector<std::size_t> zero_set_prefix(const Lrs& l, std::size_t bound) {
  const auto values = lrs_prefix(l, bound + 1);
  std::vector<std::size_t> zeros;
  for (std::size_t n = 0; n < values.size(); ++n)
    if (values[n] == 0) zeros.push_back(n);
  return zeros;
}

namespace {

std::string join(const std::vector<Rat>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_string(values[i]);
  }
  return out;
}

std::vector<Rat> split_rats(std::string_view text) {
  std::vector<Rat> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rat(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string format_lrs(const Lrs& l) {
  return "lrs k=" + std::to_string(l.order()) + " init=" + join(l.initial) + " coeffs=" + join(l.coeffs);
}

Lrs parse_lrs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok) || tok != "lrs") throw ParseError("LRS must start with 'lrs'");

  std::optional<std::size_t> order;
  Lrs l;
  bool have_init = false, have_coeffs = false;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in LRS, got '" + tok + "'");
    const auto key = tok.substr(0, eq);
    const auto value = std::string_view(tok).substr(eq + 1);
    if (key == "k") {
      try {
        order = std::stoul(std::string(value));
      } catch (const std::exception&) {
        throw ParseError("malformed LRS order '" + std::string(value) + "'");
      }
    } else if (key == "init") {
      l.initial = split_rats(value);
      have_init = true;
    } else if (key == "coeffs") {
      l.coeffs = split_rats(value);
      have_coeffs = true;
    } else {
      throw ParseError("unknown LRS field '" + key + "'");
    }
  }
  if (!have_init || !have_coeffs) throw ParseError("LRS needs both init= and coeffs=");
  if (order && *order != l.order())
    throw ParseError("LRS k=" + std::to_string(*order) + " disagrees with " +
                     std::to_string(l.order()) + " coefficients");
  try {
    validate_lrs(l);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return l;
}

}  // namespace npa
