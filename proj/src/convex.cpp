#include "npa/convex.hpp"

#include <stdexcept>

namespace npa {

bool ConvexCombination::valid() const {
  if (coefficients.empty()) return false;
  Rat sum = 0;
  for (const Rat& c : coefficients) {
    if (c < 0) return false;
    sum += c;
  }
  return sum == 1;
}

Distribution mix(const ConvexCombination& coeffs, std::span<const Distribution> points) {
  if (coeffs.size() != points.size()) throw std::invalid_argument("mix: length mismatch");
  if (!coeffs.valid()) throw std::invalid_argument("mix: coefficients are not a convex combination");
  const auto n = points.front().size();
  Distribution out{std::vector<Rat>(n)};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n) throw std::invalid_argument("mix: points over different state spaces");
    if (coeffs.coefficients[i] == 0) continue;
    for (StateId s = 0; s < n; ++s) out.weights[s] += coeffs.coefficients[i] * points[i][s];
  }
  return out;
}

GeneratorSet mix_sets(const ConvexCombination& coeffs, std::span<const GeneratorSet> sets) {
  if (coeffs.size() != sets.size()) throw std::invalid_argument("mix_sets: length mismatch");
  for (const auto& s : sets)
    if (s.empty()) throw std::invalid_argument("mix_sets: empty convex set");

  GeneratorSet out;
  std::vector<std::size_t> pick(sets.size(), 0);
  std::vector<Distribution> chosen(sets.size());
  // odometer over one generator per set
  while (true) {
    for (std::size_t i = 0; i < sets.size(); ++i) chosen[i] = sets[i].generators[pick[i]];
    out.generators.push_back(mix(coeffs, chosen));
    std::size_t i = 0;
    for (; i < sets.size(); ++i) {
      if (++pick[i] < sets[i].size()) break;
      pick[i] = 0;
    }
    if (i == sets.size()) break;
  }
  return out;
}

namespace {

// Phase-one simplex for {lambda >= 0 : A lambda = b}, starting from the
// all-artificial basis. Integer tableau with fraction-free pivoting: entries
// are true values times the last pivot q_.
class FeasibilityTableau {
 public:
  FeasibilityTableau(const std::vector<std::vector<Rat>>& rows, const std::vector<Rat>& rhs, std::size_t vars)
      : vars_(vars), width_(vars + rows.size() + 1) {
    const auto m = rows.size();
    // last row holds the reduced costs, last column the right-hand side
    table_.assign(m + 1, std::vector<mpz_class>(width_));
    for (std::size_t i = 0; i < m; ++i) {
      mpz_class scale = rhs[i].get_den();
      for (const Rat& x : rows[i]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
      if (rhs[i] < 0) scale = -scale;
      auto& row = table_[i];
      for (std::size_t j = 0; j < vars_; ++j) row[j] = rows[i][j].get_num() * (scale / rows[i][j].get_den());
      row[vars_ + i] = 1;
      row[width_ - 1] = rhs[i].get_num() * (scale / rhs[i].get_den());
      basis_.push_back(vars_ + i);
      for (std::size_t j = 0; j < vars_; ++j) table_[m][j] -= row[j];
      table_[m][width_ - 1] -= row[width_ - 1];
    }
  }

  std::optional<std::vector<Rat>> solve() {
    while (true) {
      const auto entering = entering_column();
      if (!entering) break;
      const auto leaving = leaving_row(*entering);
      if (!leaving) break;  // unbounded direction; cannot happen for a cost bounded below by 0
      pivot(*leaving, *entering);
    }
    if (sgn(table_.back()[width_ - 1]) != 0) return std::nullopt;
    std::vector<Rat> lambda(vars_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < vars_) {
        lambda[basis_[i]] = Rat(table_[i][width_ - 1], q_);
        lambda[basis_[i]].canonicalize();
      }
    return lambda;
  }

 private:
  // Bland: lowest-index column with negative reduced cost.
  std::optional<std::size_t> entering_column() const {
    const auto& cost = table_.back();
    for (std::size_t j = 0; j + 1 < width_; ++j)
      if (sgn(cost[j]) < 0) return j;
    return std::nullopt;
  }

  // Bland: minimum ratio, ties broken by lowest basic variable index.
  std::optional<std::size_t> leaving_row(std::size_t col) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (sgn(table_[i][col]) <= 0) continue;
      if (!best) {
        best = i;
        continue;
      }
      // rhs_i / a_i < rhs_b / a_b, both denominators positive
      const int cmp = ::cmp(table_[i][width_ - 1] * table_[*best][col], table_[*best][width_ - 1] * table_[i][col]);
      if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[*best])) best = i;
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t c) {
    const mpz_class p = table_[r][c];
    const auto& pivot_row = table_[r];
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (i == r) continue;
      auto& row = table_[i];
      const mpz_class f = row[c];
      for (std::size_t j = 0; j < width_; ++j) {
        row[j] = p * row[j] - f * pivot_row[j];
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), q_.get_mpz_t());
      }
    }
    q_ = p;
    basis_[r] = c;
  }

  std::size_t vars_;
  std::size_t width_;
  std::vector<std::vector<mpz_class>> table_;
  std::vector<std::size_t> basis_;
  mpz_class q_ = 1;
};

}  // namespace

namespace {

using PointRefs = std::vector<const Distribution*>;

std::optional<ConvexCombination> hull_coefficients_of(const Distribution& d, const PointRefs& generators) {
  if (generators.empty()) return std::nullopt;
  const auto n = d.size();
  for (const auto* g : generators)
    if (g->size() != n) throw std::invalid_argument("hull_coefficients: generators over different state spaces");

  // States on which every vector vanishes give 0 = 0 and are dropped.
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (StateId s = 0; s < n; ++s) {
    bool relevant = d[s] != 0;
    for (const auto* g : generators) relevant = relevant || (*g)[s] != 0;
    if (!relevant) continue;
    std::vector<Rat> row;
    row.reserve(generators.size());
    for (const auto* g : generators) row.push_back((*g)[s]);
    rows.push_back(std::move(row));
    rhs.push_back(d[s]);
  }
  rows.emplace_back(generators.size(), Rat(1));
  rhs.emplace_back(1);

  FeasibilityTableau tableau(rows, rhs, generators.size());
  auto lambda = tableau.solve();
  if (!lambda) return std::nullopt;
  return ConvexCombination{std::move(*lambda)};
}

bool redundant_in(const Distribution& d, const PointRefs& gs) {
  if (gs.empty()) throw std::invalid_argument("is_redundant: empty generator list");
  for (const auto* g : gs)
    if (*g == d) return true;
  // A combination stays within the coordinate range of its points.
  for (StateId s = 0; s < d.size(); ++s) {
    bool below = false, above = false;
    for (const auto* g : gs) {
      below = below || (*g)[s] <= d[s];
      above = above || (*g)[s] >= d[s];
    }
    if (!below || !above) return false;
  }
  if (gs.size() == 1) return false;
  return hull_coefficients_of(d, gs).has_value();
}

PointRefs refs(std::span<const Distribution> points) {
  PointRefs out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(&p);
  return out;
}

}  // namespace

std::optional<ConvexCombination> hull_coefficients(const Distribution& d,
                                                   std::span<const Distribution> generators) {
  return hull_coefficients_of(d, refs(generators));
}

bool is_redundant(const Distribution& d, std::span<const Distribution> gs) { return redundant_in(d, refs(gs)); }

GeneratorSet prune(const GeneratorSet& g) {
  std::vector<bool> dropped(g.size(), false);
  PointRefs others;
  for (std::size_t i = 0; i < g.size(); ++i) {
    // kept generators before i, and every generator after it
    others.clear();
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i && !dropped[j]) others.push_back(&g.generators[j]);
    if (!others.empty() && redundant_in(g.generators[i], others)) dropped[i] = true;
  }
  GeneratorSet out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!dropped[i]) out.generators.push_back(g.generators[i]);
  return out;
}

bool hulls_equal(const GeneratorSet& lhs, const GeneratorSet& rhs) {
  for (const auto& g : lhs.generators)
    if (!is_redundant(g, rhs.generators)) return false;
  for (const auto& g : rhs.generators)
    if (!is_redundant(g, lhs.generators)) return false;
  return true;
}

}  // namespace npa
