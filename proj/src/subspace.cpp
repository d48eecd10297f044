#include "linrel/subspace.hpp"

#include <algorithm>

#include "linrel/error.hpp"

namespace linrel {

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  return Subspace(ambient, Matrix(f, ambient, 0));
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(f, ambient));
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient,
                        const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    require(v.size() == ambient, "generator length differs from ambient dimension");
  return from_columns(Matrix::from_columns(f, ambient, vectors));
}

Subspace Subspace::from_columns(const Matrix& generators) {
  return Subspace(generators.rows(), column_echelon(generators).canonical);
}

bool Subspace::contains_vector(const Vector& v) const {
  require(v.size() == ambient_, "vector length differs from ambient dimension");
  return solve(basis_, v).has_value();
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

namespace {
void check_compatible(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim() && u.field() == v.field(),
          "subspaces live in different ambient spaces");
}
}  // namespace

Subspace sum(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  return Subspace::from_columns(Matrix::hstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  // Kernel vectors (a; b) of [Bu | -Bv] satisfy Bu a = Bv b.
  Matrix k = nullspace(Matrix::hstack(u.basis(), v.basis().negated()));
  Matrix a_part = k.row_slice(0, u.dim());
  return Subspace::from_columns(u.basis() * a_part);
}

bool contains(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  return sum(u, v) == u;
}

Subspace complement_within(const Subspace& u, const Subspace& w) {
  check_compatible(u, w);
  require(contains(w, u), "complement_within requires u ⊆ w");
  Matrix working = u.basis();
  std::vector<Vector> kept;
  for (std::size_t j = 0; j < w.dim(); ++j) {
    Vector candidate = w.basis().column(j);
    if (!solve(working, candidate).has_value()) {
      working = Matrix::hstack(
          working, Matrix::from_columns(w.field(), w.ambient_dim(), {candidate}));
      kept.push_back(std::move(candidate));
    }
  }
  Subspace c = Subspace::span(w.field(), w.ambient_dim(), kept);
  internal_check(intersect(u, c).is_zero() && sum(u, c) == w,
                 "complement_within postcondition");
  return c;
}

namespace {

// Free positions of the canonical form with pivot rows `pivots`: entries
// (i, j) with i below pivot j and i not itself a pivot row.
std::vector<std::pair<std::size_t, std::size_t>> free_positions(
    const std::vector<std::size_t>& pivots, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r : pivots) is_pivot[r] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = pivots[j] + 1; i < n; ++i)
      if (!is_pivot[i]) free.emplace_back(i, j);
  return free;
}

std::vector<std::int64_t> flatten(const Matrix& m) {
  std::vector<std::int64_t> key;
  key.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) key.push_back(m.at(i, j).res());
  return key;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, std::size_t ambient) {
  require(f.is_prime_field(), "enumeration needs a prime field");
  double vectors = 1;
  for (std::size_t i = 0; i < ambient; ++i) vectors *= static_cast<double>(f.p);
  require(vectors <= static_cast<double>(1 << 20), "enumeration guard exceeded");
  // Total-count guard: the sum of Gaussian binomials must stay desk-scale.
  {
    double total = 0;
    for (std::size_t k = 0; k <= ambient; ++k) {
      double gaussian = 1;
      for (std::size_t i = 0; i < k; ++i) {
        double num = 1, den = 1;
        for (std::size_t e = 0; e < ambient - i; ++e) num *= static_cast<double>(f.p);
        for (std::size_t e = 0; e < k - i; ++e) den *= static_cast<double>(f.p);
        gaussian *= (num - 1) / (den - 1);
      }
      total += gaussian;
    }
    require(total <= static_cast<double>(1 << 18), "enumeration guard exceeded");
  }

  std::vector<Subspace> out;
  out.push_back(Subspace::zero(f, ambient));
  for (std::size_t k = 1; k <= ambient; ++k) {
    std::vector<std::pair<std::vector<std::int64_t>, Subspace>> layer;
    // Pivot-row subsets of size k, in lexicographic order.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      auto free = free_positions(pivots, ambient);
      std::vector<std::int64_t> values(free.size(), 0);
      while (true) {
        Matrix basis(f, ambient, k);
        for (std::size_t j = 0; j < k; ++j) basis.at(pivots[j], j) = Scalar::one(f);
        for (std::size_t t = 0; t < free.size(); ++t)
          basis.at(free[t].first, free[t].second) = Scalar::residue(f, values[t]);
        layer.emplace_back(flatten(basis), Subspace::from_columns(basis));
        // Odometer over free entries.
        std::size_t t = 0;
        while (t < values.size() && ++values[t] == f.p) values[t++] = 0;
        if (t == values.size()) break;
      }
      // Next pivot subset.
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
      while (i >= 0 && pivots[static_cast<std::size_t>(i)] ==
                           ambient - k + static_cast<std::size_t>(i))
        --i;
      if (i < 0) break;
      ++pivots[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
        pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(layer.begin(), layer.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& entry : layer) out.push_back(std::move(entry.second));
  }
  return out;
}

}  // namespace linrel
