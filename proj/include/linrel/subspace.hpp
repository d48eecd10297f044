#pragma once

#include <cstddef>
#include <vector>

#include "linrel/matrix.hpp"

namespace linrel {

// A subspace of K^n held as its canonical column-echelon basis; the unique
// representation makes equality structural.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);
  static Subspace span(const FieldSpec& f, std::size_t ambient,
                       const std::vector<Vector>& vectors);
  static Subspace from_columns(const Matrix& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const FieldSpec& field() const { return basis_.field(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool contains_vector(const Vector& v) const;

  bool operator==(const Subspace& other) const;

 private:
  Subspace(std::size_t ambient, Matrix canonical_basis)
      : ambient_(ambient), basis_(std::move(canonical_basis)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// Whether u contains v.
bool contains(const Subspace& u, const Subspace& v);

// Deterministic complement: extend u's basis by the columns of w's canonical
// basis in left-to-right order, keeping the rank-increasing ones. Returns c
// with u + c = w and u ∩ c = 0. Requires u ⊆ w.
Subspace complement_within(const Subspace& u, const Subspace& w);

// Every subspace of F_p^n exactly once, ordered by dimension and then
// lexicographically by canonical basis. Prime fields only, guarded.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, std::size_t ambient);

}  // namespace linrel
