#pragma once

#include <cstdint>
#include <utility>

#include "linrel/projection.hpp"

namespace linrel {

// Deterministic per-instance randomness: a splitmix64 stream keyed by
// (seed, salt, index), so instance i is the same whichever thread draws it.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index);

  std::uint64_t next();
  // Uniform-ish integer in [lo, hi], both inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);
  bool chance(int numerator, int denominator);

  Scalar scalar(const FieldSpec& f);        // small entries, exact
  Vector vector(const FieldSpec& f, std::size_t n);

 private:
  std::uint64_t state_;
};

Subspace random_subspace(InstanceRng& rng, const FieldSpec& f, std::size_t ambient);
// A random subspace of u.
Subspace random_subspace_of(InstanceRng& rng, const Subspace& u);
Matrix random_matrix(InstanceRng& rng, const FieldSpec& f, std::size_t rows,
                     std::size_t cols);
// Unit upper triangular x unit lower triangular x permutation.
Matrix random_invertible(InstanceRng& rng, const FieldSpec& f, std::size_t n);

LinearRelation random_relation(InstanceRng& rng, const FieldSpec& f, std::size_t n);
LinearRelation random_operator(InstanceRng& rng, const FieldSpec& f, std::size_t n);
LinearRelation random_mp(InstanceRng& rng, const FieldSpec& f, std::size_t n);
LinearRelation random_projection(InstanceRng& rng, const FieldSpec& f, std::size_t n);
LinearRelation random_idempotent(InstanceRng& rng, const FieldSpec& f, std::size_t n);
LinearRelation random_super_idempotent(InstanceRng& rng, const FieldSpec& f,
                                       std::size_t n);

// Commuting multivalued projections, built blockwise along a random basis.
struct CommutingMpPair {
  LinearRelation p;
  LinearRelation q;
  Subspace ran_p;
  Subspace ker_p;
};
CommutingMpPair random_commuting_mp_pair(InstanceRng& rng, const FieldSpec& f,
                                         std::size_t n, bool q_projection);

LinearRelation conjugate(const LinearRelation& t, const Matrix& g);

}  // namespace linrel
