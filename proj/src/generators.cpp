#include "linrel/generators.hpp"

#include <array>

#include "linrel/error.hpp"

namespace linrel {

namespace {

constexpr int kRejectionBudget = 600;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
  state_ = seed ^ 0x2545f4914f6cdd1dULL;
  state_ = splitmix64(state_) ^ salt;
  state_ = splitmix64(state_) ^ index;
  splitmix64(state_);
}

std::uint64_t InstanceRng::next() { return splitmix64(state_); }

std::int64_t InstanceRng::int_in(std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(next() % span);
}

bool InstanceRng::chance(int numerator, int denominator) {
  return int_in(0, denominator - 1) < numerator;
}

Scalar InstanceRng::scalar(const FieldSpec& f) {
  if (f.is_prime_field()) return Scalar::residue(f, int_in(0, f.p - 1));
  // Small numerators, occasional halves; keeps echelon growth mild.
  long long num = int_in(-3, 3);
  long long den = chance(1, 4) ? 2 : 1;
  return Scalar::rational(num, den);
}

Vector InstanceRng::vector(const FieldSpec& f, std::size_t n) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
  return v;
}

Subspace random_subspace(InstanceRng& rng, const FieldSpec& f, std::size_t ambient) {
  std::size_t d = static_cast<std::size_t>(rng.int_in(0, static_cast<std::int64_t>(ambient)));
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(rng.vector(f, ambient));
  return Subspace::span(f, ambient, gens);
}

Subspace random_subspace_of(InstanceRng& rng, const Subspace& u) {
  if (u.dim() == 0) return u;
  std::size_t d = static_cast<std::size_t>(rng.int_in(0, static_cast<std::int64_t>(u.dim())));
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < d; ++i)
    gens.push_back(u.basis().apply(rng.vector(u.field(), u.dim())));
  return Subspace::span(u.field(), u.ambient_dim(), gens);
}

Matrix random_matrix(InstanceRng& rng, const FieldSpec& f, std::size_t rows,
                     std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(f);
  return m;
}

Matrix random_invertible(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  Matrix upper = Matrix::identity(f, n);
  Matrix lower = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(1, 2)) upper.at(i, j) = rng.scalar(f);
      if (rng.chance(1, 2)) lower.at(j, i) = rng.scalar(f);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.int_in(0, static_cast<std::int64_t>(i) - 1))]);
  Matrix p(f, n, n);
  for (std::size_t i = 0; i < n; ++i) p.at(perm[i], i) = Scalar::one(f);
  return upper * lower * p;
}

LinearRelation random_relation(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  return LinearRelation(n, n, random_subspace(rng, f, 2 * n));
}

LinearRelation random_operator(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  return LinearRelation::from_operator(random_matrix(rng, f, n, n));
}

LinearRelation random_mp(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  return mp(random_subspace(rng, f, n), random_subspace(rng, f, n));
}

LinearRelation random_projection(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    Subspace s = random_subspace(rng, f, n);
    Subspace k = random_subspace(rng, f, n);
    if (intersect(s, k).is_zero()) return mp(s, k);
  }
  throw Error("rejection budget exceeded while sampling a projection");
}

LinearRelation conjugate(const LinearRelation& t, const Matrix& g) {
  LinearRelation gg = LinearRelation::from_operator(g);
  return compose(compose(gg, t), inverse(gg));
}

LinearRelation random_idempotent(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    LinearRelation p0 = random_projection(rng, f, n);
    RelationParts pp = parts(p0);
    // Bias towards mul parts inside ker p0 (multivalued projections), with
    // free samples filling in the rest of the idempotent class.
    Subspace t_part = rng.chance(1, 3) ? random_subspace_of(rng, pp.ker)
                                       : random_subspace(rng, f, n);
    if (!(intersect(t_part, pp.dom) == intersect(pp.ker, sum(pp.ran, t_part))))
      continue;
    LinearRelation q = subspace_sum(
        p0, LinearRelation::rect(Subspace::zero(f, n), t_part));
    return conjugate(q, random_invertible(rng, f, n));
  }
  throw Error("rejection budget exceeded while sampling an idempotent");
}

LinearRelation random_super_idempotent(InstanceRng& rng, const FieldSpec& f,
                                       std::size_t n) {
  LinearRelation p0 = random_projection(rng, f, n);
  Subspace t_part = random_subspace(rng, f, n);
  LinearRelation t =
      subspace_sum(p0, LinearRelation::rect(Subspace::zero(f, n), t_part));
  return conjugate(t, random_invertible(rng, f, n));
}

namespace {

// Blockwise piece types along a basis: fixed line, kernel line, full plane
// piece (range and kernel both), or untouched.
enum class Piece { I, K, F, Z };

LinearRelation assemble_mp(const Matrix& g, const std::vector<Piece>& pieces) {
  const FieldSpec& f = g.field();
  std::vector<Vector> ran_gens, ker_gens;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i] == Piece::I || pieces[i] == Piece::F) ran_gens.push_back(g.column(i));
    if (pieces[i] == Piece::K || pieces[i] == Piece::F) ker_gens.push_back(g.column(i));
  }
  std::size_t n = g.rows();
  return mp(Subspace::span(f, n, ran_gens), Subspace::span(f, n, ker_gens));
}

}  // namespace

CommutingMpPair random_commuting_mp_pair(InstanceRng& rng, const FieldSpec& f,
                                         std::size_t n, bool q_projection) {
  Matrix g = random_invertible(rng, f, n);
  std::vector<Piece> left(n), right(n);
  constexpr std::array<Piece, 4> kAll{Piece::I, Piece::K, Piece::F, Piece::Z};
  constexpr std::array<Piece, 3> kSingleValued{Piece::I, Piece::K, Piece::Z};
  for (std::size_t i = 0; i < n; ++i) {
    // Per-block combinations whose pieces commute: equal types, or one side
    // an identity block.
    while (true) {
      Piece a = kAll[static_cast<std::size_t>(rng.int_in(0, 3))];
      Piece b = q_projection ? kSingleValued[static_cast<std::size_t>(rng.int_in(0, 2))]
                             : kAll[static_cast<std::size_t>(rng.int_in(0, 3))];
      if (a == b || a == Piece::I || b == Piece::I) {
        left[i] = a;
        right[i] = b;
        break;
      }
    }
  }
  LinearRelation p = assemble_mp(g, left);
  LinearRelation q = assemble_mp(g, right);
  internal_check(compose(p, q) == compose(q, p), "blockwise factors commute");
  std::vector<Vector> ran_gens, ker_gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (left[i] == Piece::I || left[i] == Piece::F) ran_gens.push_back(g.column(i));
    if (left[i] == Piece::K || left[i] == Piece::F) ker_gens.push_back(g.column(i));
  }
  return CommutingMpPair{p, q, Subspace::span(f, n, ran_gens),
                         Subspace::span(f, n, ker_gens)};
}

}  // namespace linrel
