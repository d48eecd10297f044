#include <doctest.h>

#include "linrel/error.hpp"
#include "linrel/generators.hpp"
#include "linrel/relation.hpp"

using namespace linrel;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Vector vec(const FieldSpec& f, std::initializer_list<long long> entries) {
  Vector v;
  for (long long e : entries) v.push_back(Scalar::from_int(f, e));
  return v;
}

Matrix mat(const FieldSpec& f, std::size_t rows, std::size_t cols,
           std::initializer_list<long long> entries) {
  Matrix m(f, rows, cols);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, *it++);
  return m;
}

Subspace span1(const FieldSpec& f, std::initializer_list<long long> v) {
  return Subspace::span(f, v.size(), {vec(f, v)});
}

}  // namespace

TEST_CASE("parts of a matrix graph") {
  LinearRelation t = LinearRelation::from_operator(mat(kQ, 2, 2, {0, 1, 0, 0}));
  RelationParts p = parts(t);
  CHECK(p.dom.is_full());
  CHECK(p.ran == span1(kQ, {1, 0}));
  CHECK(p.ker == span1(kQ, {1, 0}));
  CHECK(p.mul.is_zero());
}

TEST_CASE("parts of mp(span e1, span e1): everything is span e1") {
  Subspace e1 = span1(kQ, {1, 0});
  LinearRelation t(2, 2,
                   Subspace::span(kQ, 4, {vec(kQ, {1, 0, 1, 0}), vec(kQ, {1, 0, 0, 0})}));
  RelationParts p = parts(t);
  CHECK(p.dom == e1);
  CHECK(p.mul == e1);
  CHECK(p.ran == e1);
  CHECK(p.ker == e1);
}

TEST_CASE("identity parts") {
  RelationParts p = parts(LinearRelation::identity(kQ, 3));
  CHECK(p.dom.is_full());
  CHECK(p.ran.is_full());
  CHECK(p.ker.is_zero());
  CHECK(p.mul.is_zero());
}

TEST_CASE("compose matches the matrix product on graphs") {
  LinearRelation r = LinearRelation::from_operator(mat(kQ, 2, 2, {1, 1, 0, 1}));
  LinearRelation t = LinearRelation::from_operator(mat(kQ, 2, 2, {1, 0, 1, 0}));
  CHECK(compose(r, t) ==
        LinearRelation::from_operator(mat(kQ, 2, 2, {2, 0, 1, 0})));

  InstanceRng rng(5, 21, 0);
  for (int trial = 0; trial < 50; ++trial) {
    FieldSpec f = trial % 2 ? kQ : FieldSpec::prime(5);
    Matrix a = random_matrix(rng, f, 3, 3);
    Matrix b = random_matrix(rng, f, 3, 3);
    CHECK(compose(LinearRelation::from_operator(a), LinearRelation::from_operator(b)) ==
          LinearRelation::from_operator(a * b));
  }
}

TEST_CASE("compose moves rectangles the way the calculus says") {
  FieldSpec f = kQ;
  LinearRelation swap = LinearRelation::from_operator(mat(f, 2, 2, {0, 1, 1, 0}));
  Subspace zero = Subspace::zero(f, 2);
  LinearRelation in = LinearRelation::rect(zero, span1(f, {1, 0}));
  LinearRelation out = LinearRelation::rect(zero, span1(f, {0, 1}));
  CHECK(compose(swap, in) == out);
  CHECK(compose(LinearRelation::identity(f, 2), swap) == swap);
}

TEST_CASE("inverse swaps the parts") {
  LinearRelation t = LinearRelation::from_operator(mat(kQ, 2, 2, {0, 1, 0, 0}));
  LinearRelation ti = inverse(t);
  CHECK(parts(ti).dom == span1(kQ, {1, 0}));
  CHECK(parts(ti).mul == span1(kQ, {1, 0}));
  CHECK(inverse(ti) == t);
  CHECK(inverse(LinearRelation::identity(kQ, 2)) == LinearRelation::identity(kQ, 2));
}

TEST_CASE("pointwise sum matches matrix addition and kills mismatched domains") {
  InstanceRng rng(6, 22, 0);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = random_matrix(rng, kQ, 3, 3);
    Matrix b = random_matrix(rng, kQ, 3, 3);
    CHECK(pointwise_sum(LinearRelation::from_operator(a),
                        LinearRelation::from_operator(b)) ==
          LinearRelation::from_operator(a + b));
    CHECK(pointwise_diff(LinearRelation::from_operator(a),
                         LinearRelation::from_operator(b)) ==
          LinearRelation::from_operator(a - b));
  }

  LinearRelation t = LinearRelation::from_operator(mat(kQ, 2, 2, {1, 0, 0, 1}));
  LinearRelation r =
      LinearRelation::rect(Subspace::zero(kQ, 2), span1(kQ, {1, 0}));
  CHECK(parts(pointwise_sum(t, r)).dom.is_zero());
  LinearRelation zero_op = LinearRelation::from_operator(Matrix(kQ, 2, 2));
  CHECK(pointwise_sum(t, zero_op) == t);
}

TEST_CASE("subspace sum of graphs and its direct variant") {
  LinearRelation t = LinearRelation::identity(kQ, 1);
  CHECK(subspace_sum(t, t) == t);
  LinearRelation r = LinearRelation::rect(Subspace::zero(kQ, 1), Subspace::full(kQ, 1));
  LinearRelation full(1, 1, Subspace::full(kQ, 2));
  CHECK(subspace_sum(t, r) == full);
  CHECK(subspace_sum_direct(t, r).has_value());
  CHECK(!subspace_sum_direct(t, t).has_value());
  CHECK(subspace_sum_direct(LinearRelation::zero_relation(kQ, 1, 1),
                            LinearRelation::zero_relation(kQ, 1, 1))
            .has_value());
}

TEST_CASE("image and preimage") {
  LinearRelation t = LinearRelation::from_operator(mat(kQ, 2, 2, {1, 0, 0, 0}));
  CHECK(image(t, Subspace::zero(kQ, 2)) == parts(t).mul);
  LinearRelation swap = LinearRelation::from_operator(mat(kQ, 2, 2, {0, 1, 1, 0}));
  CHECK(image(swap, span1(kQ, {1, 0})) == span1(kQ, {0, 1}));
  CHECK(preimage(t, span1(kQ, {1, 0})).is_full());
  LinearRelation anyrel(2, 2, Subspace::span(kQ, 4, {vec(kQ, {0, 1, 1, 0})}));
  CHECK(image(anyrel, Subspace::zero(kQ, 2)) == parts(anyrel).mul);
}

TEST_CASE("equalizer") {
  LinearRelation id = LinearRelation::identity(kQ, 2);
  LinearRelation diag = LinearRelation::from_operator(mat(kQ, 2, 2, {1, 0, 0, 0}));
  auto eq = equalizer(id, diag);
  REQUIRE(eq.has_value());
  CHECK(*eq == span1(kQ, {1, 0}));

  LinearRelation t(2, 2, Subspace::span(kQ, 4, {vec(kQ, {1, 1, 0, 1})}));
  auto self = equalizer(t, t);
  REQUIRE(self.has_value());
  CHECK(*self == parts(t).dom);

  LinearRelation zero_op = LinearRelation::from_operator(Matrix(kQ, 2, 2));
  LinearRelation mulrel =
      LinearRelation::rect(Subspace::zero(kQ, 2), span1(kQ, {1, 0}));
  CHECK(!equalizer(zero_op, mulrel).has_value());
}

TEST_CASE("constructors agree with their defining spans") {
  CHECK(LinearRelation::rect(Subspace::zero(kQ, 2), Subspace::zero(kQ, 2)) ==
        LinearRelation::zero_relation(kQ, 2, 2));
  CHECK(LinearRelation::from_operator(Matrix::identity(kQ, 2)) ==
        LinearRelation::identity(kQ, 2));
  LinearRelation r = LinearRelation::rect(span1(kQ, {1, 0}), span1(kQ, {0, 1}));
  RelationParts p = parts(r);
  CHECK(p.dom == span1(kQ, {1, 0}));
  CHECK(p.ran == span1(kQ, {0, 1}));
  CHECK(p.ker == span1(kQ, {1, 0}));
  CHECK(p.mul == span1(kQ, {0, 1}));
}

TEST_CASE("operator predicates") {
  CHECK(is_operator(LinearRelation::from_operator(mat(kQ, 2, 2, {1, 2, 3, 4}))));
  CHECK(!is_operator(
      LinearRelation::rect(Subspace::zero(kQ, 2), span1(kQ, {1, 0}))));
  CHECK(is_everywhere_defined(LinearRelation::identity(kQ, 2)));
  CHECK(!is_everywhere_defined(LinearRelation::zero_relation(kQ, 2, 2)));
}

TEST_CASE("membership and pointwise application") {
  LinearRelation t = LinearRelation::from_operator(mat(kQ, 2, 2, {0, 1, 1, 0}));
  CHECK(member(t, vec(kQ, {1, 0}), vec(kQ, {0, 1})));
  CHECK(!member(t, vec(kQ, {1, 0}), vec(kQ, {1, 0})));
  auto y = apply_representative(t, vec(kQ, {2, 3}));
  REQUIRE(y.has_value());
  CHECK(*y == vec(kQ, {3, 2}));
  CHECK(!apply_representative(LinearRelation::zero_relation(kQ, 2, 2),
                              vec(kQ, {1, 0}))
             .has_value());
}

TEST_CASE("parts always satisfy ker ⊆ dom and mul ⊆ ran") {
  InstanceRng rng(47, 23, 0);
  for (int trial = 0; trial < 80; ++trial) {
    FieldSpec f = trial % 2 ? kQ : FieldSpec::prime(2);
    RelationParts p = parts(random_relation(rng, f, 3));
    CHECK(contains(p.dom, p.ker));
    CHECK(contains(p.ran, p.mul));
  }
}

TEST_CASE("zero-dimensional ambient spaces are legal") {
  LinearRelation t = LinearRelation::zero_relation(kQ, 0, 2);
  RelationParts p = parts(t);
  CHECK(p.dom.ambient_dim() == 0);
  CHECK(p.mul.is_zero());
  LinearRelation id0 = LinearRelation::identity(kQ, 0);
  CHECK(compose(id0, id0) == id0);
  CHECK(inverse(t).dom_dim() == 2);
  CHECK(compose(t, inverse(t)).dom_dim() == 2);
  CHECK(subspace_sum(t, t) == t);
}

TEST_CASE("dimension mismatches throw") {
  LinearRelation a = LinearRelation::identity(kQ, 2);
  LinearRelation b = LinearRelation::identity(kQ, 3);
  CHECK_THROWS_AS(compose(a, b), Error);
  CHECK_THROWS_AS(pointwise_sum(a, b), Error);
  CHECK_THROWS_AS(subspace_sum(a, b), Error);
  CHECK_THROWS_AS(image(a, Subspace::zero(kQ, 3)), Error);
}
