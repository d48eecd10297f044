#include <doctest.h>

#include "linrel/generators.hpp"
#include "linrel/matrix.hpp"

using namespace linrel;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Matrix make(const FieldSpec& f, std::size_t rows, std::size_t cols,
            std::initializer_list<long long> entries) {
  Matrix m(f, rows, cols);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, *it++);
  return m;
}

}  // namespace

TEST_CASE("column echelon collapses dependent columns") {
  Matrix m = make(kQ, 2, 2, {1, 2, 1, 2});
  EchelonResult e = column_echelon(m);
  CHECK(e.rank == 1);
  CHECK(e.canonical == make(kQ, 2, 1, {1, 1}));
  CHECK(e.pivot_rows == std::vector<std::size_t>{0});
}

TEST_CASE("column echelon fixes the identity and scales pivots to one") {
  Matrix id = Matrix::identity(kQ, 2);
  CHECK(column_echelon(id).canonical == id);
  CHECK(column_echelon(id).rank == 2);
  // [[2,0],[0,3]] spans the same columns as the identity.
  CHECK(column_echelon(make(kQ, 2, 2, {2, 0, 0, 3})).canonical == id);
}

TEST_CASE("column echelon is idempotent on random matrices") {
  InstanceRng rng(7, 2, 0);
  for (int trial = 0; trial < 60; ++trial) {
    FieldSpec f = trial % 2 ? kQ : FieldSpec::prime(5);
    Matrix m = random_matrix(rng, f, 1 + trial % 5, 1 + (trial / 2) % 6);
    EchelonResult once = column_echelon(m);
    EchelonResult twice = column_echelon(once.canonical);
    CHECK(once.canonical == twice.canonical);
    CHECK(once.rank == twice.rank);
  }
}

TEST_CASE("nullspace of the identity is empty and of zero is everything") {
  CHECK(nullspace(Matrix::identity(kQ, 2)).cols() == 0);
  Matrix zero23(kQ, 2, 3);
  Matrix basis = nullspace(zero23);
  CHECK(basis == Matrix::identity(kQ, 3));
}

TEST_CASE("nullspace solves x1 + x2 = 0") {
  Matrix m = make(kQ, 1, 2, {1, 1});
  // Canonical form of span{(-1, 1)} has pivot 1: column (1, -1).
  CHECK(nullspace(m) == make(kQ, 2, 1, {1, -1}));
}

TEST_CASE("rank plus nullity equals the column count") {
  InstanceRng rng(11, 3, 0);
  for (int trial = 0; trial < 80; ++trial) {
    FieldSpec f = trial % 2 ? kQ : FieldSpec::prime(3);
    Matrix m = random_matrix(rng, f, 1 + trial % 4, 1 + (trial / 3) % 5);
    CHECK(column_echelon(m).rank + nullspace(m).cols() == m.cols());
    CHECK((m * nullspace(m)).is_zero());
  }
}

TEST_CASE("solve returns an exact witness or nothing") {
  Matrix id = Matrix::identity(kQ, 2);
  Vector b{Scalar::from_int(kQ, 3), Scalar::from_int(kQ, 4)};
  CHECK(*solve(id, b) == b);

  Matrix ones = make(kQ, 2, 1, {1, 1});
  Vector off{Scalar::from_int(kQ, 1), Scalar::from_int(kQ, 2)};
  CHECK(!solve(ones, off).has_value());

  Matrix diag = make(kQ, 2, 2, {2, 0, 0, 1});
  Vector rhs{Scalar::from_int(kQ, 1), Scalar::from_int(kQ, 1)};
  Vector expected{Scalar::rational(1, 2), Scalar::from_int(kQ, 1)};
  CHECK(*solve(diag, rhs) == expected);
}

TEST_CASE("solve witnesses satisfy Ax = b on random systems") {
  InstanceRng rng(13, 4, 0);
  for (int trial = 0; trial < 60; ++trial) {
    FieldSpec f = trial % 2 ? kQ : FieldSpec::prime(7);
    Matrix a = random_matrix(rng, f, 2 + trial % 3, 1 + trial % 4);
    Vector x0 = rng.vector(f, a.cols());
    Vector b = a.apply(x0);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("degenerate shapes stay usable") {
  Matrix empty(kQ, 0, 3);
  CHECK(column_echelon(empty).rank == 0);
  CHECK(nullspace(empty) == Matrix::identity(kQ, 3));
  Matrix tall(kQ, 3, 0);
  CHECK(column_echelon(tall).rank == 0);
  CHECK(nullspace(tall).cols() == 0);
  CHECK(solve(tall, Vector(3, Scalar::zero(kQ))).has_value());
}
