#include "linrel/relation.hpp"

#include "linrel/error.hpp"

namespace linrel {

LinearRelation::LinearRelation(std::size_t dom_dim, std::size_t codom_dim,
                               Subspace graph)
    : dom_dim_(dom_dim), codom_dim_(codom_dim), graph_(std::move(graph)) {
  require(graph_.ambient_dim() == dom_dim_ + codom_dim_,
          "graph ambient dimension differs from dom+codom");
}

LinearRelation LinearRelation::from_operator(const Matrix& a) {
  Matrix stacked = Matrix::vstack(Matrix::identity(a.field(), a.cols()), a);
  return LinearRelation(a.cols(), a.rows(), Subspace::from_columns(stacked));
}

LinearRelation LinearRelation::identity(const FieldSpec& f, std::size_t n) {
  return from_operator(Matrix::identity(f, n));
}

LinearRelation LinearRelation::zero_relation(const FieldSpec& f, std::size_t n,
                                             std::size_t m) {
  return LinearRelation(n, m, Subspace::zero(f, n + m));
}

LinearRelation LinearRelation::rect(const Subspace& n, const Subspace& s) {
  require(n.field() == s.field(), "rect over mixed fields");
  const FieldSpec& f = n.field();
  const std::size_t dn = n.ambient_dim(), dm = s.ambient_dim();
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < n.dim(); ++j) {
    Vector v(dn + dm, Scalar::zero(f));
    for (std::size_t i = 0; i < dn; ++i) v[i] = n.basis().at(i, j);
    gens.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Vector v(dn + dm, Scalar::zero(f));
    for (std::size_t i = 0; i < dm; ++i) v[dn + i] = s.basis().at(i, j);
    gens.push_back(std::move(v));
  }
  return LinearRelation(dn, dm, Subspace::span(f, dn + dm, gens));
}

bool LinearRelation::operator==(const LinearRelation& other) const {
  return dom_dim_ == other.dom_dim_ && codom_dim_ == other.codom_dim_ &&
         graph_ == other.graph_;
}

RelationParts parts(const LinearRelation& t) {
  Matrix a = t.x_block();
  Matrix b = t.y_block();
  return RelationParts{
      Subspace::from_columns(a),
      Subspace::from_columns(b),
      Subspace::from_columns(a * nullspace(b)),
      Subspace::from_columns(b * nullspace(a)),
  };
}

LinearRelation compose(const LinearRelation& r, const LinearRelation& t) {
  require(t.codom_dim() == r.dom_dim() && t.field() == r.field(),
          "composition dimension mismatch");
  Matrix a = t.x_block(), b = t.y_block();
  Matrix c = r.x_block(), d = r.y_block();
  // Pairs (u; v) with B u = C v give graph vectors (A u, D v).
  Matrix k = nullspace(Matrix::hstack(b, c.negated()));
  Matrix u = k.row_slice(0, a.cols());
  Matrix v = k.row_slice(a.cols(), c.cols());
  Matrix graph = Matrix::vstack(a * u, d * v);
  return LinearRelation(t.dom_dim(), r.codom_dim(), Subspace::from_columns(graph));
}

LinearRelation inverse(const LinearRelation& t) {
  Matrix swapped = Matrix::vstack(t.y_block(), t.x_block());
  return LinearRelation(t.codom_dim(), t.dom_dim(), Subspace::from_columns(swapped));
}

namespace {
void check_same_shape(const LinearRelation& t, const LinearRelation& s) {
  require(t.dom_dim() == s.dom_dim() && t.codom_dim() == s.codom_dim() &&
              t.field() == s.field(),
          "relation dimension mismatch");
}
}  // namespace

LinearRelation pointwise_sum(const LinearRelation& t, const LinearRelation& s) {
  check_same_shape(t, s);
  Matrix at = t.x_block(), bt = t.y_block();
  Matrix as = s.x_block(), bs = s.y_block();
  Matrix k = nullspace(Matrix::hstack(at, as.negated()));
  Matrix u = k.row_slice(0, at.cols());
  Matrix v = k.row_slice(at.cols(), as.cols());
  Matrix graph = Matrix::vstack(at * u, bt * u + bs * v);
  return LinearRelation(t.dom_dim(), t.codom_dim(), Subspace::from_columns(graph));
}

LinearRelation pointwise_diff(const LinearRelation& t, const LinearRelation& s) {
  check_same_shape(t, s);
  LinearRelation neg(s.dom_dim(), s.codom_dim(),
                     Subspace::from_columns(
                         Matrix::vstack(s.x_block(), s.y_block().negated())));
  return pointwise_sum(t, neg);
}

LinearRelation subspace_sum(const LinearRelation& t, const LinearRelation& s) {
  check_same_shape(t, s);
  return LinearRelation(t.dom_dim(), t.codom_dim(), sum(t.graph(), s.graph()));
}

std::optional<LinearRelation> subspace_sum_direct(const LinearRelation& t,
                                                  const LinearRelation& s) {
  check_same_shape(t, s);
  if (!intersect(t.graph(), s.graph()).is_zero()) return std::nullopt;
  return subspace_sum(t, s);
}

LinearRelation graph_intersect(const LinearRelation& t, const LinearRelation& s) {
  check_same_shape(t, s);
  return LinearRelation(t.dom_dim(), t.codom_dim(), intersect(t.graph(), s.graph()));
}

bool graph_contains(const LinearRelation& t, const LinearRelation& s) {
  check_same_shape(t, s);
  return contains(t.graph(), s.graph());
}

Subspace image(const LinearRelation& t, const Subspace& n) {
  require(n.ambient_dim() == t.dom_dim() && n.field() == t.field(),
          "image argument dimension mismatch");
  // ran(t ∘ embed(n)) where embed(n) = {(x,x) : x in n}.
  Matrix diag = Matrix::vstack(n.basis(), n.basis());
  LinearRelation embed(n.ambient_dim(), n.ambient_dim(),
                       Subspace::from_columns(diag));
  return parts(compose(t, embed)).ran;
}

Subspace preimage(const LinearRelation& t, const Subspace& w) {
  return image(inverse(t), w);
}

std::optional<Subspace> equalizer(const LinearRelation& r, const LinearRelation& s) {
  check_same_shape(r, s);
  if (!(parts(r).mul == parts(s).mul)) return std::nullopt;
  return parts(graph_intersect(r, s)).dom;
}

bool is_operator(const LinearRelation& t) { return parts(t).mul.is_zero(); }

bool is_everywhere_defined(const LinearRelation& t) {
  return parts(t).dom.is_full();
}

std::optional<Vector> apply_representative(const LinearRelation& t, const Vector& x) {
  require(x.size() == t.dom_dim(), "point dimension mismatch");
  auto u = solve(t.x_block(), x);
  if (!u) return std::nullopt;
  return t.y_block().apply(*u);
}

bool member(const LinearRelation& t, const Vector& x, const Vector& y) {
  require(x.size() == t.dom_dim() && y.size() == t.codom_dim(),
          "point dimension mismatch");
  Vector stacked = x;
  stacked.insert(stacked.end(), y.begin(), y.end());
  return t.graph().contains_vector(stacked);
}

}  // namespace linrel
