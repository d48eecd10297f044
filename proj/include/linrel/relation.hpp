#pragma once

#include <optional>

#include "linrel/subspace.hpp"

namespace linrel {

// A linear relation X -> Y: a subspace of K^(n+m) whose first n coordinates
// are the X-component and last m the Y-component. Canonical graphs make
// relation equality structural.
class LinearRelation {
 public:
  LinearRelation(std::size_t dom_dim, std::size_t codom_dim, Subspace graph);

  static LinearRelation from_operator(const Matrix& a);  // a is m x n
  static LinearRelation identity(const FieldSpec& f, std::size_t n);
  static LinearRelation zero_relation(const FieldSpec& f, std::size_t n,
                                      std::size_t m);
  // The rectangle N x S.
  static LinearRelation rect(const Subspace& n, const Subspace& s);

  std::size_t dom_dim() const { return dom_dim_; }
  std::size_t codom_dim() const { return codom_dim_; }
  const Subspace& graph() const { return graph_; }
  const FieldSpec& field() const { return graph_.field(); }
  bool is_endo() const { return dom_dim_ == codom_dim_; }

  // Generator blocks: graph basis split into X and Y rows.
  Matrix x_block() const { return graph_.basis().row_slice(0, dom_dim_); }
  Matrix y_block() const { return graph_.basis().row_slice(dom_dim_, codom_dim_); }

  bool operator==(const LinearRelation& other) const;

 private:
  std::size_t dom_dim_ = 0;
  std::size_t codom_dim_ = 0;
  Subspace graph_;
};

struct RelationParts {
  Subspace dom;  // in X
  Subspace ran;  // in Y
  Subspace ker;  // in X
  Subspace mul;  // in Y; the multivalued part T(0)
};

RelationParts parts(const LinearRelation& t);

// r t: apply t, then r.
LinearRelation compose(const LinearRelation& r, const LinearRelation& t);
LinearRelation inverse(const LinearRelation& t);

// {(x, y+z) : (x,y) in t, (x,z) in s}; the domain is dom t ∩ dom s.
LinearRelation pointwise_sum(const LinearRelation& t, const LinearRelation& s);
LinearRelation pointwise_diff(const LinearRelation& t, const LinearRelation& s);

// Sum of graphs as subspaces (t +̂ s), and its direct variant which is
// absent when the graphs overlap nontrivially.
LinearRelation subspace_sum(const LinearRelation& t, const LinearRelation& s);
std::optional<LinearRelation> subspace_sum_direct(const LinearRelation& t,
                                                  const LinearRelation& s);

LinearRelation graph_intersect(const LinearRelation& t, const LinearRelation& s);
// Whether s ⊆ t as graphs.
bool graph_contains(const LinearRelation& t, const LinearRelation& s);

// t(n) = {y : (x,y) in t for some x in n}.
Subspace image(const LinearRelation& t, const Subspace& n);
Subspace preimage(const LinearRelation& t, const Subspace& w);

// {x : r(x) = s(x)} as sets of cosets; absent when mul r != mul s (no x can
// have equal cosets then). Otherwise dom(r ∩ s).
std::optional<Subspace> equalizer(const LinearRelation& r, const LinearRelation& s);

bool is_operator(const LinearRelation& t);
bool is_everywhere_defined(const LinearRelation& t);

// Some y with (x,y) in t; the full value set is y + mul t.
std::optional<Vector> apply_representative(const LinearRelation& t, const Vector& x);
bool member(const LinearRelation& t, const Vector& x, const Vector& y);

}  // namespace linrel
