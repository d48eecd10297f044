#include "linrel/projection.hpp"

#include "linrel/error.hpp"

namespace linrel {

Kind classify(const LinearRelation& t) {
  require(t.is_endo(), "classify needs an endorelation");
  RelationParts p = parts(t);
  LinearRelation tt = compose(t, t);
  Kind k;
  k.is_operator = p.mul.is_zero();
  k.is_everywhere_defined = p.dom.is_full();
  k.is_idempotent = (tt == t);
  k.is_super_idempotent = graph_contains(tt, t);
  k.is_multivalued_projection = k.is_idempotent && contains(p.dom, p.ran);
  k.is_projection = k.is_idempotent && k.is_operator;
  return k;
}

LinearRelation mp(const Subspace& m, const Subspace& n) {
  require(m.ambient_dim() == n.ambient_dim() && m.field() == n.field(),
          "mp arguments live in different ambient spaces");
  const std::size_t dim = m.ambient_dim();
  const FieldSpec& f = m.field();
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vector v(2 * dim, Scalar::zero(f));
    for (std::size_t i = 0; i < dim; ++i) v[i] = v[dim + i] = m.basis().at(i, j);
    gens.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < n.dim(); ++j) {
    Vector v(2 * dim, Scalar::zero(f));
    for (std::size_t i = 0; i < dim; ++i) v[i] = n.basis().at(i, j);
    gens.push_back(std::move(v));
  }
  return LinearRelation(dim, dim, Subspace::span(f, 2 * dim, gens));
}

LinearRelation projection_onto(const Subspace& s, const Subspace& n) {
  require(intersect(s, n).is_zero(), "projection needs ran ∩ ker = 0");
  return mp(s, n);
}

IdempotentDecomposition canonical_idempotent_decomposition(const LinearRelation& q) {
  require(classify(q).is_idempotent, "not an idempotent relation");
  RelationParts p = parts(q);
  LinearRelation core = mp(intersect(p.ran, p.dom), p.ker);
  LinearRelation reassembled = subspace_sum(
      core, LinearRelation::rect(Subspace::zero(q.field(), q.dom_dim()), p.mul));
  internal_check(reassembled == q, "idempotent decomposition reassembly");
  return IdempotentDecomposition{core, p.mul};
}

SelectionWitness linear_selection(const LinearRelation& t,
                                  const std::optional<Subspace>& s) {
  RelationParts p = parts(t);
  Subspace complement = s ? *s : complement_within(p.mul, p.ran);
  if (s) {
    require(intersect(complement, p.mul).is_zero() &&
                sum(complement, p.mul) == p.ran,
            "supplied complement does not split ran t over mul t");
  }
  LinearRelation q = mp(complement, p.mul);  // projection on the codomain
  LinearRelation t0 = compose(q, t);
  RelationParts p0 = parts(t0);
  internal_check(p0.mul.is_zero(), "selection is single-valued");
  internal_check(p0.dom == p.dom && p0.ker == p.ker && p0.ran == complement,
                 "selection part identities");
  LinearRelation zero_times_mul =
      LinearRelation::rect(Subspace::zero(t.field(), t.dom_dim()), p.mul);
  internal_check(subspace_sum(t0, zero_times_mul) == t, "selection reassembly");
  return SelectionWitness{t0, complement, p.mul};
}

Subspace fixed_points(const LinearRelation& t) {
  require(t.is_endo(), "fixed points need an endorelation");
  return parts(graph_intersect(t, LinearRelation::identity(t.field(), t.dom_dim())))
      .dom;
}

SelectionFormDecomposition selection_form_decomposition(const LinearRelation& t) {
  require(classify(t).is_super_idempotent, "not a super-idempotent relation");
  RelationParts p = parts(t);
  // Fixed vectors provide the range of a projection selection: dom t splits
  // as s' ∔ ker t with s' inside the fixed set.
  Subspace fixed = fixed_points(t);
  Subspace sprime = complement_within(intersect(fixed, p.ker), fixed);
  LinearRelation p0 = projection_onto(sprime, p.ker);
  internal_check(classify(p0).is_projection, "selection form core is a projection");
  LinearRelation zero_times_mul =
      LinearRelation::rect(Subspace::zero(t.field(), t.dom_dim()), p.mul);
  internal_check(subspace_sum(p0, zero_times_mul) == t,
                 "selection form reassembly");
  RelationParts pp = parts(p0);
  bool idempotent_condition =
      intersect(p.mul, pp.dom) == intersect(pp.ker, sum(pp.ran, p.mul));
  bool mp_condition = contains(pp.ker, p.mul);
  return SelectionFormDecomposition{p0, p.mul, idempotent_condition, mp_condition};
}

MpOperatorFactorization mp_times_operator(const LinearRelation& t) {
  SelectionWitness w = linear_selection(t);
  LinearRelation q = mp(w.complement_used, w.mul_part);
  LinearRelation m = subspace_sum(
      q, LinearRelation::rect(Subspace::zero(t.field(), t.codom_dim()), w.mul_part));
  internal_check(classify(m).is_multivalued_projection,
                 "extended projection is a multivalued projection");
  internal_check(compose(m, w.selection) == t, "mp∘operator recomposition");
  return MpOperatorFactorization{m, w.selection};
}

LinearRelation commuting_mp_product(const LinearRelation& p, const LinearRelation& q) {
  require(classify(p).is_multivalued_projection &&
              classify(q).is_multivalued_projection,
          "commuting_mp_product needs multivalued projections");
  LinearRelation pq = compose(p, q);
  require(pq == compose(q, p), "factors do not commute");
  RelationParts pp = parts(p), pq_parts = parts(q);
  LinearRelation expected =
      mp(intersect(pp.ran, pq_parts.ran),
         sum(pq_parts.ker, intersect(pq_parts.ran, pp.ker)));
  internal_check(pq == expected, "commuting product formula");
  return pq;
}

}  // namespace linrel
