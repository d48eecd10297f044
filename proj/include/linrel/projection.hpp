#pragma once

#include "linrel/relation.hpp"

namespace linrel {

// Classification flags for an endorelation. A multivalued projection is an
// idempotent with ran ⊆ dom; a projection is a single-valued one.
struct Kind {
  bool is_operator = false;
  bool is_everywhere_defined = false;
  bool is_idempotent = false;        // t∘t = t
  bool is_super_idempotent = false;  // t ⊆ t∘t
  bool is_multivalued_projection = false;
  bool is_projection = false;
};

Kind classify(const LinearRelation& t);

// The unique multivalued projection with range m and kernel n: its graph is
// spanned by {(x,x) : x in m} and {(y,0) : y in n}. dom = m+n, mul = m∩n.
LinearRelation mp(const Subspace& m, const Subspace& n);

// mp(s, n) with the single-valuedness precondition s ∩ n = 0 checked.
LinearRelation projection_onto(const Subspace& s, const Subspace& n);

// q = mp(ran q ∩ dom q, ker q) +̂ ({0} x mul q), for idempotent q.
struct IdempotentDecomposition {
  LinearRelation core;  // a multivalued projection
  Subspace mul_part;
};
IdempotentDecomposition canonical_idempotent_decomposition(const LinearRelation& q);

// An operator t0 ⊆ t with t = t0 ∔̂ ({0} x mul t) and dom t0 = dom t,
// built as q∘t for the projection q with dom q = ran t, ker q = mul t,
// ran q = the chosen complement of mul t inside ran t.
struct SelectionWitness {
  LinearRelation selection;
  Subspace complement_used;
  Subspace mul_part;
};
SelectionWitness linear_selection(const LinearRelation& t,
                                  const std::optional<Subspace>& s = std::nullopt);

// t = p0 ∔̂ ({0} x mul t) with p0 a projection; defined for every
// super-idempotent t. Also reports, for this decomposition pair, the two
// sharper membership conditions: t is a multivalued projection iff
// mul t ⊆ ker p0, and t is idempotent iff
// mul t ∩ dom p0 = ker p0 ∩ (ran p0 + mul t).
struct SelectionFormDecomposition {
  LinearRelation p0;
  Subspace mul_part;
  bool idempotent_condition = false;
  bool mp_condition = false;
};
SelectionFormDecomposition selection_form_decomposition(const LinearRelation& t);

// Every relation factors as (multivalued projection) ∘ (operator).
struct MpOperatorFactorization {
  LinearRelation mp_factor;
  LinearRelation operator_factor;
};
MpOperatorFactorization mp_times_operator(const LinearRelation& t);

// For commuting multivalued projections p, q the product is again one:
// p∘q = mp(ran p ∩ ran q, ker q + ran q ∩ ker p). Checked and returned.
LinearRelation commuting_mp_product(const LinearRelation& p, const LinearRelation& q);

// Fixed set {x : (x,x) in t}, i.e. dom(t ∩ identity).
Subspace fixed_points(const LinearRelation& t);

}  // namespace linrel
