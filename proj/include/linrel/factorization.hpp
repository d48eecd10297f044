#pragma once

#include <string>
#include <vector>

#include "linrel/projection.hpp"

namespace linrel {

enum class FactorizationMode {
  DouglasOperator,
  DouglasRelation,
  RightProjection,
  LeftProjection,
};

std::string to_string(FactorizationMode mode);

// Ordered factors together with their exact recomposition; building one
// checks recomposition == target.
struct FactorizationWitness {
  FactorizationMode mode;
  std::vector<LinearRelation> factors;  // outermost first: target = factors[0] ∘ factors[1] ∘ ...
  LinearRelation recomposition;
};
FactorizationWitness make_witness(FactorizationMode mode,
                                  std::vector<LinearRelation> factors,
                                  const LinearRelation& target);

// Operators r: X->Y, s: Z->Y. Returns the operator t with s∘t = r, defined
// exactly when ran r ⊆ ran s; otherwise throws CriterionError. t maps into
// the deterministic complement of ker s inside dom s.
LinearRelation douglas_operator(const LinearRelation& r, const LinearRelation& s);

// Relations r: X->Y, s: Z->Y. Returns an operator t0 with s∘t0 = r, defined
// exactly when ran r ⊆ ran s and mul r = mul s; otherwise throws
// CriterionError naming the violated condition.
LinearRelation douglas_relation(const LinearRelation& r, const LinearRelation& s);

// Selections r0 ⊆ r, s0 ⊆ s with ran r0 ⊆ ran s0, built from the nested
// complements ran r = s1 ∔ mul r and ran s = t1 ∔ s1 ∔ mul s.
// Requires ran r ⊆ ran s and mul r = mul s.
struct CoordinatedSelections {
  LinearRelation r0;
  LinearRelation s0;
  Subspace s1;
  Subspace t1;
};
CoordinatedSelections coordinated_selections(const LinearRelation& r,
                                             const LinearRelation& s);

// A projection q with s∘q = r, which exists iff mul r = mul s and
// dom r = {x : s(x) = r(x)} + ker r. Failure is a value; `selections` carries
// the coordinated selections used by the construction.
struct RightProjectionFactorization {
  LinearRelation q;
  CoordinatedSelections selections;
};
std::optional<RightProjectionFactorization> right_projection_factor(
    const LinearRelation& r, const LinearRelation& s, std::string* why = nullptr);

// Operators r, s on X. The projection q1 = mp(ran r, ran(s-r)) satisfies
// q1∘s = r iff ran(s-r) ∩ ran r = 0 and dom r = s^-1(ran r ∔ ran(s-r)).
std::optional<LinearRelation> left_projection_factor_operators(
    const LinearRelation& r, const LinearRelation& s, std::string* why = nullptr);

// q∘s = r together with q(mul s) = mul r, for a projection q.
bool left_projection_verify(const LinearRelation& r, const LinearRelation& s,
                            const LinearRelation& q);

// Given a verified q, produces selections s0 of s and r0 = q∘s0 of r. The
// complement behind s0 is chosen inside dom q so that q∘s0 keeps dom r.
struct LeftProjectionSelections {
  LinearRelation r0;
  LinearRelation s0;
};
LeftProjectionSelections left_projection_witness_transform(const LinearRelation& r,
                                                           const LinearRelation& s,
                                                           const LinearRelation& q);

// Best-effort constructor for q with q∘s = r and q(mul s) = mul r: applies
// the operator criterion to canonical selections, then verifies on the full
// relations. Incomplete by design; absence does not refute existence.
std::optional<LinearRelation> left_projection_factor_heuristic(
    const LinearRelation& r, const LinearRelation& s, std::string* why = nullptr);

}  // namespace linrel
