#pragma once

#include <utility>

#include "linrel/factorization.hpp"

namespace linrel {

// Product of a multivalued projection and a projection realizing a given
// relation: product = p∘q0 with ran p = ran product, mul p = mul product,
// dom q0 = dom product and ker q0 = ker product. Built checked.
struct Mp2Witness {
  LinearRelation p;
  LinearRelation q0;
  LinearRelation product;
};
Mp2Witness make_mp2_witness(const LinearRelation& p, const LinearRelation& q0,
                            const LinearRelation& product);

// For multivalued projections e, f: multivalued projections (p, q) with
// p∘q = e∘f, ran p = ran(ef), mul p = mul(ef), dom q = dom(ef),
// ker q = ker(ef).
std::pair<LinearRelation, LinearRelation> normalize_mp2(const LinearRelation& e,
                                                        const LinearRelation& f);

// Same product rewritten with a projection on the right.
Mp2Witness mp_times_projection(const LinearRelation& e, const LinearRelation& f);

// Certificate test: for s with s ∩ ran t = mul t, t factors through
// mp(ran t, s) iff dom t = {x : t(x) = mp(ran t, s)(x)} + ker t.
std::optional<Mp2Witness> mp2_certificate_check(const LinearRelation& t,
                                                const Subspace& s);

// Heuristic certificate search for fields without enumeration: tries, in
// order, mul t + (complement of ran t), ker t + mul t when well-formed, and
// mul t. Incomplete; absence does not refute membership.
std::optional<Mp2Witness> mp2_certificate_search(const LinearRelation& t);

enum class OracleExecution { Serial, Parallel };

// Exhaustive oracle over small prime fields: the first pair (e, f) of
// multivalued projections, in enumeration order, with e∘f = t.
std::optional<std::pair<LinearRelation, LinearRelation>> mp2_membership_bruteforce(
    const LinearRelation& t, OracleExecution exec = OracleExecution::Serial);

// product = p0∘q0 ∔̂ ({0} x s) with p0, q0 projections and s ⊆ ker p0.
struct Mp2SelectionForm {
  LinearRelation p0;
  LinearRelation q0;
  Subspace s;
};
Mp2SelectionForm selection_form(const Mp2Witness& witness);

// A square matrix is a product of k idempotent matrices iff
// rank(I - A) <= k * dim ker A.
bool ballantine_check(const Matrix& a, std::size_t k);

// Necessary for membership in the products of two multivalued projections:
// dim ran(t - I) <= 2 dim ker t + dim mul t.
bool mp2_necessary(const LinearRelation& t);

}  // namespace linrel
