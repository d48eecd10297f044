#include "linrel/factorization.hpp"

#include "linrel/error.hpp"

namespace linrel {

std::string to_string(FactorizationMode mode) {
  switch (mode) {
    case FactorizationMode::DouglasOperator: return "douglas-operator";
    case FactorizationMode::DouglasRelation: return "douglas";
    case FactorizationMode::RightProjection: return "right-proj";
    case FactorizationMode::LeftProjection: return "left-proj";
  }
  return "?";
}

FactorizationWitness make_witness(FactorizationMode mode,
                                  std::vector<LinearRelation> factors,
                                  const LinearRelation& target) {
  require(!factors.empty(), "witness needs at least one factor");
  LinearRelation recomposition = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;)
    recomposition = compose(factors[i], recomposition);
  internal_check(recomposition == target, "witness recomposition equals target");
  return FactorizationWitness{mode, std::move(factors), std::move(recomposition)};
}

namespace {

const char kRanCondition[] = "ran R ⊄ ran S";
const char kMulCondition[] = "mul R ≠ mul S";

void check_common_codomain(const LinearRelation& r, const LinearRelation& s,
                           const char* what) {
  require(r.codom_dim() == s.codom_dim() && r.field() == s.field(), what);
}

}  // namespace

LinearRelation douglas_operator(const LinearRelation& r, const LinearRelation& s) {
  check_common_codomain(r, s, "douglas_operator needs a common codomain");
  require(is_operator(r) && is_operator(s), "douglas_operator needs operators");
  RelationParts pr = parts(r), ps = parts(s);
  if (!contains(ps.ran, pr.ran))
    throw CriterionError(kRanCondition, "no solution exists");
  Subspace n = complement_within(ps.ker, ps.dom);
  // {(x,z) : z in n, s(z) = r(x)} = s^-1 r restricted to X x n.
  LinearRelation t = graph_intersect(
      compose(inverse(s), r),
      LinearRelation::rect(Subspace::full(r.field(), r.dom_dim()), n));
  internal_check(is_operator(t), "douglas operator solution is single-valued");
  internal_check(compose(s, t) == r, "douglas operator recomposition");
  return t;
}

LinearRelation douglas_relation(const LinearRelation& r, const LinearRelation& s) {
  check_common_codomain(r, s, "douglas_relation needs a common codomain");
  RelationParts pr = parts(r), ps = parts(s);
  if (!contains(ps.ran, pr.ran))
    throw CriterionError(kRanCondition, "no operator solution exists");
  if (!(pr.mul == ps.mul))
    throw CriterionError(kMulCondition, "no operator solution exists");
  // t = s^-1 r solves s∘t = r with dom t = dom r; it is then cut down to an
  // operator by the projection q onto a complement of mul t ∩ dom s.
  LinearRelation t = compose(inverse(s), r);
  internal_check(compose(s, t) == r, "relation solution recomposition");
  RelationParts pt = parts(t);
  Subspace ker_q = intersect(pt.mul, ps.dom);
  Subspace dom_q = intersect(pt.ran, ps.dom);
  LinearRelation q = projection_onto(complement_within(ker_q, dom_q), ker_q);
  LinearRelation t0 = compose(q, t);
  internal_check(is_operator(t0), "douglas relation solution is single-valued");
  internal_check(compose(s, t0) == r, "douglas relation recomposition");
  return t0;
}

CoordinatedSelections coordinated_selections(const LinearRelation& r,
                                             const LinearRelation& s) {
  check_common_codomain(r, s, "coordinated selections need a common codomain");
  RelationParts pr = parts(r), ps = parts(s);
  require(contains(ps.ran, pr.ran) && pr.mul == ps.mul,
          "coordinated selections need ran R ⊆ ran S and mul R = mul S");
  Subspace s1 = complement_within(pr.mul, pr.ran);
  Subspace t1 = complement_within(sum(s1, ps.mul), ps.ran);
  LinearRelation r0 = linear_selection(r, s1).selection;
  LinearRelation s0 = linear_selection(s, sum(s1, t1)).selection;
  internal_check(contains(parts(s0).ran, parts(r0).ran),
                 "coordinated selections have nested ranges");
  return CoordinatedSelections{r0, s0, s1, t1};
}

std::optional<RightProjectionFactorization> right_projection_factor(
    const LinearRelation& r, const LinearRelation& s, std::string* why) {
  require(r.is_endo() && s.is_endo(), "right projection factor needs endorelations");
  check_common_codomain(r, s, "right projection factor dimension mismatch");
  require(r.dom_dim() == s.dom_dim(), "right projection factor dimension mismatch");
  auto eq = equalizer(r, s);
  if (!eq) {
    if (why) *why = kMulCondition;
    return std::nullopt;
  }
  RelationParts pr = parts(r);
  if (!(sum(*eq, pr.ker) == pr.dom)) {
    if (why) *why = "dom R ≠ {x: S(x)=R(x)} + ker R";
    return std::nullopt;
  }
  // The criterion forces ran R ⊆ ran S, so coordinated selections exist and
  // the equalizer is the kernel of their difference.
  CoordinatedSelections cs = coordinated_selections(r, s);
  internal_check(parts(pointwise_diff(cs.s0, cs.r0)).ker == *eq,
                 "equalizer equals ker(S0 - R0)");
  Subspace s_ran = complement_within(intersect(*eq, pr.ker), *eq);
  LinearRelation q = projection_onto(s_ran, pr.ker);
  internal_check(compose(s, q) == r, "right projection recomposition");
  internal_check(classify(q).is_projection, "right factor is a projection");
  return RightProjectionFactorization{q, std::move(cs)};
}

std::optional<LinearRelation> left_projection_factor_operators(
    const LinearRelation& r, const LinearRelation& s, std::string* why) {
  require(r.is_endo() && s.is_endo() && r.dom_dim() == s.dom_dim() &&
              r.field() == s.field(),
          "left projection factor needs endorelations on one space");
  require(is_operator(r) && is_operator(s),
          "left_projection_factor_operators needs operators");
  LinearRelation d = pointwise_diff(s, r);
  RelationParts pd = parts(d), pr = parts(r);
  if (!intersect(pd.ran, pr.ran).is_zero()) {
    if (why) *why = "ran(S−R) ∩ ran R ≠ {0}";
    return std::nullopt;
  }
  if (!(preimage(s, sum(pr.ran, pd.ran)) == pr.dom)) {
    if (why) *why = "dom R ≠ S⁻¹(ran R ∔ ran(S−R))";
    return std::nullopt;
  }
  LinearRelation q1 = projection_onto(pr.ran, pd.ran);
  internal_check(compose(q1, s) == r, "left projection recomposition");
  return q1;
}

bool left_projection_verify(const LinearRelation& r, const LinearRelation& s,
                            const LinearRelation& q) {
  require(classify(q).is_projection, "verifier needs a projection");
  return compose(q, s) == r && image(q, parts(s).mul) == parts(r).mul;
}

LeftProjectionSelections left_projection_witness_transform(const LinearRelation& r,
                                                           const LinearRelation& s,
                                                           const LinearRelation& q) {
  require(left_projection_verify(r, s, q), "witness does not verify");
  RelationParts ps = parts(s), pq = parts(q);
  // Pick the complement behind s0 inside dom q: values of s over dom r can
  // be shifted into dom q modulo mul s, so a complement built from
  // dom q ∩ (s(dom r) + mul s) keeps every s0(x), x in dom r, inside dom q.
  Subspace reachable = image(s, parts(r).dom);
  Subspace v1 = intersect(pq.dom, sum(reachable, ps.mul));
  Subspace s_low = complement_within(intersect(v1, ps.mul), v1);
  Subspace s_ext = complement_within(sum(s_low, ps.mul), ps.ran);
  Subspace complement = sum(s_low, s_ext);
  LinearRelation s0 = linear_selection(s, complement).selection;
  LinearRelation r0 = compose(q, s0);
  internal_check(is_operator(r0), "transformed factor is single-valued");
  internal_check(parts(r0).dom == parts(r).dom, "transformed factor keeps dom r");
  LinearRelation zero_times_mul = LinearRelation::rect(
      Subspace::zero(r.field(), r.dom_dim()), parts(r).mul);
  internal_check(subspace_sum(r0, zero_times_mul) == r,
                 "transformed factor is a selection of r");
  return LeftProjectionSelections{r0, s0};
}

std::optional<LinearRelation> left_projection_factor_heuristic(
    const LinearRelation& r, const LinearRelation& s, std::string* why) {
  require(r.is_endo() && s.is_endo() && r.dom_dim() == s.dom_dim() &&
              r.field() == s.field(),
          "left projection factor needs endorelations on one space");
  LinearRelation r0 = linear_selection(r).selection;
  LinearRelation s0 = linear_selection(s).selection;
  auto q = left_projection_factor_operators(r0, s0, why);
  if (!q) return std::nullopt;
  if (!left_projection_verify(r, s, *q)) {
    if (why) *why = "operator-level factor does not verify on the relations";
    return std::nullopt;
  }
  return q;
}

}  // namespace linrel
