#include "linrel/mp2.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linrel/error.hpp"

namespace linrel {

Mp2Witness make_mp2_witness(const LinearRelation& p, const LinearRelation& q0,
                            const LinearRelation& product) {
  RelationParts pp = parts(p), pq = parts(q0), pt = parts(product);
  internal_check(compose(p, q0) == product, "mp2 witness recomposition");
  internal_check(pp.ran == pt.ran && pp.mul == pt.mul, "mp2 witness left parts");
  internal_check(pq.dom == pt.dom && pq.ker == pt.ker, "mp2 witness right parts");
  return Mp2Witness{p, q0, product};
}

namespace {
void check_mps(const LinearRelation& e, const LinearRelation& f) {
  require(e.is_endo() && f.is_endo() && e.dom_dim() == f.dom_dim() &&
              e.field() == f.field(),
          "factors must be endorelations on one space");
  require(classify(e).is_multivalued_projection &&
              classify(f).is_multivalued_projection,
          "factors must be multivalued projections");
}
}  // namespace

std::pair<LinearRelation, LinearRelation> normalize_mp2(const LinearRelation& e,
                                                        const LinearRelation& f) {
  check_mps(e, f);
  LinearRelation t = compose(e, f);
  RelationParts pt = parts(t), pe = parts(e), pf = parts(f);
  LinearRelation p = mp(pt.ran, sum(pe.ker, pt.mul));
  LinearRelation q = mp(intersect(pf.ran, pt.dom), pt.ker);
  internal_check(compose(p, q) == t, "normalized product recomposition");
  internal_check(parts(p).mul == pt.mul, "normalized left factor mul");
  internal_check(parts(q).dom == pt.dom, "normalized right factor dom");
  return {p, q};
}

Mp2Witness mp_times_projection(const LinearRelation& e, const LinearRelation& f) {
  auto [p, q] = normalize_mp2(e, f);
  LinearRelation t = compose(e, f);
  RelationParts pp = parts(p), pq = parts(q);
  Subspace ker_g = intersect(pq.mul, pp.dom);
  Subspace dom_g = intersect(pq.ran, pp.dom);
  LinearRelation g = projection_onto(complement_within(ker_g, dom_g), ker_g);
  LinearRelation q0 = compose(g, q);
  internal_check(classify(q0).is_projection, "inner factor is a projection");
  return make_mp2_witness(p, q0, t);
}

std::optional<Mp2Witness> mp2_certificate_check(const LinearRelation& t,
                                                const Subspace& s) {
  require(t.is_endo(), "certificate check needs an endorelation");
  RelationParts pt = parts(t);
  require(intersect(s, pt.ran) == pt.mul,
          "malformed certificate: S ∩ ran T ≠ mul T");
  LinearRelation p = mp(pt.ran, s);
  auto rp = right_projection_factor(t, p);
  if (!rp) return std::nullopt;
  return make_mp2_witness(p, rp->q, t);
}

std::optional<Mp2Witness> mp2_certificate_search(const LinearRelation& t) {
  require(t.is_endo(), "certificate search needs an endorelation");
  RelationParts pt = parts(t);
  Subspace full = Subspace::full(t.field(), t.dom_dim());
  std::vector<Subspace> candidates = {
      sum(pt.mul, complement_within(pt.ran, full)),
      sum(pt.ker, pt.mul),
      pt.mul,
  };
  for (const Subspace& s : candidates) {
    if (!(intersect(s, pt.ran) == pt.mul)) continue;
    if (auto w = mp2_certificate_check(t, s)) return w;
  }
  return std::nullopt;
}

std::optional<std::pair<LinearRelation, LinearRelation>> mp2_membership_bruteforce(
    const LinearRelation& t, OracleExecution exec) {
  require(t.is_endo(), "oracle needs an endorelation");
  require(t.field().is_prime_field(), "oracle needs a prime field");
  require(t.dom_dim() <= 3, "oracle guard: ambient dimension ≤ 3");
  std::vector<Subspace> subs = enumerate_subspaces(t.field(), t.dom_dim());
  std::vector<LinearRelation> mps;
  mps.reserve(subs.size() * subs.size());
  for (const Subspace& m : subs)
    for (const Subspace& n : subs) mps.push_back(mp(m, n));

  const std::size_t count = mps.size() * mps.size();
  std::size_t found = count;  // sentinel: nothing found yet

  if (exec == OracleExecution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : found)
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (compose(mps[idx / mps.size()], mps[idx % mps.size()]) == t)
        found = found < idx ? found : idx;
    }
#else
    exec = OracleExecution::Serial;
#endif
  }
  if (exec == OracleExecution::Serial) {
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (compose(mps[idx / mps.size()], mps[idx % mps.size()]) == t) {
        found = idx;
        break;
      }
    }
  }
  if (found == count) return std::nullopt;
  return std::make_pair(mps[found / mps.size()], mps[found % mps.size()]);
}

Mp2SelectionForm selection_form(const Mp2Witness& witness) {
  SelectionFormDecomposition sfd = selection_form_decomposition(witness.p);
  internal_check(sfd.mp_condition, "mul part sits inside ker p0");
  RelationParts pt = parts(witness.product);
  internal_check(sfd.mul_part == pt.mul, "selection form mul part");
  LinearRelation zero_times_mul = LinearRelation::rect(
      Subspace::zero(witness.product.field(), witness.product.dom_dim()), pt.mul);
  internal_check(
      subspace_sum(compose(sfd.p0, witness.q0), zero_times_mul) == witness.product,
      "selection form reassembly");
  return Mp2SelectionForm{sfd.p0, witness.q0, sfd.mul_part};
}

bool ballantine_check(const Matrix& a, std::size_t k) {
  require(a.rows() == a.cols(), "ballantine_check needs a square matrix");
  std::size_t rank_a = column_echelon(a).rank;
  std::size_t rank_i_minus_a =
      column_echelon(Matrix::identity(a.field(), a.rows()) - a).rank;
  return rank_i_minus_a <= k * (a.cols() - rank_a);
}

bool mp2_necessary(const LinearRelation& t) {
  require(t.is_endo(), "mp2_necessary needs an endorelation");
  LinearRelation d =
      pointwise_diff(t, LinearRelation::identity(t.field(), t.dom_dim()));
  RelationParts pt = parts(t);
  return parts(d).ran.dim() <= 2 * pt.ker.dim() + pt.mul.dim();
}

}  // namespace linrel
