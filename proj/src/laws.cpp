#include "linrel/laws.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

#include "linrel/error.hpp"
#include "linrel/factorization.hpp"
#include "linrel/json_io.hpp"
#include "linrel/mp2.hpp"

namespace linrel {

namespace {

LinearRelation zero_times(const FieldSpec& f, std::size_t n, const Subspace& s) {
  return LinearRelation::rect(Subspace::zero(f, n), s);
}

// --- samplers ---------------------------------------------------------

Instance sample_relation(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  return Instance{{random_relation(rng, f, n)}, {}};
}

Instance sample_relation_pair_equal(InstanceRng& rng, const FieldSpec& f,
                                    std::size_t n) {
  LinearRelation t = random_relation(rng, f, n);
  if (rng.chance(1, 4)) {
    LinearRelation s(n, n, random_subspace_of(rng, t.graph()));
    return Instance{{s, t}, {}};
  }
  return Instance{{t, t}, {}};
}

Instance sample_left_distribution(InstanceRng& rng, const FieldSpec& f,
                                  std::size_t n) {
  LinearRelation r = rng.chance(1, 2) ? random_operator(rng, f, n)
                                      : random_relation(rng, f, n);
  return Instance{{r, random_relation(rng, f, n), random_relation(rng, f, n)}, {}};
}

Instance sample_right_distribution(InstanceRng& rng, const FieldSpec& f,
                                   std::size_t n) {
  LinearRelation fr = rng.chance(1, 2) ? inverse(random_operator(rng, f, n))
                                       : random_relation(rng, f, n);
  return Instance{{random_relation(rng, f, n), random_relation(rng, f, n), fr}, {}};
}

Instance sample_modular_triple(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  for (int i = 0; i < 20; ++i) {
    Subspace t = random_subspace(rng, f, n);
    Subspace nn = random_subspace(rng, f, n);
    if (intersect(nn, t).is_zero()) return Instance{{}, {nn, t, nn}};
  }
  return Instance{{}, {random_subspace(rng, f, n), random_subspace(rng, f, n),
                       random_subspace(rng, f, n)}};
}

Instance sample_rect_identities(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  LinearRelation t = random_relation(rng, f, n);
  Subspace nn = rng.chance(1, 2) ? random_subspace_of(rng, parts(t).ker)
                                 : random_subspace(rng, f, n);
  return Instance{{t}, {nn, random_subspace(rng, f, n)}};
}

Instance sample_idempotent(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  return Instance{{random_idempotent(rng, f, n)}, {}};
}

Instance sample_relation_and_idempotent(InstanceRng& rng, const FieldSpec& f,
                                        std::size_t n) {
  LinearRelation q =
      rng.chance(1, 2) ? random_mp(rng, f, n) : random_idempotent(rng, f, n);
  return Instance{{random_relation(rng, f, n), q}, {}};
}

Instance sample_idempotent_pair(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  if (rng.chance(1, 4))
    return Instance{{LinearRelation::identity(f, n), random_idempotent(rng, f, n)},
                    {}};
  if (rng.chance(1, 3)) {
    Subspace m = random_subspace(rng, f, n);
    Subspace k = random_subspace(rng, f, n);
    return Instance{{mp(m, k), mp(random_subspace_of(rng, m), k)}, {}};
  }
  return Instance{{random_idempotent(rng, f, n), random_idempotent(rng, f, n)}, {}};
}

Instance sample_idempotent_pair_inv(InstanceRng& rng, const FieldSpec& f,
                                    std::size_t n) {
  Instance base = sample_idempotent_pair(rng, f, n);
  return Instance{{inverse(base.relations[0]), inverse(base.relations[1])}, {}};
}

Instance sample_commuting_mps(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  CommutingMpPair pair = random_commuting_mp_pair(rng, f, n, false);
  return Instance{{pair.p, pair.q}, {}};
}

Instance sample_commuting_mp_projection(InstanceRng& rng, const FieldSpec& f,
                                        std::size_t n) {
  CommutingMpPair pair = random_commuting_mp_pair(rng, f, n, true);
  return Instance{{pair.q}, {pair.ran_p, pair.ker_p}};
}

Instance sample_absorption(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  LinearRelation t = random_relation(rng, f, n);
  RelationParts pt = parts(t);
  Subspace s = Subspace::zero(f, n);
  if (rng.chance(1, 2)) {
    Subspace outside = complement_within(pt.ran, Subspace::full(f, n));
    s = sum(random_subspace_of(rng, pt.mul), random_subspace_of(rng, outside));
  } else {
    s = sum(complement_within(intersect(pt.dom, pt.ker), pt.dom),
            random_subspace(rng, f, n));
  }
  return Instance{{t}, {s}};
}

Instance sample_super_idempotent(InstanceRng& rng, const FieldSpec& f,
                                 std::size_t n) {
  if (rng.chance(1, 4)) return Instance{{random_mp(rng, f, n)}, {}};
  if (rng.chance(1, 3)) return Instance{{random_idempotent(rng, f, n)}, {}};
  return Instance{{random_super_idempotent(rng, f, n)}, {}};
}

Instance sample_douglas_pair(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  LinearRelation s = random_relation(rng, f, n);
  LinearRelation r = compose(s, random_operator(rng, f, n));
  return Instance{{r, s}, {}};
}

Instance sample_mp_pair(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  return Instance{{random_mp(rng, f, n), random_mp(rng, f, n)}, {}};
}

Instance sample_relation_triple(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  auto draw = [&] {
    return rng.chance(1, 3) ? random_operator(rng, f, n) : random_relation(rng, f, n);
  };
  return Instance{{draw(), draw(), draw()}, {}};
}

Instance sample_subspace_pair(InstanceRng& rng, const FieldSpec& f, std::size_t n) {
  return Instance{{}, {random_subspace(rng, f, n), random_subspace(rng, f, n)}};
}

// --- registry ---------------------------------------------------------

std::vector<Law> build_registry() {
  std::vector<Law> laws;
  auto add = [&](Law law) { laws.push_back(std::move(law)); };

  add(Law{
      "lemma2.2",
      "S ⊆ T with dom T ⊆ dom S and mul T ⊆ mul S forces S = T",
      {2, 0},
      [](const Instance& i) {
        RelationParts ps = parts(i.relations[0]), pt = parts(i.relations[1]);
        return graph_contains(i.relations[1], i.relations[0]) &&
               contains(ps.dom, pt.dom) && contains(ps.mul, pt.mul);
      },
      [](const Instance& i) { return i.relations[0] == i.relations[1]; },
      sample_relation_pair_equal,
  });

  add(Law{
      "lemma2.3.1",
      "RT +̂ RS ⊆ R(T +̂ S), with equality when ran T ⊆ dom R or ran S ⊆ dom R",
      {3, 0},
      [](const Instance&) { return true; },
      [](const Instance& i) {
        const auto& r = i.relations[0];
        const auto& t = i.relations[1];
        const auto& s = i.relations[2];
        LinearRelation lhs = subspace_sum(compose(r, t), compose(r, s));
        LinearRelation rhs = compose(r, subspace_sum(t, s));
        if (!graph_contains(rhs, lhs)) return false;
        Subspace dom_r = parts(r).dom;
        if (contains(dom_r, parts(t).ran) || contains(dom_r, parts(s).ran))
          return lhs == rhs;
        return true;
      },
      sample_left_distribution,
  });

  add(Law{
      "lemma2.3.2",
      "TF +̂ SF ⊆ (T +̂ S)F, with equality when dom T ⊆ ran F or dom S ⊆ ran F",
      {3, 0},
      [](const Instance&) { return true; },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        const auto& s = i.relations[1];
        const auto& fr = i.relations[2];
        LinearRelation lhs = subspace_sum(compose(t, fr), compose(s, fr));
        LinearRelation rhs = compose(subspace_sum(t, s), fr);
        if (!graph_contains(rhs, lhs)) return false;
        Subspace ran_f = parts(fr).ran;
        if (contains(ran_f, parts(t).dom) || contains(ran_f, parts(s).dom))
          return lhs == rhs;
        return true;
      },
      sample_right_distribution,
  });

  add(Law{
      "lemma2.4.1",
      "S ∔ T = N ∔ T and S ⊆ N force S = N",
      {0, 3},
      [](const Instance& i) {
        const Subspace& s = i.subspaces[0];
        const Subspace& t = i.subspaces[1];
        const Subspace& n = i.subspaces[2];
        return intersect(s, t).is_zero() && intersect(n, t).is_zero() &&
               sum(s, t) == sum(n, t) && contains(n, s);
      },
      [](const Instance& i) { return i.subspaces[0] == i.subspaces[2]; },
      sample_modular_triple,
  });

  add(Law{
      "lemma2.4.2",
      "({0}×N)T = ker T × N, T({0}×S) = {0} × T(S), and N ⊆ ker T gives "
      "T +̂ (N×S) = T +̂ ({0}×S)",
      {1, 2},
      [](const Instance&) { return true; },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        const Subspace& nn = i.subspaces[0];
        const Subspace& ss = i.subspaces[1];
        const FieldSpec& f = t.field();
        const std::size_t n = t.dom_dim();
        RelationParts pt = parts(t);
        bool a = compose(zero_times(f, n, nn), t) == LinearRelation::rect(pt.ker, nn);
        bool b = compose(t, zero_times(f, n, ss)) ==
                 zero_times(f, n, image(t, ss));
        bool c = true;
        if (contains(pt.ker, nn))
          c = subspace_sum(t, LinearRelation::rect(nn, ss)) ==
              subspace_sum(t, zero_times(f, n, ss));
        return a && b && c;
      },
      sample_rect_identities,
  });

  add(Law{
      "prop2.4",
      "idempotent Q = mp(ran Q ∩ dom Q, ker Q) +̂ ({0} × mul Q)",
      {1, 0},
      [](const Instance& i) { return classify(i.relations[0]).is_idempotent; },
      [](const Instance& i) {
        const auto& q = i.relations[0];
        RelationParts p = parts(q);
        LinearRelation core = mp(intersect(p.ran, p.dom), p.ker);
        return subspace_sum(core, zero_times(q.field(), q.dom_dim(), p.mul)) == q;
      },
      sample_idempotent,
  });

  add(Law{
      "idempotent-inverse",
      "the inverse of an idempotent is idempotent",
      {1, 0},
      [](const Instance& i) { return classify(i.relations[0]).is_idempotent; },
      [](const Instance& i) { return classify(inverse(i.relations[0])).is_idempotent; },
      sample_idempotent,
  });

  add(Law{
      "prop3.1",
      "dom TQ = ker Q + ran Q ∩ dom T and ker TQ = ker Q + ran Q ∩ ker T, "
      "for idempotent Q with dom T ∩ ran Q ⊆ dom Q ∩ ran Q",
      {2, 0},
      [](const Instance& i) {
        if (!classify(i.relations[1]).is_idempotent) return false;
        RelationParts pt = parts(i.relations[0]), pq = parts(i.relations[1]);
        return contains(intersect(pq.dom, pq.ran), intersect(pt.dom, pq.ran));
      },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        const auto& q = i.relations[1];
        RelationParts pt = parts(t), pq = parts(q);
        RelationParts ptq = parts(compose(t, q));
        return ptq.dom == sum(pq.ker, intersect(pq.ran, pt.dom)) &&
               ptq.ker == sum(pq.ker, intersect(pq.ran, pt.ker));
      },
      sample_relation_and_idempotent,
  });

  add(Law{
      "cor3.3",
      "ran QT = mul Q + dom Q ∩ ran T and mul QT = mul Q + dom Q ∩ mul T, "
      "for idempotent Q with ran T ∩ dom Q ⊆ dom Q ∩ ran Q",
      {2, 0},
      [](const Instance& i) {
        if (!classify(i.relations[1]).is_idempotent) return false;
        RelationParts pt = parts(i.relations[0]), pq = parts(i.relations[1]);
        return contains(intersect(pq.dom, pq.ran), intersect(pt.ran, pq.dom));
      },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        const auto& q = i.relations[1];
        RelationParts pt = parts(t), pq = parts(q);
        RelationParts pqt = parts(compose(q, t));
        return pqt.ran == sum(pq.mul, intersect(pq.dom, pt.ran)) &&
               pqt.mul == sum(pq.mul, intersect(pq.dom, pt.mul));
      },
      sample_relation_and_idempotent,
  });

  add(Law{
      "prop3.4",
      "for idempotents, QP = Q iff ker P ⊆ ker Q and dom Q ⊆ dom P",
      {2, 0},
      [](const Instance& i) {
        return classify(i.relations[0]).is_idempotent &&
               classify(i.relations[1]).is_idempotent;
      },
      [](const Instance& i) {
        const auto& p = i.relations[0];
        const auto& q = i.relations[1];
        RelationParts pp = parts(p), pq = parts(q);
        bool eq = compose(q, p) == q;
        bool cond = contains(pq.ker, pp.ker) && contains(pp.dom, pq.dom);
        return eq == cond;
      },
      sample_idempotent_pair,
  });

  add(Law{
      "cor3.5",
      "for idempotents, PQ = Q iff mul P ⊆ mul Q and ran Q ⊆ ran P",
      {2, 0},
      [](const Instance& i) {
        return classify(i.relations[0]).is_idempotent &&
               classify(i.relations[1]).is_idempotent;
      },
      [](const Instance& i) {
        const auto& p = i.relations[0];
        const auto& q = i.relations[1];
        RelationParts pp = parts(p), pq = parts(q);
        bool eq = compose(p, q) == q;
        bool cond = contains(pq.mul, pp.mul) && contains(pp.ran, pq.ran);
        return eq == cond;
      },
      sample_idempotent_pair_inv,
  });

  add(Law{
      "prop3.6",
      "commuting multivalued projections: PQ = mp(ran P ∩ ran Q, ker Q + ran Q ∩ ker P)",
      {2, 0},
      [](const Instance& i) {
        return classify(i.relations[0]).is_multivalued_projection &&
               classify(i.relations[1]).is_multivalued_projection &&
               compose(i.relations[0], i.relations[1]) ==
                   compose(i.relations[1], i.relations[0]);
      },
      [](const Instance& i) {
        const auto& p = i.relations[0];
        const auto& q = i.relations[1];
        RelationParts pp = parts(p), pq = parts(q);
        return compose(p, q) ==
               mp(intersect(pp.ran, pq.ran),
                  sum(pq.ker, intersect(pq.ran, pp.ker)));
      },
      sample_commuting_mps,
  });

  add(Law{
      "cor3.7",
      "if mp(M,N) commutes with a projection of range S then "
      "S ∩ (M+N) = S∩M + S∩N",
      {1, 2},
      [](const Instance& i) {
        if (!classify(i.relations[0]).is_projection) return false;
        LinearRelation pmn = mp(i.subspaces[0], i.subspaces[1]);
        return compose(pmn, i.relations[0]) == compose(i.relations[0], pmn);
      },
      [](const Instance& i) {
        Subspace s = parts(i.relations[0]).ran;
        const Subspace& m = i.subspaces[0];
        const Subspace& n = i.subspaces[1];
        return intersect(s, sum(m, n)) == sum(intersect(s, m), intersect(s, n));
      },
      sample_commuting_mp_projection,
  });

  add(Law{
      "lemma3.8",
      "ran T ∩ S ⊆ mul T gives mp(ran T, S)T = T; dom T ⊆ S + ker T gives "
      "T mp(S ∩ dom T, ker T) = T",
      {1, 1},
      [](const Instance& i) {
        RelationParts pt = parts(i.relations[0]);
        const Subspace& s = i.subspaces[0];
        return contains(pt.mul, intersect(pt.ran, s)) ||
               contains(sum(s, pt.ker), pt.dom);
      },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        const Subspace& s = i.subspaces[0];
        RelationParts pt = parts(t);
        if (contains(pt.mul, intersect(pt.ran, s)) &&
            !(compose(mp(pt.ran, s), t) == t))
          return false;
        if (contains(sum(s, pt.ker), pt.dom) &&
            !(compose(t, mp(intersect(s, pt.dom), pt.ker)) == t))
          return false;
        return true;
      },
      sample_absorption,
  });

  add(Law{
      "prop4.3",
      "super-idempotents decompose as P0 ∔̂ ({0}×mul T) with P0 a projection; "
      "the pair is an mp iff mul T ⊆ ker P0 and idempotent iff "
      "mul T ∩ dom P0 = ker P0 ∩ (ran P0 + mul T)",
      {1, 0},
      [](const Instance& i) {
        return classify(i.relations[0]).is_super_idempotent;
      },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        SelectionFormDecomposition sfd = selection_form_decomposition(t);
        Kind k = classify(t);
        if (!classify(sfd.p0).is_projection) return false;
        if (!(subspace_sum(sfd.p0,
                           zero_times(t.field(), t.dom_dim(), sfd.mul_part)) == t))
          return false;
        return sfd.mp_condition == k.is_multivalued_projection &&
               sfd.idempotent_condition == k.is_idempotent;
      },
      sample_super_idempotent,
  });

  add(Law{
      "eq5.1",
      "{x : S(x) = R(x)} = ker(S0 − R0) for coordinated selections, when "
      "ran R ⊆ ran S and mul R = mul S",
      {2, 0},
      [](const Instance& i) {
        RelationParts pr = parts(i.relations[0]), ps = parts(i.relations[1]);
        return contains(ps.ran, pr.ran) && pr.mul == ps.mul;
      },
      [](const Instance& i) {
        const auto& r = i.relations[0];
        const auto& s = i.relations[1];
        CoordinatedSelections cs = coordinated_selections(r, s);
        auto eq = equalizer(r, s);
        return eq.has_value() &&
               *eq == parts(pointwise_diff(cs.s0, cs.r0)).ker;
      },
      sample_douglas_pair,
  });

  add(Law{
      "prop6.6",
      "products of two multivalued projections satisfy "
      "dim ran(T − I) ≤ 2 dim ker T + dim mul T",
      {2, 0},
      [](const Instance& i) {
        return classify(i.relations[0]).is_multivalued_projection &&
               classify(i.relations[1]).is_multivalued_projection;
      },
      [](const Instance& i) {
        return mp2_necessary(compose(i.relations[0], i.relations[1]));
      },
      sample_mp_pair,
  });

  add(Law{
      "thm6.2",
      "a product of multivalued projections rewrites as P ∘ Q0 with P an mp "
      "carrying ran/mul and Q0 a projection carrying dom/ker",
      {2, 0},
      [](const Instance& i) {
        return classify(i.relations[0]).is_multivalued_projection &&
               classify(i.relations[1]).is_multivalued_projection;
      },
      [](const Instance& i) {
        const auto& e = i.relations[0];
        const auto& f = i.relations[1];
        Mp2Witness w = mp_times_projection(e, f);
        LinearRelation t = compose(e, f);
        RelationParts pt = parts(t), pp = parts(w.p), pq = parts(w.q0);
        return compose(w.p, w.q0) == t && w.product == t &&
               pp.ran == pt.ran && pp.mul == pt.mul && pq.dom == pt.dom &&
               pq.ker == pt.ker && classify(w.q0).is_projection &&
               classify(w.p).is_multivalued_projection;
      },
      sample_mp_pair,
  });

  add(Law{
      "cor4.4",
      "every relation is (multivalued projection) ∘ (operator)",
      {1, 0},
      [](const Instance&) { return true; },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        MpOperatorFactorization mo = mp_times_operator(t);
        return classify(mo.mp_factor).is_multivalued_projection &&
               is_operator(mo.operator_factor) &&
               compose(mo.mp_factor, mo.operator_factor) == t;
      },
      sample_relation,
  });

  add(Law{
      "prop4.2",
      "the selection T0 = QT is an operator with T = T0 ∔̂ ({0}×mul T), "
      "dom T0 = dom T, ker T0 = ker T, ran T0 = ran Q",
      {1, 0},
      [](const Instance&) { return true; },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        SelectionWitness w = linear_selection(t);
        RelationParts pt = parts(t), p0 = parts(w.selection);
        return p0.mul.is_zero() && p0.dom == pt.dom && p0.ker == pt.ker &&
               p0.ran == w.complement_used &&
               subspace_sum(w.selection,
                            zero_times(t.field(), t.dom_dim(), pt.mul)) == t;
      },
      sample_relation,
  });

  add(Law{
      "compose-assoc",
      "composition of relations is associative",
      {3, 0},
      [](const Instance&) { return true; },
      [](const Instance& i) {
        return compose(compose(i.relations[0], i.relations[1]), i.relations[2]) ==
               compose(i.relations[0], compose(i.relations[1], i.relations[2]));
      },
      sample_relation_triple,
  });

  add(Law{
      "inverse-parts",
      "dom T⁻¹ = ran T, mul T⁻¹ = ker T, and (T⁻¹)⁻¹ = T",
      {1, 0},
      [](const Instance&) { return true; },
      [](const Instance& i) {
        const auto& t = i.relations[0];
        RelationParts pt = parts(t), pi = parts(inverse(t));
        return pi.dom == pt.ran && pi.mul == pt.ker && inverse(inverse(t)) == t;
      },
      sample_relation,
  });

  add(Law{
      "dim-formula",
      "dim U + dim V = dim(U+V) + dim(U∩V)",
      {0, 2},
      [](const Instance&) { return true; },
      [](const Instance& i) {
        const Subspace& u = i.subspaces[0];
        const Subspace& v = i.subspaces[1];
        return u.dim() + v.dim() ==
               sum(u, v).dim() + intersect(u, v).dim();
      },
      sample_subspace_pair,
  });

  return laws;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string instance_json(const Instance& inst, const std::string& error) {
  Json rels = Json::array();
  for (const auto& r : inst.relations) rels.push_back(relation_to_json(r));
  Json subs = Json::array();
  for (const auto& s : inst.subspaces) subs.push_back(subspace_to_json(s));
  Json j{{"relations", rels}, {"subspaces", subs}};
  if (!error.empty()) j["error"] = error;
  return j.dump();
}

constexpr std::size_t kFailureCap = 8;
constexpr std::uint64_t kExhaustiveCap = 1ULL << 24;

struct Outcome {
  bool applicable = false;
  bool failed = false;
  std::string detail;
};

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> laws = build_registry();
  return laws;
}

const Law* find_law(const std::string& id) {
  for (const Law& law : law_registry())
    if (law.id == id) return &law;
  return nullptr;
}

Verdict check_law(const Law& law, const GeneratorConfig& config, ExecutionMode exec) {
  std::vector<LinearRelation> rel_pool;
  std::vector<Subspace> sub_pool;
  std::uint64_t total = 0;

  if (config.mode == GeneratorConfig::Mode::Exhaustive) {
    require(config.field.is_prime_field(), "exhaustive mode needs a prime field");
    if (law.shape.subspaces > 0)
      sub_pool = enumerate_subspaces(config.field, config.ambient_dim);
    if (law.shape.relations > 0) {
      for (Subspace& g : enumerate_subspaces(config.field, 2 * config.ambient_dim))
        rel_pool.emplace_back(config.ambient_dim, config.ambient_dim, std::move(g));
    }
    total = 1;
    for (std::size_t k = 0; k < law.shape.relations; ++k) {
      total *= rel_pool.size();
      require(total <= kExhaustiveCap, "exhaustive instance count guard exceeded");
    }
    for (std::size_t k = 0; k < law.shape.subspaces; ++k) {
      total *= sub_pool.size();
      require(total <= kExhaustiveCap, "exhaustive instance count guard exceeded");
    }
  } else {
    total = config.trials;
  }

  const std::uint64_t salt = fnv1a(law.id);

  auto build = [&](std::uint64_t index) -> Instance {
    if (config.mode == GeneratorConfig::Mode::Exhaustive) {
      Instance inst;
      std::uint64_t rest = index;
      for (std::size_t k = 0; k < law.shape.relations; ++k) {
        inst.relations.push_back(rel_pool[rest % rel_pool.size()]);
        rest /= rel_pool.size();
      }
      for (std::size_t k = 0; k < law.shape.subspaces; ++k) {
        inst.subspaces.push_back(sub_pool[rest % sub_pool.size()]);
        rest /= sub_pool.size();
      }
      return inst;
    }
    InstanceRng rng(config.seed, salt, index);
    return law.sample(rng, config.field, config.ambient_dim);
  };

  auto evaluate = [&](std::uint64_t index) -> Outcome {
    Outcome out;
    Instance inst = build(index);
    try {
      if (!law.hypothesis(inst)) return out;
    } catch (const Error& e) {
      out.applicable = true;
      out.failed = true;
      out.detail = instance_json(inst, std::string("hypothesis: ") + e.what());
      return out;
    }
    out.applicable = true;
    bool ok = false;
    std::string error;
    try {
      ok = law.conclusion(inst);
    } catch (const Error& e) {
      error = e.what();
    }
    if (!ok) {
      out.failed = true;
      out.detail = instance_json(inst, error);
    }
    return out;
  };

  Verdict verdict;
  verdict.law_id = law.id;
  verdict.tried = total;
  std::vector<std::pair<std::uint64_t, std::string>> failures;

#ifdef _OPENMP
  const bool parallel = exec == ExecutionMode::Parallel && total > 64;
#else
  const bool parallel = false;
  (void)exec;
#endif

  if (parallel) {
#ifdef _OPENMP
    std::uint64_t applicable = 0, failed = 0;
#pragma omp parallel
    {
      std::vector<std::pair<std::uint64_t, std::string>> local;
      std::uint64_t local_applicable = 0, local_failed = 0;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
        Outcome out = evaluate(static_cast<std::uint64_t>(i));
        if (out.applicable) ++local_applicable;
        if (out.failed) {
          ++local_failed;
          if (local.size() < kFailureCap)
            local.emplace_back(static_cast<std::uint64_t>(i), std::move(out.detail));
        }
      }
#pragma omp critical
      {
        applicable += local_applicable;
        failed += local_failed;
        failures.insert(failures.end(), local.begin(), local.end());
      }
    }
    verdict.applicable = applicable;
    verdict.failure_count = failed;
#endif
  } else {
    for (std::uint64_t i = 0; i < total; ++i) {
      Outcome out = evaluate(i);
      if (out.applicable) ++verdict.applicable;
      if (out.failed) {
        ++verdict.failure_count;
        if (failures.size() < 4 * kFailureCap)
          failures.emplace_back(i, std::move(out.detail));
      }
    }
  }

  std::sort(failures.begin(), failures.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [index, detail] : failures) {
    if (verdict.failures.size() >= kFailureCap) break;
    verdict.failures.push_back(detail);
  }
  return verdict;
}

std::string verdict_to_json_string(const Verdict& v) {
  Json failures = Json::array();
  for (const std::string& f : v.failures) failures.push_back(Json::parse(f));
  Json j{{"law", v.law_id},
         {"tried", v.tried},
         {"applicable", v.applicable},
         {"failures", failures},
         {"failure_count", v.failure_count}};
  return j.dump();
}

}  // namespace linrel
