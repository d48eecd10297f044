// Acceptance gates for the linear-relation calculus. Each criterion prints
// one PASS/FAIL line; the binary exits nonzero when any gate fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "linrel/error.hpp"
#include "linrel/laws.hpp"
#include "linrel/mp2.hpp"

using namespace linrel;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);

struct Gate {
  int id;
  std::string label;
  double time_budget_seconds;
  std::function<std::string()> run;  // empty string means pass
};

std::string fail(const std::string& message) { return message; }

std::vector<LinearRelation> enumerate_relations(const FieldSpec& f, std::size_t n) {
  std::vector<LinearRelation> out;
  for (Subspace& g : enumerate_subspaces(f, 2 * n)) out.emplace_back(n, n, std::move(g));
  return out;
}

std::vector<LinearRelation> enumerate_mps(const FieldSpec& f, std::size_t n) {
  std::vector<LinearRelation> out;
  auto subs = enumerate_subspaces(f, n);
  for (const Subspace& m : subs)
    for (const Subspace& k : subs) out.push_back(mp(m, k));
  return out;
}

// Runs a law in random mode, doubling the trial count until the applicable
// target is met. Larger runs strictly extend smaller ones (instances are
// keyed by index), so this stays deterministic.
Verdict check_with_target(const Law& law, GeneratorConfig cfg,
                          std::uint64_t applicable_target) {
  cfg.trials = applicable_target + applicable_target / 3;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Verdict v = check_law(law, cfg);
    if (v.applicable >= applicable_target || v.failure_count > 0) return v;
    cfg.trials *= 2;
  }
  return check_law(law, cfg);
}

std::string criterion1_exhaustive_f2() {
  auto rels = enumerate_relations(kF2, 2);
  auto subs = enumerate_subspaces(kF2, 2);
  if (rels.size() != 67 || subs.size() != 5)
    return fail("expected 67 relations / 5 subspaces, got " +
                std::to_string(rels.size()) + "/" + std::to_string(subs.size()));
  GeneratorConfig cfg;
  cfg.field = kF2;
  cfg.ambient_dim = 2;
  cfg.mode = GeneratorConfig::Mode::Exhaustive;
  std::ostringstream bad;
  std::size_t passed = 0;
  for (const Law& law : law_registry()) {
    Verdict v = check_law(law, cfg);
    if (v.failure_count > 0)
      bad << " [" << law.id << ": " << v.failure_count << "/" << v.applicable
          << " failures, first " << (v.failures.empty() ? "?" : v.failures.front())
          << "]";
    else if (v.applicable == 0)
      bad << " [" << law.id << ": vacuous (0 applicable)]";
    else
      ++passed;
  }
  if (bad.tellp() > 0)
    return fail(std::to_string(passed) + "/" +
                std::to_string(law_registry().size()) + " laws clean; failing:" +
                bad.str());
  return "";
}

std::string criterion2_sampled() {
  std::ostringstream bad;
  GeneratorConfig f2cfg;
  f2cfg.field = kF2;
  f2cfg.ambient_dim = 3;
  f2cfg.mode = GeneratorConfig::Mode::Random;
  f2cfg.seed = 20260810;
  for (const Law& law : law_registry()) {
    Verdict v = check_with_target(law, f2cfg, 5000);
    if (v.failure_count > 0)
      bad << " [f2 dim 3, " << law.id << ": " << v.failure_count << " failures]";
    else if (v.applicable < 5000)
      bad << " [f2 dim 3, " << law.id << ": only " << v.applicable
          << " applicable]";
  }
  for (std::size_t dim = 3; dim <= 5; ++dim) {
    GeneratorConfig qcfg;
    qcfg.field = kQ;
    qcfg.ambient_dim = dim;
    qcfg.mode = GeneratorConfig::Mode::Random;
    qcfg.seed = 911 + dim;
    for (const Law& law : law_registry()) {
      Verdict v = check_with_target(law, qcfg, 200);
      if (v.failure_count > 0)
        bad << " [Q dim " << dim << ", " << law.id << ": " << v.failure_count
            << " failures]";
      else if (v.applicable < 200)
        bad << " [Q dim " << dim << ", " << law.id << ": only " << v.applicable
            << " applicable]";
    }
  }
  if (bad.tellp() > 0) return fail("failing:" + bad.str());
  return "";
}

std::string criterion3_mp2_witnesses() {
  auto subs = enumerate_subspaces(kF2, 2);
  std::size_t count = 0;
  for (const Subspace& m1 : subs)
    for (const Subspace& n1 : subs)
      for (const Subspace& m2 : subs)
        for (const Subspace& n2 : subs) {
          LinearRelation e = mp(m1, n1), f = mp(m2, n2);
          LinearRelation t = compose(e, f);
          Mp2Witness w = mp_times_projection(e, f);
          RelationParts pt = parts(t), pp = parts(w.p), pq = parts(w.q0);
          bool ok = compose(w.p, w.q0) == t && pp.ran == pt.ran &&
                    pp.mul == pt.mul && pq.dom == pt.dom && pq.ker == pt.ker &&
                    classify(w.q0).is_projection;
          if (!ok) return fail("witness violated at pair " + std::to_string(count));
          ++count;
        }
  if (count != 625) return fail("expected 625 pairs, saw " + std::to_string(count));
  return "";
}

std::string criterion4_necessity() {
  std::ostringstream bad;
  for (std::size_t dim = 2; dim <= 3; ++dim) {
    auto mps = enumerate_mps(kF2, dim);
    std::size_t pairs = 0, violations = 0, proper_domain = 0;
    for (const LinearRelation& e : mps)
      for (const LinearRelation& f : mps) {
        LinearRelation t = compose(e, f);
        if (!mp2_necessary(t)) {
          ++violations;
          if (!parts(t).dom.is_full()) ++proper_domain;
        }
        ++pairs;
      }
    if (dim == 3 && pairs < 10000)
      bad << " [covered only " << pairs << " pairs at dim 3]";
    if (violations > 0)
      bad << " [dim " << dim << ": " << violations << "/" << pairs
          << " products violate the inequality, all " << proper_domain
          << " with proper domain]";
  }
  LinearRelation twice =
      LinearRelation::from_operator(Matrix::identity(kQ, 2) + Matrix::identity(kQ, 2));
  if (mp2_necessary(twice)) bad << " [2I over Q^2 should fail the inequality]";
  if (bad.tellp() > 0) return fail("failing:" + bad.str());
  return "";
}

std::string criterion5_certificate_iff() {
  auto rels = enumerate_relations(kF2, 2);
  auto subs = enumerate_subspaces(kF2, 2);
  for (const LinearRelation& t : rels) {
    bool member = mp2_membership_bruteforce(t).has_value();
    bool certified = false;
    RelationParts pt = parts(t);
    for (const Subspace& s : subs) {
      if (!(intersect(s, pt.ran) == pt.mul)) continue;  // malformed certificate
      if (mp2_certificate_check(t, s).has_value()) {
        certified = true;
        break;
      }
    }
    if (member != certified)
      return fail(std::string("oracle/certificate disagreement: member=") +
                  (member ? "yes" : "no"));
  }
  return "";
}

// Relation over Q with dom, ran and mul kept away from the full space, so
// that single-criterion violations can be planted next to it.
LinearRelation random_small_relation(InstanceRng& rng, std::size_t n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    LinearRelation s(n, n, random_subspace(rng, kQ, 2 * n));
    RelationParts ps = parts(s);
    if (ps.ran.dim() >= 1 && !ps.ran.is_full() && !ps.dom.is_full() &&
        ps.mul.dim() < ps.ran.dim())
      return s;
  }
  throw Error("could not sample a usable base relation");
}

std::string criterion6_douglas_suite() {
  std::size_t operator_ok = 0, relation_ok = 0, rejected_ok = 0;
  for (int i = 0; i < 200; ++i) {
    InstanceRng rng(77001, 1, static_cast<std::uint64_t>(i));
    std::size_t n = 2 + static_cast<std::size_t>(rng.int_in(0, 4));  // dims 2..6
    // Operator mode: R = S W by construction.
    LinearRelation s_op = random_operator(rng, kQ, n);
    LinearRelation r_op = compose(s_op, random_operator(rng, kQ, n));
    LinearRelation t = douglas_operator(r_op, s_op);
    if (!(compose(s_op, t) == r_op) || !is_operator(t))
      return fail("operator-mode recomposition failed at instance " +
                  std::to_string(i));
    ++operator_ok;
    // Relation mode.
    LinearRelation s_rel = random_relation(rng, kQ, n);
    LinearRelation r_rel = compose(s_rel, random_operator(rng, kQ, n));
    LinearRelation t0 = douglas_relation(r_rel, s_rel);
    if (!(compose(s_rel, t0) == r_rel) || !is_operator(t0))
      return fail("relation-mode recomposition failed at instance " +
                  std::to_string(i));
    ++relation_ok;
  }
  for (int i = 0; i < 200; ++i) {
    InstanceRng rng(77002, 2, static_cast<std::uint64_t>(i));
    std::size_t n = 3 + static_cast<std::size_t>(rng.int_in(0, 2));  // dims 3..5
    if (i % 3 == 0) {
      // Operator mode, range criterion violated: S has deficient rank.
      Matrix left = random_matrix(rng, kQ, n, n - 1);
      Matrix right = random_matrix(rng, kQ, n - 1, n);
      LinearRelation s = LinearRelation::from_operator(left * right);
      LinearRelation r = random_operator(rng, kQ, n);
      if (contains(parts(s).ran, parts(r).ran)) continue;
      try {
        douglas_operator(r, s);
        return fail("operator violation accepted at instance " + std::to_string(i));
      } catch (const CriterionError& e) {
        if (e.condition() != "ran R ⊄ ran S")
          return fail("wrong operator diagnostic at instance " + std::to_string(i));
      }
      ++rejected_ok;
      continue;
    }
    LinearRelation s = random_small_relation(rng, n);
    RelationParts ps = parts(s);
    LinearRelation base = compose(s, random_operator(rng, kQ, n));
    RelationParts pb = parts(base);
    const Subspace full = Subspace::full(kQ, n);
    std::string expected;
    LinearRelation r = base;
    if (i % 3 == 1) {
      // Break only the range condition: add (x0, y0) with y0 outside ran S
      // and x0 outside dom(base), keeping mul R = mul S.
      Subspace outside_ran = complement_within(ps.ran, full);
      Subspace outside_dom = complement_within(pb.dom, full);
      if (outside_dom.is_zero()) continue;
      Vector x0 = outside_dom.basis().column(0);
      Vector y0 = outside_ran.basis().column(0);
      Vector gen = x0;
      gen.insert(gen.end(), y0.begin(), y0.end());
      r = subspace_sum(base,
                       LinearRelation(n, n, Subspace::span(kQ, 2 * n, {gen})));
      expected = "ran R ⊄ ran S";
    } else {
      // Break only the mul condition: enlarge mul R inside ran S.
      Subspace extra = complement_within(ps.mul, ps.ran);
      Vector m0 = extra.basis().column(0);
      r = subspace_sum(
          base, LinearRelation::rect(Subspace::zero(kQ, n),
                                     Subspace::span(kQ, n, {m0})));
      expected = "mul R ≠ mul S";
    }
    try {
      douglas_relation(r, s);
      return fail("violation accepted at instance " + std::to_string(i));
    } catch (const CriterionError& e) {
      if (e.condition() != expected)
        return fail("wrong diagnostic at instance " + std::to_string(i) + ": " +
                    e.condition() + " (expected " + expected + ")");
    }
    ++rejected_ok;
  }
  if (operator_ok < 200 || relation_ok < 200 || rejected_ok < 190)
    return fail("coverage too small: " + std::to_string(operator_ok) + "/" +
                std::to_string(relation_ok) + "/" + std::to_string(rejected_ok));
  return "";
}

struct RoundTrip {
  LinearRelation r, s;
  CoordinatedSelections selections;
};

std::vector<RoundTrip> round_trips;

std::string criterion7_right_projection_roundtrip() {
  round_trips.clear();
  for (int i = 0; i < 200; ++i) {
    InstanceRng rng(88001, 3, static_cast<std::uint64_t>(i));
    std::size_t n = 3 + static_cast<std::size_t>(rng.int_in(0, 2));
    LinearRelation s = random_relation(rng, kQ, n);
    LinearRelation q = random_projection(rng, kQ, n);
    LinearRelation r = compose(s, q);
    auto rp = right_projection_factor(r, s);
    if (!rp) return fail("criterion rejected a constructed S∘Q at instance " +
                         std::to_string(i));
    if (!(compose(s, rp->q) == r))
      return fail("recomposition mismatch at instance " + std::to_string(i));
    if (!classify(rp->q).is_projection)
      return fail("factor is not a projection at instance " + std::to_string(i));
    round_trips.push_back(RoundTrip{r, s, rp->selections});
  }
  return "";
}

std::string criterion8_ballantine() {
  for (int bits = 0; bits < 16; ++bits) {
    Matrix a(kF2, 2, 2);
    a.at(0, 0) = Scalar::from_int(kF2, bits & 1);
    a.at(0, 1) = Scalar::from_int(kF2, (bits >> 1) & 1);
    a.at(1, 0) = Scalar::from_int(kF2, (bits >> 2) & 1);
    a.at(1, 1) = Scalar::from_int(kF2, (bits >> 3) & 1);
    if (ballantine_check(a, 1) != (a * a == a))
      return fail("k=1 mismatch at matrix " + std::to_string(bits));
  }
  FieldSpec f5 = FieldSpec::prime(5);
  auto idempotent_matrix = [&](InstanceRng& rng) {
    Matrix g = random_invertible(rng, f5, 4);
    std::size_t k = static_cast<std::size_t>(rng.int_in(0, 4));
    std::vector<Vector> ran_cols, ker_cols;
    for (std::size_t j = 0; j < 4; ++j)
      (j < k ? ran_cols : ker_cols).push_back(g.column(j));
    LinearRelation p = mp(Subspace::span(f5, 4, ran_cols),
                          Subspace::span(f5, 4, ker_cols));
    Matrix a(f5, 4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      Vector e(4, Scalar::zero(f5));
      e[j] = Scalar::one(f5);
      Vector col = *apply_representative(p, e);
      for (std::size_t i = 0; i < 4; ++i) a.at(i, j) = col[i];
    }
    if (!(a * a == a)) throw Error("constructed matrix is not idempotent");
    return a;
  };
  for (int i = 0; i < 500; ++i) {
    InstanceRng rng(99001, 4, static_cast<std::uint64_t>(i));
    Matrix product = idempotent_matrix(rng) * idempotent_matrix(rng);
    if (!ballantine_check(product, 2))
      return fail("product of two idempotents rejected at instance " +
                  std::to_string(i));
  }
  return "";
}

std::string criterion9_equalizer_crosscheck() {
  if (round_trips.size() < 200)
    return fail("round-trip instances unavailable (criterion 7 must run first)");
  for (std::size_t i = 0; i < round_trips.size(); ++i) {
    const RoundTrip& rt = round_trips[i];
    if (!(parts(rt.r).mul == parts(rt.s).mul))
      return fail("constructed instance lost mul equality at " + std::to_string(i));
    auto eq = equalizer(rt.r, rt.s);
    if (!eq) return fail("equalizer absent at instance " + std::to_string(i));
    Subspace kernel =
        parts(pointwise_diff(rt.selections.s0, rt.selections.r0)).ker;
    if (!(*eq == kernel))
      return fail("equalizer != ker(S0-R0) at instance " + std::to_string(i));
  }
  return "";
}

}  // namespace

int main() {
  std::vector<Gate> gates = {
      {1, "exhaustive law suite, F2 ambient dim 2 (67 relations / 5 subspaces)",
       60.0, criterion1_exhaustive_f2},
      {2, "sampled law suite, F2 dim 3 (>=5000/law) and Q dims 3-5 (>=200/law)",
       120.0, criterion2_sampled},
      {3, "all 625 mp pairs over F2^2 rewrite as mp times projection", 30.0,
       criterion3_mp2_witnesses},
      {4, "necessity inequality on all mp-pair products (F2^2, F2^3) and 2I over Q",
       120.0, criterion4_necessity},
      {5, "certificate iff oracle membership on all 67 relations over F2^2", 60.0,
       criterion5_certificate_iff},
      {6, "douglas suite over Q: 200 per mode plus 200 planted violations", 120.0,
       criterion6_douglas_suite},
      {7, "right-projection round-trip on 200 seeded (S, Q) pairs", 120.0,
       criterion7_right_projection_roundtrip},
      {8, "ballantine: k=1 on all 16 F2 matrices, k=2 on 500 F5 products", 60.0,
       criterion8_ballantine},
      {9, "equalizer equals ker(S0-R0) on every round-trip instance", 60.0,
       criterion9_equalizer_crosscheck},
  };

  int failures = 0;
  for (const Gate& gate : gates) {
    auto start = std::chrono::steady_clock::now();
    std::string result;
    try {
      result = gate.run();
    } catch (const std::exception& e) {
      result = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = result.empty() && elapsed < gate.time_budget_seconds;
    if (result.empty() && elapsed >= gate.time_budget_seconds)
      result = "time budget exceeded (" + std::to_string(elapsed) + "s)";
    std::printf("%s criterion %d (%.1fs): %s%s%s\n", ok ? "PASS" : "FAIL", gate.id,
                elapsed, gate.label.c_str(), result.empty() ? "" : " -- ",
                result.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
