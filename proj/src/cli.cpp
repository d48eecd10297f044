#include "linrel/cli.hpp"

#include <ostream>

#include "linrel/error.hpp"
#include "linrel/json_io.hpp"

namespace linrel::cli {

namespace {

void emit(std::ostream& out, const Json& j, const OutputOptions& opts) {
  out << (opts.pretty ? j.dump(2) : j.dump()) << "\n";
}

int emit_error(std::ostream& out, int code, const std::string& kind,
               const std::string& message, const OutputOptions& opts) {
  emit(out, Json{{"error", kind}, {"message", message}}, opts);
  return code;
}

const LinearRelation& named_relation(const Workspace& ws, const std::string& name) {
  auto it = ws.relations.find(name);
  require(it != ws.relations.end(), "unknown relation: " + name);
  return it->second;
}

const Subspace& named_subspace(const Workspace& ws, const std::string& name) {
  auto it = ws.subspaces.find(name);
  require(it != ws.subspaces.end(), "unknown subspace: " + name);
  return it->second;
}

// Wraps a command body with the parse/precondition exit-code mapping.
template <typename Body>
int run_command(std::ostream& out, const OutputOptions& opts, Body body) {
  try {
    return body();
  } catch (const CriterionError& e) {
    emit(out, Json{{"error", "criterion"}, {"condition", e.condition()}}, opts);
    return kPrecondition;
  } catch (const Json::exception& e) {
    // Covers parse errors (with byte positions) and schema/type mismatches.
    return emit_error(out, kParseError, "parse", e.what(), opts);
  } catch (const ParseError& e) {
    return emit_error(out, kParseError, "parse", e.what(), opts);
  } catch (const Error& e) {
    return emit_error(out, kPrecondition, "precondition", e.what(), opts);
  }
}

}  // namespace

int cmd_analyze(std::ostream& out, const std::string& file, const std::string& name,
                const OutputOptions& opts) {
  return run_command(out, opts, [&] {
    Workspace ws = load_workspace(file);
    const LinearRelation& t = named_relation(ws, name);
    RelationParts p = parts(t);
    Json j{{"name", name},
           {"dom_dim", t.dom_dim()},
           {"codom_dim", t.codom_dim()},
           {"parts", parts_to_json(p)},
           {"dims",
            Json{{"dom", p.dom.dim()},
                 {"ran", p.ran.dim()},
                 {"ker", p.ker.dim()},
                 {"mul", p.mul.dim()}}},
           {"kind", t.is_endo() ? kind_to_json(classify(t)) : Json(nullptr)}};
    emit(out, j, opts);
    return kOk;
  });
}

int cmd_compose(std::ostream& out, const std::string& file, const std::string& r,
                const std::string& t, const OutputOptions& opts) {
  return run_command(out, opts, [&] {
    Workspace ws = load_workspace(file);
    emit(out, relation_to_json(compose(named_relation(ws, r), named_relation(ws, t))),
         opts);
    return kOk;
  });
}

int cmd_inverse(std::ostream& out, const std::string& file, const std::string& name,
                const OutputOptions& opts) {
  return run_command(out, opts, [&] {
    Workspace ws = load_workspace(file);
    emit(out, relation_to_json(inverse(named_relation(ws, name))), opts);
    return kOk;
  });
}

int cmd_sum(std::ostream& out, const std::string& file, const std::string& t,
            const std::string& s, const OutputOptions& opts) {
  return run_command(out, opts, [&] {
    Workspace ws = load_workspace(file);
    emit(out,
         relation_to_json(pointwise_sum(named_relation(ws, t), named_relation(ws, s))),
         opts);
    return kOk;
  });
}

int cmd_factorize(std::ostream& out, const std::string& file, const std::string& mode,
                  const std::string& r_name, const std::string& s_name,
                  const OutputOptions& opts) {
  return run_command(out, opts, [&] {
    Workspace ws = load_workspace(file);
    const LinearRelation& r = named_relation(ws, r_name);
    const LinearRelation& s = named_relation(ws, s_name);
    auto emit_witness = [&](const FactorizationWitness& w, Json criteria) {
      Json j = factorization_witness_to_json(w);
      j["criteria"] = std::move(criteria);
      emit(out, j, opts);
      return kOk;
    };
    if (mode == "douglas") {
      LinearRelation t0 = douglas_relation(r, s);
      return emit_witness(
          make_witness(FactorizationMode::DouglasRelation, {s, t0}, r),
          Json{{"ran R ⊆ ran S", true}, {"mul R = mul S", true}});
    }
    if (mode == "douglas-operator") {
      LinearRelation t = douglas_operator(r, s);
      return emit_witness(
          make_witness(FactorizationMode::DouglasOperator, {s, t}, r),
          Json{{"ran R ⊆ ran S", true}});
    }
    if (mode == "right-proj") {
      std::string why;
      auto rp = right_projection_factor(r, s, &why);
      if (!rp) {
        emit(out, Json{{"error", "criterion"}, {"condition", why}}, opts);
        return kPrecondition;
      }
      return emit_witness(
          make_witness(FactorizationMode::RightProjection, {s, rp->q}, r),
          Json{{"mul R = mul S", true},
               {"dom R = {x: S(x)=R(x)} + ker R", true}});
    }
    if (mode == "left-proj") {
      std::string why;
      auto q1 = left_projection_factor_operators(r, s, &why);
      if (!q1) {
        emit(out, Json{{"error", "criterion"}, {"condition", why}}, opts);
        return kPrecondition;
      }
      return emit_witness(
          make_witness(FactorizationMode::LeftProjection, {*q1, s}, r),
          Json{{"ran(S−R) ∩ ran R = {0}", true},
               {"dom R = S⁻¹(ran R ∔ ran(S−R))", true}});
    }
    if (mode == "mp2") {
      Mp2Witness w = mp_times_projection(r, s);
      emit(out, mp2_witness_to_json(w), opts);
      return kOk;
    }
    throw Error("unknown factorization mode: " + mode);
  });
}

int cmd_check(std::ostream& out, const CheckOptions& opts) {
  return run_command(out, opts.output, [&] {
    std::vector<const Law*> selected;
    if (opts.law_id == "all") {
      for (const Law& law : law_registry()) selected.push_back(&law);
    } else {
      const Law* law = find_law(opts.law_id);
      require(law != nullptr, "unknown law id: " + opts.law_id);
      selected.push_back(law);
    }
    ExecutionMode exec =
        opts.serial ? ExecutionMode::Serial : ExecutionMode::Parallel;
    Json verdicts = Json::array();
    bool any_failure = false;
    for (const Law* law : selected) {
      Verdict v = check_law(*law, opts.config, exec);
      any_failure = any_failure || !v.passed();
      verdicts.push_back(Json::parse(verdict_to_json_string(v)));
    }
    emit(out, opts.law_id == "all" ? verdicts : verdicts.at(0), opts.output);
    return any_failure ? kCounterexample : kOk;
  });
}

int cmd_mp2(std::ostream& out, const std::string& file, const std::string& name,
            const Mp2Options& opts) {
  return run_command(out, opts.output, [&] {
    Workspace ws = load_workspace(file);
    const LinearRelation& t = named_relation(ws, name);
    if (opts.necessary) {
      emit(out, Json{{"relation", name}, {"necessary", mp2_necessary(t)}},
           opts.output);
      return kOk;
    }
    if (opts.oracle) {
      auto found = mp2_membership_bruteforce(t);
      if (!found) {
        emit(out, Json{{"relation", name}, {"member", false}}, opts.output);
        return kPrecondition;
      }
      emit(out,
           Json{{"relation", name},
                {"member", true},
                {"e", relation_to_json(found->first)},
                {"f", relation_to_json(found->second)}},
           opts.output);
      return kOk;
    }
    if (!opts.certificate.empty()) {
      const Subspace& s = named_subspace(ws, opts.certificate);
      auto witness = mp2_certificate_check(t, s);
      if (!witness) {
        emit(out,
             Json{{"error", "criterion"},
                  {"condition", "dom T ≠ {x: T(x)=P(x)} + ker T"}},
             opts.output);
        return kPrecondition;
      }
      emit(out, mp2_witness_to_json(*witness), opts.output);
      return kOk;
    }
    auto witness = mp2_certificate_search(t);
    if (!witness) {
      emit(out, Json{{"relation", name}, {"status", "unknown"}}, opts.output);
      return kPrecondition;
    }
    emit(out, mp2_witness_to_json(*witness), opts.output);
    return kOk;
  });
}

}  // namespace linrel::cli
