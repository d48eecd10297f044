#include "linrel/json_io.hpp"

#include <fstream>

#include "linrel/error.hpp"

namespace linrel {

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  require_parse(j.is_string(), "scalar must be a string or integer");
  return Scalar::parse(f, j.get<std::string>());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const FieldSpec& f, const Json& j) {
  require_parse(j.is_array(), "vector must be an array");
  Vector v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(scalar_from_json(f, e));
  return v;
}

Json subspace_to_json(const Subspace& s) {
  Json gens = Json::array();
  for (std::size_t j = 0; j < s.dim(); ++j)
    gens.push_back(vector_to_json(s.basis().column(j)));
  return Json{{"ambient", s.ambient_dim()}, {"generators", gens}};
}

Subspace subspace_from_json(const FieldSpec& f, const Json& j) {
  require_parse(j.is_object() && j.contains("ambient") && j.contains("generators"),
          "subspace needs ambient and generators");
  std::size_t ambient = j.at("ambient").get<std::size_t>();
  std::vector<Vector> gens;
  for (const Json& g : j.at("generators")) gens.push_back(vector_from_json(f, g));
  return Subspace::span(f, ambient, gens);
}

Json relation_to_json(const LinearRelation& t) {
  Json gens = Json::array();
  for (std::size_t j = 0; j < t.graph().dim(); ++j) {
    Vector col = t.graph().basis().column(j);
    Vector x(col.begin(), col.begin() + static_cast<std::ptrdiff_t>(t.dom_dim()));
    Vector y(col.begin() + static_cast<std::ptrdiff_t>(t.dom_dim()), col.end());
    gens.push_back(Json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}});
  }
  return Json{{"dom_dim", t.dom_dim()}, {"codom_dim", t.codom_dim()},
              {"generators", gens}};
}

LinearRelation relation_from_json(const FieldSpec& f, const Json& j) {
  require_parse(j.is_object() && j.contains("dom_dim") && j.contains("codom_dim") &&
              j.contains("generators"),
          "relation needs dom_dim, codom_dim and generators");
  std::size_t n = j.at("dom_dim").get<std::size_t>();
  std::size_t m = j.at("codom_dim").get<std::size_t>();
  std::vector<Vector> gens;
  for (const Json& g : j.at("generators")) {
    Vector x = vector_from_json(f, g.at("x"));
    Vector y = vector_from_json(f, g.at("y"));
    require(x.size() == n && y.size() == m, "generator length mismatch");
    x.insert(x.end(), y.begin(), y.end());
    gens.push_back(std::move(x));
  }
  return LinearRelation(n, m, Subspace::span(f, n + m, gens));
}

Json kind_to_json(const Kind& k) {
  return Json{{"operator", k.is_operator},
              {"everywhere_defined", k.is_everywhere_defined},
              {"idempotent", k.is_idempotent},
              {"super_idempotent", k.is_super_idempotent},
              {"multivalued_projection", k.is_multivalued_projection},
              {"projection", k.is_projection}};
}

Json parts_to_json(const RelationParts& p) {
  return Json{{"dom", subspace_to_json(p.dom)},
              {"ran", subspace_to_json(p.ran)},
              {"ker", subspace_to_json(p.ker)},
              {"mul", subspace_to_json(p.mul)}};
}

Json factorization_witness_to_json(const FactorizationWitness& w) {
  Json factors = Json::array();
  for (const LinearRelation& f : w.factors) factors.push_back(relation_to_json(f));
  return Json{{"mode", to_string(w.mode)},
              {"factors", factors},
              {"recomposition", relation_to_json(w.recomposition)}};
}

Json mp2_witness_to_json(const Mp2Witness& w) {
  return Json{{"p", relation_to_json(w.p)},
              {"q0", relation_to_json(w.q0)},
              {"product", relation_to_json(w.product)}};
}

Workspace workspace_from_json(const Json& j) {
  require_parse(j.is_object() && j.contains("field"), "workspace needs a field");
  Workspace ws;
  ws.field = FieldSpec::parse(j.at("field").get<std::string>());
  if (j.contains("relations"))
    for (const auto& [name, rel] : j.at("relations").items())
      ws.relations.emplace(name, relation_from_json(ws.field, rel));
  if (j.contains("subspaces"))
    for (const auto& [name, sub] : j.at("subspaces").items())
      ws.subspaces.emplace(name, subspace_from_json(ws.field, sub));
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open workspace file: " + path);
  Json j = Json::parse(in);  // throws nlohmann parse_error with position info
  return workspace_from_json(j);
}

}  // namespace linrel
