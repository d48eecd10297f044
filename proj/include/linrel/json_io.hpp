#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "linrel/factorization.hpp"
#include "linrel/mp2.hpp"
#include "linrel/projection.hpp"

namespace linrel {

using Json = nlohmann::json;

// Scalars serialize as strings: reduced "a/b" (plain "a" when b = 1) over the
// rationals, decimal residues over prime fields. Numeric JSON values are
// accepted on input.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const FieldSpec& f, const Json& j);

// {"ambient": n, "generators": [[...], ...]}
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const FieldSpec& f, const Json& j);

// {"dom_dim": n, "codom_dim": m, "generators": [{"x": [...], "y": [...]}, ...]}
Json relation_to_json(const LinearRelation& t);
LinearRelation relation_from_json(const FieldSpec& f, const Json& j);

Json kind_to_json(const Kind& k);
Json parts_to_json(const RelationParts& p);
Json factorization_witness_to_json(const FactorizationWitness& w);
Json mp2_witness_to_json(const Mp2Witness& w);

// A named workspace of relations and subspaces over one field.
struct Workspace {
  FieldSpec field;
  std::map<std::string, LinearRelation> relations;
  std::map<std::string, Subspace> subspaces;
};
Workspace workspace_from_json(const Json& j);
Workspace load_workspace(const std::string& path);

}  // namespace linrel
