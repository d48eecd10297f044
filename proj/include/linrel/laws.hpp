#pragma once

#include <functional>
#include <string>
#include <vector>

#include "linrel/generators.hpp"

namespace linrel {

// One checkable statement: a hypothesis filter and a conclusion over a tuple
// of endorelations and subspaces on a common space.
struct Instance {
  std::vector<LinearRelation> relations;
  std::vector<Subspace> subspaces;
};

struct LawShape {
  std::size_t relations = 0;
  std::size_t subspaces = 0;
};

struct Law {
  std::string id;
  std::string statement;
  LawShape shape;
  std::function<bool(const Instance&)> hypothesis;
  std::function<bool(const Instance&)> conclusion;
  // Random-mode sampler; biased towards hypothesis-satisfying instances.
  std::function<Instance(InstanceRng&, const FieldSpec&, std::size_t)> sample;
};

const std::vector<Law>& law_registry();
const Law* find_law(const std::string& id);

struct GeneratorConfig {
  FieldSpec field = FieldSpec::prime(2);
  std::size_t ambient_dim = 2;
  enum class Mode { Exhaustive, Random } mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t trials = 200;  // random mode only
};

struct Verdict {
  std::string law_id;
  std::uint64_t tried = 0;
  std::uint64_t applicable = 0;  // hypothesis held
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // serialized instances, capped

  bool passed() const { return failure_count == 0; }
};

enum class ExecutionMode { Serial, Parallel };

// Evaluates the law on every instance the config describes. Exhaustive mode
// walks all tuples of enumerated relations/subspaces (prime fields only);
// random mode draws `trials` seeded instances. Serial and parallel execution
// produce identical verdicts; failures are reported in instance order.
Verdict check_law(const Law& law, const GeneratorConfig& config,
                  ExecutionMode exec = ExecutionMode::Parallel);

std::string verdict_to_json_string(const Verdict& v);

}  // namespace linrel
