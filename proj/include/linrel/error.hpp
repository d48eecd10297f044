#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace linrel {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A solvability criterion did not hold. `condition` names the violated
// condition verbatim so callers can surface it unchanged.
class CriterionError : public Error {
 public:
  CriterionError(std::string condition, const std::string& context)
      : Error(context + ": " + condition), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

// Malformed input files (as opposed to violated mathematical preconditions).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

inline void require_parse(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

// Postconditions that are theorems; a throw here means the construction
// itself is wrong, never the input.
inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw Error("internal invariant violated: " + what);
}

}  // namespace linrel
