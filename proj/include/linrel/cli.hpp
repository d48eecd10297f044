#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linrel/laws.hpp"

namespace linrel::cli {

// Exit codes shared by every subcommand:
//   0 success, 1 precondition/criterion failure (incl. unknown names),
//   2 law counterexample, 3 parse error.
inline constexpr int kOk = 0;
inline constexpr int kPrecondition = 1;
inline constexpr int kCounterexample = 2;
inline constexpr int kParseError = 3;

struct OutputOptions {
  bool pretty = false;
};

int cmd_analyze(std::ostream& out, const std::string& file, const std::string& name,
                const OutputOptions& opts);
int cmd_compose(std::ostream& out, const std::string& file, const std::string& r,
                const std::string& t, const OutputOptions& opts);
int cmd_inverse(std::ostream& out, const std::string& file, const std::string& name,
                const OutputOptions& opts);
int cmd_sum(std::ostream& out, const std::string& file, const std::string& t,
            const std::string& s, const OutputOptions& opts);

// mode: douglas | right-proj | left-proj | mp2
int cmd_factorize(std::ostream& out, const std::string& file, const std::string& mode,
                  const std::string& r, const std::string& s,
                  const OutputOptions& opts);

struct CheckOptions {
  std::string law_id = "all";
  GeneratorConfig config;
  bool serial = false;
  OutputOptions output;
};
int cmd_check(std::ostream& out, const CheckOptions& opts);

struct Mp2Options {
  bool oracle = false;
  bool necessary = false;
  std::string certificate;  // subspace name; empty when unused
  OutputOptions output;
};
int cmd_mp2(std::ostream& out, const std::string& file, const std::string& name,
            const Mp2Options& opts);

}  // namespace linrel::cli
