#include <CLI11.hpp>
#include <iostream>

#include "linrel/cli.hpp"
#include "linrel/error.hpp"

namespace {

struct FieldDimFlags {
  std::string field = "f2";
  std::size_t dim = 2;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus for linear relations over Q and F_p"};
  app.require_subcommand(1);

  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string file, name, rhs, mode;

  auto* analyze = app.add_subcommand("analyze", "parts and classification flags");
  analyze->add_option("file", file)->required();
  analyze->add_option("name", name)->required();

  auto* compose_cmd = app.add_subcommand("compose", "compose R T (apply T, then R)");
  compose_cmd->add_option("file", file)->required();
  compose_cmd->add_option("R", name)->required();
  compose_cmd->add_option("T", rhs)->required();

  auto* inverse_cmd = app.add_subcommand("inverse", "swap the coordinate blocks");
  inverse_cmd->add_option("file", file)->required();
  inverse_cmd->add_option("name", name)->required();

  auto* sum_cmd = app.add_subcommand("sum", "pointwise sum T + S");
  sum_cmd->add_option("file", file)->required();
  sum_cmd->add_option("T", name)->required();
  sum_cmd->add_option("S", rhs)->required();

  auto* factorize = app.add_subcommand("factorize", "solve R = S∘X in a chosen mode");
  factorize->add_option("file", file)->required();
  factorize->add_option("--mode", mode, "douglas|douglas-operator|right-proj|left-proj|mp2")
      ->required();
  factorize->add_option("R", name)->required();
  factorize->add_option("S", rhs)->required();

  linrel::cli::CheckOptions check_opts;
  FieldDimFlags flags;
  bool exhaustive = false, random_mode = false;
  auto* check = app.add_subcommand("check", "run one law or the whole registry");
  check->add_option("law", check_opts.law_id, "law id or 'all'")->required();
  check->add_option("--field", flags.field, "q or f<p>");
  check->add_option("--dim", flags.dim, "ambient dimension");
  check->add_flag("--exhaustive", exhaustive);
  check->add_flag("--random", random_mode);
  check->add_option("--seed", check_opts.config.seed);
  check->add_option("--trials", check_opts.config.trials);
  check->add_flag("--serial", check_opts.serial, "use the serial reference runner");

  linrel::cli::Mp2Options mp2_opts;
  auto* mp2 = app.add_subcommand("mp2", "membership tools for products of mps");
  mp2->add_option("file", file)->required();
  mp2->add_option("name", name)->required();
  mp2->add_flag("--oracle", mp2_opts.oracle, "exhaustive prime-field oracle");
  mp2->add_flag("--necessary", mp2_opts.necessary, "dimension inequality only");
  mp2->add_option("--certificate", mp2_opts.certificate, "subspace name");

  // Let app-level flags (--pretty) appear after subcommand arguments.
  for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  linrel::cli::OutputOptions out_opts{pretty};
  try {
    if (app.got_subcommand(analyze))
      return linrel::cli::cmd_analyze(std::cout, file, name, out_opts);
    if (app.got_subcommand(compose_cmd))
      return linrel::cli::cmd_compose(std::cout, file, name, rhs, out_opts);
    if (app.got_subcommand(inverse_cmd))
      return linrel::cli::cmd_inverse(std::cout, file, name, out_opts);
    if (app.got_subcommand(sum_cmd))
      return linrel::cli::cmd_sum(std::cout, file, name, rhs, out_opts);
    if (app.got_subcommand(factorize))
      return linrel::cli::cmd_factorize(std::cout, file, mode, name, rhs, out_opts);
    if (app.got_subcommand(check)) {
      check_opts.config.field = linrel::FieldSpec::parse(flags.field);
      check_opts.config.ambient_dim = flags.dim;
      if (random_mode && exhaustive)
        throw linrel::Error("choose one of --exhaustive and --random");
      check_opts.config.mode = random_mode
                                   ? linrel::GeneratorConfig::Mode::Random
                                   : linrel::GeneratorConfig::Mode::Exhaustive;
      check_opts.output = out_opts;
      return linrel::cli::cmd_check(std::cout, check_opts);
    }
    if (app.got_subcommand(mp2)) {
      mp2_opts.output = out_opts;
      return linrel::cli::cmd_mp2(std::cout, file, name, mp2_opts);
    }
  } catch (const linrel::Error& e) {
    std::cout << "{\"error\":\"precondition\",\"message\":\""
              << std::string(e.what()) << "\"}\n";
    return linrel::cli::kPrecondition;
  }
  return linrel::cli::kPrecondition;
}
