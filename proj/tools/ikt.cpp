#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ikt/commands.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct RawFlags {
  std::string input;
  std::string lambda;
  std::string mu;
  std::string delta;
  std::string json;
  std::string mode = "fixed";
  std::string check;
  int bound = -1;
  int degree = -1;
  std::uint64_t seed = 1;
  bool timing = false;
  bool parallel = false;
};

ikt::CommandOptions to_options(const RawFlags& f) {
  ikt::CommandOptions o;
  if (!f.lambda.empty()) o.lambda = ikt::Cocharacter(ikt::parse_int_list(f.lambda, "--lambda"));
  if (!f.mu.empty()) o.mu = ikt::Cocharacter(ikt::parse_int_list(f.mu, "--mu"));
  if (!f.delta.empty()) o.delta = ikt::parse_rational_list(f.delta, "--delta");
  if (f.bound >= 0) o.bound = f.bound;
  if (f.degree >= 0) o.degree = f.degree;
  o.mode = f.mode == "levi" ? ikt::ClassMode::levi : ikt::ClassMode::fixed;
  o.seed = f.seed;
  o.timing = f.timing;
  o.policy = f.parallel ? ikt::Execution::parallel : ikt::Execution::serial;
  return o;
}

void add_common(CLI::App* sub, RawFlags& f) {
  sub->add_option("--input", f.input, "problem file (JSON)")->required()->check(CLI::ExistingFile);
  sub->add_option("--lambda", f.lambda, "cocharacter, comma-separated integers");
  sub->add_option("--mu", f.mu, "second cocharacter, comma-separated integers");
  sub->add_option("--delta", f.delta, "window shift, comma-separated rationals p/q");
  sub->add_option("--json", f.json, "write the report document to this path");
  sub->add_option("--bound", f.bound, "cocharacter enumeration bound")->check(CLI::NonNegativeNumber);
  sub->add_option("--degree", f.degree, "cohomology truncation degree")->check(CLI::NonNegativeNumber);
  sub->add_option("--mode", f.mode, "boundary class indexing")->check(CLI::IsMember({"fixed", "levi"}));
  sub->add_option("--seed", f.seed, "seed for randomized test vectors");
  sub->add_flag("--timing", f.timing, "include timing in the report document");
  sub->add_flag("--parallel", f.parallel, "coset-parallel Weyl summation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Windows, induction operators and primitive decomposition for symmetric representations"};
  app.require_subcommand(1);
  RawFlags flags;
  auto* window = app.add_subcommand("window", "window basis and face bases");
  auto* check = app.add_subcommand("check", "verify an identity between operator matrices");
  auto* decompose = app.add_subcommand("decompose", "primitive and boundary decomposition");
  add_common(window, flags);
  add_common(check, flags);
  add_common(decompose, flags);
  check->add_option("which", flags.check, "copr | leviequal | compequal | compdiff | oracle | cohomology")
      ->required()
      ->check(CLI::IsMember(ikt::check_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    const ikt::ProblemSpec problem = ikt::load_problem(flags.input);
    const ikt::CommandOptions opt = to_options(flags);
    ikt::Report report;
    if (*window)
      report = ikt::cmd_window(problem, opt);
    else if (*check)
      report = ikt::cmd_check(problem, flags.check, opt);
    else
      report = ikt::cmd_decompose(problem, opt);
    std::cout << report.table;
    if (!flags.json.empty()) {
      std::ofstream out(flags.json);
      if (!out) throw ikt::InputError("cannot write report to '" + flags.json + "'");
      out << report.doc.dump(2) << '\n';
    }
    return report.pass ? kExitPass : kExitFail;
  } catch (const ikt::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ikt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
