// qmaps: run verification suites, solve for characters of a presentation,
// print presentations.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <iostream>

#include "qmaps/errors.hpp"
#include "qmaps/parser.hpp"
#include "qmaps/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

int emit(const qmaps::SuiteReport& report, bool json) {
  if (json) {
    std::cout << report.to_json() << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for quantum families of maps and free-product quantum semigroups"};
  app.require_subcommand(1);

  qmaps::SuiteOptions options;
  std::string group;
  std::size_t copies = 0;
  bool json = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--step", options.step, "character solver grid step")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", options.tol, "character solver refined tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", options.threads, "solver threads (0 = all cores)");
    cmd->add_flag("--json", json, "print the report as JSON");
  };

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite_help = "one of:";
  for (const auto& s : qmaps::suite_names()) suite_help += " " + s;
  verify->add_option("suite", suite, suite_help)->required()->check(CLI::IsMember(qmaps::suite_names()));
  verify->add_option("--group", group, "Z2, Z3, Z4, ... or a multiplication table file");
  verify->add_option("--copies", copies, "number of free-product copies")->check(CLI::PositiveNumber);
  verify->add_option("--samples", options.samples, "function-model sample count")->check(CLI::Range(2, 1000000));
  verify->add_option("--seed", options.seed, "seed for random corpora");
  add_common(verify);

  std::string pres_path;
  CLI::App* solve = app.add_subcommand("solve-characters", "solve for the scalar characters of a presentation");
  solve->add_option("file", pres_path, "presentation file")->required();
  add_common(solve);

  std::string print_path;
  std::string builtin;
  CLI::App* print = app.add_subcommand("print-presentation", "parse a presentation file and print it canonically");
  auto* file_opt = print->add_option("file", print_path, "presentation file");
  auto* builtin_opt =
      print->add_option("--builtin", builtin, "built-in presentation")->check(CLI::IsMember({"noqg"}));
  file_opt->excludes(builtin_opt);
  print->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) {
      if (!group.empty()) options.group = qmaps::parse_group(group);
      if (copies != 0) options.copies = copies;
      return emit(qmaps::run_suite(suite, options), json);
    }
    if (*solve) {
      const qmaps::Presentation pres = qmaps::read_presentation_file(pres_path).to_presentation();
      return emit(qmaps::solve_characters_report(pres, options), json);
    }
    if (*print) {
      const qmaps::PresentationFile file = builtin.empty() ? qmaps::read_presentation_file(print_path)
                                                           : qmaps::to_file(qmaps::noqg_presentation());
      std::cout << qmaps::print_presentation_file(file);
      return kOk;
    }
  } catch (const qmaps::ParseError& e) {
    std::cerr << "parse error";
    if (e.line() != 0) std::cerr << " at line " << e.line();
    std::cerr << ": " << e.what() << "\n";
    return kUsage;
  } catch (const qmaps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
