#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splice_alex/report.hpp"

namespace report = splice_alex::report;

int main(int argc, char** argv) {
  CLI::App app{"Alexander modules of fibered multilinks and links at infinity from splice diagrams"};
  app.set_version_flag("--version", std::string(report::kToolVersion));
  app.require_subcommand(1);

  std::string format = "text";
  std::vector<std::string> paths;
  std::vector<std::int64_t> hb;
  std::vector<std::int64_t> torus;

  const auto add_common = [&](CLI::App* sub, bool paths_required) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    auto* opt = sub->add_option("paths", paths, "Diagram files");
    if (paths_required) opt->required();
  };
  add_common(app.add_subcommand("check", "Validate diagrams, fibration included"), true);
  add_common(app.add_subcommand("invariants", "Gcd invariants, virtual multiplicities, linking numbers"), true);
  add_common(app.add_subcommand("alexander", "Alexander module of the multilink"), true);
  add_common(app.add_subcommand("at-infinity", "Alexander module of the boundary link of the fiber"), true);
  auto* oracle = app.add_subcommand("oracle", "Cross-check closed forms against independent computations");
  add_common(oracle, false);
  auto* hb_opt = oracle->add_option("--hb", hb, "n d d_1 .. d_n")->expected(3, CLI::detail::expected_max_vector_size);
  auto* torus_opt = oracle->add_option("--torus", torus, "p q")->expected(2);
  hb_opt->excludes(torus_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  report::Style style;
  style.format = format == "json" ? report::Format::Json : report::Format::Text;
  if (const char* c = std::getenv("SPLICE_ALEX_COLOR")) style.color = std::string(c) == "1";

  const std::string command = app.get_subcommands().front()->get_name();
  const auto emit = [](const report::CommandOutput& out) {
    std::cout << out.out << std::flush;
    std::cerr << out.err << std::flush;
    return out.exit_code;
  };

  if (command == "oracle" && (!hb.empty() || !torus.empty())) {
    if (!paths.empty()) {
      std::cerr << "error: --hb/--torus take no paths\n";
      return 2;
    }
    return emit(!hb.empty() ? report::run_oracle_hb(hb, style) : report::run_oracle_torus(torus[0], torus[1], style));
  }
  if (paths.empty()) {
    std::cerr << "error: no input paths\n";
    return 2;
  }

  int status = 0;
  for (const std::string& path : paths) status = std::max(status, emit(report::run_file(command, path, style)));
  return status;
}
