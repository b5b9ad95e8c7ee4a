#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "qns/exec.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Navier-Stokes on quantum Euclidean spaces"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  bool deterministic = false;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"solve", "integrate to T and write diagnostics.csv and QNSF snapshots"},
      {"picard", "run the Picard iteration of the mild form"},
      {"verify", "run the inequality battery and invariant suites"},
      {"sweep-theta", "theta -> 0 convergence table"},
      {"norms", "print the norm battery for input_snapshot"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
    sub->add_flag("--deterministic", deterministic, "pin all summation to the calling thread");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    auto rc = qns::cli::load_run_config(config_path);
    if (!out_dir.empty()) rc.out_dir = out_dir;
    if (deterministic) rc.solver.deterministic = true;
    qns::set_summation(rc.solver.deterministic ? qns::Summation::Deterministic : qns::Summation::Parallel);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "solve") return qns::cli::cmd_solve(rc, std::cout);
    if (cmd == "picard") return qns::cli::cmd_picard(rc, std::cout);
    if (cmd == "verify") return qns::cli::cmd_verify(rc, std::cout);
    if (cmd == "sweep-theta") return qns::cli::cmd_sweep_theta(rc, std::cout);
    return qns::cli::cmd_norms(rc, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
