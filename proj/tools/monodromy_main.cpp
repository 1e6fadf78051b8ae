#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

#include "monodromy/report/jobs.hpp"

namespace {

void configure_logging(bool verbose) {
  auto logger = spdlog::stderr_color_mt("monodromy");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("MONODROMY_LOG")) spdlog::set_level(spdlog::level::from_str(env));
  if (verbose) spdlog::set_level(spdlog::level::debug);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace monodromy::report;

  CLI::App app{"Certify handlebody-compatible monodromies and evaluate thickness norms"};
  JobSpec spec;
  std::string mode_flag, mode_positional, genus = "2-6";
  bool no_torsion = false;

  app.add_option("command", mode_positional, "certify | polytope | batch | verify");
  app.add_option("--mode", mode_flag, "same as the positional mode");
  app.add_option("-i,--input", spec.input, "input JSON file (default: standard input)");
  app.add_option("-o,--output", spec.output, "output JSON file (default: standard output)");
  app.add_option("--seed", spec.seed, "batch seed")->capture_default_str();
  app.add_option("--count", spec.count, "batch instance count")->capture_default_str();
  app.add_option("--genus", genus, "batch genus, N or LO-HI")->capture_default_str();
  app.add_option("--threads", spec.threads, "batch worker threads (0: all cores)");
  app.add_flag("--force", spec.force, "overwrite an existing output file");
  app.add_flag("-v,--verbose", spec.verbose, "debug logging and a human-readable report on stderr");
  app.add_flag("--no-torsion", no_torsion, "omit torsion of H1(M;Z) from certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: exit=1 kind=usage reason=" << e.what() << '\n';
    return kIoOrParseError;
  }

  if (!mode_flag.empty() && !mode_positional.empty() && mode_flag != mode_positional) {
    std::cerr << "error: exit=1 kind=usage reason=conflicting modes " << mode_positional << " and " << mode_flag << '\n';
    return kIoOrParseError;
  }
  const std::string mode_name = !mode_flag.empty() ? mode_flag : mode_positional.empty() ? "certify" : mode_positional;
  auto mode = parse_mode(mode_name);
  if (!mode) {
    std::cerr << "error: exit=1 kind=usage reason=unknown mode " << mode_name << '\n';
    return kIoOrParseError;
  }
  spec.mode = *mode;
  spec.emit_torsion = !no_torsion;
  try {
    std::tie(spec.genus_min, spec.genus_max) = parse_genus_range(genus);
  } catch (const std::exception& e) {
    std::cerr << "error: exit=1 kind=usage reason=" << e.what() << '\n';
    return kIoOrParseError;
  }

  configure_logging(spec.verbose);
  return run(spec, {std::cin, std::cout, std::cerr});
}
