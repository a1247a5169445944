#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orbifrob::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2 };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::optional<int> n;
  std::optional<std::string> lambda;
  std::optional<std::string> cocycle;
  std::optional<std::string> model;
  bool super = false;
  bool poincare = false;
  bool json = false;
  std::string shift = "none";
  int copies = 1;
  int jobs = 0;
  std::optional<double> budget;
  std::optional<std::string> out;
};

/// Runs one command; never throws. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace orbifrob::cli
