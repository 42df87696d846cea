// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The same runners back the CLI's verify-all subcommand.

#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "wcayley/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wcayley acceptance suite"};
  wcayley::verify::Options opts;
  std::vector<int> only;
  app.add_option("--seed", opts.seed, "RNG seed (default 7)");
  app.add_option("--base-length", opts.base_length, "Schedule base length");
  app.add_option("--workers", opts.workers, "Worker threads (0 = auto)");
  app.add_option("--only", only, "Criterion ids to run (default all)");
  CLI11_PARSE(app, argc, argv);

  const auto results = wcayley::verify::run_criteria(
      opts, std::set<int>(only.begin(), only.end()), &std::cout);

  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;
  std::cout << (all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << results.size() << " criteria)" << std::endl;
  return all_pass ? 0 : 1;
}
