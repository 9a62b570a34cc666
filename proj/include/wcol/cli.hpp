#ifndef WCOL_CLI_HPP
#define WCOL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wcol/run_stats.hpp"

namespace wcol {

/// Run metadata carried next to the counters in the stats record.
struct StatsMeta {
  std::string instance;
  int n = 0;
  long long m = 0;
  int r = 0;
  std::string heuristic;
  std::string turbo;
  std::uint64_t seed = 0;
};

/// Writes the run record as a single JSON object.
void emit_stats(const RunStats& stats, const StatsMeta& meta, std::ostream& sink);

/// Entry point behind the wcolorder binary. Exit status 0 on success, 2 on
/// input errors, 3 on an incompatible heuristic/turbocharger pair.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wcol

#endif
