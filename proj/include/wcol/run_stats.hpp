#ifndef WCOL_RUN_STATS_HPP
#define WCOL_RUN_STATS_HPP

#include <chrono>
#include <vector>

namespace wcol {

using Clock = std::chrono::steady_clock;
using Deadline = Clock::time_point;

inline Deadline no_deadline() { return Deadline::max(); }
inline bool deadline_passed(Deadline d) { return Clock::now() >= d; }

enum class TcOutcome { success, failure, timeout };

/// One turbocharger application.
struct TcInvocation {
  int c = 0;
  long long nodes = 0;
  int depth = 1;  // deepest slot filled, at least 1
  bool success = false;
  double depth_over_c() const { return c > 0 ? static_cast<double>(depth) / c : 1.0; }
};

struct TimelinePoint {
  long long elapsed_ms = 0;
  int k = 0;
};

/// Search instrumentation for one optimization run.
struct RunStats {
  int baseline_k = 0;
  int final_k = 0;
  int lower_bound = 0;
  long long cnt_tc = 0;
  long long nodes_total = 0;
  long long time_in_tc_ms = 0;
  long long total_ms = 0;
  std::vector<TcInvocation> invocations;
  std::vector<TimelinePoint> timeline;  // baseline first, then improvements
  int max_merge_children = 0;           // children per (call, vertex), maximum seen

  void record(const TcInvocation& inv) {
    cnt_tc++;
    nodes_total += inv.nodes;
    invocations.push_back(inv);
  }
};

}  // namespace wcol

#endif
