#ifndef WCOL_ORACLE_HPP
#define WCOL_ORACLE_HPP

#include <vector>

#include "wcol/graph.hpp"

namespace wcol {

struct ExactWcolResult {
  int wcol = 0;
  std::vector<int> order;
};

/// Exact wcol_r(G) with an optimal ordering, by branch and bound over prefix
/// suborderings: a partial state whose largest maintained wreach set already
/// matches the incumbent cannot improve it, since wcol of a subordering lower
/// bounds every full right extension. Refuses graphs with more than limit
/// vertices.
ExactWcolResult exact_wcol(const Graph& g, int radius, int limit = 9);

/// Plain minimum over all n! orderings; cross-validation only.
ExactWcolResult exact_wcol_bruteforce(const Graph& g, int radius, int limit = 7);

}  // namespace wcol

#endif
