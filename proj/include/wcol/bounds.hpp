#ifndef WCOL_BOUNDS_HPP
#define WCOL_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "wcol/graph.hpp"

namespace wcol {

/// Minor model underlying the WCOL-MMD+ contractions: one original-vertex
/// set per surviving minor vertex. Sets are pairwise disjoint, each induces
/// a connected subgraph of diameter at most floor((r-1)/2), and every minor
/// edge is witnessed by an original edge between the two sets.
struct MinorModel {
  std::vector<std::vector<int>> parts;
  std::vector<std::pair<int, int>> minor_edges;  // indices into parts
};

struct MmdPlusResult {
  int bound = 0;
  MinorModel witness;               // model of H when the bound was achieved
  std::vector<std::string> trace;   // one line per contraction/deletion
};

/// Lower bound on wcol_r(G): repeatedly pick a minimum-degree vertex v of the
/// working minor H (ties: lowest index), raise the answer to deg(v)+1, then
/// contract v with its minimum-degree neighbor whose merged model keeps
/// induced diameter at most floor((r-1)/2), or delete v if no neighbor
/// qualifies. degeneracy(H)+1 <= wcol_r(G) for every such minor, so the
/// answer is sound. For r in {1,2} no contraction is ever possible and the
/// result equals degeneracy(G)+1.
int wcol_mmd_plus(const Graph& g, int r);
MmdPlusResult wcol_mmd_plus_detailed(const Graph& g, int r);

}  // namespace wcol

#endif
