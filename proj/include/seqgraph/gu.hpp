#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqgraph/core.hpp"

namespace seqgraph {

// A window tuple over vertex ids: every index pair is an edge of the base
// graph, so repeats need a self-loop.
using AuxVertex = std::vector<VertexId>;

// Auxiliary graph H^k: vertices are the valid length-k windows, edges join
// windows overlapping under a one-symbol shift whose outer pair {u_1, v_k}
// is an edge of the base graph. Loops occur at constant windows over
// self-looped vertices.
struct AuxGraph {
    int k = 1;
    std::vector<AuxVertex> vertices;         // sorted lexicographically
    std::vector<std::pair<int, int>> edges;  // vertex index pairs, first <= second
};

// Which aux vertices and aux edges (by index) cover each base edge. An aux
// vertex covers the pairs inside its window; an aux edge covers the outer
// pair of each orientation in which the shift rule holds.
struct CoverMap {
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> by_vertex;
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> by_edge;
};

// Enumerates V^(k) by depth-k adjacency extension. Throws size_limit once
// more than `cap` windows exist.
AuxGraph build_aux(const SeqGraph &g, int k, std::size_t cap = 10'000'000);

CoverMap cover_map(const SeqGraph &g, const AuxGraph &h);

// Sequence underlying a walk of aux vertices: the first window verbatim,
// then one appended symbol per forward step (u_{2:k} = v_{1:k-1}) or all k
// symbols of the target on a backward step. Throws not_a_walk when a step
// is neither.
Sequence underlying_sequence(const SeqGraph &g, int k,
                             const std::vector<AuxVertex> &walk);

// Witness realization of an undirected unweighted graph at window w, absent
// when none exists. Lengths below w-1 are settled by direct enumeration;
// otherwise some connected component of H^(w-1) must cover every edge and
// every vertex, and a there-and-back walk over that component yields the
// witness. The witness is re-verified before it is returned.
std::optional<Sequence> gu_realizable(const SeqGraph &g, int w,
                                      std::size_t cap = 10'000'000);

// Number of realizations of length <= max_len, by bounded oracle search.
BigCount gu_count_bounded(const SeqGraph &g, int w, int max_len,
                          long long node_budget = 10'000'000);

// DOT rendering of an aux graph for inspection.
std::string aux_to_dot(const SeqGraph &g, const AuxGraph &h);

}  // namespace seqgraph
