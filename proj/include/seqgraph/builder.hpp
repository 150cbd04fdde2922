#pragma once

#include <optional>

#include "seqgraph/core.hpp"

namespace seqgraph {

struct BuildOptions {
    int w = 2;
    bool directed = false;
    bool weighted = false;
};

// Sequence graph of x at window w: one vertex per distinct token (in order
// of first appearance), one edge per token pair at distance < w. In weighted
// mode the edge weight counts the unordered position pairs realizing it, so
// a self-loop realized by positions (i,j) counts once.
SeqGraph build(const Sequence &x, const BuildOptions &opts);

// Whether build(x) equals g exactly: same variant, same vertex set (tokens
// matched against g's labels) and the same edge map.
bool realizes(const Sequence &x, const SeqGraph &g, int w);

// Pair counts of an id sequence (canonical keys per orientation).
std::map<std::pair<VertexId, VertexId>, Weight>
build_pairs(const std::vector<VertexId> &ids, int w, bool directed);

// Token <-> id translation against a graph's labels.
std::optional<std::vector<VertexId>> to_ids(const Sequence &x, const SeqGraph &g);
Sequence to_tokens(const std::vector<VertexId> &ids, const SeqGraph &g);

}  // namespace seqgraph
