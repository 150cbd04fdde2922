#pragma once

#include <vector>

#include "seqgraph/core.hpp"

namespace seqgraph {

enum class SearchMode { first, count, all };

struct SearchOptions {
    int w = 2;
    SearchMode mode = SearchMode::count;
    int max_len = 0;                       // inclusive length bound, >= 1
    long long node_budget = 10'000'000;    // DFS extensions before giving up
    Sequence prefix;                       // pin the leading tokens, if any
};

struct SearchResult {
    mpz_class count = 0;
    std::vector<Sequence> witnesses;  // first: at most one; all: every hit
    long long nodes = 0;
};

// Exhaustive depth-first enumeration of realizations of g with length at
// most max_len. Partial sequences are cut as soon as a window pair falls
// outside the edge set or (weighted) overshoots an edge weight; weighted
// graphs are also capped at the exact length every realization must have
// (derive_length), which may be no length at all. Throws budget_exceeded
// when node_budget expansions are not enough to finish, so a normal return
// with count 0 certifies non-realizability within the length bound.
// Deterministic: vertices are tried in id order, so `first` returns the
// least witness in (length-last) id order encountered by DFS. A non-empty
// prefix restricts the search to sequences starting with those tokens.
SearchResult search(const SeqGraph &g, const SearchOptions &opts);

// Number of Eulerian paths of a multigraph with parallel copies kept
// distinguishable (edge-labeled). Loops are traversed once per instance.
// With no edges at all the empty path counts only for a single vertex.
BigCount eulerian_paths(const MultiGraph &m);

}  // namespace seqgraph
