#pragma once

#include <optional>
#include <vector>

#include "seqgraph/core.hpp"

namespace seqgraph {

// The unique sequence length compatible with the total edge weight: p
// positions form p(p-1)/2 window pairs when p <= w and (w-1)(p - w/2) when
// p >= w, and a realization consumes exactly one weight unit per pair.
// Absent means no integer length fits, so nothing realizes the graph.
std::optional<long long> derive_length(const SeqGraph &g, int w);

struct DpStats {
    std::size_t states = 0;      // distinct states over the whole run
    std::size_t peak_level = 0;  // largest single level (live memory bound)
};

// Exact number of w-realizations of a weighted graph (either orientation)
// of length p, by dynamic programming over (residual weights, window
// suffix) states, advanced level by level so only two levels are live at
// once. p defaults to derive_length; a mismatch with the derived length
// yields 0. Throws budget_exceeded when the run exceeds state_cap states
// in total, which also bounds memory.
BigCount dp_count(const SeqGraph &g, int w,
                  std::optional<long long> p = std::nullopt,
                  std::size_t state_cap = 50'000'000,
                  DpStats *stats = nullptr);

// Up to `limit` realizations in lexicographic vertex-id order, each one
// re-verified against builder::realizes. Same pruning as dp_count, plain
// depth-first search; node_cap expansions before budget_exceeded.
std::vector<Sequence> dp_enumerate(const SeqGraph &g, int w,
                                   std::size_t limit,
                                   std::optional<long long> p = std::nullopt,
                                   std::size_t node_cap = 50'000'000);

}  // namespace seqgraph
