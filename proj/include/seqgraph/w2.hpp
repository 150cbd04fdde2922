#pragma once

#include <optional>

#include "seqgraph/core.hpp"

namespace seqgraph {

// Realizability and counting at window 2, one routine per variant. Every
// routine validates the graph's orientation/weight mode and throws
// invalid_argument on a mismatch.

// Undirected unweighted: realizable iff connected (single vertex included).
bool gu2_realizable(const SeqGraph &g);

// Directed unweighted: realizable iff the condensation is a directed path
// whose consecutive components are joined by exactly one arc.
bool du2_realizable(const SeqGraph &g);

// 0 when not realizable; 1 when the graph is a directed path (acyclic);
// infinite otherwise (some cycle can be pumped).
BigCount du2_count(const SeqGraph &g);

// Weighted, either orientation: realizable iff no vertex is edge-free
// (single-vertex graphs excepted) and the parallel-edge expansion admits an
// Eulerian circuit or path.
bool w2_weighted_realizable(const SeqGraph &g);

// Exact number of realizations of a weighted digraph, via spanning
// arborescences of the parallel-edge expansion:
//   circuit case:  |E_psi| * t(psi) * prod_v (indeg(v)-1)!  / prod_e pi_e!
//   path case:     t(psi+) * prod_v (indeg+(v)-1)!          / prod_e pi_e!
// where psi+ closes the path with one arc from its end to its start.
BigCount dw2_count(const SeqGraph &g);

// Exact number of realizations of a weighted undirected graph, by
// backtracking over the Eulerian paths of the expansion (parallel copies
// collapsed, so no final division). Throws budget_exceeded past node_budget.
BigCount gw2_count(const SeqGraph &g, long long node_budget = 10'000'000);

// A realization at window 2 for any variant, when one exists. Construction
// is direct (edge walks / Hierholzer); gw needs no search either.
std::optional<Sequence> w2_witness(const SeqGraph &g);

}  // namespace seqgraph
