#pragma once

#include <utility>
#include <vector>

#include "seqgraph/core.hpp"

namespace seqgraph {

// Hamiltonian-cycle-to-path transforms. hp1 splits vertex 0 of a directed
// loop-free graph into an outgoing copy (a source) and an incoming copy;
// hp2 duplicates vertex 0 of an undirected loop-free graph and attaches
// pendant vertices s and t, leaving two degree-1 vertices. In both, the
// output has a Hamiltonian path (from the source / between the pendants)
// iff the input has a Hamiltonian cycle.
SeqGraph hp1(const SeqGraph &g);
SeqGraph hp2(const SeqGraph &g);

// G' = G plus two self-looped vertices adjacent to all of V (not to each
// other). G has a k-clique iff G' is (k+1)-realizable; the paired window
// size k+1 is returned alongside.
std::pair<SeqGraph, int> clique_gadget(const SeqGraph &g, int k);

// A realizability instance with compulsory arcs: every compulsory arc must
// be realized, the rest may be. `prefix` is the forced starting sequence P.
struct OptionalInstance {
    int w = 3;
    SeqGraph graph;  // directed unweighted
    std::vector<std::pair<VertexId, VertexId>> compulsory;
    Sequence prefix;
};

// Padding-grid construction: two copies of every vertex of a loop-free
// source-rooted digraph, compulsory arcs between the copies, and w-2 rows
// of grid vertices over 2n+1 columns wired so a solution must walk the
// columns left to right. Solvable iff g has a Hamiltonian path from its
// source.
OptionalInstance optional_instance(const SeqGraph &g, int w);

// Plain-realizability chain for an optional instance: the optional arcs are
// strung on separator blocks whose forced prefix Z' pins the realization
// structure. `prefix` extends Z' with the instance's own P.
struct DuChain {
    SeqGraph graph;  // directed unweighted
    Sequence prefix;
};

DuChain du_chain(const OptionalInstance &inst);

// Weighted Hamiltonian-path gadget over an undirected loop-free graph with
// minimum degree 1 and at least two degree-1 vertices (s, t = the two
// smallest). The directed gadget (dw_ham) or its orientation-summed
// undirected version (gw_ham) is w-realizable iff g has a Hamiltonian
// s-t path. ham_witness spells out the start/path/queue realization for a
// given Hamiltonian path (as vertex ids of g); it realizes both gadgets.
SeqGraph dw_ham(const SeqGraph &g, int w);
SeqGraph gw_ham(const SeqGraph &g, int w);
Sequence ham_witness(const SeqGraph &g, int w,
                     const std::vector<VertexId> &path);

// Rank-grid digraph on 3kn+1 vertices whose shortest realization at window
// k+1 has length at least 2k*n^k. Filtered mode walks the counting witness
// (length 2k*n^k + k + 1) and keeps exactly the realized arcs, so the
// result is realizable by construction and the witness is returned with it.
struct ExpoInstance {
    SeqGraph graph;
    Sequence witness;  // filtered mode only
};

ExpoInstance expo(int n, int k, bool filtered, long long cap = 1'000'000);

}  // namespace seqgraph
