#pragma once

#include <cstddef>
#include <string>

#include "seqgraph/core.hpp"

namespace seqgraph {

// Emitted integer program in LP text format, plus the shape numbers the
// model was built from. Window pairs C are the position pairs (i,j) with
// i < j <= i + w - 1 over 1..p; y variables exist per arc orientation and
// window pair.
struct IlpModel {
    long long p = 0;
    std::size_t window_pairs = 0;
    std::size_t x_vars = 0, y_vars = 0;
    std::size_t one_hots = 0, linkings = 0, exclusions = 0, floors = 0;
    std::string text;
};

// Builds the realizability program for a weighted graph: minimize the number
// of realized window pairs subject to one symbol per position, y linked to
// its two position variables, non-edges excluded, and every edge meeting its
// weight. The model attains objective total_weight iff g is w-realizable.
// Throws no_valid_length when no realization length exists.
IlpModel emit_ilp(const SeqGraph &g, int w);

// Induces the 0/1 assignment of x over the positions and checks every
// constraint of the emitted model plus objective == total weight. Throws
// length_mismatch unless |x| equals the derived length.
bool verify_assignment(const SeqGraph &g, int w, const Sequence &x);

}  // namespace seqgraph
