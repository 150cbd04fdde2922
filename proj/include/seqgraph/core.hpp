#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seqgraph {

using VertexId = int;
using Weight = long long;

enum class ErrorCode {
    parse_error,
    invalid_argument,
    budget_exceeded,
    size_limit,
    not_a_walk,
    no_valid_length,
    length_mismatch,
    unsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Exact nonnegative integer count, or infinity. Infinity is absorbing under
// addition and multiplication.
class BigCount {
public:
    BigCount() : value_(0) {}
    BigCount(unsigned long v) : value_(v) {}
    explicit BigCount(mpz_class v);
    static BigCount infinity();

    bool is_infinite() const { return infinite_; }
    const mpz_class &value() const;  // throws when infinite
    bool positive() const { return infinite_ || value_ > 0; }

    BigCount &operator+=(const BigCount &o);
    BigCount &operator*=(const BigCount &o);
    friend BigCount operator+(BigCount a, const BigCount &b) { return a += b; }
    friend BigCount operator*(BigCount a, const BigCount &b) { return a *= b; }
    bool operator==(const BigCount &o) const;
    bool operator!=(const BigCount &o) const { return !(*this == o); }

    std::string str() const;  // decimal digits, or "inf"

private:
    bool infinite_ = false;
    mpz_class value_;
};

// A sequence graph: vertex set with labels, plus an edge map keyed by vertex
// pairs. Directed graphs key arcs as ordered pairs; undirected graphs store
// the canonical (min,max) pair. Weights are co-occurrence counts (always 1
// in unweighted mode).
struct SeqGraph {
    bool directed = false;
    bool weighted = false;
    std::vector<std::string> labels;
    std::map<std::pair<VertexId, VertexId>, Weight> edges;

    int n() const { return static_cast<int>(labels.size()); }

    VertexId add_vertex(const std::string &label = "");
    std::pair<VertexId, VertexId> key(VertexId u, VertexId v) const;
    void add_edge(VertexId u, VertexId v, Weight pi = 1);
    bool has_edge(VertexId u, VertexId v) const;
    Weight weight_of(VertexId u, VertexId v) const;  // 0 when absent
    Weight total_weight() const;
    bool edge_free(VertexId v) const;  // no incident edge (loops included)

    bool operator==(const SeqGraph &) const = default;
};

SeqGraph make_graph(int n, bool directed, bool weighted);

// Index of labels; throws on duplicate labels.
std::map<std::string, VertexId> label_index(const SeqGraph &g);

using Sequence = std::vector<std::string>;

// Multigraph over the same dense vertex ids: parallel edges kept as
// individual instances (undirected instances stored canonically).
struct MultiGraph {
    bool directed = false;
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;

    void add_edge(VertexId u, VertexId v);
    bool operator==(const MultiGraph &) const = default;
};

// Expansion of a weighted graph into parallel edge copies.
MultiGraph psi(const SeqGraph &g);

enum class EulerClass { euler_cycle, semi_euler, none };

// Classification for Eulerian circuits/paths. Vertices without incident
// edges are ignored for the connectivity requirement; a self-loop adds two
// to an undirected degree and one to each of in/out.
EulerClass eulerian_class(const MultiGraph &m);

// Strongly connected components and the condensation digraph, component ids
// in topological order (sources first). arc_multiplicity counts distinct
// original arcs between two components.
struct Condensation {
    int num_comps = 0;
    std::vector<int> comp;
    std::map<std::pair<int, int>, int> arcs;
};

Condensation scc_condense(const SeqGraph &g);  // directed only

// ---- text formats ----
//
// Graph files:
//   sg <directed|undirected> <weighted|unweighted> <n>
//   v <id> <label>        (optional; default label is the decimal id)
//   e <u> <v> [pi]        (pi only in weighted mode; duplicates are errors)
// '#' starts a comment line. Sequence files hold one whitespace-separated
// token sequence per line.

SeqGraph parse_graph(std::istream &in);
SeqGraph parse_graph_string(const std::string &text);
void write_graph(std::ostream &out, const SeqGraph &g);
std::string graph_to_string(const SeqGraph &g);

std::vector<Sequence> parse_sequences(std::istream &in);
std::string sequence_to_string(const Sequence &x);

}  // namespace seqgraph
