#include "seqgraph/oracle.hpp"

#include <algorithm>

#include "seqgraph/builder.hpp"
#include "seqgraph/dpcount.hpp"

namespace seqgraph {

namespace {

struct Searcher {
    const SeqGraph &g;
    const SearchOptions &opts;
    SearchResult res;

    int n;
    int max_len;  // opts.max_len, tightened to derive_length when weighted
    Weight total_weight = 0;
    Weight used_weight = 0;
    size_t edges_done = 0;  // edges realized (unweighted: at least once)
    int present = 0;        // distinct vertices in the partial sequence

    std::vector<VertexId> seq;
    std::vector<VertexId> pinned;
    std::vector<int> occur;  // per-vertex occurrence count
    std::map<std::pair<VertexId, VertexId>, Weight> used;

    bool stop = false;

    explicit Searcher(const SeqGraph &graph, const SearchOptions &o)
        : g(graph), opts(o), n(graph.n()), max_len(o.max_len),
          occur(graph.n(), 0) {
        total_weight = g.total_weight();
        if (g.weighted) {
            auto p = derive_length(g, opts.w);
            max_len = p && *p <= max_len ? static_cast<int>(*p) : 0;
        }
        if (!opts.prefix.empty()) {
            auto ids = to_ids(opts.prefix, g);
            if (!ids)
                throw Error(ErrorCode::invalid_argument,
                            "prefix token is not a vertex label");
            pinned = *ids;
        }
    }

    bool is_hit() const {
        if (present != n)
            return false;
        if (g.weighted)
            return used_weight == total_weight;
        return edges_done == g.edges.size();
    }

    void record() {
        res.count++;
        if (opts.mode == SearchMode::first || opts.mode == SearchMode::all)
            res.witnesses.push_back(to_tokens(seq, g));
        if (opts.mode == SearchMode::first)
            stop = true;
    }

    void extend() {
        if (!seq.empty() && is_hit()) {
            record();
            if (stop)
                return;
        }
        if (static_cast<int>(seq.size()) >= max_len)
            return;
        int len = static_cast<int>(seq.size());
        int lo = std::max(0, len - (opts.w - 1));
        VertexId vbegin = 0, vend = n;
        if (len < static_cast<int>(pinned.size())) {
            vbegin = pinned[len];
            vend = vbegin + 1;
        }
        for (VertexId v = vbegin; v < vend && !stop; v++) {
            // new window pairs (seq[i], v) must all be edges with capacity
            bool ok = true;
            int taken = 0;  // pairs committed so far (for rollback)
            for (int i = lo; i < len; i++) {
                auto key = g.key(seq[i], v);
                auto it = g.edges.find(key);
                if (it == g.edges.end()) {
                    ok = false;
                    break;
                }
                Weight &u = used[key];
                if (g.weighted && u + 1 > it->second) {
                    ok = false;
                    break;
                }
                if (u == 0)
                    edges_done++;
                u++;
                used_weight++;
                taken++;
            }
            if (ok) {
                if (++res.nodes > opts.node_budget)
                    throw Error(ErrorCode::budget_exceeded,
                                "oracle node budget exceeded");
                seq.push_back(v);
                if (occur[v]++ == 0)
                    present++;
                extend();
                if (--occur[v] == 0)
                    present--;
                seq.pop_back();
            }
            for (int i = lo + taken - 1; i >= lo; i--) {
                auto key = g.key(seq[i], v);
                Weight &u = used[key];
                u--;
                used_weight--;
                if (u == 0)
                    edges_done--;
            }
        }
    }
};

}  // namespace

SearchResult search(const SeqGraph &g, const SearchOptions &opts) {
    if (opts.w < 2)
        throw Error(ErrorCode::invalid_argument, "window must be >= 2");
    if (opts.max_len < 1)
        throw Error(ErrorCode::invalid_argument, "max_len must be >= 1");
    Searcher s(g, opts);
    s.extend();
    return s.res;
}

namespace {

struct EulerCounter {
    const MultiGraph &m;
    std::vector<char> used;
    size_t remaining;
    mpz_class count = 0;
    // incidence[v] lists instance indices touching v
    std::vector<std::vector<int>> incidence;

    explicit EulerCounter(const MultiGraph &mg)
        : m(mg), used(mg.edges.size(), 0), remaining(mg.edges.size()),
          incidence(mg.n) {
        for (int i = 0; i < static_cast<int>(m.edges.size()); i++) {
            auto [u, v] = m.edges[i];
            if (m.directed) {
                incidence[u].push_back(i);
            } else {
                incidence[u].push_back(i);
                if (v != u)
                    incidence[v].push_back(i);
            }
        }
    }

    void walk(VertexId at) {
        if (remaining == 0) {
            count++;
            return;
        }
        for (int i : incidence[at]) {
            if (used[i])
                continue;
            auto [u, v] = m.edges[i];
            VertexId next = (u == at) ? v : u;
            used[i] = 1;
            remaining--;
            walk(next);
            used[i] = 0;
            remaining++;
        }
    }
};

}  // namespace

BigCount eulerian_paths(const MultiGraph &m) {
    if (m.edges.empty())
        return m.n == 1 ? BigCount(1ul) : BigCount(0ul);
    EulerCounter c(m);
    for (VertexId v = 0; v < m.n; v++)
        c.walk(v);
    return BigCount(c.count);
}

}  // namespace seqgraph
