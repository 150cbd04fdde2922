#include "seqgraph/builder.hpp"

#include <algorithm>

namespace seqgraph {

std::map<std::pair<VertexId, VertexId>, Weight>
build_pairs(const std::vector<VertexId> &ids, int w, bool directed) {
    std::map<std::pair<VertexId, VertexId>, Weight> pairs;
    int p = static_cast<int>(ids.size());
    for (int i = 0; i < p; i++) {
        int hi = std::min(p - 1, i + w - 1);
        for (int j = i + 1; j <= hi; j++) {
            VertexId u = ids[i], v = ids[j];
            if (!directed && u > v)
                std::swap(u, v);
            pairs[{u, v}]++;
        }
    }
    return pairs;
}

SeqGraph build(const Sequence &x, const BuildOptions &opts) {
    if (opts.w < 2)
        throw Error(ErrorCode::invalid_argument, "window must be >= 2");
    if (x.empty())
        throw Error(ErrorCode::invalid_argument, "empty sequence");
    SeqGraph g;
    g.directed = opts.directed;
    g.weighted = opts.weighted;
    std::map<std::string, VertexId> seen;
    std::vector<VertexId> ids;
    ids.reserve(x.size());
    for (const auto &t : x) {
        auto it = seen.find(t);
        if (it == seen.end())
            it = seen.emplace(t, g.add_vertex(t)).first;
        ids.push_back(it->second);
    }
    auto pairs = build_pairs(ids, opts.w, opts.directed);
    for (const auto &[e, c] : pairs)
        g.edges[e] = opts.weighted ? c : 1;
    return g;
}

std::optional<std::vector<VertexId>> to_ids(const Sequence &x, const SeqGraph &g) {
    auto idx = label_index(g);
    std::vector<VertexId> ids;
    ids.reserve(x.size());
    for (const auto &t : x) {
        auto it = idx.find(t);
        if (it == idx.end())
            return std::nullopt;
        ids.push_back(it->second);
    }
    return ids;
}

Sequence to_tokens(const std::vector<VertexId> &ids, const SeqGraph &g) {
    Sequence x;
    x.reserve(ids.size());
    for (VertexId v : ids) {
        if (v < 0 || v >= g.n())
            throw Error(ErrorCode::invalid_argument, "vertex id out of range");
        x.push_back(g.labels[v]);
    }
    return x;
}

bool realizes(const Sequence &x, const SeqGraph &g, int w) {
    if (w < 2)
        throw Error(ErrorCode::invalid_argument, "window must be >= 2");
    if (x.empty())
        return false;
    auto ids = to_ids(x, g);
    if (!ids)
        return false;
    std::vector<char> present(g.n(), 0);
    for (VertexId v : *ids)
        present[v] = 1;
    if (std::find(present.begin(), present.end(), 0) != present.end())
        return false;
    auto pairs = build_pairs(*ids, w, g.directed);
    if (pairs.size() != g.edges.size())
        return false;
    for (const auto &[e, c] : pairs) {
        auto it = g.edges.find(e);
        if (it == g.edges.end())
            return false;
        if (g.weighted && it->second != c)
            return false;
    }
    return true;
}

}  // namespace seqgraph
