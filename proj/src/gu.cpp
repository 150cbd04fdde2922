#include "seqgraph/gu.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "seqgraph/builder.hpp"
#include "seqgraph/oracle.hpp"

namespace seqgraph {

namespace {

void check_gu(const SeqGraph &g) {
    if (g.directed || g.weighted)
        throw Error(ErrorCode::invalid_argument,
                    "expected an undirected unweighted graph");
}

}  // namespace

AuxGraph build_aux(const SeqGraph &g, int k, std::size_t cap) {
    check_gu(g);
    if (k < 1)
        throw Error(ErrorCode::invalid_argument, "window reach must be >= 1");
    AuxGraph h;
    h.k = k;
    int n = g.n();

    // Valid windows, extended one symbol at a time in id order so the
    // result comes out lexicographically sorted.
    AuxVertex tuple;
    auto extend = [&](auto &&self, int depth) -> void {
        if (depth == k) {
            if (h.vertices.size() >= cap)
                throw Error(ErrorCode::size_limit, "aux graph exceeds cap");
            h.vertices.push_back(tuple);
            return;
        }
        for (VertexId v = 0; v < n; v++) {
            bool ok = true;
            for (VertexId u : tuple)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            tuple.push_back(v);
            self(self, depth + 1);
            tuple.pop_back();
        }
    };
    extend(extend, 0);

    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(h.vertices.size()); i++) {
        const AuxVertex &u = h.vertices[i];
        for (VertexId v = 0; v < n; v++) {
            bool ok = true;
            for (VertexId x : u)
                if (!g.has_edge(x, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            AuxVertex shifted(u.begin() + 1, u.end());
            shifted.push_back(v);
            auto it = std::lower_bound(h.vertices.begin(), h.vertices.end(),
                                       shifted);
            int j = static_cast<int>(it - h.vertices.begin());
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    h.edges.assign(edges.begin(), edges.end());
    return h;
}

CoverMap cover_map(const SeqGraph &g, const AuxGraph &h) {
    CoverMap cm;
    for (int i = 0; i < static_cast<int>(h.vertices.size()); i++) {
        const AuxVertex &y = h.vertices[i];
        std::set<std::pair<VertexId, VertexId>> keys;
        for (std::size_t a = 0; a < y.size(); a++)
            for (std::size_t b = a + 1; b < y.size(); b++)
                keys.insert(g.key(y[a], y[b]));
        for (const auto &key : keys)
            cm.by_vertex[key].push_back(i);
    }
    auto shift_pair = [&](const AuxVertex &u, const AuxVertex &v) {
        return std::equal(u.begin() + 1, u.end(), v.begin()) &&
               g.has_edge(u.front(), v.back());
    };
    for (int e = 0; e < static_cast<int>(h.edges.size()); e++) {
        auto [i, j] = h.edges[e];
        const AuxVertex &u = h.vertices[i], &v = h.vertices[j];
        std::set<std::pair<VertexId, VertexId>> keys;
        if (shift_pair(u, v))
            keys.insert(g.key(u.front(), v.back()));
        if (shift_pair(v, u))
            keys.insert(g.key(v.front(), u.back()));
        for (const auto &key : keys)
            cm.by_edge[key].push_back(e);
    }
    return cm;
}

Sequence underlying_sequence(const SeqGraph &g, int k,
                             const std::vector<AuxVertex> &walk) {
    check_gu(g);
    if (walk.empty())
        throw Error(ErrorCode::invalid_argument, "empty walk");
    for (const AuxVertex &y : walk) {
        if (static_cast<int>(y.size()) != k)
            throw Error(ErrorCode::not_a_walk, "window of the wrong width");
        for (std::size_t a = 0; a < y.size(); a++) {
            if (y[a] < 0 || y[a] >= g.n())
                throw Error(ErrorCode::not_a_walk, "unknown vertex in window");
            for (std::size_t b = a + 1; b < y.size(); b++)
                if (!g.has_edge(y[a], y[b]))
                    throw Error(ErrorCode::not_a_walk,
                                "window pair is not an edge");
        }
    }

    std::vector<VertexId> ids = walk.front();
    auto forward = [&](const AuxVertex &u, const AuxVertex &v) {
        return std::equal(u.begin() + 1, u.end(), v.begin()) &&
               g.has_edge(u.front(), v.back());
    };
    for (std::size_t t = 1; t < walk.size(); t++) {
        const AuxVertex &u = walk[t - 1], &v = walk[t];
        if (forward(u, v))
            ids.push_back(v.back());
        else if (forward(v, u))
            ids.insert(ids.end(), v.begin(), v.end());
        else
            throw Error(ErrorCode::not_a_walk, "consecutive windows not adjacent");
    }
    return to_tokens(ids, g);
}

namespace {

// Realizations shorter than w-1 lie below the window width, so every pair
// of positions must be an edge; enumeration in id order keeps the first
// hit deterministic.
std::optional<Sequence> short_witness(const SeqGraph &g, int w) {
    int n = g.n();
    for (int len = 1; len <= w - 2; len++) {
        if (n > len)
            continue;
        std::vector<VertexId> ids;
        auto rec = [&](auto &&self) -> std::optional<Sequence> {
            if (static_cast<int>(ids.size()) == len) {
                Sequence x = to_tokens(ids, g);
                if (realizes(x, g, w))
                    return x;
                return std::nullopt;
            }
            for (VertexId v = 0; v < n; v++) {
                ids.push_back(v);
                auto hit = self(self);
                ids.pop_back();
                if (hit)
                    return hit;
            }
            return std::nullopt;
        };
        if (auto hit = rec(rec))
            return hit;
    }
    return std::nullopt;
}

// There-and-back traversal of one component: every edge is crossed and
// returned (loops crossed once), so the walk realizes the component's full
// cover. Iterative to keep the stack flat on big aux graphs.
std::vector<AuxVertex> component_walk(const AuxGraph &h, int start,
                                      const std::vector<std::vector<int>> &adj,
                                      std::vector<char> &edge_done) {
    std::vector<AuxVertex> walk{h.vertices[start]};
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    while (!stack.empty()) {
        auto &[u, at] = stack.back();
        if (at == adj[u].size()) {
            stack.pop_back();
            if (!stack.empty())
                walk.push_back(h.vertices[stack.back().first]);
            continue;
        }
        int e = adj[u][at++];
        if (edge_done[e])
            continue;
        edge_done[e] = 1;
        auto [a, b] = h.edges[e];
        int x = a == u ? b : a;
        walk.push_back(h.vertices[x]);
        if (x == u)
            continue;  // loop: crossing it once covers its pair
        stack.push_back({x, 0});
    }
    return walk;
}

}  // namespace

std::optional<Sequence> gu_realizable(const SeqGraph &g, int w,
                                      std::size_t cap) {
    check_gu(g);
    if (w < 2)
        throw Error(ErrorCode::invalid_argument, "window must be >= 2");
    int n = g.n();
    if (n == 0)
        return std::nullopt;
    if (auto hit = short_witness(g, w))
        return hit;
    // From here every window holds w-1 symbols, so any realization keeps
    // all vertices next to an edge and inside one component.
    if (n >= 2)
        for (VertexId v = 0; v < n; v++)
            if (g.edge_free(v))
                return std::nullopt;

    int k = w - 1;
    AuxGraph h = build_aux(g, k, cap);
    int hn = static_cast<int>(h.vertices.size());
    std::vector<std::vector<int>> adj(hn);
    for (int e = 0; e < static_cast<int>(h.edges.size()); e++) {
        auto [i, j] = h.edges[e];
        adj[i].push_back(e);
        if (j != i)
            adj[j].push_back(e);
    }

    // Components in order of their lexicographically least window.
    std::vector<int> comp(hn, -1);
    int comps = 0;
    for (int s = 0; s < hn; s++) {
        if (comp[s] != -1)
            continue;
        std::vector<int> stack{s};
        comp[s] = comps;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : adj[u]) {
                auto [a, b] = h.edges[e];
                int x = a == u ? b : a;
                if (comp[x] == -1) {
                    comp[x] = comps;
                    stack.push_back(x);
                }
            }
        }
        comps++;
    }

    CoverMap cm = cover_map(g, h);
    for (int c = 0; c < comps; c++) {
        std::set<std::pair<VertexId, VertexId>> covered;
        std::vector<char> has_vertex(n, 0);
        int start = -1;
        for (int i = 0; i < hn; i++) {
            if (comp[i] != c)
                continue;
            if (start == -1)
                start = i;
            for (VertexId v : h.vertices[i])
                has_vertex[v] = 1;
        }
        for (const auto &[key, pi] : g.edges) {
            (void)pi;
            bool hit = false;
            if (auto it = cm.by_vertex.find(key); it != cm.by_vertex.end())
                for (int i : it->second)
                    if (comp[i] == c) {
                        hit = true;
                        break;
                    }
            if (!hit)
                if (auto it = cm.by_edge.find(key); it != cm.by_edge.end())
                    for (int e : it->second)
                        if (comp[h.edges[e].first] == c) {
                            hit = true;
                            break;
                        }
            if (hit)
                covered.insert(key);
        }
        if (covered.size() != g.edges.size())
            continue;
        if (std::count(has_vertex.begin(), has_vertex.end(), 1) != n)
            continue;

        std::vector<char> edge_done(h.edges.size(), 0);
        auto walk = component_walk(h, start, adj, edge_done);
        Sequence x = underlying_sequence(g, k, walk);
        if (!realizes(x, g, w))
            throw std::logic_error("component walk is not a realization");
        return x;
    }
    return std::nullopt;
}

BigCount gu_count_bounded(const SeqGraph &g, int w, int max_len,
                          long long node_budget) {
    check_gu(g);
    SearchOptions opts;
    opts.w = w;
    opts.mode = SearchMode::count;
    opts.max_len = max_len;
    opts.node_budget = node_budget;
    return BigCount(search(g, opts).count);
}

std::string aux_to_dot(const SeqGraph &g, const AuxGraph &h) {
    auto name = [&](const AuxVertex &y) {
        std::string s;
        for (std::size_t i = 0; i < y.size(); i++) {
            if (i)
                s += ' ';
            s += g.labels[y[i]];
        }
        return s;
    };
    std::ostringstream out;
    out << "graph aux {\n";
    for (const AuxVertex &y : h.vertices)
        out << "  \"" << name(y) << "\";\n";
    for (auto [i, j] : h.edges)
        out << "  \"" << name(h.vertices[i]) << "\" -- \""
            << name(h.vertices[j]) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace seqgraph
