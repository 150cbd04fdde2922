#include "seqgraph/w2.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "seqgraph/builder.hpp"

namespace seqgraph {

namespace {

void need(const SeqGraph &g, bool directed, bool weighted, const char *who) {
    if (g.directed != directed || g.weighted != weighted)
        throw Error(ErrorCode::invalid_argument,
                    std::string(who) + ": wrong graph variant");
}

bool connected_all(const SeqGraph &g) {
    int n = g.n();
    if (n <= 1)
        return true;
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto &[e, pi] : g.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                found++;
                stack.push_back(u);
            }
    }
    return found == n;
}

bool condensation_is_simple_path(const Condensation &c) {
    if (static_cast<int>(c.arcs.size()) != c.num_comps - 1)
        return false;
    for (const auto &[a, mult] : c.arcs)
        if (a.second != a.first + 1 || mult != 1)
            return false;
    return true;
}

mpz_class factorial(long long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

// Fraction-free Bareiss determinant; matrix is consumed.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0)
        return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; k++) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; r++)
                if (a[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Spanning arborescence count of a directed multigraph given as an arc
// list (root-independent for the Eulerian graphs this is called on).
mpz_class arborescences(int n, const std::vector<std::pair<VertexId, VertexId>> &arcs) {
    if (n <= 1)
        return 1;
    std::vector<std::vector<mpz_class>> L(n, std::vector<mpz_class>(n, 0));
    for (auto [u, v] : arcs) {
        if (u == v)
            continue;  // loops cancel in the Laplacian
        L[u][u] += 1;
        L[u][v] -= 1;
    }
    std::vector<std::vector<mpz_class>> minor(n - 1, std::vector<mpz_class>(n - 1));
    for (int i = 1; i < n; i++)
        for (int j = 1; j < n; j++)
            minor[i - 1][j - 1] = L[i][j];
    mpz_class d = det_bareiss(std::move(minor));
    return d < 0 ? mpz_class(-d) : d;
}

}  // namespace

bool gu2_realizable(const SeqGraph &g) {
    need(g, false, false, "gu2_realizable");
    return connected_all(g);
}

bool du2_realizable(const SeqGraph &g) {
    need(g, true, false, "du2_realizable");
    return condensation_is_simple_path(scc_condense(g));
}

BigCount du2_count(const SeqGraph &g) {
    need(g, true, false, "du2_count");
    Condensation c = scc_condense(g);
    if (!condensation_is_simple_path(c))
        return 0;
    if (c.num_comps != g.n())
        return BigCount::infinity();  // some component holds a cycle
    for (const auto &[e, pi] : g.edges)
        if (e.first == e.second)
            return BigCount::infinity();  // self-loop can be pumped
    return 1;  // the graph is a directed path
}

bool w2_weighted_realizable(const SeqGraph &g) {
    if (!g.weighted)
        throw Error(ErrorCode::invalid_argument,
                    "w2_weighted_realizable: weighted graph expected");
    if (g.n() >= 2)
        for (VertexId v = 0; v < g.n(); v++)
            if (g.edge_free(v))
                return false;
    return eulerian_class(psi(g)) != EulerClass::none;
}

BigCount dw2_count(const SeqGraph &g) {
    need(g, true, true, "dw2_count");
    if (!w2_weighted_realizable(g))
        return 0;
    if (g.edges.empty())
        return 1;  // single vertex, empty sequence graph "v"
    MultiGraph m = psi(g);
    EulerClass cls = eulerian_class(m);
    auto aug = m.edges;
    if (cls == EulerClass::semi_euler) {
        std::vector<long long> in(m.n, 0), out(m.n, 0);
        for (auto [u, v] : m.edges) {
            out[u]++;
            in[v]++;
        }
        VertexId start = -1, end = -1;
        for (VertexId v = 0; v < m.n; v++) {
            if (out[v] - in[v] == 1)
                start = v;
            else if (in[v] - out[v] == 1)
                end = v;
        }
        aug.push_back({end, start});  // close the path into a circuit
    }
    mpz_class res = arborescences(m.n, aug);
    std::vector<long long> indeg(m.n, 0);
    for (auto [u, v] : aug) {
        (void)u;
        indeg[v]++;
    }
    for (VertexId v = 0; v < m.n; v++)
        res *= factorial(indeg[v] - 1);
    if (cls == EulerClass::euler_cycle)
        res *= static_cast<unsigned long>(m.edges.size());
    mpz_class denom = 1;
    for (const auto &[e, pi] : g.edges)
        denom *= factorial(pi);
    assert(res % denom == 0);
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), denom.get_mpz_t());
    return BigCount(out);
}

namespace {

struct GwCounter {
    const SeqGraph &g;
    long long budget;
    long long nodes = 0;
    Weight remaining;
    std::map<std::pair<VertexId, VertexId>, Weight> residual;
    std::vector<std::vector<std::pair<VertexId, std::pair<VertexId, VertexId>>>> adj;
    mpz_class count = 0;

    GwCounter(const SeqGraph &graph, long long node_budget)
        : g(graph), budget(node_budget), remaining(graph.total_weight()),
          adj(graph.n()) {
        for (const auto &[e, pi] : g.edges) {
            residual[e] = pi;
            adj[e.first].push_back({e.second, e});
            if (e.second != e.first)
                adj[e.second].push_back({e.first, e});
        }
    }

    void walk(VertexId at) {
        if (remaining == 0) {
            count++;
            return;
        }
        for (const auto &[next, key] : adj[at]) {
            Weight &r = residual[key];
            if (r == 0)
                continue;
            if (++nodes > budget)
                throw Error(ErrorCode::budget_exceeded,
                            "gw2_count node budget exceeded");
            r--;
            remaining--;
            walk(next);
            r++;
            remaining++;
        }
    }
};

}  // namespace

BigCount gw2_count(const SeqGraph &g, long long node_budget) {
    need(g, false, true, "gw2_count");
    if (!w2_weighted_realizable(g))
        return 0;
    if (g.edges.empty())
        return 1;
    GwCounter c(g, node_budget);
    for (VertexId v = 0; v < g.n(); v++)
        c.walk(v);
    return BigCount(c.count);
}

// ---- witnesses ----

namespace {

// Undirected unweighted: walk every edge there and back.
Sequence gu2_walk(const SeqGraph &g) {
    int n = g.n();
    std::vector<std::vector<VertexId>> adj(n);
    std::set<std::pair<VertexId, VertexId>> unused;
    for (const auto &[e, pi] : g.edges) {
        unused.insert(e);
        adj[e.first].push_back(e.second);
        if (e.second != e.first)
            adj[e.second].push_back(e.first);
    }
    for (auto &a : adj)
        std::sort(a.begin(), a.end());
    std::vector<VertexId> walk{0};
    // iterative there-and-back DFS
    std::vector<std::pair<VertexId, size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto &[v, next] = stack.back();
        bool moved = false;
        while (next < adj[v].size()) {
            VertexId u = adj[v][next++];
            auto key = g.key(v, u);
            auto it = unused.find(key);
            if (it == unused.end())
                continue;
            unused.erase(it);
            walk.push_back(u);
            if (u == v)
                continue;  // loop: stay in place
            stack.push_back({u, 0});
            moved = true;
            break;
        }
        if (!moved) {
            stack.pop_back();
            if (!stack.empty())
                walk.push_back(stack.back().first);
        }
    }
    return to_tokens(walk, g);
}

// Shortest arc path to `to` inside one strongly connected component (BFS,
// smallest-id tie break); empty when already there.
std::vector<VertexId> comp_path(const std::vector<std::vector<VertexId>> &adj,
                                const std::vector<int> &comp, VertexId from,
                                VertexId to) {
    if (from == to)
        return {};
    std::vector<VertexId> parent(adj.size(), -1);
    std::vector<VertexId> queue{from};
    parent[from] = from;
    for (size_t qi = 0; qi < queue.size(); qi++) {
        VertexId v = queue[qi];
        for (VertexId u : adj[v]) {
            if (comp[u] != comp[from] || parent[u] != -1)
                continue;
            parent[u] = v;
            if (u == to) {
                std::vector<VertexId> path;
                for (VertexId x = to; x != from; x = parent[x])
                    path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(u);
        }
    }
    throw std::logic_error("comp_path: target unreachable");
}

// Directed unweighted: cover each component's arcs, then cross the unique
// bridge to the next component.
Sequence du2_walk(const SeqGraph &g) {
    int n = g.n();
    Condensation c = scc_condense(g);
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto &[e, pi] : g.edges)
        adj[e.first].push_back(e.second);
    for (auto &a : adj)
        std::sort(a.begin(), a.end());

    // per component: internal arcs to cover, and the outgoing bridge
    std::vector<std::vector<std::pair<VertexId, VertexId>>> internal(c.num_comps);
    std::vector<std::pair<VertexId, VertexId>> bridge(c.num_comps, {-1, -1});
    for (const auto &[e, pi] : g.edges) {
        if (c.comp[e.first] == c.comp[e.second])
            internal[c.comp[e.first]].push_back(e);
        else
            bridge[c.comp[e.first]] = e;
    }
    VertexId at = -1;
    for (VertexId v = 0; v < n; v++)
        if (c.comp[v] == 0) {
            at = v;
            break;
        }
    std::vector<VertexId> seq{at};
    auto goto_vertex = [&](VertexId target) {
        for (VertexId x : comp_path(adj, c.comp, at, target))
            seq.push_back(x);
        at = target;
    };
    for (int cc = 0; cc < c.num_comps; cc++) {
        auto &arcs = internal[cc];
        std::sort(arcs.begin(), arcs.end());
        for (auto [u, v] : arcs) {
            goto_vertex(u);
            seq.push_back(v);
            at = v;
        }
        if (cc + 1 < c.num_comps) {
            auto [bu, bv] = bridge[cc];
            goto_vertex(bu);
            seq.push_back(bv);
            at = bv;
        }
    }
    return to_tokens(seq, g);
}

// Weighted (either orientation): Hierholzer Eulerian path on psi.
Sequence weighted_walk(const SeqGraph &g) {
    if (g.edges.empty())
        return to_tokens({0}, g);
    MultiGraph m = psi(g);
    int n = m.n;
    std::vector<std::vector<std::pair<VertexId, int>>> inc(n);
    for (int i = 0; i < static_cast<int>(m.edges.size()); i++) {
        auto [u, v] = m.edges[i];
        inc[u].push_back({v, i});
        if (!m.directed && v != u)
            inc[v].push_back({u, i});
    }
    for (auto &a : inc)
        std::sort(a.begin(), a.end());
    // start at the unbalanced vertex when the class is semi-Eulerian
    VertexId start = -1;
    if (m.directed) {
        std::vector<long long> in(n, 0), out(n, 0);
        for (auto [u, v] : m.edges) {
            out[u]++;
            in[v]++;
        }
        for (VertexId v = 0; v < n && start < 0; v++)
            if (out[v] - in[v] == 1)
                start = v;
    } else {
        std::vector<long long> deg(n, 0);
        for (auto [u, v] : m.edges) {
            deg[u]++;
            deg[v]++;
        }
        for (VertexId v = 0; v < n && start < 0; v++)
            if (deg[v] % 2)
                start = v;
    }
    if (start < 0)
        for (VertexId v = 0; v < n && start < 0; v++)
            if (!inc[v].empty())
                start = v;

    std::vector<size_t> ptr(n, 0);
    std::vector<char> used(m.edges.size(), 0);
    std::vector<VertexId> stack{start}, path;
    while (!stack.empty()) {
        VertexId v = stack.back();
        while (ptr[v] < inc[v].size() && used[inc[v][ptr[v]].second])
            ptr[v]++;
        if (ptr[v] == inc[v].size()) {
            path.push_back(v);
            stack.pop_back();
        } else {
            auto [next, inst] = inc[v][ptr[v]];
            used[inst] = 1;
            stack.push_back(next);
        }
    }
    std::reverse(path.begin(), path.end());
    return to_tokens(path, g);
}

}  // namespace

std::optional<Sequence> w2_witness(const SeqGraph &g) {
    Sequence x;
    if (!g.weighted && !g.directed) {
        if (!gu2_realizable(g))
            return std::nullopt;
        x = gu2_walk(g);
    } else if (!g.weighted && g.directed) {
        if (!du2_realizable(g))
            return std::nullopt;
        x = du2_walk(g);
    } else {
        if (!w2_weighted_realizable(g))
            return std::nullopt;
        x = weighted_walk(g);
    }
    if (!realizes(x, g, 2))
        throw std::logic_error("w2_witness: construction failed");
    return x;
}

}  // namespace seqgraph
