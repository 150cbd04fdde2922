#include "seqgraph/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "seqgraph/builder.hpp"

namespace seqgraph {

namespace {

long long comb2(long long x) { return x * (x - 1) / 2; }

void reject_loops(const SeqGraph &g) {
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        if (key.first == key.second)
            throw Error(ErrorCode::invalid_argument, "self-loops not allowed");
    }
}

// Deterministic collision-free label: the base, with underscores appended
// until it is unused.
std::string fresh_label(std::set<std::string> &used, std::string base) {
    while (used.count(base))
        base += "_";
    used.insert(base);
    return base;
}

std::set<std::string> label_set(const SeqGraph &g) {
    return {g.labels.begin(), g.labels.end()};
}

}  // namespace

SeqGraph hp1(const SeqGraph &g) {
    if (!g.directed || g.weighted)
        throw Error(ErrorCode::invalid_argument,
                    "expected a directed unweighted graph");
    reject_loops(g);
    if (g.n() == 0)
        throw Error(ErrorCode::invalid_argument, "empty graph");

    SeqGraph out = make_graph(0, true, false);
    auto used = label_set(g);
    used.erase(g.labels[0]);
    std::string out_label = fresh_label(used, g.labels[0] + "_out");
    std::string in_label = fresh_label(used, g.labels[0] + "_in");
    out.add_vertex(out_label);
    for (int v = 1; v < g.n(); v++)
        out.add_vertex(g.labels[v]);
    VertexId split_in = out.add_vertex(in_label);
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        VertexId u = key.first, v = key.second == 0 ? split_in : key.second;
        out.add_edge(u, v);
    }
    return out;
}

SeqGraph hp2(const SeqGraph &g) {
    if (g.directed || g.weighted)
        throw Error(ErrorCode::invalid_argument,
                    "expected an undirected unweighted graph");
    reject_loops(g);
    if (g.n() == 0)
        throw Error(ErrorCode::invalid_argument, "empty graph");

    SeqGraph out = g;
    auto used = label_set(g);
    VertexId dup = out.add_vertex(fresh_label(used, g.labels[0] + "_dup"));
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        if (key.first == 0)
            out.add_edge(dup, key.second);
    }
    VertexId s = out.add_vertex(fresh_label(used, "s"));
    out.add_edge(s, 0);
    VertexId t = out.add_vertex(fresh_label(used, "t"));
    out.add_edge(t, dup);
    return out;
}

std::pair<SeqGraph, int> clique_gadget(const SeqGraph &g, int k) {
    if (g.directed || g.weighted)
        throw Error(ErrorCode::invalid_argument,
                    "expected an undirected unweighted graph");
    reject_loops(g);
    if (k < 1)
        throw Error(ErrorCode::invalid_argument, "clique size must be >= 1");

    SeqGraph out = g;
    auto used = label_set(g);
    VertexId a = out.add_vertex(fresh_label(used, "a"));
    VertexId b = out.add_vertex(fresh_label(used, "b"));
    out.add_edge(a, a);
    out.add_edge(b, b);
    for (VertexId v = 0; v < g.n(); v++) {
        out.add_edge(a, v);
        out.add_edge(b, v);
    }
    return {out, k + 1};
}

OptionalInstance optional_instance(const SeqGraph &g, int w) {
    if (!g.directed || g.weighted)
        throw Error(ErrorCode::invalid_argument,
                    "expected a directed unweighted graph");
    reject_loops(g);
    if (w < 3)
        throw Error(ErrorCode::invalid_argument, "window must be >= 3");
    int n = g.n();
    std::vector<int> indeg(n, 0);
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        indeg[key.second]++;
    }
    VertexId source = -1;
    for (VertexId v = 0; v < n && source == -1; v++)
        if (indeg[v] == 0)
            source = v;
    if (source == -1)
        throw Error(ErrorCode::invalid_argument, "no source vertex");

    OptionalInstance inst;
    inst.w = w;
    inst.graph = make_graph(0, true, false);
    auto used = std::set<std::string>{};
    int cols = 2 * n + 1, rows = w - 2;
    // Grid columns, then the two copies of every original vertex.
    std::vector<std::vector<VertexId>> X(cols + 1,
                                         std::vector<VertexId>(rows + 1));
    for (int p = 1; p <= cols; p++)
        for (int i = 1; i <= rows; i++)
            X[p][i] = inst.graph.add_vertex(fresh_label(
                used, "x_" + std::to_string(p) + "_" + std::to_string(i)));
    std::vector<VertexId> v0(n), v1(n);
    for (VertexId v = 0; v < n; v++)
        v0[v] = inst.graph.add_vertex(fresh_label(used, g.labels[v] + "_0"));
    for (VertexId v = 0; v < n; v++)
        v1[v] = inst.graph.add_vertex(fresh_label(used, g.labels[v] + "_1"));

    for (VertexId v = 0; v < n; v++) {
        inst.graph.add_edge(v0[v], v1[v]);
        inst.compulsory.push_back({v0[v], v1[v]});
    }
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        inst.graph.add_edge(v1[key.first], v0[key.second]);
    }
    for (VertexId v = 0; v < n; v++)
        for (int p = 1; p <= n; p++)
            for (int i = 1; i <= rows; i++) {
                inst.graph.add_edge(X[2 * p - 1][i], v0[v]);
                inst.graph.add_edge(v0[v], X[2 * p][i]);
                inst.graph.add_edge(X[2 * p][i], v1[v]);
                inst.graph.add_edge(v1[v], X[2 * p + 1][i]);
            }
    for (int p = 1; p <= cols; p++)
        for (int i = 1; i <= rows; i++)
            for (int j = i + 1; j <= rows; j++)
                inst.graph.add_edge(X[p][i], X[p][j]);
    for (int p = 1; p < cols; p++)
        for (int i = 1; i <= rows; i++)
            for (int j = 1; j <= i; j++)
                inst.graph.add_edge(X[p][i], X[p + 1][j]);

    for (int i = 1; i <= rows; i++)
        inst.prefix.push_back(inst.graph.labels[X[1][i]]);
    inst.prefix.push_back(inst.graph.labels[v0[source]]);
    return inst;
}

DuChain du_chain(const OptionalInstance &inst) {
    int w = inst.w;
    std::set<std::pair<VertexId, VertexId>> compulsory(inst.compulsory.begin(),
                                                       inst.compulsory.end());
    std::vector<std::pair<VertexId, VertexId>> optional;
    for (const auto &[key, pi] : inst.graph.edges) {
        (void)pi;
        if (!compulsory.count(key))
            optional.push_back(key);
    }
    int m = static_cast<int>(optional.size());

    DuChain chain;
    chain.graph = inst.graph;
    auto used = label_set(inst.graph);
    // Separator blocks: w fresh vertices before each optional arc plus one
    // fresh vertex between its endpoints, and a closing block.
    std::vector<std::vector<VertexId>> Y(m + 2, std::vector<VertexId>(w + 1));
    std::vector<VertexId> Z(m + 1);
    std::vector<VertexId> body;
    for (int p = 1; p <= m; p++) {
        for (int i = 1; i <= w; i++) {
            Y[p][i] = chain.graph.add_vertex(fresh_label(
                used, "y_" + std::to_string(p) + "_" + std::to_string(i)));
            body.push_back(Y[p][i]);
        }
        Z[p] = chain.graph.add_vertex(
            fresh_label(used, "z_" + std::to_string(p)));
        body.push_back(optional[p - 1].first);
        body.push_back(Z[p]);
        body.push_back(optional[p - 1].second);
    }
    for (int i = 1; i <= w; i++) {
        Y[m + 1][i] = chain.graph.add_vertex(fresh_label(
            used, "y_" + std::to_string(m + 1) + "_" + std::to_string(i)));
        body.push_back(Y[m + 1][i]);
    }

    int sep_base = inst.graph.n();  // every added vertex is a separator
    std::vector<VertexId> zp = body;
    auto tail = to_ids(inst.prefix, inst.graph);
    if (!tail)
        throw Error(ErrorCode::invalid_argument, "instance prefix is invalid");
    zp.insert(zp.end(), tail->begin(), tail->end());
    for (std::size_t i = 0; i < zp.size(); i++)
        for (std::size_t j = i + 1; j < std::min(zp.size(), i + w); j++)
            if (zp[i] >= sep_base || zp[j] >= sep_base)
                if (!chain.graph.has_edge(zp[i], zp[j]))
                    chain.graph.add_edge(zp[i], zp[j]);

    chain.prefix = to_tokens(zp, chain.graph);
    return chain;
}

namespace {

struct HamDegrees {
    std::vector<int> deg;
    VertexId s = -1, t = -1;
};

HamDegrees ham_degrees(const SeqGraph &g, int w) {
    if (g.directed || g.weighted)
        throw Error(ErrorCode::invalid_argument,
                    "expected an undirected unweighted graph");
    reject_loops(g);
    if (w < 3)
        throw Error(ErrorCode::invalid_argument, "window must be >= 3");
    HamDegrees d;
    d.deg.assign(g.n(), 0);
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        d.deg[key.first]++;
        d.deg[key.second]++;
    }
    for (VertexId v = 0; v < g.n(); v++) {
        if (d.deg[v] == 0)
            throw Error(ErrorCode::invalid_argument,
                        "every vertex needs an edge");
        if (d.deg[v] == 1 && d.s == -1)
            d.s = v;
        else if (d.deg[v] == 1 && d.t == -1)
            d.t = v;
    }
    if (d.t == -1)
        throw Error(ErrorCode::invalid_argument,
                    "two degree-1 vertices required");
    return d;
}

}  // namespace

SeqGraph dw_ham(const SeqGraph &g, int w) {
    HamDegrees d = ham_degrees(g, w);
    long long k = w - 2;
    long long n = g.n(), m = static_cast<long long>(g.edges.size());
    long long mp = 2 * m - n + 1;

    SeqGraph out = make_graph(0, true, true);
    VertexId s0p = out.add_vertex("s0p");
    VertexId s0 = out.add_vertex("s0");
    VertexId a = out.add_vertex("a");
    VertexId b = out.add_vertex("b");
    std::vector<VertexId> V(g.n()), P(g.n());
    for (VertexId u = 0; u < g.n(); u++) {
        V[u] = out.add_vertex("v_" + g.labels[u]);
        P[u] = out.add_vertex("p_" + g.labels[u]);
    }
    std::map<std::pair<VertexId, VertexId>, Weight> acc;
    auto add = [&](VertexId u, VertexId v, long long c) {
        if (c > 0)
            acc[{u, v}] += c;
    };

    add(s0p, s0, k);
    add(s0, s0, comb2(k));
    add(s0, a, k);
    add(s0p, a, 1);
    add(s0, V[d.s], comb2(k + 1));
    add(V[d.t], b, comb2(k + 1));
    add(a, b, k + 1);
    add(b, b, (mp + 1) * comb2(w) + 2 * mp);
    for (VertexId u = 0; u < g.n(); u++) {
        long long din = d.deg[u] - (u != d.s);
        long long dout = d.deg[u] - (u != d.t);
        add(V[u], V[u], (din + dout + 2) * comb2(k) + comb2(k + 1));
        add(V[u], P[u], k);
        add(P[u], V[u], k);
        add(a, V[u], k);
        add(V[u], a, k);
        add(a, P[u], 1);
        add(P[u], a, 1);
        add(b, V[u], dout * (comb2(w) - 1) + din * k);
        add(V[u], b, din * (comb2(w) - 1) + dout * k);
    }
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        add(V[key.first], V[key.second], comb2(k + 1));
        add(V[key.second], V[key.first], comb2(k + 1));
    }
    for (const auto &[key, pi] : acc)
        out.add_edge(key.first, key.second, pi);
    return out;
}

SeqGraph gw_ham(const SeqGraph &g, int w) {
    SeqGraph dw = dw_ham(g, w);
    SeqGraph out = make_graph(0, false, true);
    out.labels = dw.labels;
    std::map<std::pair<VertexId, VertexId>, Weight> acc;
    for (const auto &[key, pi] : dw.edges)
        acc[out.key(key.first, key.second)] += pi;
    for (const auto &[key, pi] : acc)
        out.add_edge(key.first, key.second, pi);
    return out;
}

Sequence ham_witness(const SeqGraph &g, int w,
                     const std::vector<VertexId> &path) {
    HamDegrees d = ham_degrees(g, w);
    if (static_cast<int>(path.size()) != g.n())
        throw Error(ErrorCode::invalid_argument, "path must cover every vertex");
    std::vector<char> seen(g.n(), 0);
    for (std::size_t i = 0; i < path.size(); i++) {
        if (path[i] < 0 || path[i] >= g.n() || seen[path[i]])
            throw Error(ErrorCode::invalid_argument, "not a Hamiltonian path");
        seen[path[i]] = 1;
        if (i > 0 && !g.has_edge(path[i - 1], path[i]))
            throw Error(ErrorCode::invalid_argument, "not a Hamiltonian path");
    }
    // The gadget pins the orientation: the walk enters at s and leaves at t.
    if (path.front() != d.s || path.back() != d.t)
        throw Error(ErrorCode::invalid_argument,
                    "path must run from the first degree-1 vertex to the second");

    int k = w - 2;
    auto vl = [&](VertexId u) { return "v_" + g.labels[u]; };
    Sequence x{"s0p"};
    x.insert(x.end(), k, "s0");
    for (VertexId u : path) {
        x.push_back("a");
        x.insert(x.end(), k, vl(u));
        x.push_back("p_" + g.labels[u]);
        x.insert(x.end(), k, vl(u));
    }
    x.push_back("a");
    std::set<std::pair<VertexId, VertexId>> path_arcs;
    for (std::size_t i = 1; i < path.size(); i++)
        path_arcs.insert({path[i - 1], path[i]});
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        for (auto [u, v] : {key, std::pair{key.second, key.first}}) {
            if (path_arcs.count({u, v}))
                continue;
            x.insert(x.end(), w, "b");
            x.insert(x.end(), k, vl(u));
            x.push_back("b");
            x.insert(x.end(), k, vl(v));
        }
    }
    x.insert(x.end(), w, "b");
    return x;
}

ExpoInstance expo(int n, int k, bool filtered, long long cap) {
    if (n < 2 || k < 1)
        throw Error(ErrorCode::invalid_argument, "expo needs n >= 2, k >= 1");
    int w = k + 1;

    SeqGraph full = make_graph(0, true, false);
    VertexId s = full.add_vertex("s");
    auto grid = [&](const std::string &tag) {
        std::vector<std::vector<VertexId>> ids(k + 1, std::vector<VertexId>(n));
        for (int i = 1; i <= k; i++)
            for (int j = 0; j < n; j++)
                ids[i][j] = full.add_vertex(tag + "_" + std::to_string(i) +
                                            "_" + std::to_string(j));
        return ids;
    };
    auto A = grid("a"), B = grid("b"), C = grid("c");

    for (int i = 1; i <= k; i++)
        full.add_edge(s, A[i][0]);
    for (int i = 1; i <= k; i++)
        for (int j = 0; j < n; j++) {
            for (int i2 = 1; i2 <= k; i2++)
                for (int j2 = 0; j2 < n; j2++) {
                    if (i2 > i) {
                        full.add_edge(A[i][j], A[i2][j2]);
                        full.add_edge(B[i][j], B[i2][j2]);
                        full.add_edge(B[i][j], C[i2][j2]);
                    } else if (i2 < i) {
                        full.add_edge(A[i][j], B[i2][j2]);
                        full.add_edge(A[i][j], C[i2][j2]);
                        full.add_edge(B[i][j], A[i2][j2]);
                        full.add_edge(C[i][j], A[i2][j2]);
                    }
                }
            for (int i2 = i + 1; i2 <= k; i2++)
                if (!full.has_edge(C[i][j], C[i2][0]))
                    full.add_edge(C[i][j], C[i2][0]);
            full.add_edge(A[i][j], B[i][j]);
            full.add_edge(A[i][j], C[i][(j + 1) % n]);
            full.add_edge(B[i][j], A[i][j]);
            full.add_edge(C[i][j], A[i][j]);
        }

    if (!filtered)
        return {full, {}};

    long long len = 1;  // 2k * n^k, grown carefully against the cap
    for (int i = 0; i < k; i++) {
        len *= n;
        if (len > cap)
            throw Error(ErrorCode::size_limit, "witness exceeds cap");
    }
    len *= 2 * k;
    if (len > cap)
        throw Error(ErrorCode::size_limit, "witness exceeds cap");

    // The counting walk: every rank-k tuple in lex order, chained by
    // resetting the tail through b (readback) and c (carry) vertices.
    std::vector<int> tuple(k, 0);
    Sequence x{"s"};
    auto label_of = [&](VertexId v) { return full.labels[v]; };
    for (;;) {
        for (int i = 0; i < k; i++)
            x.push_back(label_of(A[i + 1][tuple[i]]));
        int carry = -1;  // rightmost position below n-1, 0-based
        for (int i = k - 1; i >= 0; i--)
            if (tuple[i] < n - 1) {
                carry = i;
                break;
            }
        if (carry == -1)
            break;
        for (int i = 1; i <= carry; i++)
            x.push_back(label_of(B[i][tuple[i - 1]]));
        x.push_back(label_of(C[carry + 1][tuple[carry] + 1]));
        for (int i = carry + 2; i <= k; i++)
            x.push_back(label_of(C[i][0]));
        tuple[carry]++;
        for (int i = carry + 1; i < k; i++)
            tuple[i] = 0;
    }
    for (int i = 1; i <= k; i++)
        x.push_back(label_of(B[i][tuple[i - 1]]));
    for (int i = 1; i <= k; i++)
        x.push_back(label_of(A[i][tuple[i - 1]]));

    BuildOptions opts;
    opts.w = w;
    opts.directed = true;
    opts.weighted = false;
    SeqGraph filtered_graph = build(x, opts);
    auto index = label_index(full);
    for (const auto &[key, pi] : filtered_graph.edges) {
        (void)pi;
        VertexId u = index.at(filtered_graph.labels[key.first]);
        VertexId v = index.at(filtered_graph.labels[key.second]);
        if (!full.has_edge(u, v))
            throw std::logic_error("witness leaves the arc family");
    }
    return {filtered_graph, x};
}

}  // namespace seqgraph
