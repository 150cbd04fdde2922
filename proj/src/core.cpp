#include "seqgraph/core.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace seqgraph {

// ---- BigCount ----

BigCount::BigCount(mpz_class v) : value_(std::move(v)) {
    if (value_ < 0)
        throw Error(ErrorCode::invalid_argument, "negative count");
}

BigCount BigCount::infinity() {
    BigCount c;
    c.infinite_ = true;
    return c;
}

const mpz_class &BigCount::value() const {
    if (infinite_)
        throw Error(ErrorCode::invalid_argument, "count is infinite");
    return value_;
}

BigCount &BigCount::operator+=(const BigCount &o) {
    if (o.infinite_)
        infinite_ = true;
    if (!infinite_)
        value_ += o.value_;
    return *this;
}

BigCount &BigCount::operator*=(const BigCount &o) {
    if (o.infinite_)
        infinite_ = true;
    if (!infinite_)
        value_ *= o.value_;
    return *this;
}

bool BigCount::operator==(const BigCount &o) const {
    if (infinite_ || o.infinite_)
        return infinite_ == o.infinite_;
    return value_ == o.value_;
}

std::string BigCount::str() const {
    return infinite_ ? "inf" : value_.get_str();
}

// ---- SeqGraph ----

VertexId SeqGraph::add_vertex(const std::string &label) {
    VertexId id = n();
    labels.push_back(label.empty() ? std::to_string(id) : label);
    return id;
}

std::pair<VertexId, VertexId> SeqGraph::key(VertexId u, VertexId v) const {
    if (!directed && u > v)
        std::swap(u, v);
    return {u, v};
}

void SeqGraph::add_edge(VertexId u, VertexId v, Weight pi) {
    if (u < 0 || u >= n() || v < 0 || v >= n())
        throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
    if (pi < 1)
        throw Error(ErrorCode::invalid_argument, "edge weight must be >= 1");
    if (!weighted && pi != 1)
        throw Error(ErrorCode::invalid_argument, "weights need weighted mode");
    auto [it, fresh] = edges.emplace(key(u, v), pi);
    if (!fresh)
        throw Error(ErrorCode::invalid_argument, "duplicate edge");
    (void)it;
}

bool SeqGraph::has_edge(VertexId u, VertexId v) const {
    return edges.count(key(u, v)) != 0;
}

Weight SeqGraph::weight_of(VertexId u, VertexId v) const {
    auto it = edges.find(key(u, v));
    return it == edges.end() ? 0 : it->second;
}

Weight SeqGraph::total_weight() const {
    Weight s = 0;
    for (const auto &[e, pi] : edges)
        s += pi;
    return s;
}

bool SeqGraph::edge_free(VertexId v) const {
    for (const auto &[e, pi] : edges)
        if (e.first == v || e.second == v)
            return false;
    return true;
}

SeqGraph make_graph(int num_vertices, bool directed, bool weighted) {
    SeqGraph g;
    g.directed = directed;
    g.weighted = weighted;
    for (int i = 0; i < num_vertices; i++)
        g.add_vertex();
    return g;
}

std::map<std::string, VertexId> label_index(const SeqGraph &g) {
    std::map<std::string, VertexId> idx;
    for (VertexId v = 0; v < g.n(); v++)
        if (!idx.emplace(g.labels[v], v).second)
            throw Error(ErrorCode::invalid_argument,
                        "duplicate vertex label: " + g.labels[v]);
    return idx;
}

// ---- MultiGraph / psi / eulerian_class ----

void MultiGraph::add_edge(VertexId u, VertexId v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
    if (!directed && u > v)
        std::swap(u, v);
    edges.push_back({u, v});
}

MultiGraph psi(const SeqGraph &g) {
    if (!g.weighted)
        throw Error(ErrorCode::invalid_argument, "psi needs a weighted graph");
    MultiGraph m;
    m.directed = g.directed;
    m.n = g.n();
    for (const auto &[e, pi] : g.edges)
        for (Weight i = 0; i < pi; i++)
            m.edges.push_back(e);
    return m;
}

namespace {

// Connectivity of the subgraph induced by edge-bearing vertices (underlying
// undirected edges). Trivially true when no vertex carries an edge.
bool edge_connected(const MultiGraph &m) {
    std::vector<std::vector<VertexId>> adj(m.n);
    std::vector<char> touched(m.n, 0);
    for (auto [u, v] : m.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        touched[u] = touched[v] = 1;
    }
    VertexId start = -1;
    int want = 0;
    for (VertexId v = 0; v < m.n; v++)
        if (touched[v]) {
            if (start < 0)
                start = v;
            want++;
        }
    if (start < 0)
        return true;
    std::vector<char> seen(m.n, 0);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    int found = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                found++;
                stack.push_back(y);
            }
    }
    return found == want;
}

}  // namespace

EulerClass eulerian_class(const MultiGraph &m) {
    if (!edge_connected(m))
        return EulerClass::none;
    if (m.directed) {
        std::vector<long long> in(m.n, 0), out(m.n, 0);
        for (auto [u, v] : m.edges) {
            out[u]++;
            in[v]++;
        }
        int plus = 0, minus = 0;
        for (VertexId v = 0; v < m.n; v++) {
            long long d = out[v] - in[v];
            if (d == 1)
                plus++;
            else if (d == -1)
                minus++;
            else if (d != 0)
                return EulerClass::none;
        }
        if (plus == 0 && minus == 0)
            return EulerClass::euler_cycle;
        if (plus == 1 && minus == 1)
            return EulerClass::semi_euler;
        return EulerClass::none;
    }
    std::vector<long long> deg(m.n, 0);
    for (auto [u, v] : m.edges) {
        deg[u]++;
        deg[v]++;  // a loop contributes two
    }
    int odd = 0;
    for (VertexId v = 0; v < m.n; v++)
        if (deg[v] % 2)
            odd++;
    if (odd == 0)
        return EulerClass::euler_cycle;
    if (odd == 2)
        return EulerClass::semi_euler;
    return EulerClass::none;
}

// ---- strongly connected components (iterative Tarjan) ----

Condensation scc_condense(const SeqGraph &g) {
    if (!g.directed)
        throw Error(ErrorCode::invalid_argument, "condensation needs a digraph");
    int n = g.n();
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto &[e, pi] : g.edges)
        adj[e.first].push_back(e.second);

    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<VertexId> stack;
    std::vector<char> on_stack(n, 0);
    int next_index = 0, comps = 0;

    // Explicit DFS stack: (vertex, next child position).
    std::vector<std::pair<VertexId, size_t>> call;
    for (VertexId root = 0; root < n; root++) {
        if (index[root] != -1)
            continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto &[v, child] = call.back();
            if (child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (child < adj[v].size()) {
                VertexId u = adj[v][child++];
                if (index[u] == -1) {
                    call.push_back({u, 0});
                    descended = true;
                    break;
                }
                if (on_stack[u])
                    low[v] = std::min(low[v], index[u]);
            }
            if (descended)
                continue;
            if (low[v] == index[v]) {
                while (true) {
                    VertexId u = stack.back();
                    stack.pop_back();
                    on_stack[u] = 0;
                    comp[u] = comps;
                    if (u == v)
                        break;
                }
                comps++;
            }
            VertexId done = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] =
                    std::min(low[call.back().first], low[done]);
        }
    }

    // Tarjan emits sinks first; flip to get topological numbering.
    Condensation c;
    c.num_comps = comps;
    c.comp.resize(n);
    for (VertexId v = 0; v < n; v++)
        c.comp[v] = comps - 1 - comp[v];
    for (const auto &[e, pi] : g.edges) {
        int cu = c.comp[e.first], cv = c.comp[e.second];
        if (cu != cv)
            c.arcs[{cu, cv}]++;
    }
    return c;
}

// ---- text formats ----

namespace {

std::vector<std::string> tokenize(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t)
        out.push_back(t);
    return out;
}

long long parse_ll(const std::string &s, const char *what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        throw Error(ErrorCode::parse_error,
                    std::string("bad ") + what + ": " + s);
    }
}

}  // namespace

SeqGraph parse_graph(std::istream &in) {
    SeqGraph g;
    bool have_header = false;
    int declared_n = 0;
    std::vector<std::pair<VertexId, std::string>> vlines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto tok = tokenize(line);
        if (tok.empty())
            continue;
        if (!have_header) {
            if (tok[0] != "sg" || tok.size() != 4)
                throw Error(ErrorCode::parse_error,
                            "line " + std::to_string(lineno) +
                                ": expected 'sg <directed|undirected> "
                                "<weighted|unweighted> <n>'");
            if (tok[1] == "directed")
                g.directed = true;
            else if (tok[1] != "undirected")
                throw Error(ErrorCode::parse_error, "bad orientation: " + tok[1]);
            if (tok[2] == "weighted")
                g.weighted = true;
            else if (tok[2] != "unweighted")
                throw Error(ErrorCode::parse_error, "bad weight mode: " + tok[2]);
            declared_n = static_cast<int>(parse_ll(tok[3], "vertex count"));
            if (declared_n < 0)
                throw Error(ErrorCode::parse_error, "negative vertex count");
            for (int i = 0; i < declared_n; i++)
                g.add_vertex();
            have_header = true;
            continue;
        }
        if (tok[0] == "v") {
            if (tok.size() != 3)
                throw Error(ErrorCode::parse_error,
                            "line " + std::to_string(lineno) + ": v <id> <label>");
            VertexId id = static_cast<VertexId>(parse_ll(tok[1], "vertex id"));
            if (id < 0 || id >= declared_n)
                throw Error(ErrorCode::parse_error, "vertex id out of range");
            g.labels[id] = tok[2];
        } else if (tok[0] == "e") {
            if (tok.size() != 3 && tok.size() != 4)
                throw Error(ErrorCode::parse_error,
                            "line " + std::to_string(lineno) + ": e <u> <v> [pi]");
            VertexId u = static_cast<VertexId>(parse_ll(tok[1], "vertex id"));
            VertexId v = static_cast<VertexId>(parse_ll(tok[2], "vertex id"));
            Weight pi = 1;
            if (tok.size() == 4) {
                if (!g.weighted)
                    throw Error(ErrorCode::parse_error,
                                "weight given in unweighted mode");
                pi = parse_ll(tok[3], "weight");
            }
            try {
                g.add_edge(u, v, pi);
            } catch (const Error &e) {
                throw Error(ErrorCode::parse_error,
                            "line " + std::to_string(lineno) + ": " + e.what());
            }
        } else {
            throw Error(ErrorCode::parse_error,
                        "line " + std::to_string(lineno) +
                            ": unknown directive " + tok[0]);
        }
    }
    if (!have_header)
        throw Error(ErrorCode::parse_error, "missing sg header");
    try {
        label_index(g);  // validates uniqueness
    } catch (const Error &e) {
        throw Error(ErrorCode::parse_error, e.what());
    }
    return g;
}

SeqGraph parse_graph_string(const std::string &text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

void write_graph(std::ostream &out, const SeqGraph &g) {
    out << "sg " << (g.directed ? "directed" : "undirected") << ' '
        << (g.weighted ? "weighted" : "unweighted") << ' ' << g.n() << '\n';
    for (VertexId v = 0; v < g.n(); v++)
        if (g.labels[v] != std::to_string(v))
            out << "v " << v << ' ' << g.labels[v] << '\n';
    for (const auto &[e, pi] : g.edges) {
        out << "e " << e.first << ' ' << e.second;
        if (g.weighted)
            out << ' ' << pi;
        out << '\n';
    }
}

std::string graph_to_string(const SeqGraph &g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

std::vector<Sequence> parse_sequences(std::istream &in) {
    std::vector<Sequence> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto tok = tokenize(line);
        if (!tok.empty())
            out.push_back(tok);
    }
    return out;
}

std::string sequence_to_string(const Sequence &x) {
    std::string out;
    for (size_t i = 0; i < x.size(); i++) {
        if (i)
            out += ' ';
        out += x[i];
    }
    return out;
}

}  // namespace seqgraph
