#include "seqgraph/ilp.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "seqgraph/builder.hpp"
#include "seqgraph/dpcount.hpp"

namespace seqgraph {

namespace {

// LP-safe vertex names; any collision after sanitizing makes every name
// carry its id so the mapping stays injective.
std::vector<std::string> lp_names(const SeqGraph &g) {
    std::vector<std::string> names;
    for (const std::string &label : g.labels) {
        std::string t;
        for (char c : label)
            t += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
        if (t.empty())
            t = "_";
        names.push_back(t);
    }
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
        for (std::size_t i = 0; i < names.size(); i++)
            names[i] += "_" + std::to_string(i);
    return names;
}

std::vector<std::pair<long long, long long>> window_pairs(long long p, int w) {
    std::vector<std::pair<long long, long long>> c;
    for (long long i = 1; i <= p; i++)
        for (long long j = i + 1; j <= std::min(p, i + w - 1); j++)
            c.push_back({i, j});
    return c;
}

// One y family per arc orientation: directed edges as they are, undirected
// edges once per direction (loops once).
std::vector<std::pair<VertexId, VertexId>> arc_list(const SeqGraph &g) {
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (const auto &[key, pi] : g.edges) {
        (void)pi;
        arcs.push_back(key);
        if (!g.directed && key.first != key.second)
            arcs.push_back({key.second, key.first});
    }
    return arcs;
}

// Sum constraint/objective lines wrapped to a few terms apiece; follow-up
// lines keep a leading space per the LP format.
void put_sum(std::ostringstream &out, const std::string &head,
             const std::vector<std::string> &terms, const std::string &tail) {
    out << head;
    for (std::size_t i = 0; i < terms.size(); i++) {
        if (i > 0 && i % 8 == 0)
            out << "\n   ";
        out << (i ? " + " : " ") << terms[i];
    }
    if (terms.empty())
        out << " 0";
    out << ' ' << tail << '\n';
}

}  // namespace

IlpModel emit_ilp(const SeqGraph &g, int w) {
    if (!g.weighted)
        throw Error(ErrorCode::invalid_argument, "the program needs weights");
    auto p = derive_length(g, w);
    if (!p)
        throw Error(ErrorCode::no_valid_length,
                    "no realization length fits the weights");

    IlpModel model;
    model.p = *p;
    auto names = lp_names(g);
    auto pairs = window_pairs(*p, w);
    auto arcs = arc_list(g);
    int n = g.n();

    auto xv = [&](VertexId v, long long j) {
        return "x_" + names[v] + "_" + std::to_string(j);
    };
    auto yv = [&](VertexId u, VertexId v, long long i, long long j) {
        return "y_" + names[u] + "_" + names[v] + "_" + std::to_string(i) +
               "_" + std::to_string(j);
    };

    std::ostringstream out;
    std::vector<std::string> terms;

    out << "Minimize\n";
    for (auto [u, v] : arcs)
        for (auto [i, j] : pairs)
            terms.push_back(yv(u, v, i, j));
    put_sum(out, " obj:", terms, "");

    out << "Subject To\n";
    for (long long j = 1; j <= *p; j++) {
        terms.clear();
        for (VertexId v = 0; v < n; v++)
            terms.push_back(xv(v, j));
        put_sum(out, " pos_" + std::to_string(j) + ":", terms, "= 1");
        model.one_hots++;
    }
    for (auto [u, v] : arcs)
        for (auto [i, j] : pairs) {
            std::string y = yv(u, v, i, j), tag = y.substr(1);
            out << " lk1" << tag << ": " << y << " - " << xv(u, i) << " <= 0\n";
            out << " lk2" << tag << ": " << y << " - " << xv(v, j) << " <= 0\n";
            out << " lk3" << tag << ": " << xv(u, i) << " + " << xv(v, j)
                << " - " << y << " <= 1\n";
            model.linkings += 3;
        }
    for (VertexId a = 0; a < n; a++)
        for (VertexId b = 0; b < n; b++) {
            if (g.has_edge(a, b))
                continue;
            for (auto [i, j] : pairs) {
                out << " ne_" << names[a] << "_" << names[b] << "_" << i << "_"
                    << j << ": " << xv(a, i) << " + " << xv(b, j) << " <= 1\n";
                model.exclusions++;
            }
        }
    for (const auto &[key, pi] : g.edges) {
        auto [u, v] = key;
        terms.clear();
        for (auto [i, j] : pairs) {
            terms.push_back(yv(u, v, i, j));
            if (!g.directed && u != v)
                terms.push_back(yv(v, u, i, j));
        }
        put_sum(out, " wf_" + names[u] + "_" + names[v] + ":", terms,
                ">= " + std::to_string(pi));
        model.floors++;
    }

    out << "Binary\n";
    for (VertexId v = 0; v < n; v++)
        for (long long j = 1; j <= *p; j++)
            out << ' ' << xv(v, j) << '\n';
    for (auto [u, v] : arcs)
        for (auto [i, j] : pairs)
            out << ' ' << yv(u, v, i, j) << '\n';
    out << "End\n";

    model.window_pairs = pairs.size();
    model.x_vars = static_cast<std::size_t>(n) * *p;
    model.y_vars = arcs.size() * pairs.size();
    model.text = out.str();
    return model;
}

bool verify_assignment(const SeqGraph &g, int w, const Sequence &x) {
    if (!g.weighted)
        throw Error(ErrorCode::invalid_argument, "the program needs weights");
    auto p = derive_length(g, w);
    if (!p || static_cast<long long>(x.size()) != *p)
        throw Error(ErrorCode::length_mismatch,
                    "sequence length does not match the derived length");
    auto ids = to_ids(x, g);
    if (!ids)
        return false;
    auto at = [&](long long pos) { return (*ids)[pos - 1]; };  // 1-based

    auto pairs = window_pairs(*p, w);
    auto arcs = arc_list(g);
    long long objective = 0;

    for (auto [u, v] : arcs)
        for (auto [i, j] : pairs) {
            int xu = at(i) == u, xv = at(j) == v;
            int y = xu && xv;  // the induced assignment
            if (y > xu || y > xv || xu + xv - y > 1)
                return false;
            objective += y;
        }
    for (VertexId a = 0; a < g.n(); a++)
        for (VertexId b = 0; b < g.n(); b++) {
            if (g.has_edge(a, b))
                continue;
            for (auto [i, j] : pairs)
                if ((at(i) == a) + (at(j) == b) > 1)
                    return false;
        }
    for (const auto &[key, pi] : g.edges) {
        auto [u, v] = key;
        long long got = 0;
        for (auto [i, j] : pairs) {
            got += at(i) == u && at(j) == v;
            if (!g.directed && u != v)
                got += at(i) == v && at(j) == u;
        }
        if (got < pi)
            return false;
    }
    return objective == g.total_weight();
}

}  // namespace seqgraph
