#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "seqgraph/builder.hpp"
#include "seqgraph/gu.hpp"

using namespace seqgraph;

namespace {

SeqGraph undirected(int n, std::vector<std::pair<int, int>> es) {
    SeqGraph g = make_graph(n, false, false);
    for (auto [u, v] : es)
        g.add_edge(u, v);
    return g;
}

// the looped-star example: loop at 1, edges 1-2 and 1-3
SeqGraph looped_star() {
    SeqGraph g = make_graph(0, false, false);
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_vertex("3");
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    return g;
}

std::set<std::string> window_set(const SeqGraph &g, const AuxGraph &h) {
    std::set<std::string> out;
    for (const AuxVertex &v : h.vertices)
        out.insert(sequence_to_string(to_tokens(v, g)));
    return out;
}

}  // namespace

TEST_CASE("aux graph of the looped star") {
    SeqGraph g = looped_star();
    AuxGraph h2 = build_aux(g, 2);
    CHECK(window_set(g, h2) ==
          std::set<std::string>{"1 1", "1 2", "2 1", "1 3", "3 1"});
    CHECK(h2.edges.size() == 7);  // six proper edges and the loop at 11
    int loops = 0;
    for (auto [a, b] : h2.edges)
        loops += a == b;
    CHECK(loops == 1);

    AuxGraph h3 = build_aux(g, 3);
    CHECK(h3.vertices.size() == 7);
    CHECK(window_set(g, h3) == std::set<std::string>{"1 1 1", "1 1 2", "1 1 3",
                                                     "1 2 1", "1 3 1", "2 1 1",
                                                     "3 1 1"});
    CHECK(h3.edges.size() == 9);
    CHECK(std::is_sorted(h3.vertices.begin(), h3.vertices.end()));
}

TEST_CASE("aux graph of an edge has no aux edges") {
    SeqGraph k2 = undirected(2, {{0, 1}});
    AuxGraph h = build_aux(k2, 2);
    CHECK(h.vertices.size() == 2);
    CHECK(h.edges.empty());
}

TEST_CASE("aux size cap") {
    SeqGraph k3 = undirected(3, {{0, 1}, {1, 2}, {0, 2}});
    try {
        build_aux(k3, 3, 2);
        FAIL("expected size_limit");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::size_limit);
    }
}

TEST_CASE("cover map reaches every edge") {
    SeqGraph g = looped_star();
    AuxGraph h = build_aux(g, 2);
    CoverMap cm = cover_map(g, h);
    for (const auto &[e, pi] : g.edges) {
        (void)pi;
        bool covered = !cm.by_vertex[e].empty() || !cm.by_edge[e].empty();
        CHECK(covered);
    }
    // the loop window 11 covers the loop edge
    CHECK_FALSE(cm.by_vertex[{0, 0}].empty());
}

TEST_CASE("underlying sequence of a looped-star walk") {
    SeqGraph g = looped_star();
    auto ids = [&](const std::string &s) {
        AuxVertex v;
        for (char c : s)
            v.push_back(c - '1');
        return v;
    };
    std::vector<AuxVertex> walk;
    for (const char *t : {"111", "211", "121", "112", "111", "111", "113",
                          "131", "311", "111"})
        walk.push_back(ids(t));
    Sequence s = underlying_sequence(g, 3, walk);
    CHECK(sequence_to_string(s) ==
          "1 1 1 2 1 1 1 2 1 1 1 2 1 1 1 1 3 1 1 1");
    CHECK(realizes(s, g, 4));

    // a non-walk step (no shift relates 121 and 113)
    std::vector<AuxVertex> bad{ids("121"), ids("113")};
    try {
        underlying_sequence(g, 3, bad);
        FAIL("expected not_a_walk");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::not_a_walk);
    }
    // a tuple that is not a valid window (2 and 3 are not adjacent)
    try {
        underlying_sequence(g, 2, {ids("23")});
        FAIL("expected not_a_walk");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::not_a_walk);
    }
}

TEST_CASE("realizability verdicts") {
    SeqGraph p3 = undirected(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(gu_realizable(p3, 3).has_value());

    SeqGraph c4 = undirected(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(gu_realizable(c4, 3).has_value());

    SeqGraph k3 = undirected(3, {{0, 1}, {1, 2}, {0, 2}});
    auto wit = gu_realizable(k3, 3);
    REQUIRE(wit.has_value());
    CHECK(realizes(*wit, k3, 3));

    auto star_wit = gu_realizable(looped_star(), 4);
    REQUIRE(star_wit.has_value());
    CHECK(realizes(*star_wit, looped_star(), 4));

    SeqGraph split = undirected(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(gu_realizable(split, 3).has_value());

    CHECK_THROWS_AS(gu_realizable(make_graph(2, true, false), 3), Error);
    CHECK_THROWS_AS(gu_realizable(p3, 1), Error);
}

TEST_CASE("short realizations below w-1") {
    // the single edge is 4-realizable only through the length-2 sequence
    SeqGraph k2 = undirected(2, {{0, 1}});
    auto wit = gu_realizable(k2, 4);
    REQUIRE(wit.has_value());
    CHECK(wit->size() == 2);
    CHECK(realizes(*wit, k2, 4));

    SeqGraph lone = make_graph(1, false, false);
    auto one = gu_realizable(lone, 3);
    REQUIRE(one.has_value());
    CHECK(one->size() == 1);

    CHECK_FALSE(gu_realizable(make_graph(0, false, false), 3).has_value());
}

TEST_CASE("bounded counting") {
    SeqGraph k3 = undirected(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(gu_count_bounded(k3, 3, 6).str() == "24");
    SeqGraph p3 = undirected(3, {{0, 1}, {1, 2}});
    CHECK(gu_count_bounded(p3, 2, 4).str() == "6");
    CHECK(gu_count_bounded(p3, 3, 10).str() == "0");
}

TEST_CASE("dot rendering") {
    SeqGraph g = looped_star();
    AuxGraph h = build_aux(g, 2);
    std::string dot = aux_to_dot(g, h);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("1 1") != std::string::npos);
}
