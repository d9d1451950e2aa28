#include "pcg/graph.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace pcg;

TEST_CASE("graph_from_edges builds and deduplicates") {
    const Graph g = graph_from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}});
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent("a", "b"));
    CHECK(g.adjacent("b", "a"));
    CHECK_FALSE(g.adjacent("a", "c"));
    CHECK(g.edges() == std::vector<NamePair>{{"a", "b"}});

    const Graph one = graph_from_edges({"a"}, {});
    CHECK(one.size() == 1);
    CHECK(one.edge_count() == 0);
}

TEST_CASE("graph_from_edges rejects bad input") {
    CHECK_THROWS_AS(graph_from_edges({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edges({"a", "b"}, {{"a", "z"}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edges({"a", "b"}, {{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("edges are stored with the smaller name first") {
    const Graph g = graph_from_edges({"z", "b", "m"}, {{"z", "b"}, {"m", "b"}});
    CHECK(g.edges() == std::vector<NamePair>{{"b", "m"}, {"b", "z"}});
}

TEST_CASE("graph equality ignores node order") {
    const Graph a = graph_from_edges({"x", "y", "z"}, {{"x", "y"}});
    const Graph b = graph_from_edges({"z", "y", "x"}, {{"y", "x"}});
    CHECK(a == b);
    CHECK_FALSE(a == graph_from_edges({"x", "y", "z"}, {{"x", "z"}}));
    CHECK_FALSE(a == graph_from_edges({"x", "y", "w"}, {{"x", "y"}}));
}

TEST_CASE("graph_h matches its definition") {
    const Graph h = graph_h();
    CHECK(h.size() == 8);
    CHECK(h.edge_count() == 20);
    CHECK(h.adjacent("3", "1"));
    CHECK_FALSE(h.adjacent("1", "7"));
    for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(h.degree(i) == 5);
    }
    // Independent rebuild: one matching edge in each quadruple plus all cross pairs.
    std::vector<NamePair> edges{{"1", "2"}, {"3", "4"}, {"5", "6"}, {"7", "8"}};
    for (const char* a : {"1", "2", "7", "8"}) {
        for (const char* b : {"3", "4", "5", "6"}) {
            edges.emplace_back(a, b);
        }
    }
    CHECK(h == graph_from_edges(numbered_names(8), edges));
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph({"a", "b", "c", "d"})) == empty_graph({"a", "b", "c", "d"}));
    CHECK(complement(empty_graph({"a", "b", "c"})) == complete_graph({"a", "b", "c"}));
    CHECK(complement(graph_h()).edge_count() == 8);
    CHECK(complement(complement(graph_h())) == graph_h());
}

TEST_CASE("isomorphism") {
    const Graph k3 = complete_graph({"a", "b", "c"});
    const Graph k3r = complete_graph({"x", "y", "z"});
    auto m = are_isomorphic(k3, k3r);
    REQUIRE(m);
    CHECK(is_isomorphism(k3, k3r, *m));

    const Graph p3 = graph_from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(are_isomorphic(p3, k3));

    // H with 1 and 2 swapped.
    const Graph h = graph_h();
    std::vector<NamePair> swapped;
    for (auto [u, v] : h.edges()) {
        auto flip = [](const std::string& s) { return s == "1" ? std::string("2") : s == "2" ? std::string("1") : s; };
        swapped.emplace_back(flip(u), flip(v));
    }
    const Graph h2 = graph_from_edges(numbered_names(8), swapped);
    auto mh = are_isomorphic(h, h2);
    REQUIRE(mh);
    CHECK(is_isomorphism(h, h2, *mh));

    // Same degree sequence, different structure: C6 vs two triangles.
    const Graph c6 = graph_from_edges(numbered_names(6), {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
    const Graph tt = graph_from_edges(numbered_names(6), {{"1", "2"}, {"2", "3"}, {"3", "1"}, {"4", "5"}, {"5", "6"}, {"6", "4"}});
    CHECK_FALSE(are_isomorphic(c6, tt));
    CHECK_FALSE(are_isomorphic(c6, complete_graph(numbered_names(5))));
}

TEST_CASE("is_isomorphism rejects wrong mappings") {
    const Graph p3 = graph_from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(is_isomorphism(p3, p3, {{"a", "b"}, {"b", "a"}, {"c", "c"}}));
    CHECK_FALSE(is_isomorphism(p3, p3, {{"a", "a"}, {"b", "b"}}));
    CHECK(is_isomorphism(p3, p3, {{"a", "c"}, {"b", "b"}, {"c", "a"}}));
}

TEST_CASE("automorphisms") {
    CHECK(automorphisms(complete_graph(numbered_names(4))).size() == 24);
    const Graph p3 = graph_from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(automorphisms(p3).size() == 2);
    // H: swap within each of the four matched pairs (16), swap the two pairs
    // on each side (4), and swap the sides (2).
    CHECK(automorphisms(graph_h()).size() == 128);
}

TEST_CASE("enumerate_graphs counts match brute force") {
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(2).size() == 2);
    for (std::size_t n = 3; n <= 5; ++n) {
        CHECK(enumerate_graphs(n).size() == testing::brute_class_count(n));
    }
    CHECK(enumerate_graphs(3).size() == 4);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(5).size() == 34);
}

TEST_CASE("enumerate_graphs yields pairwise non-isomorphic graphs") {
    const auto graphs = enumerate_graphs(5);
    std::set<std::vector<std::uint8_t>> forms;
    for (const auto& g : graphs) {
        CHECK(forms.insert(testing::brute_canonical(g)).second);
    }
}

TEST_CASE("enumerate_graphs guard and early stop") {
    CHECK_THROWS_AS(enumerate_graphs(8), std::invalid_argument);
    CHECK_NOTHROW(enumerate_graphs(2, 2));
    std::size_t seen = 0;
    enumerate_graphs(4, [&](const Graph&) { return ++seen < 3; });
    CHECK(seen == 3);
}
