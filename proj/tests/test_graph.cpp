#include <doctest.h>

#include <set>
#include <sstream>

#include "ieps/catalog.hpp"

using namespace ieps;

namespace {

// independent all-pairs distance oracle (Floyd-Warshall)
int diameter_oracle(const Graph& g) {
    const int inf = 1 << 20;
    int n = g.n();
    std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
    for (int v = 1; v <= n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int best = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (d[i][j] >= inf) return -1;
            best = std::max(best, d[i][j]);
        }
    return best;
}

} // namespace

TEST_CASE("catalog canonical graphs") {
    Graph c5 = catalog("C5");
    CHECK(c5.n() == 5);
    CHECK(c5.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});

    Graph bfly = catalog("Bfly");
    CHECK(bfly.degree(5) == 4);
    CHECK(bfly.has_edge(1, 2));
    CHECK(bfly.has_edge(3, 4));
    CHECK(!bfly.has_edge(1, 3));

    Graph k23 = catalog("K2,3");
    CHECK(k23.edges().size() == 6);
    CHECK(!k23.has_edge(1, 2));
    CHECK(!k23.has_edge(3, 4));
    for (int a : {1, 2})
        for (int b : {3, 4, 5}) CHECK(k23.has_edge(a, b));

    CHECK_THROWS_AS(catalog("Q7"), input_error);
}

TEST_CASE("catalog edge counts and degree sequences") {
    // golden data cross-checked by hand against the pictures
    auto degseq = [](const Graph& g) {
        std::multiset<int> s;
        for (int v = 1; v <= g.n(); ++v) s.insert(g.degree(v));
        return s;
    };
    CHECK(degseq(catalog("Paw")) == std::multiset<int>{1, 2, 2, 3});
    CHECK(degseq(catalog("Dmnd")) == std::multiset<int>{2, 2, 3, 3});
    CHECK(degseq(catalog("Kite")) == std::multiset<int>{1, 2, 3, 3, 3});
    CHECK(degseq(catalog("Dart")) == std::multiset<int>{1, 2, 2, 3, 4});
    CHECK(degseq(catalog("Camp")) == std::multiset<int>{1, 1, 2, 2, 4});
    CHECK(degseq(catalog("Bull")) == std::multiset<int>{1, 1, 2, 3, 3});
    CHECK(degseq(catalog("Bnr")) == std::multiset<int>{1, 2, 2, 2, 3});
    CHECK(degseq(catalog("Hs")) == std::multiset<int>{2, 2, 2, 3, 3});
    CHECK(degseq(catalog("Gem")) == std::multiset<int>{2, 2, 3, 3, 4});
    CHECK(degseq(catalog("T5")) == std::multiset<int>{2, 2, 2, 4, 4});
    CHECK(degseq(catalog("FHs")) == std::multiset<int>{2, 3, 3, 4, 4});
    CHECK(degseq(catalog("W5")) == std::multiset<int>{3, 3, 3, 3, 4});
    CHECK(catalog("L(3,2)").edges().size() == 5);
    CHECK(catalog("L(4,1)").edges().size() == 7);
    CHECK(catalog("(K4)e").edges().size() == 7);
    CHECK(catalog("K5-e").edges().size() == 9);
}

TEST_CASE("diameter") {
    CHECK(diameter(catalog("P5")) == 4);
    CHECK(diameter(catalog("Kite")) == 3);
    CHECK(diameter(catalog("K5")) == 1);
    Graph disconnected(4, {{1, 2}, {3, 4}});
    CHECK(diameter(disconnected) == kInfiniteDiameter);
    for (const auto& name : table_graph_names())
        CHECK(diameter(catalog(name)) == diameter_oracle(catalog(name)));
}

TEST_CASE("bipartition") {
    auto bp = bipartition(catalog("C4"));
    REQUIRE(bp);
    CHECK(bp->first == std::vector<int>{1, 3});
    CHECK(bp->second == std::vector<int>{2, 4});
    CHECK(!bipartition(catalog("C5")));
    auto bk = bipartition(catalog("K2,3"));
    REQUIRE(bk);
    CHECK(bk->first == std::vector<int>{1, 2});
    CHECK(bk->second == std::vector<int>{3, 4, 5});
    // returned colorings properly two-color every edge
    for (const auto& name : table_graph_names()) {
        Graph g = catalog(name);
        if (auto p = bipartition(g)) {
            std::set<int> x(p->first.begin(), p->first.end());
            for (auto [u, v] : g.edges()) CHECK(x.count(u) != x.count(v));
        }
    }
}

TEST_CASE("bipartite deletion number") {
    CHECK(bipartite_deletion_number(catalog("(K4)e"), 2) == 1);
    CHECK(bipartite_deletion_number(catalog("W5"), 2) == 1);
    CHECK(bipartite_deletion_number(catalog("C4"), 2) == 0);
    CHECK(bipartite_deletion_number(catalog("FHs"), 3) == 2);
    CHECK(bipartite_deletion_number(catalog("K5"), 3) == 3);
    CHECK_THROWS_AS(bipartite_deletion_number(catalog("C4"), 3), input_error);
}

TEST_CASE("cut vertices and components") {
    CHECK(cut_vertices(catalog("Bfly")) == std::vector<int>{5});
    auto comps = components_after(catalog("Bfly"), 5);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<int>{1, 2});
    CHECK(comps[0].graph.edges().size() == 1);
    CHECK(comps[1].vertices == std::vector<int>{3, 4});

    // Kite - cut vertex leaves P1 and K3
    auto kite_cut = cut_vertices(catalog("Kite"));
    REQUIRE(kite_cut == std::vector<int>{2});
    auto kc = components_after(catalog("Kite"), 2);
    REQUIRE(kc.size() == 2);
    std::multiset<size_t> sizes{kc[0].vertices.size(), kc[1].vertices.size()};
    CHECK(sizes == std::multiset<size_t>{1, 3});
    for (auto& c : kc)
        if (c.vertices.size() == 3) CHECK(c.graph.edges().size() == 3); // K3

    // components partition V - {v} and keep all non-v edges
    for (const auto& name : table_graph_names()) {
        Graph g = catalog(name);
        for (int v : cut_vertices(g)) {
            auto cs = components_after(g, v);
            size_t total = 0;
            size_t edge_total = 0;
            for (auto& c : cs) {
                total += c.vertices.size();
                edge_total += c.graph.edges().size();
            }
            CHECK(total == static_cast<size_t>(g.n() - 1));
            size_t expect = 0;
            for (auto [a, b] : g.edges())
                if (a != v && b != v) ++expect;
            CHECK(edge_total == expect);
        }
    }
}

TEST_CASE("structure tests") {
    auto camp = structure_tests(catalog("Camp"));
    CHECK(camp.connected);
    CHECK(camp.is_unicyclic_odd);
    CHECK(!structure_tests(catalog("C4")).is_unicyclic_odd);
    CHECK(structure_tests(catalog("C5")).is_unicyclic_odd);
    auto p4 = structure_tests(catalog("P4"));
    CHECK(p4.is_tree);
    CHECK(p4.spanning_tree == catalog("P4"));
}

TEST_CASE("graph text format") {
    std::istringstream in("# a banner\n5\n1 2\n2 3\n\n3 4\n1 4 # square\n1 5\n");
    Graph g = parse_graph(in);
    CHECK(g == catalog("Bnr"));
    std::istringstream round(format_graph(g));
    CHECK(parse_graph(round) == g);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), input_error);
}

TEST_CASE("spanning embeddings") {
    CHECK(find_spanning_embedding(catalog("C5"), catalog("Hs")).has_value());
    CHECK(find_spanning_embedding(catalog("C5"), catalog("W5")).has_value());
    CHECK(find_spanning_embedding(catalog("K2,3"), catalog("(K4)e")).has_value());
    CHECK(find_spanning_embedding(catalog("K2,3"), catalog("T5")).has_value());
    CHECK(!find_spanning_embedding(catalog("K2,3"), catalog("Bfly")).has_value());
    CHECK(!find_spanning_embedding(catalog("C5"), catalog("Bfly")).has_value());
    Graph camp = catalog("Camp"), host = catalog("Dart");
    auto pi = find_spanning_embedding(camp, host);
    REQUIRE(pi);
    for (auto [u, v] : camp.edges()) CHECK(host.has_edge((*pi)[u], (*pi)[v]));
}
