#include "ieps/golden.hpp"

#include <sstream>

#include "ieps/catalog.hpp"

namespace ieps {

namespace {

// Encoding: "list tag" or "list tag nossp", ';'-separated. Forbidden rules are
// PF, Ferguson, bip, diam, cut; everything else is a construction route.
void add_rows(std::vector<GoldenEntry>& out, const std::string& graph, const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        std::istringstream is(item);
        std::string list, tag, extra;
        is >> list >> tag >> extra;
        if (list.empty()) continue;
        GoldenEntry e;
        e.graph = graph;
        e.list = parse_multlist(list);
        e.tag = tag;
        e.no_ssp = (extra == "nossp");
        e.allowed =
            !(tag == "PF" || tag == "Ferguson" || tag == "bip" || tag == "diam" || tag == "cut");
        out.push_back(e);
    }
}

std::vector<GoldenEntry> build() {
    std::vector<GoldenEntry> r;
    // auxiliary small graphs
    add_rows(r, "P1", "1 K");
    add_rows(r, "P2", "11 K; 2 PF");
    add_rows(r, "P3", "111 Kbar");
    add_rows(r, "K3", "111 Kbar; 12 K; 21 PF");
    // 4 vertices
    add_rows(r, "P4", "1111 Kbar");
    add_rows(r, "K1,3", "1111 Kbar; 121 T");
    add_rows(r, "Paw", "1111 Kbar; 121 K1uK3; 112 K1uK3; 211 PF");
    add_rows(r, "C4", "1111 Kbar; 121 lib; 112 Ferguson; 211 PF; 22 PF");
    add_rows(r, "Dmnd", "1111 Kbar; 121 K1uK3; 112 K1uK3; 211 PF; 22 PF");
    add_rows(r, "K4", "1111 Kbar; 121 K1uK3; 112 K1uK3; 13 K; 211 PF; 22 PF; 31 PF");
    // 5 vertices without K2,3 or K4 subgraph
    add_rows(r, "P5", "11111 Kbar");
    add_rows(r, "S(2,1,1)", "11111 Kbar; 1211 K1uK13; 1121 K1uK13");
    add_rows(r, "K1,4", "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 131 T nossp");
    add_rows(r, "L(3,2)", "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 2111 PF");
    add_rows(r, "Bull", "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 2111 PF");
    add_rows(r, "C5", "11111 Kbar; 1211 lib; 1112 lib; 122 oc; 1121 Ferguson; 2111 PF; 221 PF");
    add_rows(r, "Camp",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 oc; 2111 PF; 221 PF");
    add_rows(r, "Bnr",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 bip; 2111 PF; 122 bip; 221 PF; 212 PF");
    add_rows(r, "Dart",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 Camp; 2111 PF; 221 PF; "
             "212 PF");
    add_rows(r, "Kite",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 2111 PF; 122 diam; 221 PF; "
             "212 PF");
    add_rows(r, "Hs",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 C5; 2111 PF; 221 PF; "
             "212 PF");
    add_rows(r, "Gem",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 C5; 2111 PF; 221 PF; "
             "212 PF");
    add_rows(r, "Bfly",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 Camp; 2111 PF; 221 PF; "
             "212 PF; 311 PF; 131 cut; 113 IEPG2 nossp");
    // 5 vertices with K2,3 or K4 subgraph
    add_rows(r, "K2,3",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 131 IEPG2; 2111 PF; 1112 bip; 122 bip; "
             "221 PF; 212 PF");
    add_rows(r, "T5",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 Camp; 131 K2,3; 2111 PF; "
             "221 PF; 212 PF");
    add_rows(r, "L(4,1)",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 Camp; 131 K1uK4; "
             "113 K1uK4; 2111 PF; 221 PF; 212 PF; 311 PF");
    add_rows(r, "(K4)e",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 C5; 131 K2,3; 2111 PF; "
             "221 PF; 212 PF; 311 PF; 113 bip; 32 PF; 23 PF");
    add_rows(r, "W5",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 C5; 131 K2,3; 2111 PF; "
             "221 PF; 212 PF; 311 PF; 113 bip; 32 PF; 23 PF");
    add_rows(r, "FHs",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 C5; 131 K1uK4; 113 K1uK4; "
             "2111 PF; 221 PF; 212 PF; 311 PF; 32 PF; 23 PF");
    add_rows(r, "K5-e",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 C5; 131 K1uK4; 113 K1uK4; "
             "2111 PF; 221 PF; 212 PF; 311 PF; 32 PF; 23 PF");
    add_rows(r, "K5",
             "11111 Kbar; 1211 K1uK13; 1121 K1uK13; 1112 2K1uK3; 122 C5; 131 K1uK4; 113 K1uK4; "
             "14 K; 2111 PF; 221 PF; 212 PF; 311 PF; 32 PF; 23 PF; 41 PF");
    return r;
}

} // namespace

const std::vector<GoldenEntry>& golden_rows() {
    static const std::vector<GoldenEntry> rows = build();
    return rows;
}

std::optional<GoldenEntry> golden_lookup(const std::string& graph_name,
                                         const OrderedMultiplicityList& m) {
    std::string c = canonical_name(graph_name);
    for (const auto& e : golden_rows())
        if (e.graph == c && e.list == m) return e;
    return std::nullopt;
}

bool golden_has_graph(const std::string& graph_name) {
    std::string c = canonical_name(graph_name);
    for (const auto& e : golden_rows())
        if (e.graph == c) return true;
    return false;
}

} // namespace ieps
