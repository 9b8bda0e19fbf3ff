#include "ieps/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ieps {

namespace {

// Fixed canonical labelings. The pictures pin the graphs only up to
// isomorphism; these labelings are the committed ones used everywhere.
const std::map<std::string, Graph>& named_graphs() {
    static const std::map<std::string, Graph> cat = [] {
        std::map<std::string, Graph> m;
        auto add = [&](const std::string& name, int n, std::vector<Edge> es) {
            m.emplace(name, Graph(n, std::move(es)));
        };
        // n = 4
        add("K1,3", 4, {{1, 2}, {1, 3}, {1, 4}});
        add("Paw", 4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
        add("Dmnd", 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
        // n = 5
        add("S(2,1,1)", 5, {{1, 2}, {2, 3}, {1, 4}, {1, 5}});
        add("K1,4", 5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
        add("L(3,2)", 5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
        add("Bull", 5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}});
        add("Camp", 5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}});
        add("Bnr", 5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}});
        add("Dart", 5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 5}});
        add("Kite", 5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 5}});
        add("Hs", 5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}});
        add("Gem", 5, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
        add("Bfly", 5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 2}, {3, 4}});
        add("K2,3", 5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
        add("T5", 5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
        add("L(4,1)", 5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}});
        add("(K4)e", 5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
        add("W5", 5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
        add("FHs", 5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}});
        add("K5-e", 5,
            {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
        return m;
    }();
    return cat;
}

std::string normalize(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '{' && c != '}')
            s.push_back(c);
    // alternative spellings
    if (s == "K5e" || s == "K5−e") s = "K5-e";
    if (s == "(K4)_e" || s == "K4e") s = "(K4)e";
    if (s == "S211") s = "S(2,1,1)";
    if (s == "K1") s = "P1";
    if (s == "K2") s = "P2";
    if (s == "C3") s = "K3";
    if (s == "L32" || s == "L(3,2)") s = "L(3,2)";
    if (s == "L41" || s == "L(4,1)") s = "L(4,1)";
    if (s == "House") s = "Hs";
    return s;
}

bool parse_family(const std::string& s, char& kind, int& n) {
    if (s.size() < 2) return false;
    kind = s[0];
    if (kind != 'P' && kind != 'C' && kind != 'K') return false;
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    n = std::stoi(s.substr(1));
    return n >= 1;
}

Graph family_graph(char kind, int n) {
    std::vector<Edge> es;
    switch (kind) {
    case 'P':
        for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
        break;
    case 'C':
        if (n < 3) throw input_error("cycle needs at least 3 vertices");
        for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
        es.push_back({1, n});
        break;
    case 'K':
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
        break;
    }
    return Graph(n, es);
}

} // namespace

Graph catalog(const std::string& name) {
    std::string s = normalize(name);
    auto& named = named_graphs();
    if (auto it = named.find(s); it != named.end()) return it->second;
    char kind;
    int n;
    if (parse_family(s, kind, n)) return family_graph(kind, n);
    throw input_error("unknown graph name: " + name);
}

bool is_catalog_name(const std::string& name) {
    std::string s = normalize(name);
    if (named_graphs().count(s)) return true;
    char kind;
    int n;
    return parse_family(s, kind, n) && !(kind == 'C' && n < 3);
}

std::string canonical_name(const std::string& name) {
    if (!is_catalog_name(name)) throw input_error("unknown graph name: " + name);
    return normalize(name);
}

const std::vector<std::string>& table_graph_names() {
    static const std::vector<std::string> names = {
        // 4 vertices
        "P4", "K1,3", "Paw", "C4", "Dmnd", "K4",
        // 5 vertices, not containing K2,3 nor K4
        "P5", "S(2,1,1)", "K1,4", "L(3,2)", "Bull", "C5", "Camp", "Bnr", "Dart", "Kite",
        "Hs", "Gem", "Bfly",
        // 5 vertices, containing K2,3 or K4
        "K2,3", "T5", "L(4,1)", "(K4)e", "W5", "FHs", "K5-e", "K5"};
    return names;
}

} // namespace ieps
