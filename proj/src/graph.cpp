#include "ieps/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace ieps {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n) throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loops not allowed");
        if (!seen.insert({u, v}).second) throw input_error("duplicate edge");
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(n + 1, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_) throw input_error("vertex out of range");
    return adj_[v];
}

std::vector<Edge> Graph::nonedges() const {
    std::vector<Edge> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!has_edge(i, j)) out.push_back({i, j});
    return out;
}

namespace {

std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(g.n() + 1, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto d = bfs_dist(g, 1);
    for (int v = 1; v <= g.n(); ++v)
        if (d[v] < 0) return false;
    return true;
}

int diameter(const Graph& g) {
    int best = 0;
    for (int s = 1; s <= g.n(); ++s) {
        auto d = bfs_dist(g, s);
        for (int v = 1; v <= g.n(); ++v) {
            if (d[v] < 0) return kInfiniteDiameter;
            best = std::max(best, d[v]);
        }
    }
    return best;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    std::vector<int> color(g.n() + 1, -1);
    for (int s = 1; s <= g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> x, y;
    for (int v = 1; v <= g.n(); ++v) (color[v] == 0 ? x : y).push_back(v);
    return std::make_pair(x, y);
}

namespace {

bool connected_excluding(const Graph& g, const std::vector<bool>& removed) {
    int start = 0, count = 0;
    for (int v = 1; v <= g.n(); ++v)
        if (!removed[v]) {
            if (!start) start = v;
            ++count;
        }
    if (count == 0) return false;
    std::vector<bool> seen(g.n() + 1, false);
    std::deque<int> q{start};
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u))
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push_back(w);
            }
    }
    return reached == count;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> pos(g.n() + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (pos[u] && pos[v]) es.push_back({pos[u], pos[v]});
    return Graph(static_cast<int>(keep.size()), es);
}

bool bipartite_excluding(const Graph& g, const std::vector<bool>& removed) {
    std::vector<int> keep;
    for (int v = 1; v <= g.n(); ++v)
        if (!removed[v]) keep.push_back(v);
    return bipartition(induced_subgraph(g, keep)).has_value();
}

} // namespace

std::optional<int> bipartite_deletion_number(const Graph& g, int cap) {
    if (cap > g.n() - 2) throw input_error("cap exceeds n - 2");
    for (int k = 0; k <= cap; ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 1);
        // iterate k-subsets of 1..n
        auto advance = [&]() {
            int i = k - 1;
            while (i >= 0 && comb[i] == g.n() - (k - 1 - i)) --i;
            if (i < 0) return false;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        };
        bool more = true;
        while (more) {
            std::vector<bool> removed(g.n() + 1, false);
            for (int v : comb) removed[v] = true;
            if (connected_excluding(g, removed) && bipartite_excluding(g, removed)) return k;
            more = k > 0 && advance();
        }
    }
    return std::nullopt;
}

std::vector<int> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw input_error("cut_vertices requires a connected graph");
    std::vector<int> out;
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<bool> removed(g.n() + 1, false);
        removed[v] = true;
        if (g.n() > 1 && !connected_excluding(g, removed)) out.push_back(v);
    }
    return out;
}

std::vector<InducedComponent> components_after(const Graph& g, int v) {
    if (v < 1 || v > g.n()) throw input_error("vertex out of range");
    std::vector<bool> assigned(g.n() + 1, false);
    assigned[v] = true;
    std::vector<InducedComponent> comps;
    for (int s = 1; s <= g.n(); ++s) {
        if (assigned[s]) continue;
        std::vector<int> verts;
        std::deque<int> q{s};
        assigned[s] = true;
        verts.push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u))
                if (!assigned[w]) {
                    assigned[w] = true;
                    verts.push_back(w);
                    q.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        comps.push_back({verts, induced_subgraph(g, verts)});
    }
    return comps;
}

StructureTests structure_tests(const Graph& g) {
    StructureTests st;
    st.connected = is_connected(g);
    int m = static_cast<int>(g.edges().size());
    st.is_tree = st.connected && m == g.n() - 1;
    if (st.connected) {
        // BFS tree from vertex 1
        std::vector<int> parent(g.n() + 1, 0);
        std::vector<bool> seen(g.n() + 1, false);
        std::deque<int> q{1};
        seen[1] = true;
        std::vector<Edge> tedges;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = u;
                    tedges.push_back({std::min(u, w), std::max(u, w)});
                    q.push_back(w);
                }
        }
        st.spanning_tree = Graph(g.n(), tedges);
        if (m == g.n()) {
            auto cyc = unicycle_edges(g);
            st.is_unicyclic_odd = (cyc.size() % 2 == 1);
        }
    }
    return st;
}

std::vector<Edge> unicycle_edges(const Graph& g) {
    if (!is_connected(g) || static_cast<int>(g.edges().size()) != g.n())
        throw input_error("unicycle_edges requires a connected unicyclic graph");
    // strip leaves until only the cycle remains
    std::vector<int> deg(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v) deg[v] = g.degree(v);
    std::vector<bool> dead(g.n() + 1, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= g.n(); ++v)
            if (!dead[v] && deg[v] == 1) {
                dead[v] = true;
                changed = true;
                for (int w : g.neighbors(v))
                    if (!dead[w]) --deg[w];
            }
    }
    std::vector<Edge> cyc;
    for (auto [u, v] : g.edges())
        if (!dead[u] && !dead[v]) cyc.push_back({u, v});
    return cyc;
}

std::optional<std::vector<int>> find_spanning_embedding(const Graph& pattern, const Graph& host) {
    if (pattern.n() != host.n()) return std::nullopt;
    int n = pattern.n();
    std::vector<int> pi(n + 1);
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<int> perm(pi.begin() + 1, pi.end());
    do {
        bool ok = true;
        for (auto [u, v] : pattern.edges())
            if (!host.has_edge(perm[u - 1], perm[v - 1])) {
                ok = false;
                break;
            }
        if (ok) {
            std::vector<int> out(n + 1, 0);
            for (int v = 1; v <= n; ++v) out[v] = perm[v - 1];
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) continue;
            continue; // blank or comment before header
        }
        int u, v;
        if (ls >> u >> v) edges.push_back({u, v});
    }
    if (n < 0) throw input_error("graph file: missing vertex count");
    return Graph(n, edges);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

} // namespace ieps
