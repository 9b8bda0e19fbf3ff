#ifndef IEPS_GRAPH_HPP
#define IEPS_GRAPH_HPP

#include <istream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ieps/types.hpp"

namespace ieps {

using Edge = std::pair<int, int>; // 1-based endpoints, first < second

// Undirected simple graph on vertices 1..n.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Non-edges {u,v}, u < v, in lexicographic order.
    std::vector<Edge> nonedges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_; // sorted lexicographically
    std::vector<std::vector<int>> adj_;
};

inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

bool is_connected(const Graph& g);
// Largest pairwise BFS distance; kInfiniteDiameter when disconnected.
int diameter(const Graph& g);
// Deterministic two-coloring (BFS from the lowest vertex of each component).
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);
// Smallest k <= cap with some k-subset whose removal leaves a connected
// bipartite graph; exhaustive over subsets.
std::optional<int> bipartite_deletion_number(const Graph& g, int cap);

std::vector<int> cut_vertices(const Graph& g);

struct InducedComponent {
    std::vector<int> vertices; // original labels, ascending
    Graph graph;               // relabeled 1..|vertices| following `vertices`
};
std::vector<InducedComponent> components_after(const Graph& g, int v);

struct StructureTests {
    bool connected = false;
    bool is_tree = false;
    bool is_unicyclic_odd = false;
    Graph spanning_tree; // BFS tree from vertex 1 (empty when disconnected)
};
StructureTests structure_tests(const Graph& g);

// Edges of the unique cycle of a connected unicyclic graph.
std::vector<Edge> unicycle_edges(const Graph& g);

// Vertex map pi (1-based) with pi(E(pattern)) subseteq E(host), if one exists.
// Both graphs must have the same vertex count.
std::optional<std::vector<int>> find_spanning_embedding(const Graph& pattern, const Graph& host);

// Text format: first line n, then one "u v" pair per line; '#' starts a comment.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

} // namespace ieps

#endif
