#ifndef IEPS_GOLDEN_HPP
#define IEPS_GOLDEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "ieps/symmatrix.hpp"

namespace ieps {

// One table row: an ordered multiplicity list allowed in S(G) for a catalog
// graph, with its realizability status in the negative-entry class and the
// construction route / forbidding rule tag.
struct GoldenEntry {
    std::string graph;
    OrderedMultiplicityList list;
    bool allowed = false; // in the Schrodinger class
    std::string tag;      // route for allowed rows, rule for forbidden rows
    bool no_ssp = false;  // allowed but every realization lacks the SSP
};

// Rows for the 6 four-vertex and 21 five-vertex connected graphs, in table
// order, plus auxiliary rows for the graphs on at most 3 vertices.
const std::vector<GoldenEntry>& golden_rows();

std::optional<GoldenEntry> golden_lookup(const std::string& graph_name,
                                         const OrderedMultiplicityList& m);

// True when the graph has golden rows at all.
bool golden_has_graph(const std::string& graph_name);

} // namespace ieps

#endif
