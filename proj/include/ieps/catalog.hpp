#ifndef IEPS_CATALOG_HPP
#define IEPS_CATALOG_HPP

#include <string>
#include <vector>

#include "ieps/graph.hpp"

namespace ieps {

// Resolve a symbolic graph name to its fixed canonical labeling.
// Families: "Pn", "Cn", "Kn" for any n >= 1 (cycles need n >= 3), plus the
// named 4- and 5-vertex graphs: K1,3 Paw Dmnd S(2,1,1) K1,4 L(3,2) Bull Camp
// Bnr Dart Kite Hs Gem Bfly K2,3 T5 L(4,1) (K4)e W5 FHs K5-e.
// Alternative spellings such as "K_{2,3}", "C_5", "K5-e"/"K5e" are accepted.
Graph catalog(const std::string& name);

bool is_catalog_name(const std::string& name);

// Canonical spelling of a recognized name.
std::string canonical_name(const std::string& name);

// The 6 + 21 connected graphs on 4 and 5 vertices, in table order.
const std::vector<std::string>& table_graph_names();

} // namespace ieps

#endif
