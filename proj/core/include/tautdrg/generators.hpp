#pragma once

#include <string_view>

#include "tautdrg/graph.hpp"

namespace tautdrg {

// D-cube on 2^D vertices, vertex = bit string in binary order. 1 <= D <= 12.
Graph hypercube(int D);

// Bipartite double of the Kneser graph K(2m-1, m-1). Vertex 2r+s is the
// r-th (m-1)-subset of {0..2m-2} in lexicographic order, on side s; (S,0) and
// (T,1) are adjacent iff S and T are disjoint. 2 <= m <= 7.
Graph doubled_odd(int m);

// Vertex 2v+s is (v,s); uv in G gives (u,0)-(v,1) and (v,0)-(u,1).
Graph bipartite_double(const Graph& g);

// 3 <= n <= 5000.
Graph cycle(int n);

// "hypercube:D", "doubled_odd:m", "cycle:n", "double:<path or family>".
// ParseError for unknown families or out-of-range parameters.
Graph generate(std::string_view family);

}  // namespace tautdrg
