#ifndef GRAPHPOW_TREE_POWER_HPP
#define GRAPHPOW_TREE_POWER_HPP

#include <utility>
#include <vector>

#include "graphpow/graph.hpp"

namespace graphpow {

// Exact edge count of the k-th power of the n-vertex path:
// k*n - k(k+1)/2 while k < n-1, complete otherwise.
long long path_power_edges(long long n, long long k);

bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);

// Sum over vertices of max(0, deg - 2); zero exactly on paths.
long long degree_excess(const Graph& g);

// |E(T^k)| computed exactly. Throws on non-tree input.
long long tree_power_edges(const Graph& tree, int k);

struct RewireStep {
    int pivot = -1;                          // branch vertex v that was split
    std::pair<int, int> deleted_edge{-1, -1};  // P-edge at v, on the u' side
    std::pair<int, int> added_edge{-1, -1};    // new leaf-leaf edge uu'
    Graph tree_after;
    long long power_edges_after = 0;         // e(U^k)
};

// One leaf-path rewiring: picks the branch vertex v (degree >= 3) farthest
// from the root (lowest index on ties), the two bare leaf-paths at v with
// the smallest leaf indices (u < u'), deletes the P-edge at v toward u' and
// adds uu'. The result is again a tree and e(U^k) <= e(T^k).
// Throws std::domain_error when the input is already a path.
std::pair<Graph, RewireStep> rewire_step(const Graph& tree, int root, int k);

struct RewireTrace {
    int k = 1;
    long long initial_power_edges = 0;
    std::vector<RewireStep> steps;
};

// Repeated rewiring from root 0 until a path remains. The e-values along
// the trace never increase, and the number of steps equals the initial
// degree excess.
RewireTrace reduce_to_path(const Graph& tree, int k);

}  // namespace graphpow

#endif
