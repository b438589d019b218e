#include "graphpow/tree_power.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphpow/distance.hpp"
#include "graphpow/power.hpp"

namespace graphpow {

long long path_power_edges(long long n, long long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("path_power_edges: need n >= 1, k >= 1");
    if (k >= n - 1) return n * (n - 1) / 2;
    return k * n - k * (k + 1) / 2;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_path_graph(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

long long degree_excess(const Graph& g) {
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += std::max(0, g.degree(v) - 2);
    return sum;
}

long long tree_power_edges(const Graph& tree, int k) {
    if (!is_tree(tree)) throw std::invalid_argument("tree_power_edges: input is not a tree");
    if (k < 1) throw std::invalid_argument("tree_power_edges: need k >= 1");
    long long degree_sum = 0;
    for (int v = 0; v < tree.vertex_count(); ++v)
        degree_sum += static_cast<long long>(ball(tree, v, k).size()) - 1;
    return degree_sum / 2;
}

namespace {

struct Leg {
    int first;  // v's neighbor the leg starts with
    int leaf;   // endpoint
};

// Walks away from v through w; a leg is a bare path (all interior degrees 2)
// ending in a leaf.
std::optional<Leg> trace_leg(const Graph& t, int v, int w) {
    int prev = v, cur = w;
    while (t.degree(cur) == 2) {
        int nxt = -1;
        t.for_each_neighbor(cur, [&](int u) {
            if (u != prev) nxt = u;
        });
        prev = cur;
        cur = nxt;
    }
    if (t.degree(cur) != 1) return std::nullopt;
    return Leg{w, cur};
}

}  // namespace

std::pair<Graph, RewireStep> rewire_step(const Graph& tree, int root, int k) {
    if (!is_tree(tree)) throw std::invalid_argument("rewire_step: input is not a tree");
    if (root < 0 || root >= tree.vertex_count())
        throw std::invalid_argument("rewire_step: root out of range");

    DistanceField from_root = bfs_distances(tree, root);
    int pivot = -1, pivot_dist = -1;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (tree.degree(v) < 3) continue;
        int dv = from_root.distance(v);
        if (dv > pivot_dist) {
            pivot = v;
            pivot_dist = dv;
        }
    }
    if (pivot < 0)
        throw std::domain_error("rewire_step: tree is already a path (no vertex of degree >= 3)");

    // Every subtree at pivot pointing away from the root is a bare leaf path
    // (a deeper branch vertex would contradict the pivot choice); at most the
    // neighbor toward the root fails to qualify.
    std::vector<Leg> legs;
    tree.for_each_neighbor(pivot, [&](int w) {
        if (auto leg = trace_leg(tree, pivot, w)) legs.push_back(*leg);
    });
    std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) { return a.leaf < b.leaf; });
    if (legs.size() < 2)
        throw std::logic_error("rewire_step: pivot lost its leaf paths (corrupt tree)");

    const Leg& u_leg = legs[0];
    const Leg& uprime_leg = legs[1];

    Graph rewired = tree;
    rewired.remove_edge(pivot, uprime_leg.first);
    rewired.add_edge(u_leg.leaf, uprime_leg.leaf);

    RewireStep step;
    step.pivot = pivot;
    step.deleted_edge = {pivot, uprime_leg.first};
    step.added_edge = {u_leg.leaf, uprime_leg.leaf};
    step.tree_after = rewired;
    step.power_edges_after = tree_power_edges(rewired, k);
    return {std::move(rewired), std::move(step)};
}

RewireTrace reduce_to_path(const Graph& tree, int k) {
    if (!is_tree(tree)) throw std::invalid_argument("reduce_to_path: input is not a tree");
    RewireTrace trace;
    trace.k = k;
    trace.initial_power_edges = tree_power_edges(tree, k);
    Graph cur = tree;
    while (!is_path_graph(cur)) {
        auto [next, step] = rewire_step(cur, 0, k);
        trace.steps.push_back(std::move(step));
        cur = std::move(next);
    }
    return trace;
}

}  // namespace graphpow
