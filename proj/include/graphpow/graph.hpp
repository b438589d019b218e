#ifndef GRAPHPOW_GRAPH_HPP
#define GRAPHPOW_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graphpow/bitset.hpp"

namespace graphpow {

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is stored as one bit row per vertex (n words-per-row * n bits),
 * which keeps adjacency tests O(1), makes row-level set algebra cheap, and
 * makes equality bit-exact. Invariants: no self-loops, symmetric rows.
 * Library operations treat Graph values as immutable; the mutating builders
 * (add_edge/remove_edge) are for construction code.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Builds a graph from unordered pairs; duplicates collapse.
    // Rejects self-loops and out-of-range endpoints, naming the pair.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }
    long long edge_count() const;

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }
    int degree(int v) const { return static_cast<int>(bits::popcount(row(v))); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::span<const uint64_t> row(int v) const {
        return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    std::span<uint64_t> mutable_row(int v) {
        return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        bits::for_each_set(row(v), [&](int u) { out.push_back(u); });
        return out;
    }

    template <class F>
    void for_each_neighbor(int v, F&& f) const { bits::for_each_set(row(v), f); }

    bool operator==(const Graph&) const = default;

private:
    void check_endpoints(int u, int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace graphpow

#endif
