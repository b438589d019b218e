#include "graphpow/graph.hpp"

#include <stdexcept>
#include <string>

namespace graphpow {

Graph::Graph(int n) : n_(n), words_(bits::word_count(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += bits::popcount(row(v));
    return total / 2;
}

void Graph::check_endpoints(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("Graph: vertex out of range in pair (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ")");
    if (u == v)
        throw std::invalid_argument("Graph: self-loop rejected at pair (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ")");
}

void Graph::add_edge(int u, int v) {
    check_endpoints(u, v);
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_endpoints(u, v);
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
}

}  // namespace graphpow
