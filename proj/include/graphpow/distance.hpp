#ifndef GRAPHPOW_DISTANCE_HPP
#define GRAPHPOW_DISTANCE_HPP

#include <optional>
#include <vector>

#include "graphpow/graph.hpp"
#include "graphpow/rational.hpp"

namespace graphpow {

/**
 * Per-source BFS distances. Unreachable vertices (and vertices beyond the
 * cap, when one is set) carry a distinguished UNREACHABLE marker, surfaced
 * as an empty optional; no distance value doubles as a sentinel.
 */
class DistanceField {
public:
    DistanceField(int source, std::optional<int> cap, std::vector<int32_t> raw)
        : source_(source), cap_(cap), d_(std::move(raw)) {}

    int source() const { return source_; }
    std::optional<int> cap() const { return cap_; }
    int size() const { return static_cast<int>(d_.size()); }

    bool reachable(int v) const { return d_[v] >= 0; }
    std::optional<int> operator[](int v) const {
        if (d_[v] < 0) return std::nullopt;
        return d_[v];
    }
    // Distance to a vertex known to be reachable.
    int distance(int v) const;

    int reached_count() const;
    // Largest finite distance (the eccentricity of the source when the
    // graph is connected and no cap is set).
    int max_finite() const;
    // Lowest-index vertex attaining max_finite().
    int farthest_vertex() const;

private:
    int source_;
    std::optional<int> cap_;
    std::vector<int32_t> d_;  // -1 encodes UNREACHABLE internally
};

DistanceField bfs_distances(const Graph& g, int source, std::optional<int> cap = std::nullopt);

// Distances to the nearest member of `sources` (multi-source BFS), capped.
// Entry is empty when no source lies within `cap`.
std::vector<std::optional<int>> multi_source_distances(const Graph& g,
                                                       std::span<const int> sources, int cap);

// Maximum pairwise distance. Throws std::domain_error on a disconnected graph.
int diameter(const Graph& g);

// Shortest path u -> v as a vertex sequence, deterministic: walking back
// from v, the lowest-index predecessor wins. Throws if v is unreachable.
std::vector<int> geodesic_path(const Graph& g, int u, int v);

// All vertices within distance k of v, ascending, v included.
std::vector<int> ball(const Graph& g, int v, int k);

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    long long degree_sum = 0;
    Rational average;  // degree_sum / n, exact
};
DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);

// d if every vertex has degree exactly d, empty otherwise.
std::optional<int> regularity(const Graph& g);

}  // namespace graphpow

#endif
