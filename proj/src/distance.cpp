#include "graphpow/distance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphpow {

namespace {

// Level-synchronous BFS over the bit rows: the next frontier is the OR of
// the rows of the current frontier, minus everything already visited.
std::vector<int32_t> raw_bfs(const Graph& g, std::span<const int> sources,
                             std::optional<int> cap) {
    const int n = g.vertex_count();
    const int words = g.words_per_row();
    std::vector<int32_t> dist(n, -1);
    std::vector<uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    for (int s : sources) {
        dist[s] = 0;
        visited[s >> 6] |= uint64_t{1} << (s & 63);
        frontier[s >> 6] |= uint64_t{1} << (s & 63);
    }
    int level = 0;
    while (!(cap && level >= *cap)) {
        std::fill(next.begin(), next.end(), 0);
        bool any_frontier = false;
        for (int wi = 0; wi < words; ++wi) {
            uint64_t w = frontier[wi];
            if (!w) continue;
            any_frontier = true;
            while (w) {
                int v = wi * 64 + std::countr_zero(w);
                w &= w - 1;
                auto r = g.row(v);
                for (int j = 0; j < words; ++j) next[j] |= r[j];
            }
        }
        if (!any_frontier) break;
        ++level;
        bool advanced = false;
        for (int j = 0; j < words; ++j) {
            uint64_t fresh = next[j] & ~visited[j];
            next[j] = fresh;
            visited[j] |= fresh;
            if (fresh) advanced = true;
        }
        if (!advanced) break;
        bits::for_each_set(next, [&](int v) { dist[v] = level; });
        frontier.swap(next);
    }
    return dist;
}

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range");
}

}  // namespace

int DistanceField::distance(int v) const {
    if (d_[v] < 0) throw std::domain_error("DistanceField: vertex " + std::to_string(v) +
                                           " is UNREACHABLE");
    return d_[v];
}

int DistanceField::reached_count() const {
    int c = 0;
    for (int32_t x : d_) c += (x >= 0);
    return c;
}

int DistanceField::max_finite() const {
    int32_t m = 0;
    for (int32_t x : d_) m = std::max(m, x);
    return m;
}

int DistanceField::farthest_vertex() const {
    int m = max_finite();
    for (int v = 0; v < size(); ++v)
        if (d_[v] == m) return v;
    return source_;
}

DistanceField bfs_distances(const Graph& g, int source, std::optional<int> cap) {
    check_vertex(g, source, "bfs_distances");
    if (cap && *cap < 0) throw std::invalid_argument("bfs_distances: negative cap");
    int src[1] = {source};
    return DistanceField(source, cap, raw_bfs(g, src, cap));
}

std::vector<std::optional<int>> multi_source_distances(const Graph& g,
                                                       std::span<const int> sources, int cap) {
    for (int s : sources) check_vertex(g, s, "multi_source_distances");
    auto raw = raw_bfs(g, sources, cap);
    std::vector<std::optional<int>> out(raw.size());
    for (size_t v = 0; v < raw.size(); ++v)
        if (raw[v] >= 0) out[v] = raw[v];
    return out;
}

int diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::domain_error("diameter: empty graph");
    int best = 0;
    for (int v = 0; v < n; ++v) {
        DistanceField df = bfs_distances(g, v);
        if (df.reached_count() != n)
            throw std::domain_error("diameter: graph is disconnected");
        best = std::max(best, df.max_finite());
    }
    return best;
}

std::vector<int> geodesic_path(const Graph& g, int u, int v) {
    check_vertex(g, u, "geodesic_path");
    check_vertex(g, v, "geodesic_path");
    DistanceField df = bfs_distances(g, u);
    if (!df.reachable(v))
        throw std::domain_error("geodesic_path: " + std::to_string(v) + " unreachable from " +
                                std::to_string(u));
    int len = df.distance(v);
    std::vector<int> path(len + 1);
    path[len] = v;
    int cur = v;
    for (int i = len; i > 0; --i) {
        int pred = -1;
        g.for_each_neighbor(cur, [&](int w) {
            if (pred < 0 && df.reachable(w) && df.distance(w) == i - 1) pred = w;
        });
        path[i - 1] = pred;
        cur = pred;
    }
    return path;
}

std::vector<int> ball(const Graph& g, int v, int k) {
    check_vertex(g, v, "ball");
    if (k < 0) throw std::invalid_argument("ball: negative radius");
    DistanceField df = bfs_distances(g, v, k);
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (df.reachable(u)) out.push_back(u);
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("degree_stats: empty graph");
    DegreeStats s;
    s.min_degree = n;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        s.degree_sum += d;
    }
    s.average = Rational(s.degree_sum, n);
    return s;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    return bfs_distances(g, 0).reached_count() == n;
}

std::optional<int> regularity(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    int d = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

}  // namespace graphpow
