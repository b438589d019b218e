#ifndef GRAPHPOW_GENERATORS_HPP
#define GRAPHPOW_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphpow/graph.hpp"

namespace graphpow {

enum class Family {
    PATH,
    CYCLE,
    H_FAMILY,
    H_PRIME,
    CLIQUE_RING,
    CIRCULANT,
    RANDOM_REGULAR,
    RANDOM_TREE,
};

// Parameters identifying one generated instance. Each family requires
// exactly its own parameter subset; make_family rejects missing or stray
// parameters by name.
struct FamilySpec {
    Family family = Family::PATH;
    std::optional<int> d;
    std::optional<int> t;
    std::optional<int> k;
    std::optional<int> n;
    std::optional<int> m;                // ring length
    std::optional<std::vector<int>> connection_set;
    std::optional<uint64_t> seed;
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// True for families that are vertex-transitive by construction; the flag
// feeds check_vt_bound, which never decides transitivity algorithmically.
bool family_vertex_transitive(Family f);

Graph make_family(const FamilySpec& spec);
std::string family_spec_string(const FamilySpec& spec);

Graph path(int n);
Graph cycle(int n);

// The layered d-regular family (d odd >= 3, t >= 1): clusters
// X_{-1}, X_0, ..., X_{3t+1} laid out in ascending cluster order,
// consecutive clusters completely joined; X_{-1}, X_{3t+1} induce K_2;
// X_0, X_{3t} induce K_{d-1} minus the matching (0,1),(2,3),...; interior
// X_{3i} induce K_{d-1}; other clusters are single vertices.
// n = 4 + (t+1)(d-1) + 2t, diameter 3t+2.
Graph h_family(int d, int t);

// Companion clique graph: t+1 blocks of size d+1, each a clique, blocks at
// index distance <= (k-2)/3 completely joined. Requires d odd >= 3,
// k = 2 (mod 3), 5 <= k < 3t.
Graph h_prime(int d, int t, int k);

// m cliques of size (d+1)/3 in cyclic order, consecutive cliques completely
// joined. d-regular and vertex-transitive. Requires 3 | d+1 and m >= 4.
Graph clique_ring(int d, int m);

// Cayley graph of Z_n: i ~ i+s (mod n) for s in the connection set, which
// must be symmetric (s in S => n-s in S) and exclude 0. The result is
// connected iff gcd(n, S) = 1; see circulant_generates.
Graph circulant(int n, const std::vector<int>& connection_set);
bool circulant_generates(int n, const std::vector<int>& connection_set);

// Simple connected d-regular graph from seeded stub matching: invalid stub
// pairs (loops, duplicate edges) are rejected pair-by-pair, dead ends and
// disconnected outcomes restart the attempt. Fails after kRetryCap attempts.
Graph random_regular(int n, int d, uint64_t seed);
inline constexpr int kRandomRegularRetryCap = 1000;

// Uniform labeled tree via a random Prufer sequence.
Graph random_tree(int n, uint64_t seed);

std::vector<int> prufer_encode(const Graph& tree);
Graph prufer_decode(int n, std::span<const int> seq);

inline constexpr int kMaxEnumerateConnected = 7;
inline constexpr int kMaxEnumerateTrees = 9;

namespace detail {
void check_enumerate_connected_n(int n);
void check_enumerate_trees_n(int n);
bool mask_connected(int n, const uint32_t* adj_masks);
}  // namespace detail

// Every labeled simple connected graph on n <= 7 vertices, exactly once
// (all edge subsets, connectivity-filtered). Labeled totality is the point:
// no isomorphism reduction.
template <class F>
void enumerate_connected(int n, F&& f) {
    detail::check_enumerate_connected_n(n);
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_of(pairs);
    {
        int i = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pair_of[i++] = {u, v};
    }
    uint32_t adj[8];
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
        for (int v = 0; v < n; ++v) adj[v] = 0;
        for (int i = 0; i < pairs; ++i) {
            if (mask >> i & 1) {
                auto [u, v] = pair_of[i];
                adj[u] |= uint32_t{1} << v;
                adj[v] |= uint32_t{1} << u;
            }
        }
        if (!detail::mask_connected(n, adj)) continue;
        Graph g(n);
        for (int i = 0; i < pairs; ++i)
            if (mask >> i & 1) g.add_edge(pair_of[i].first, pair_of[i].second);
        f(static_cast<const Graph&>(g));
    }
}

// All n^(n-2) labeled trees on n <= 9 vertices via Prufer decode
// (the single tree for n <= 2).
template <class F>
void enumerate_trees(int n, F&& f) {
    detail::check_enumerate_trees_n(n);
    if (n <= 2) {
        f(static_cast<const Graph&>(n == 2 ? path(2) : path(1)));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        f(static_cast<const Graph&>(prufer_decode(n, seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

}  // namespace graphpow

#endif
