#include "graphpow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "graphpow/distance.hpp"

namespace graphpow {

namespace {

// splitmix64: tiny, well-mixed, and identical on every platform, which the
// determinism contract needs (std::uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    template <class T>
    void shuffle(std::vector<T>& xs) {
        for (size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    uint64_t state_;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void add_clique(Graph& g, std::span<const int> vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
}

void add_complete_bipartite(Graph& g, std::span<const int> a, std::span<const int> b) {
    for (int u : a)
        for (int v : b) g.add_edge(u, v);
}

// K_{d-1} minus the perfect matching pairing consecutive members.
void add_clique_minus_matching(Graph& g, std::span<const int> vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!(j == i + 1 && i % 2 == 0)) g.add_edge(vs[i], vs[j]);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::PATH: return "path";
        case Family::CYCLE: return "cycle";
        case Family::H_FAMILY: return "h_family";
        case Family::H_PRIME: return "h_prime";
        case Family::CLIQUE_RING: return "clique_ring";
        case Family::CIRCULANT: return "circulant";
        case Family::RANDOM_REGULAR: return "random_regular";
        case Family::RANDOM_TREE: return "random_tree";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::PATH, Family::CYCLE, Family::H_FAMILY, Family::H_PRIME,
                     Family::CLIQUE_RING, Family::CIRCULANT, Family::RANDOM_REGULAR,
                     Family::RANDOM_TREE})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

bool family_vertex_transitive(Family f) {
    return f == Family::CYCLE || f == Family::CLIQUE_RING || f == Family::CIRCULANT;
}

Graph path(int n) {
    require(n >= 1, "path: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    require(n >= 3, "cycle: need n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph h_family(int d, int t) {
    require(d >= 3 && d % 2 == 1, "h_family: d must be odd and >= 3");
    require(t >= 1, "h_family: t must be >= 1");
    // cluster sizes in order X_{-1}, X_0, ..., X_{3t}, X_{3t+1}
    std::vector<int> sizes;
    sizes.push_back(2);
    for (int i = 0; i <= 3 * t; ++i) sizes.push_back(i % 3 == 0 ? d - 1 : 1);
    sizes.push_back(2);

    std::vector<std::vector<int>> cluster;
    int base = 0;
    for (int s : sizes) {
        std::vector<int> ids(s);
        std::iota(ids.begin(), ids.end(), base);
        base += s;
        cluster.push_back(std::move(ids));
    }

    Graph g(base);
    for (size_t i = 0; i + 1 < cluster.size(); ++i)
        add_complete_bipartite(g, cluster[i], cluster[i + 1]);
    add_clique(g, cluster.front());                       // X_{-1} induces K_2
    add_clique(g, cluster.back());                        // X_{3t+1} induces K_2
    add_clique_minus_matching(g, cluster[1]);             // X_0
    add_clique_minus_matching(g, cluster[3 * t + 1]);     // X_{3t}
    for (int i = 1; i <= t - 1; ++i) add_clique(g, cluster[3 * i + 1]);
    return g;
}

Graph h_prime(int d, int t, int k) {
    require(d >= 3 && d % 2 == 1, "h_prime: d must be odd and >= 3");
    require(k % 3 == 2, "h_prime: k must be 2 (mod 3)");
    require(k >= 5, "h_prime: k must be >= 5");
    require(k < 3 * t, "h_prime: k must be < 3t");
    const int block = d + 1;
    const int window = (k - 2) / 3;
    Graph g((t + 1) * block);
    std::vector<int> ids(block);
    for (int i = 0; i <= t; ++i) {
        std::iota(ids.begin(), ids.end(), i * block);
        add_clique(g, ids);
    }
    for (int i = 0; i <= t; ++i)
        for (int j = i + 1; j <= t && j - i <= window; ++j)
            for (int u = i * block; u < (i + 1) * block; ++u)
                for (int v = j * block; v < (j + 1) * block; ++v) g.add_edge(u, v);
    return g;
}

Graph clique_ring(int d, int m) {
    require((d + 1) % 3 == 0, "clique_ring: need 3 | d+1");
    require(m >= 4, "clique_ring: ring length must be > 3");
    const int s = (d + 1) / 3;
    Graph g(m * s);
    std::vector<int> ids(s);
    for (int c = 0; c < m; ++c) {
        std::iota(ids.begin(), ids.end(), c * s);
        add_clique(g, ids);
        int nc = (c + 1) % m;
        for (int u = c * s; u < (c + 1) * s; ++u)
            for (int v = nc * s; v < nc * s + s; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph circulant(int n, const std::vector<int>& connection_set) {
    require(n >= 1, "circulant: need n >= 1");
    std::vector<int> set = connection_set;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int s : set) {
        require(s != 0, "circulant: 0 in connection set");
        require(s > 0 && s < n, "circulant: residue " + std::to_string(s) + " out of range");
        require(std::binary_search(set.begin(), set.end(), n - s),
                "circulant: connection set not symmetric (missing " + std::to_string(n - s) + ")");
    }
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int s : set) g.add_edge(i, (i + s) % n);
    return g;
}

bool circulant_generates(int n, const std::vector<int>& connection_set) {
    int g = n;
    for (int s : connection_set) g = std::gcd(g, s);
    return g == 1;
}

Graph random_regular(int n, int d, uint64_t seed) {
    require(n >= 1, "random_regular: need n >= 1");
    require(d >= 0 && d < n, "random_regular: need 0 <= d < n");
    require(static_cast<long long>(n) * d % 2 == 0, "random_regular: nd must be even");
    if (d == 0) {
        require(n == 1, "random_regular: d = 0 is disconnected for n > 1");
        return Graph(1);
    }
    Rng rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (int attempt = 0; attempt < kRandomRegularRetryCap; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
        rng.shuffle(stubs);
        Graph g(n);
        bool stuck = false;
        while (stubs.size() >= 2 && !stuck) {
            int u = stubs[0];
            size_t budget = 4 * stubs.size() + 16;
            while (true) {
                if (budget-- == 0) {
                    stuck = true;
                    break;
                }
                size_t j = 1 + rng.below(stubs.size() - 1);
                int v = stubs[j];
                if (v == u || g.adjacent(u, v)) continue;
                g.add_edge(u, v);
                stubs[j] = stubs.back();
                stubs.pop_back();
                stubs[0] = stubs.back();
                stubs.pop_back();
                break;
            }
        }
        if (stuck || !stubs.empty()) continue;
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_regular: retry cap (" +
                             std::to_string(kRandomRegularRetryCap) + ") exhausted for n=" +
                             std::to_string(n) + " d=" + std::to_string(d));
}

Graph random_tree(int n, uint64_t seed) {
    require(n >= 1, "random_tree: need n >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return path(2);
    Rng rng(seed);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(rng.below(n));
    return prufer_decode(n, seq);
}

std::vector<int> prufer_encode(const Graph& tree) {
    const int n = tree.vertex_count();
    require(n >= 2, "prufer_encode: need n >= 2");
    if (!is_connected(tree) || tree.edge_count() != n - 1)
        throw std::invalid_argument("prufer_encode: input is not a tree");
    std::vector<int> degree(n);
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = tree.neighbors(v);
        degree[v] = static_cast<int>(adj[v].size());
    }
    std::vector<bool> removed(n, false);
    std::vector<int> seq;
    seq.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && degree[v] == 1) { leaf = v; break; }
        int parent = -1;
        for (int u : adj[leaf])
            if (!removed[u]) { parent = u; break; }
        seq.push_back(parent);
        removed[leaf] = true;
        --degree[parent];
        --degree[leaf];
    }
    return seq;
}

Graph prufer_decode(int n, std::span<const int> seq) {
    require(n >= 2, "prufer_decode: need n >= 2");
    require(static_cast<int>(seq.size()) == n - 2, "prufer_decode: sequence length must be n-2");
    for (int a : seq) require(a >= 0 && a < n, "prufer_decode: entry out of range");
    Graph g(n);
    std::vector<int> degree(n, 1);
    for (int a : seq) ++degree[a];
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : seq) {
        g.add_edge(leaf, a);
        if (--degree[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    return g;
}

namespace detail {

void check_enumerate_connected_n(int n) {
    require(n >= 1 && n <= kMaxEnumerateConnected,
            "enumerate_connected: n must be in [1, " +
                std::to_string(kMaxEnumerateConnected) + "]");
}

void check_enumerate_trees_n(int n) {
    require(n >= 1 && n <= kMaxEnumerateTrees,
            "enumerate_trees: n must be in [1, " + std::to_string(kMaxEnumerateTrees) + "]");
}

bool mask_connected(int n, const uint32_t* adj_masks) {
    uint32_t seen = 1, frontier = 1;
    const uint32_t all = (uint32_t{1} << n) - 1;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj_masks[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

}  // namespace detail

namespace {

std::string param_error(Family f, const std::string& detail) {
    return std::string("make_family(") + family_name(f) + "): " + detail;
}

template <class T>
T take(Family f, const std::optional<T>& v, const char* name) {
    if (!v) throw std::invalid_argument(param_error(f, std::string("missing parameter ") + name));
    return *v;
}

void forbid(Family f, bool present, const char* name) {
    if (present)
        throw std::invalid_argument(param_error(f, std::string("stray parameter ") + name));
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
    const Family f = spec.family;
    auto forbid_all_but = [&](bool d, bool t, bool k, bool n, bool m, bool cs, bool seed) {
        if (!d) forbid(f, spec.d.has_value(), "d");
        if (!t) forbid(f, spec.t.has_value(), "t");
        if (!k) forbid(f, spec.k.has_value(), "k");
        if (!n) forbid(f, spec.n.has_value(), "n");
        if (!m) forbid(f, spec.m.has_value(), "m");
        if (!cs) forbid(f, spec.connection_set.has_value(), "connection_set");
        if (!seed) forbid(f, spec.seed.has_value(), "seed");
    };
    switch (f) {
        case Family::PATH:
            forbid_all_but(false, false, false, true, false, false, false);
            return path(take(f, spec.n, "n"));
        case Family::CYCLE:
            forbid_all_but(false, false, false, true, false, false, false);
            return cycle(take(f, spec.n, "n"));
        case Family::H_FAMILY:
            forbid_all_but(true, true, false, false, false, false, false);
            return h_family(take(f, spec.d, "d"), take(f, spec.t, "t"));
        case Family::H_PRIME:
            forbid_all_but(true, true, true, false, false, false, false);
            return h_prime(take(f, spec.d, "d"), take(f, spec.t, "t"), take(f, spec.k, "k"));
        case Family::CLIQUE_RING:
            forbid_all_but(true, false, false, false, true, false, false);
            return clique_ring(take(f, spec.d, "d"), take(f, spec.m, "m"));
        case Family::CIRCULANT:
            forbid_all_but(false, false, false, true, false, true, false);
            return circulant(take(f, spec.n, "n"), take(f, spec.connection_set, "connection_set"));
        case Family::RANDOM_REGULAR:
            forbid_all_but(true, false, false, true, false, false, true);
            return random_regular(take(f, spec.n, "n"), take(f, spec.d, "d"),
                                  take(f, spec.seed, "seed"));
        case Family::RANDOM_TREE:
            forbid_all_but(false, false, false, true, false, false, true);
            return random_tree(take(f, spec.n, "n"), take(f, spec.seed, "seed"));
    }
    throw std::invalid_argument("make_family: unknown family");
}

std::string family_spec_string(const FamilySpec& spec) {
    std::string s = family_name(spec.family);
    auto put = [&](const char* name, const std::optional<int>& v) {
        if (v) s += std::string(" ") + name + "=" + std::to_string(*v);
    };
    put("d", spec.d);
    put("t", spec.t);
    put("k", spec.k);
    put("n", spec.n);
    put("m", spec.m);
    if (spec.connection_set) {
        s += " set={";
        for (size_t i = 0; i < spec.connection_set->size(); ++i) {
            if (i) s += ",";
            s += std::to_string((*spec.connection_set)[i]);
        }
        s += "}";
    }
    if (spec.seed) s += " seed=" + std::to_string(*spec.seed);
    return s;
}

}  // namespace graphpow
