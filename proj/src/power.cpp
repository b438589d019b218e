#include "graphpow/power.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace graphpow {

namespace {

// Below this size the word-parallel frontier OR is the fast path: rows are a
// handful of words and no side structure is worth building.
constexpr int kSmallVertexCount = 1024;

struct Csr {
    std::vector<int64_t> offset;
    std::vector<int32_t> nbr;
};

Csr build_csr(const Graph& g) {
    const int n = g.vertex_count();
    Csr csr;
    csr.offset.resize(n + 1, 0);
    for (int v = 0; v < n; ++v) csr.offset[v + 1] = csr.offset[v] + g.degree(v);
    csr.nbr.resize(csr.offset[n]);
    for (int v = 0; v < n; ++v) {
        int64_t at = csr.offset[v];
        g.for_each_neighbor(v, [&](int u) { csr.nbr[at++] = u; });
    }
    return csr;
}

// Capped BFS per source over the CSR view; discovered vertices go straight
// into the source's result row. Epoch stamps avoid clearing scratch.
void power_rows_csr(const Csr& csr, int n, int k, int lo, int hi, Graph& out) {
    std::vector<int32_t> dist(n);
    std::vector<int32_t> stamp(n, -1);
    std::vector<int32_t> queue(n);
    for (int s = lo; s < hi; ++s) {
        auto row = out.mutable_row(s);
        int head = 0, tail = 0;
        stamp[s] = s;
        dist[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            int du = dist[u];
            for (int64_t i = csr.offset[u]; i < csr.offset[u + 1]; ++i) {
                int v = csr.nbr[i];
                if (stamp[v] == s) continue;
                stamp[v] = s;
                dist[v] = du + 1;
                row[v >> 6] |= uint64_t{1} << (v & 63);
                if (du + 1 < k) queue[tail++] = v;
            }
        }
    }
}

// Same contract via frontier expansion: next = OR of the frontier's rows.
void power_rows_frontier(const Graph& g, int k, int lo, int hi, Graph& out) {
    const int words = g.words_per_row();
    std::vector<uint64_t> reached(words), frontier(words), next(words);
    for (int s = lo; s < hi; ++s) {
        std::fill(reached.begin(), reached.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        reached[s >> 6] |= uint64_t{1} << (s & 63);
        frontier[s >> 6] |= uint64_t{1} << (s & 63);
        for (int level = 1; level <= k; ++level) {
            std::fill(next.begin(), next.end(), 0);
            bool any = false;
            bits::for_each_set({frontier.data(), static_cast<size_t>(words)}, [&](int v) {
                auto r = g.row(v);
                for (int j = 0; j < words; ++j) next[j] |= r[j];
                any = true;
            });
            if (!any) break;
            bool advanced = false;
            for (int j = 0; j < words; ++j) {
                uint64_t fresh = next[j] & ~reached[j];
                next[j] = fresh;
                reached[j] |= fresh;
                advanced |= fresh != 0;
            }
            if (!advanced) break;
            frontier.swap(next);
        }
        reached[s >> 6] &= ~(uint64_t{1} << (s & 63));
        auto row = out.mutable_row(s);
        std::copy(reached.begin(), reached.end(), row.begin());
    }
}

template <class Work>
void run_chunked(int n, int threads, Work&& work) {
    if (threads <= 1 || n < 2 * threads) {
        work(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] { work(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

int resolve_thread_count() {
    if (const char* env = std::getenv("GRAPHPOW_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

Graph power(const Graph& g, int k, int threads) {
    if (k < 1) throw std::invalid_argument("power: exponent must be >= 1 (got " +
                                           std::to_string(k) + ")");
    if (threads < 0) throw std::invalid_argument("power: negative thread count");
    const int n = g.vertex_count();
    if (k == 1) return g;
    Graph out(n);
    if (n == 0) return out;
    int workers = threads == 0 ? resolve_thread_count() : threads;
    if (n <= kSmallVertexCount) {
        run_chunked(n, workers, [&](int lo, int hi) { power_rows_frontier(g, k, lo, hi, out); });
    } else {
        Csr csr = build_csr(g);
        run_chunked(n, workers, [&](int lo, int hi) { power_rows_csr(csr, n, k, lo, hi, out); });
    }
    return out;
}

}  // namespace graphpow
