#ifndef GRAPHPOW_POWER_HPP
#define GRAPHPOW_POWER_HPP

#include "graphpow/graph.hpp"

namespace graphpow {

/**
 * k-th power: same vertex set, u ~ v iff 1 <= dist_g(u,v) <= k.
 *
 * Computed as n independent BFS runs capped at k, one per source row.
 * Result is bit-identical at every thread count: row s depends only on g,
 * and workers own disjoint row ranges.
 *
 * threads = 0 resolves to the GRAPHPOW_THREADS environment variable, or to
 * the hardware concurrency when that is unset/0. Throws for k < 1.
 */
Graph power(const Graph& g, int k, int threads = 0);

// Thread count the library would use for threads = 0.
int resolve_thread_count();

}  // namespace graphpow

#endif
