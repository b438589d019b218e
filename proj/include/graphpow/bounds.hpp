#ifndef GRAPHPOW_BOUNDS_HPP
#define GRAPHPOW_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphpow/graph.hpp"
#include "graphpow/rational.hpp"

namespace graphpow {

enum class TheoremId {
    THM_1_1,
    THM_1_2,
    COR_1_3,
    COR_1_4,
    VT_BOUND,
    CAYLEY_GROWTH,
    G3_BOUND,
};

enum class Verdict { HOLDS, FAILS, HYPOTHESES_UNMET };

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);
const char* verdict_name(Verdict v);

struct Hypothesis {
    std::string name;
    bool satisfied = false;
};

struct BoundParams {
    std::optional<long long> d;
    std::optional<long long> k;
    std::optional<long long> n;
    std::optional<long long> diameter;
};

/**
 * Exact verdict for one named inequality on one input. Both sides are
 * carried as integers at the documented scale; floating point never enters
 * the comparison. HOLDS requires every hypothesis to be satisfied AND
 * lhs >= rhs; FAILS (satisfied hypotheses, violated inequality) would be a
 * disproof and must never occur on valid inputs.
 */
struct BoundReport {
    TheoremId theorem_id = TheoremId::THM_1_1;
    BoundParams params;
    std::vector<Hypothesis> hypotheses;
    long long lhs_times_scale = 0;
    long long rhs_times_scale = 0;
    long long scale = 1;
    std::string scale_description;
    Verdict verdict = Verdict::HYPOTHESES_UNMET;
    Rational slack;  // (lhs - rhs) / scale, exact

    bool hypotheses_met() const {
        for (const auto& h : hypotheses)
            if (!h.satisfied) return false;
        return true;
    }
};

// a(G^4) >= 7d/3 for connected G with min degree >= d >= 2 and 3n >= 8d.
// Checked as 3*sumdeg(G^4) >= 7dn.
BoundReport check_thm_1_1(const Graph& g, long long d);
BoundReport check_thm_1_1(const Graph& g);  // d = min degree

// a(G^k) >= (2k-1)/3 (d+1) - (k-2)(k+1)(d+1)^2/(9n) - 1 for connected
// d-regular G, k = 2 (mod 3), diam > k.
// Checked as 9*sumdeg(G^k) >= 3(2k-1)(d+1)n - (k-2)(k+1)(d+1)^2 - 9n.
BoundReport check_thm_1_2(const Graph& g, int k);

// Same without the diameter hypothesis, at the cost of (k-1/2)^2 in the
// penalty term. Checked at scale 36n.
BoundReport check_cor_1_3(const Graph& g, int k);

// Diameter-parameterized variant. Checked at scale 12*diam*n.
BoundReport check_cor_1_4(const Graph& g, int k);

// a(G^k) >= (2k+1)/3 (d+1) - 1 for vertex-transitive G with k < diam.
// Transitivity is asserted by the caller (generators set it for the
// families that are transitive by construction), never decided here.
BoundReport check_vt_bound(const Graph& g, int k, bool transitive_by_construction);

// |A^k| >= (2k+1)/3 |A| for A = S + {0} in Z_n, whenever A^k is proper.
BoundReport check_cayley_growth(int modulus, const std::vector<int>& s, int k);

// a(G^3) >= 7d/4 for connected G with min degree >= d and diam >= 3
// (prior cube bound, kept for cross-checking).
BoundReport check_g3_bound(const Graph& g, long long d);

// Right-hand sides as exact rationals (used by the sandwich checks).
Rational thm_1_2_rhs(long long d, long long n, long long k);
Rational cor_1_3_rhs(long long d, long long n, long long k);
Rational cor_1_4_rhs(long long d, long long diam, long long k);
Rational vt_bound_rhs(long long d, long long k);

// Elements of the k-fold sumset of A = S + {0} in Z_n, ascending.
std::vector<int> sumset_power(int modulus, const std::vector<int>& s, int k);

struct PerVertexSubCheck {
    std::string name;
    bool applicable = false;
    bool pass = true;
    std::optional<int> witness;  // offending vertex when pass = false
};

/**
 * Per-vertex degree claims, each gated on its own hypotheses:
 *  (a) d-regular, diam > 3k'+2: every vertex of G^{3k'+2} has degree
 *      >= (k'+1)(d+1) - 1;
 *  (b) min degree >= d, n > 3d:  every vertex of G^4 has degree >= 2d;
 *  (c) min degree >= d: any u with two vertices v, v' at distance exactly 3
 *      that are themselves >= 3 apart has degree >= 3d in G^4.
 */
struct PerVertexReport {
    PerVertexSubCheck net_degree;       // (a)
    PerVertexSubCheck fourth_power_2d;  // (b)
    PerVertexSubCheck distant_pair_3d;  // (c)

    bool all_pass() const {
        return net_degree.pass && fourth_power_2d.pass && distant_pair_3d.pass;
    }
};

PerVertexReport per_vertex_claims(const Graph& g, long long d, int k_prime);

// Level-set lower bound for vertex-transitive inputs: every distance class
// N^i(x) with 1 <= i < diam has at least ceil(2(d+1)/3) vertices.
// Requires a connected regular input.
struct LevelSetReport {
    bool pass = true;
    long long required = 0;
    std::optional<int> witness_vertex;
    std::optional<int> witness_level;
};

LevelSetReport check_level_set_bound(const Graph& g);

}  // namespace graphpow

#endif
