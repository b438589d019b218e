#include "graphpow/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "graphpow/distance.hpp"
#include "graphpow/power.hpp"

namespace graphpow {

namespace {

void finalize(BoundReport& r) {
    if (!r.hypotheses_met()) {
        r.verdict = Verdict::HYPOTHESES_UNMET;
    } else {
        r.verdict = r.lhs_times_scale >= r.rhs_times_scale ? Verdict::HOLDS : Verdict::FAILS;
    }
    r.slack = Rational(r.lhs_times_scale - r.rhs_times_scale, r.scale);
}

long long sum_degrees(const Graph& g) {
    long long s = 0;
    for (int v = 0; v < g.vertex_count(); ++v) s += g.degree(v);
    return s;
}

int min_degree(const Graph& g) {
    int m = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) m = std::min(m, g.degree(v));
    return m;
}

void check_k(int k, const char* who) {
    if (k < 1) throw std::invalid_argument(std::string(who) + ": need k >= 1");
}

}  // namespace

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::THM_1_1: return "thm_1_1";
        case TheoremId::THM_1_2: return "thm_1_2";
        case TheoremId::COR_1_3: return "cor_1_3";
        case TheoremId::COR_1_4: return "cor_1_4";
        case TheoremId::VT_BOUND: return "vt_bound";
        case TheoremId::CAYLEY_GROWTH: return "cayley_growth";
        case TheoremId::G3_BOUND: return "g3_bound";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (TheoremId id : {TheoremId::THM_1_1, TheoremId::THM_1_2, TheoremId::COR_1_3,
                         TheoremId::COR_1_4, TheoremId::VT_BOUND, TheoremId::CAYLEY_GROWTH,
                         TheoremId::G3_BOUND})
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HOLDS: return "HOLDS";
        case Verdict::FAILS: return "FAILS";
        case Verdict::HYPOTHESES_UNMET: return "HYPOTHESES_UNMET";
    }
    return "?";
}

BoundReport check_thm_1_1(const Graph& g, long long d) {
    const long long n = g.vertex_count();
    const int delta = n ? min_degree(g) : 0;
    BoundReport r;
    r.theorem_id = TheoremId::THM_1_1;
    r.params.d = d;
    r.params.n = n;
    r.hypotheses = {
        {"connected", is_connected(g)},
        {"min_degree_ge_d", delta >= d},
        {"d_ge_2", d >= 2},
        {"3n_ge_8d", 3 * n >= 8 * d},
    };
    r.scale = 3 * std::max<long long>(n, 1);
    r.scale_description = "3n";
    r.lhs_times_scale = 3 * sum_degrees(power(g, 4));
    r.rhs_times_scale = 7 * d * n;
    finalize(r);
    return r;
}

BoundReport check_thm_1_1(const Graph& g) {
    return check_thm_1_1(g, g.vertex_count() ? min_degree(g) : 0);
}

BoundReport check_thm_1_2(const Graph& g, int k) {
    check_k(k, "check_thm_1_2");
    const long long n = g.vertex_count();
    const bool connected = is_connected(g);
    const std::optional<int> reg = regularity(g);
    std::optional<long long> diam;
    if (connected && n > 0) diam = diameter(g);

    BoundReport r;
    r.theorem_id = TheoremId::THM_1_2;
    r.params.k = k;
    r.params.n = n;
    r.params.d = reg ? std::optional<long long>(*reg) : std::nullopt;
    r.params.diameter = diam;
    r.hypotheses = {
        {"connected", connected},
        {"regular", reg.has_value()},
        {"k_mod_3_eq_2", k % 3 == 2},
        {"diam_gt_k", diam.has_value() && *diam > k},
    };
    r.scale = 9 * std::max<long long>(n, 1);
    r.scale_description = "9n";
    r.lhs_times_scale = 9 * sum_degrees(power(g, k));
    if (reg) {
        const long long dp1 = *reg + 1;
        r.rhs_times_scale = 3 * (2 * k - 1) * dp1 * n - (k - 2) * (k + 1) * dp1 * dp1 - 9 * n;
    }
    finalize(r);
    return r;
}

BoundReport check_cor_1_3(const Graph& g, int k) {
    check_k(k, "check_cor_1_3");
    const long long n = g.vertex_count();
    const std::optional<int> reg = regularity(g);

    BoundReport r;
    r.theorem_id = TheoremId::COR_1_3;
    r.params.k = k;
    r.params.n = n;
    r.params.d = reg ? std::optional<long long>(*reg) : std::nullopt;
    r.hypotheses = {
        {"connected", is_connected(g)},
        {"regular", reg.has_value()},
        {"k_mod_3_eq_2", k % 3 == 2},
    };
    r.scale = 36 * std::max<long long>(n, 1);
    r.scale_description = "36n";
    r.lhs_times_scale = 36 * sum_degrees(power(g, k));
    if (reg) {
        const long long dp1 = *reg + 1;
        const long long tk = 2 * k - 1;
        r.rhs_times_scale = 12 * tk * dp1 * n - tk * tk * dp1 * dp1 - 36 * n;
    }
    finalize(r);
    return r;
}

BoundReport check_cor_1_4(const Graph& g, int k) {
    check_k(k, "check_cor_1_4");
    const long long n = g.vertex_count();
    const bool connected = is_connected(g);
    const std::optional<int> reg = regularity(g);
    std::optional<long long> diam;
    if (connected && n > 0) diam = diameter(g);

    BoundReport r;
    r.theorem_id = TheoremId::COR_1_4;
    r.params.k = k;
    r.params.n = n;
    r.params.d = reg ? std::optional<long long>(*reg) : std::nullopt;
    r.params.diameter = diam;
    r.hypotheses = {
        {"connected", connected},
        {"regular", reg.has_value()},
        {"k_mod_3_eq_2", k % 3 == 2},
        {"diam_ge_1", diam.has_value() && *diam >= 1},
    };
    const long long D = diam.value_or(0);
    r.scale = 12 * std::max<long long>(D, 1) * std::max<long long>(n, 1);
    r.scale_description = "12*diam*n";
    r.lhs_times_scale = 12 * D * sum_degrees(power(g, k));
    if (reg && D >= 1) {
        const long long dp1 = *reg + 1;
        const long long tk = 2 * k - 1;
        r.rhs_times_scale = n * (4 * tk * dp1 * D - tk * tk * dp1 - 12 * D);
    }
    finalize(r);
    return r;
}

BoundReport check_vt_bound(const Graph& g, int k, bool transitive_by_construction) {
    check_k(k, "check_vt_bound");
    const long long n = g.vertex_count();
    const bool connected = is_connected(g);
    const std::optional<int> reg = regularity(g);
    std::optional<long long> diam;
    if (connected && n > 0) diam = diameter(g);

    BoundReport r;
    r.theorem_id = TheoremId::VT_BOUND;
    r.params.k = k;
    r.params.n = n;
    r.params.d = reg ? std::optional<long long>(*reg) : std::nullopt;
    r.params.diameter = diam;
    r.hypotheses = {
        {"vertex_transitive_asserted", transitive_by_construction},
        {"connected", connected},
        {"regular", reg.has_value()},
        {"k_lt_diam", diam.has_value() && k < *diam},
    };
    r.scale = 3 * std::max<long long>(n, 1);
    r.scale_description = "3n";
    r.lhs_times_scale = 3 * sum_degrees(power(g, k));
    if (reg) r.rhs_times_scale = n * (2 * k + 1) * (*reg + 1) - 3 * n;
    finalize(r);
    return r;
}

std::vector<int> sumset_power(int modulus, const std::vector<int>& s, int k) {
    if (modulus < 1) throw std::invalid_argument("sumset_power: need modulus >= 1");
    check_k(k, "sumset_power");
    std::vector<char> a(modulus, 0), cur(modulus, 0), next(modulus, 0);
    a[0] = 1;
    for (int x : s) {
        if (x < 0 || x >= modulus)
            throw std::invalid_argument("sumset_power: residue out of range");
        a[x] = 1;
    }
    cur = a;
    for (int step = 1; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int x = 0; x < modulus; ++x) {
            if (!cur[x]) continue;
            for (int y = 0; y < modulus; ++y)
                if (a[y]) next[(x + y) % modulus] = 1;
        }
        cur.swap(next);
    }
    std::vector<int> out;
    for (int x = 0; x < modulus; ++x)
        if (cur[x]) out.push_back(x);
    return out;
}

BoundReport check_cayley_growth(int modulus, const std::vector<int>& s, int k) {
    check_k(k, "check_cayley_growth");
    if (modulus < 1) throw std::invalid_argument("check_cayley_growth: need modulus >= 1");
    bool symmetric = true, zero_free = true, in_range = true;
    std::vector<int> set = s;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int x : set) {
        if (x == 0) zero_free = false;
        if (x < 0 || x >= modulus) in_range = false;
    }
    if (in_range)
        for (int x : set)
            if (x != 0 && !std::binary_search(set.begin(), set.end(), (modulus - x) % modulus))
                symmetric = false;
    int g = modulus;
    for (int x : set) g = std::gcd(g, x);
    const bool generates = g == 1;

    long long ak_size = 0;
    if (in_range) ak_size = static_cast<long long>(sumset_power(modulus, set, k).size());
    const long long a_size = static_cast<long long>(set.size()) + (zero_free ? 1 : 0);

    BoundReport r;
    r.theorem_id = TheoremId::CAYLEY_GROWTH;
    r.params.k = k;
    r.params.n = modulus;
    r.params.d = a_size - 1;  // degree of the Cayley graph on A \ {0}
    r.hypotheses = {
        {"residues_in_range", in_range},
        {"set_symmetric", symmetric},
        {"zero_excluded", zero_free},
        {"generates", generates},
        {"power_proper", in_range && ak_size < modulus},
    };
    r.scale = 3;
    r.scale_description = "3";
    r.lhs_times_scale = 3 * ak_size;
    r.rhs_times_scale = (2 * static_cast<long long>(k) + 1) * a_size;
    finalize(r);
    return r;
}

BoundReport check_g3_bound(const Graph& g, long long d) {
    const long long n = g.vertex_count();
    const bool connected = is_connected(g);
    const int delta = n ? min_degree(g) : 0;
    std::optional<long long> diam;
    if (connected && n > 0) diam = diameter(g);

    BoundReport r;
    r.theorem_id = TheoremId::G3_BOUND;
    r.params.d = d;
    r.params.n = n;
    r.params.diameter = diam;
    r.hypotheses = {
        {"connected", connected},
        {"min_degree_ge_d", delta >= d},
        {"diam_ge_3", diam.has_value() && *diam >= 3},
    };
    r.scale = 4 * std::max<long long>(n, 1);
    r.scale_description = "4n";
    r.lhs_times_scale = 4 * sum_degrees(power(g, 3));
    r.rhs_times_scale = 7 * d * n;
    finalize(r);
    return r;
}

Rational thm_1_2_rhs(long long d, long long n, long long k) {
    const Rational dp1(d + 1);
    return Rational(2 * k - 1, 3) * dp1 - Rational((k - 2) * (k + 1), 9 * n) * dp1 * dp1 -
           Rational(1);
}

Rational cor_1_3_rhs(long long d, long long n, long long k) {
    const Rational dp1(d + 1);
    const long long tk = 2 * k - 1;
    return Rational(tk, 3) * dp1 - Rational(tk * tk, 36 * n) * dp1 * dp1 - Rational(1);
}

Rational cor_1_4_rhs(long long d, long long diam, long long k) {
    const Rational dp1(d + 1);
    const long long tk = 2 * k - 1;
    return Rational(tk, 3) * dp1 * (Rational(1) - Rational(tk, 4 * diam)) - Rational(1);
}

Rational vt_bound_rhs(long long d, long long k) {
    return Rational((2 * k + 1) * (d + 1), 3) - Rational(1);
}

PerVertexReport per_vertex_claims(const Graph& g, long long d, int k_prime) {
    if (k_prime < 1) throw std::invalid_argument("per_vertex_claims: need k_prime >= 1");
    if (!is_connected(g)) throw std::invalid_argument("per_vertex_claims: graph must be connected");
    const int n = g.vertex_count();
    const int delta = min_degree(g);
    const std::optional<int> reg = regularity(g);
    const long long diam = diameter(g);

    PerVertexReport rep;

    // (a) net-degree claim in G^{3k'+2}
    rep.net_degree.name = "deg(G^{3k'+2}) >= (k'+1)(d+1)-1";
    rep.net_degree.applicable = reg && *reg == d && diam > 3 * k_prime + 2;
    if (rep.net_degree.applicable) {
        const Graph gp = power(g, 3 * k_prime + 2);
        const long long need = static_cast<long long>(k_prime + 1) * (d + 1) - 1;
        for (int v = 0; v < n; ++v) {
            if (gp.degree(v) < need) {
                rep.net_degree.pass = false;
                rep.net_degree.witness = v;
                break;
            }
        }
    }

    // (b) and (c) both live in the fourth power.
    Graph g4;
    if (delta >= d) g4 = power(g, 4);

    rep.fourth_power_2d.name = "deg(G^4) >= 2d";
    rep.fourth_power_2d.applicable = delta >= d && n > 3 * d;
    if (rep.fourth_power_2d.applicable) {
        for (int v = 0; v < n; ++v) {
            if (g4.degree(v) < 2 * d) {
                rep.fourth_power_2d.pass = false;
                rep.fourth_power_2d.witness = v;
                break;
            }
        }
    }

    rep.distant_pair_3d.name = "two distant vertices at distance 3 force deg(G^4) >= 3d";
    rep.distant_pair_3d.applicable = delta >= d;
    if (rep.distant_pair_3d.applicable) {
        // dist(v,v') >= 3 is decidable from a cap-3 BFS: >= 3 iff not <= 2.
        std::vector<DistanceField> cap3;
        cap3.reserve(n);
        for (int v = 0; v < n; ++v) cap3.push_back(bfs_distances(g, v, 3));
        for (int u = 0; u < n && rep.distant_pair_3d.pass; ++u) {
            std::vector<int> at3;
            for (int v = 0; v < n; ++v)
                if (cap3[u][v] == 3) at3.push_back(v);
            bool qualifies = false;
            for (size_t i = 0; i < at3.size() && !qualifies; ++i)
                for (size_t j = i + 1; j < at3.size() && !qualifies; ++j) {
                    auto dvv = cap3[at3[i]][at3[j]];
                    if (!dvv || *dvv >= 3) qualifies = true;
                }
            if (qualifies && g4.degree(u) < 3 * d) {
                rep.distant_pair_3d.pass = false;
                rep.distant_pair_3d.witness = u;
            }
        }
    }

    return rep;
}

LevelSetReport check_level_set_bound(const Graph& g) {
    const std::optional<int> reg = regularity(g);
    if (!reg) throw std::invalid_argument("check_level_set_bound: graph must be regular");
    if (!is_connected(g))
        throw std::invalid_argument("check_level_set_bound: graph must be connected");
    const long long d = *reg;
    const long long diam = diameter(g);

    LevelSetReport rep;
    rep.required = (2 * (d + 1) + 2) / 3;  // ceil(2(d+1)/3)
    for (int x = 0; x < g.vertex_count(); ++x) {
        DistanceField df = bfs_distances(g, x);
        std::vector<long long> level_size(diam + 1, 0);
        for (int v = 0; v < g.vertex_count(); ++v) ++level_size[df.distance(v)];
        for (int i = 1; i < diam; ++i) {
            if (level_size[i] < rep.required) {
                rep.pass = false;
                rep.witness_vertex = x;
                rep.witness_level = i;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace graphpow
