// Command-line surface: family generation, graph powers, bound checks,
// proof certificates, exhaustive sweeps, and a small benchmark.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphpow/bounds.hpp"
#include "graphpow/distance.hpp"
#include "graphpow/generators.hpp"
#include "graphpow/io.hpp"
#include "graphpow/power.hpp"
#include "graphpow/proof_cert.hpp"
#include "graphpow/report_json.hpp"
#include "graphpow/tree_power.hpp"

using namespace graphpow;

namespace {

struct Emit {
    bool json = false;
    bool strict = false;
};

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void count_verdict(RunReport& run, Verdict v) {
    ++run.checked;
    switch (v) {
        case Verdict::HOLDS: ++run.holds; break;
        case Verdict::HYPOTHESES_UNMET: ++run.hypotheses_unmet; break;
        case Verdict::FAILS: ++run.failures; break;
    }
}

void emit_bound(const BoundReport& r, const Emit& emit) {
    if (emit.json) {
        std::cout << bound_report_json(r).dump() << "\n";
        return;
    }
    std::cout << "[" << verdict_name(r.verdict) << "] " << theorem_name(r.theorem_id);
    if (r.params.d) std::cout << " d=" << *r.params.d;
    if (r.params.k) std::cout << " k=" << *r.params.k;
    if (r.params.n) std::cout << " n=" << *r.params.n;
    if (r.params.diameter) std::cout << " diam=" << *r.params.diameter;
    std::cout << " lhs*" << r.scale_description << "=" << r.lhs_times_scale
              << " rhs=" << r.rhs_times_scale << " slack=" << r.slack.str() << "\n";
    if (r.verdict == Verdict::HYPOTHESES_UNMET)
        for (const auto& h : r.hypotheses)
            if (!h.satisfied) std::cout << "  unmet: " << h.name << "\n";
}

int finish(RunReport& run, Clock::time_point t0, const Emit& emit) {
    run.wall_time_ms = ms_since(t0);
    if (emit.json) {
        std::cout << run_report_json(run).dump() << "\n";
    } else {
        std::cout << run.checked << " checked: " << run.holds << " holds, "
                  << run.hypotheses_unmet << " hypotheses_unmet, " << run.failures
                  << " failures (" << run.wall_time_ms << " ms)\n";
    }
    if (run.failures > 0) return 1;
    if (emit.strict && run.hypotheses_unmet > 0) return 1;
    return 0;
}

bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

Graph load_graph(const std::string& path) {
    if (has_suffix(path, ".g6")) {
        auto gs = read_graph6(path);
        if (gs.empty()) throw std::runtime_error("'" + path + "' contains no graphs");
        return gs.front();
    }
    return read_edge_list(path);
}

void save_graph(const Graph& g, const std::string& path, std::string format) {
    if (format == "auto") format = has_suffix(path, ".g6") ? "g6" : "el";
    if (format == "g6")
        write_graph6(g, path);
    else
        write_edge_list(g, path);
}

// Family parameters as the CLI sees them; presence is what matters, so the
// FamilySpec optionals are filled from option counts.
struct FamilyArgs {
    std::string name;
    int d = 0, t = 0, k = 0, n = 0, m = 0;
    std::vector<int> set;
    uint64_t seed = 1;
    CLI::Option *od = nullptr, *ot = nullptr, *ok = nullptr, *on = nullptr, *om = nullptr,
                *oset = nullptr, *oseed = nullptr;

    void add_to(CLI::App* cmd, bool positional, bool family_required) {
        auto* fam = cmd->add_option(positional ? "family" : "--family", name,
                                    "family name (path, cycle, h_family, h_prime, clique_ring, "
                                    "circulant, random_regular, random_tree)");
        if (family_required) fam->required();
        od = cmd->add_option("-d", d, "degree parameter");
        ot = cmd->add_option("-t", t, "layer parameter");
        ok = cmd->add_option("-k,--k", k, "power / window parameter");
        on = cmd->add_option("-n", n, "vertex count / modulus");
        om = cmd->add_option("-m", m, "ring length");
        oset = cmd->add_option("--set", set, "connection set residues")->delimiter(',');
        oseed = cmd->add_option("--seed", seed, "generator seed");
    }

    FamilySpec spec() const {
        auto fam = family_from_name(name);
        if (!fam) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
        FamilySpec s;
        s.family = *fam;
        if (od->count()) s.d = d;
        if (ot->count()) s.t = t;
        if (ok->count()) s.k = k;
        if (on->count()) s.n = n;
        if (om->count()) s.m = m;
        if (oset->count()) s.connection_set = set;
        if (s.family == Family::RANDOM_REGULAR || s.family == Family::RANDOM_TREE)
            s.seed = seed;  // defaulted when not given
        else if (oseed->count())
            s.seed = seed;
        return s;
    }
};

// Keeps only the parameters the family itself consumes, so that -d and -k
// can double as theorem parameters in `check --family ...`.
FamilySpec restrict_to_family(FamilySpec s) {
    const bool needs_d = s.family == Family::H_FAMILY || s.family == Family::H_PRIME ||
                         s.family == Family::CLIQUE_RING || s.family == Family::RANDOM_REGULAR;
    const bool needs_t = s.family == Family::H_FAMILY || s.family == Family::H_PRIME;
    const bool needs_k = s.family == Family::H_PRIME;
    const bool needs_n = s.family == Family::PATH || s.family == Family::CYCLE ||
                         s.family == Family::CIRCULANT || s.family == Family::RANDOM_REGULAR ||
                         s.family == Family::RANDOM_TREE;
    const bool needs_m = s.family == Family::CLIQUE_RING;
    const bool needs_set = s.family == Family::CIRCULANT;
    const bool needs_seed =
        s.family == Family::RANDOM_REGULAR || s.family == Family::RANDOM_TREE;
    if (!needs_d) s.d.reset();
    if (!needs_t) s.t.reset();
    if (!needs_k) s.k.reset();
    if (!needs_n) s.n.reset();
    if (!needs_m) s.m.reset();
    if (!needs_set) s.connection_set.reset();
    if (!needs_seed) s.seed.reset();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphpow: exact graph powers, extremal families, and bound checking"};
    app.require_subcommand(1);

    Emit emit;
    int exit_code = 0;

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a family instance");
    FamilyArgs gen_args;
    std::string gen_out, gen_format = "auto";
    gen_args.add_to(gen, true, true);
    gen->add_option("--out", gen_out, "output file (stdout when omitted)");
    gen->add_option("--format", gen_format, "el | g6 | auto")
        ->check(CLI::IsMember({"el", "g6", "auto"}));
    gen->callback([&] {
        FamilySpec spec = gen_args.spec();
        Graph g = make_family(spec);
        if (spec.family == Family::CIRCULANT && !is_connected(g))
            std::cerr << "warning: connection set does not generate Z_" << g.vertex_count()
                      << "; output is disconnected\n";
        if (gen_out.empty()) {
            std::cout << (gen_format == "g6" ? graph6_encode(g) + "\n" : edge_list_string(g));
        } else {
            save_graph(g, gen_out, gen_format);
            std::cerr << "wrote " << family_spec_string(spec) << ": n=" << g.vertex_count()
                      << " m=" << g.edge_count() << " -> " << gen_out << "\n";
        }
    });

    // ---- power --------------------------------------------------------
    auto* pow_cmd = app.add_subcommand("power", "compute the k-th power of a graph file");
    std::string pow_in, pow_out, pow_format = "auto";
    int pow_k = 1;
    pow_cmd->add_option("input", pow_in, "input graph (.g6 or edge list)")->required();
    pow_cmd->add_option("-k", pow_k, "exponent (>= 1)")->required();
    pow_cmd->add_option("--out", pow_out, "output file (stdout when omitted)");
    pow_cmd->add_option("--format", pow_format, "el | g6 | auto")
        ->check(CLI::IsMember({"el", "g6", "auto"}));
    pow_cmd->callback([&] {
        Graph g = load_graph(pow_in);
        Graph p = power(g, pow_k);
        if (pow_out.empty())
            std::cout << (pow_format == "g6" ? graph6_encode(p) + "\n" : edge_list_string(p));
        else
            save_graph(p, pow_out, pow_format);
    });

    // ---- check --------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "run a bound checker on a graph or family");
    std::string check_theorem, check_in;
    FamilyArgs check_args;
    int check_kprime = 1;
    bool check_transitive = false;
    check_cmd->add_option("theorem", check_theorem,
                          "thm_1_1 | thm_1_2 | cor_1_3 | cor_1_4 | vt_bound | cayley_growth | "
                          "g3_bound | per_vertex")
        ->required();
    check_cmd->add_option("input", check_in, "input graph file");
    check_args.add_to(check_cmd, false, false);
    auto* okp = check_cmd->add_option("--kprime", check_kprime, "k' for per_vertex (exponent 3k'+2)");
    check_cmd->add_flag("--transitive", check_transitive,
                        "assert the input graph is vertex-transitive (vt_bound on files)");
    check_cmd->add_flag("--json", emit.json, "line-delimited JSON records");
    check_cmd->add_flag("--strict", emit.strict, "treat HYPOTHESES_UNMET as failure");
    check_cmd->callback([&] {
        auto t0 = Clock::now();
        RunReport run;
        run.command = "check " + check_theorem;

        if (check_theorem == "cayley_growth") {
            if (!check_args.on->count() || !check_args.oset->count() || !check_args.ok->count())
                throw CLI::ValidationError("check", "cayley_growth needs -n, --set and -k");
            run.inputs = "Z_" + std::to_string(check_args.n);
            BoundReport r = check_cayley_growth(check_args.n, check_args.set, check_args.k);
            emit_bound(r, emit);
            count_verdict(run, r.verdict);
            exit_code = finish(run, t0, emit);
            return;
        }

        Graph g;
        bool transitive = check_transitive;
        if (!check_in.empty()) {
            if (!check_args.name.empty())
                throw CLI::ValidationError("check", "give an input file or --family, not both");
            g = load_graph(check_in);
            run.inputs = check_in;
        } else if (check_args.name.empty()) {
            throw CLI::ValidationError("check", "need an input file or --family");
        } else {
            // -d and -k can serve both the family and the theorem; the
            // family consumes only what it needs.
            FamilySpec spec = restrict_to_family(check_args.spec());
            g = make_family(spec);
            run.inputs = family_spec_string(spec);
            transitive = transitive || family_vertex_transitive(spec.family);
        }

        if (check_theorem == "per_vertex") {
            long long d = check_args.od->count() ? check_args.d
                                                 : degree_stats(g).min_degree;
            PerVertexReport r = per_vertex_claims(g, d, okp->count() ? check_kprime : 1);
            if (emit.json)
                std::cout << per_vertex_report_json(r).dump() << "\n";
            else
                for (const auto* c :
                     {&r.net_degree, &r.fourth_power_2d, &r.distant_pair_3d})
                    std::cout << (c->applicable ? (c->pass ? "[PASS] " : "[FAIL] ")
                                                : "[SKIP] ")
                              << c->name
                              << (c->witness ? " witness=" + std::to_string(*c->witness) : "")
                              << "\n";
            ++run.checked;
            if (!r.all_pass())
                ++run.failures;
            else
                ++run.holds;
            exit_code = finish(run, t0, emit);
            return;
        }

        auto id = theorem_from_name(check_theorem);
        if (!id) throw CLI::ValidationError("check", "unknown theorem '" + check_theorem + "'");
        BoundReport r;
        switch (*id) {
            case TheoremId::THM_1_1:
                r = check_args.od->count() ? check_thm_1_1(g, check_args.d) : check_thm_1_1(g);
                break;
            case TheoremId::THM_1_2: r = check_thm_1_2(g, check_args.k); break;
            case TheoremId::COR_1_3: r = check_cor_1_3(g, check_args.k); break;
            case TheoremId::COR_1_4: r = check_cor_1_4(g, check_args.k); break;
            case TheoremId::VT_BOUND: r = check_vt_bound(g, check_args.k, transitive); break;
            case TheoremId::G3_BOUND:
                r = check_g3_bound(g, check_args.od->count() ? check_args.d
                                                             : degree_stats(g).min_degree);
                break;
            case TheoremId::CAYLEY_GROWTH: break;  // handled above
        }
        emit_bound(r, emit);
        count_verdict(run, r.verdict);
        exit_code = finish(run, t0, emit);
    });

    // ---- cert ---------------------------------------------------------
    auto* cert_cmd = app.add_subcommand("cert", "build and audit a degree-sum certificate");
    std::string cert_in;
    FamilyArgs cert_args;
    int cert_kprime = 1;
    cert_cmd->add_option("input", cert_in, "input graph file");
    cert_args.add_to(cert_cmd, false, false);
    cert_cmd->add_option("--kprime", cert_kprime, "k' (exponent 3k'+2)")->required();
    cert_cmd->add_flag("--json", emit.json, "line-delimited JSON records");
    cert_cmd->add_flag("--strict", emit.strict, "treat unmet hypotheses as failure");
    cert_cmd->callback([&] {
        auto t0 = Clock::now();
        RunReport run;
        run.command = "cert";
        Graph g;
        if (!cert_in.empty()) {
            g = load_graph(cert_in);
            run.inputs = cert_in;
        } else if (!cert_args.name.empty()) {
            FamilySpec spec = restrict_to_family(cert_args.spec());
            g = make_family(spec);
            run.inputs = family_spec_string(spec);
        } else {
            throw CLI::ValidationError("cert", "need an input file or --family");
        }
        NetBuildResult build = build_net(g, cert_kprime);
        if (emit.json) std::cout << cert_build_json(build).dump() << "\n";
        ++run.checked;
        if (!build.hypotheses_met) {
            ++run.hypotheses_unmet;
            if (!emit.json) {
                std::cout << "[HYPOTHESES_UNMET] cert k'=" << cert_kprime << "\n";
                for (const auto& h : build.hypotheses)
                    if (!h.satisfied) std::cout << "  unmet: " << h.name << "\n";
            }
            exit_code = finish(run, t0, emit);
            return;
        }
        CertReport audit = verify_certificate(g, *build.certificate);
        if (emit.json) {
            std::cout << cert_report_json(audit).dump() << "\n";
        } else {
            const NetCertificate& c = *build.certificate;
            std::cout << "certificate: |X|=" << c.x.size() << " |Z|=" << c.z.size()
                      << " |Y|=" << c.y.size() << " H "
                      << (build.h_connected ? "connected" : "DISCONNECTED") << "\n";
            for (const auto& chk : audit.checks)
                std::cout << (chk.pass ? "[PASS] " : "[FAIL] ") << chk.name
                          << (chk.detail.empty() ? "" : ": " + chk.detail) << "\n";
        }
        if (audit.all_pass && build.h_connected)
            ++run.holds;
        else
            ++run.failures;
        exit_code = finish(run, t0, emit);
    });

    // ---- enum-verify ----------------------------------------------------
    auto* enum_cmd = app.add_subcommand("enum-verify",
                                        "sweep a checker over all labeled connected graphs");
    int enum_n = 0;
    std::string enum_theorem;
    enum_cmd->add_option("--n", enum_n, "vertex count (<= 7)")->required();
    enum_cmd->add_option("--theorem", enum_theorem, "thm_1_1 | g3_bound | thm_1_2 | cor_1_3 | cor_1_4")
        ->required();
    enum_cmd->add_flag("--json", emit.json, "line-delimited JSON records");
    enum_cmd->add_flag("--strict", emit.strict, "treat HYPOTHESES_UNMET as failure");
    enum_cmd->callback([&] {
        auto t0 = Clock::now();
        if (enum_n > kMaxEnumerateConnected)
            throw CLI::ValidationError("enum-verify", "n > " +
                                       std::to_string(kMaxEnumerateConnected) +
                                       " refused (combinatorial explosion)");
        auto id = theorem_from_name(enum_theorem);
        if (!id || *id == TheoremId::VT_BOUND || *id == TheoremId::CAYLEY_GROWTH)
            throw CLI::ValidationError("enum-verify",
                                       "theorem '" + enum_theorem + "' not sweepable here");
        RunReport run;
        run.command = "enum-verify " + enum_theorem;
        run.inputs = "all labeled connected graphs on n=" + std::to_string(enum_n);
        long long scanned = 0;
        enumerate_connected(enum_n, [&](const Graph& g) {
            ++scanned;
            const int delta = degree_stats(g).min_degree;
            switch (*id) {
                case TheoremId::THM_1_1:
                    for (long long d = 2; d <= delta && 3 * g.vertex_count() >= 8 * d; ++d) {
                        BoundReport r = check_thm_1_1(g, d);
                        if (emit.json) std::cout << bound_report_json(r).dump() << "\n";
                        count_verdict(run, r.verdict);
                    }
                    break;
                case TheoremId::G3_BOUND:
                    for (long long d = 2; d <= delta; ++d) {
                        BoundReport r = check_g3_bound(g, d);
                        if (emit.json) std::cout << bound_report_json(r).dump() << "\n";
                        count_verdict(run, r.verdict);
                    }
                    break;
                default:
                    for (int k : {2, 5}) {
                        BoundReport r = *id == TheoremId::THM_1_2   ? check_thm_1_2(g, k)
                                        : *id == TheoremId::COR_1_3 ? check_cor_1_3(g, k)
                                                                    : check_cor_1_4(g, k);
                        if (emit.json) std::cout << bound_report_json(r).dump() << "\n";
                        count_verdict(run, r.verdict);
                    }
                    break;
            }
        });
        if (!emit.json)
            std::cout << scanned << " connected graphs scanned, " << run.failures
                      << " failures\n";
        exit_code = finish(run, t0, emit);
    });

    // ---- trees-verify ---------------------------------------------------
    auto* trees_cmd = app.add_subcommand("trees-verify",
                                         "check the tree power edge bound over all labeled trees");
    int trees_n = 0, trees_k = 0;
    auto* trees_k_opt = trees_cmd->add_option("--k", trees_k, "single k (default: sweep 1..7)");
    trees_cmd->add_option("--n", trees_n, "vertex count (<= 9)")->required();
    trees_cmd->add_flag("--json", emit.json, "line-delimited JSON records");
    trees_cmd->callback([&] {
        auto t0 = Clock::now();
        if (trees_n > kMaxEnumerateTrees)
            throw CLI::ValidationError("trees-verify", "n > " +
                                       std::to_string(kMaxEnumerateTrees) +
                                       " refused (combinatorial explosion)");
        RunReport run;
        run.command = "trees-verify";
        run.inputs = "all labeled trees on n=" + std::to_string(trees_n);
        std::vector<int> ks;
        if (trees_k_opt->count())
            ks.push_back(trees_k);
        else
            for (int k = 1; k <= 7; ++k) ks.push_back(k);
        enumerate_trees(trees_n, [&](const Graph& t) {
            for (int k : ks) {
                long long e = tree_power_edges(t, k);
                long long bound = static_cast<long long>(k) * trees_n - k * (k + 1) / 2;
                ++run.checked;
                if (e >= bound)
                    ++run.holds;
                else
                    ++run.failures;
            }
        });
        exit_code = finish(run, t0, emit);
    });

    // ---- bench ----------------------------------------------------------
    auto* bench_cmd = app.add_subcommand("bench", "median-of-5 power() timing for a family");
    FamilyArgs bench_args;
    int bench_k = 4;
    bench_args.add_to(bench_cmd, false, true);
    bench_cmd->add_option("--power", bench_k, "exponent to benchmark (default 4)");
    bench_cmd->callback([&] {
        FamilySpec spec = restrict_to_family(bench_args.spec());
        Graph g = make_family(spec);  // construction excluded from timing
        std::vector<long long> times;
        long long edges = 0;
        for (int run = 0; run < 5; ++run) {
            auto t0 = Clock::now();
            Graph p = power(g, bench_k);
            times.push_back(ms_since(t0));
            edges = p.edge_count();
        }
        std::sort(times.begin(), times.end());
        std::cout << "bench " << family_spec_string(spec) << " power=" << bench_k
                  << " n=" << g.vertex_count() << " result_edges=" << edges
                  << " median_ms=" << times[2] << " (runs: " << times[0] << " " << times[1]
                  << " " << times[2] << " " << times[3] << " " << times[4] << ")\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
