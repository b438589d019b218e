#include <doctest.h>

#include <algorithm>

#include "graphpow/bounds.hpp"
#include "graphpow/distance.hpp"
#include "graphpow/generators.hpp"
#include "graphpow/power.hpp"
#include "graphpow/proof_cert.hpp"

using namespace graphpow;

TEST_CASE("build_net on cycle(12), k'=1: the hand-simulated certificate") {
    NetBuildResult b = build_net(cycle(12), 1);
    REQUIRE(b.hypotheses_met);
    REQUIRE(b.certificate.has_value());
    const NetCertificate& c = *b.certificate;

    CHECK(c.x0.size() >= 3);
    std::vector<int> x_sorted = c.x;
    std::sort(x_sorted.begin(), x_sorted.end());
    CHECK(x_sorted == std::vector<int>{0, 3, 6, 9});

    // H is a 4-cycle: distance-3 pairs only
    CHECK(c.h.vertex_count() == 4);
    CHECK(c.h.edge_count() == 4);
    CHECK(regularity(c.h) == 2);
    CHECK(b.h_connected);

    CHECK(c.z.size() == 12);  // Z = V
    CHECK(c.y.empty());

    // final chain: 120 >= 3*3*12 - 2*9 - 12 = 78
    CHECK(c.final_lhs == 120);
    CHECK(c.final_rhs == 78);
    CHECK(verify_certificate(cycle(12), c).all_pass);
}

TEST_CASE("build_net gates on its hypotheses") {
    NetBuildResult unmet = build_net(cycle(12), 2);  // diam 6 <= 8
    CHECK_FALSE(unmet.hypotheses_met);
    CHECK_FALSE(unmet.certificate.has_value());

    CHECK_FALSE(build_net(path(30), 1).hypotheses_met);  // not regular
    CHECK_FALSE(build_net(Graph(8), 1).hypotheses_met);  // disconnected
}

TEST_CASE("certificates verify on family instances") {
    for (auto [d, t, kp] : std::vector<std::tuple<int, int, int>>{{3, 4, 1}, {5, 2, 1}, {3, 4, 3}}) {
        Graph g = h_family(d, t);
        NetBuildResult b = build_net(g, kp);
        REQUIRE(b.hypotheses_met);
        CHECK(b.h_connected);
        CHECK(verify_certificate(g, *b.certificate).all_pass);
    }
    Graph ring = clique_ring(5, 14);  // diam 7 > 5
    NetBuildResult b = build_net(ring, 1);
    REQUIRE(b.hypotheses_met);
    CHECK(verify_certificate(ring, *b.certificate).all_pass);
}

TEST_CASE("certificate determinism") {
    Graph g = h_family(3, 3);
    NetBuildResult b1 = build_net(g, 1);
    NetBuildResult b2 = build_net(g, 1);
    REQUIRE(b1.certificate.has_value());
    CHECK(b1.certificate->x == b2.certificate->x);
    CHECK(b1.certificate->seed_geodesic == b2.certificate->seed_geodesic);
    CHECK(b1.certificate->h == b2.certificate->h);
}

TEST_CASE("tampered certificates are rejected with named violations") {
    Graph g = cycle(15);
    NetBuildResult b = build_net(g, 1);
    REQUIRE(b.hypotheses_met);

    NetCertificate tampered = *b.certificate;
    tampered.x.pop_back();  // drop a net member
    CertReport audit = verify_certificate(g, tampered);
    CHECK_FALSE(audit.all_pass);
    bool violation_named = false;
    for (const CertCheck& c : audit.checks)
        if (!c.pass && (c.name == "x_dominates_within_2" || c.name == "h_matches_distance_3_adjacency" ||
                        c.name == "z_is_union_of_unit_balls"))
            violation_named = true;
    CHECK(violation_named);

    NetCertificate lied = *b.certificate;
    lied.claim1_lhs += 1;  // stored count disagrees with a recount
    CertReport audit2 = verify_certificate(g, lied);
    CHECK_FALSE(audit2.all_pass);

    NetCertificate corrupt = *b.certificate;
    corrupt.x.push_back(99);  // out of range: rejected, not crashed
    CertReport audit3 = verify_certificate(g, corrupt);
    CHECK_FALSE(audit3.all_pass);
    CHECK(audit3.checks.front().name == "vertex_ids_in_range");
}

TEST_CASE("e_hprime_formula equals the built edge count") {
    CHECK(e_hprime_formula(3, 2, 5) == 50);
    CHECK(e_hprime_formula(5, 3, 5) == 4 * 15 + 3 * 36);  // 168

    for (int d : {3, 5, 7})
        for (int t = 2; t <= 5; ++t)
            for (int k = 5; k < 3 * t; k += 3)
                CHECK(e_hprime_formula(d, t, k) == h_prime(d, t, k).edge_count());

    CHECK_THROWS_AS(e_hprime_formula(3, 2, 8), std::invalid_argument);  // k >= 3t
}

TEST_CASE("appendix_upper_bound closed form and gap of exactly 4") {
    // (3,4,11): 28 - 1728/198 + 3 = 31 - 96/11
    CHECK(appendix_upper_bound(3, 4, 11) == Rational(31) - Rational(96, 11));

    for (int d : {3, 5, 7})
        for (int t = 2; t <= 5; ++t)
            for (int k = 5; k < 3 * t; k += 3) {
                long long n = 4 + static_cast<long long>(t + 1) * (d - 1) + 2 * t;
                CHECK(appendix_upper_bound(d, t, k) - thm_1_2_rhs(d, n, k) == Rational(4));
            }
}

TEST_CASE("sandwich on a spot instance") {
    const int d = 3, t = 4, k = 11;
    Graph h = h_family(d, t);
    Rational a = degree_stats(power(h, k)).average;
    CHECK(thm_1_2_rhs(d, h.vertex_count(), k) <= a);
    CHECK(a <= appendix_upper_bound(d, t, k));
}
