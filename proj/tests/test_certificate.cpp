#include <catch2/catch_amalgamated.hpp>

#include "cutcert/certificate.hpp"
#include "cutcert/complex.hpp"
#include "cutcert/generators.hpp"
#include "cutcert/witness.hpp"

using namespace cutcert;

TEST_CASE("certificate json round trip") {
    WitnessCertificate W = construct_witness(generate({"torus2", 0}));
    json j = certificate_to_json(W);
    WitnessCertificate W2 = certificate_from_json(j);
    CHECK(W2.base_hash == W.base_hash);
    CHECK(W2.base_facets == W.base_facets);
    CHECK(W2.subdivision_level == W.subdivision_level);
    CHECK(W2.domain_facets == W.domain_facets);
    CHECK(W2.domain_connected == W.domain_connected);
    CHECK(W2.boundary_components == W.boundary_components);
    CHECK(W2.complement_connected == W.complement_connected);
    CHECK(W2.cuts == W.cuts);
    CHECK(W2.cocycle == W.cocycle);
    CHECK(W2.loop == W.loop);
    CHECK(W2.pairing_value == W.pairing_value);
    CHECK(W2.construction_log == W.construction_log);
    CHECK(certificate_to_json(W2).dump(2) == j.dump(2));
}

TEST_CASE("good certificates verify") {
    for (const char* name : {"torus2", "klein"}) {
        SimplicialComplex K = generate({name, 0});
        CAPTURE(name);
        CHECK(verify_certificate(construct_witness(K)));
        CHECK(verify_certificate(full_pipeline(K).certificate));
    }
}

TEST_CASE("tampered certificates are rejected") {
    WitnessCertificate good = construct_witness(generate({"torus2", 0}));
    REQUIRE(verify_certificate(good));

    SECTION("wrong hash") {
        WitnessCertificate W = good;
        W.base_hash[0] = (W.base_hash[0] == '0') ? '1' : '0';
        CHECK_FALSE(verify_certificate(W));
    }
    SECTION("wrong base complex") {
        WitnessCertificate W = good;
        W.base_facets = generate({"klein", 0}).facets;
        CHECK_FALSE(verify_certificate(W));
    }
    SECTION("swapped-in domain contradicts the recorded verdicts") {
        WitnessCertificate W = good;
        W.domain_facets = {0};  // a single facet never has a split boundary
        CHECK_FALSE(verify_certificate(W));
    }
    SECTION("flipped verdict") {
        WitnessCertificate W = good;
        W.cuts = true;
        W.complement_connected = false;
        CHECK_FALSE(verify_certificate(W));
    }
    SECTION("overstated boundary components") {
        WitnessCertificate W = good;
        W.boundary_components += 1;
        CHECK_FALSE(verify_certificate(W));
    }
    SECTION("tampered cocycle") {
        WitnessCertificate W = good;
        REQUIRE(W.cocycle.has_value());
        (*W.cocycle)[0] += 1;
        CHECK_FALSE(verify_certificate(W));
    }
    SECTION("cobounding cocycle") {
        WitnessCertificate W = good;
        SimplicialComplex K = generate({"torus2", 0});
        std::vector<Int> g(K.vertex_count, 0);
        g[0] = 3;
        W.cocycle = vertex_coboundary(K, g).values;
        CHECK_FALSE(verify_certificate(W));
    }
    SECTION("wrong pairing value") {
        WitnessCertificate W = good;
        REQUIRE(W.pairing_value.has_value());
        *W.pairing_value += 1;
        CHECK_FALSE(verify_certificate(W));
    }
    SECTION("a domain that is not a witness") {
        // single facet of the torus: connected boundary, so no witness
        SimplicialComplex K = generate({"torus2", 0});
        WitnessCertificate W;
        W.base_hash = complex_hash(K);
        W.base_facets = K.facets;
        W.subdivision_level = 0;
        W.domain_facets = {0};
        CutReport cr = cut_report(make_domain(K, {0}));
        W.domain_connected = cr.domain_connected;
        W.boundary_components = cr.boundary.component_count;
        W.complement_connected = cr.complement_connected;
        W.cuts = cr.cuts;
        CHECK_FALSE(verify_certificate(W));
    }
}

TEST_CASE("theorem check on spheres") {
    TheoremReport r = theorem_check(generate({"sphere", 2}), 3);
    CHECK(r.h1_trivial);
    CHECK(r.exhaustive);
    CHECK(r.candidates_tested == 14);
    CHECK(r.non_cutting_witnesses.empty());
    CHECK(r.consistent);

    TheoremReport r3 = theorem_check(generate({"sphere", 3}), 4);
    CHECK(r3.h1_trivial);
    CHECK(r3.exhaustive);
    CHECK(r3.candidates_tested == 30);
    CHECK(r3.non_cutting_witnesses.empty());
    CHECK(r3.consistent);
}

TEST_CASE("theorem check on the projective plane") {
    TheoremReport r = theorem_check(generate({"rp2", 0}), 9);
    CHECK(r.h1_trivial);  // b_1 = 0, torsion does not matter
    CHECK(r.exhaustive);
    CHECK(r.candidates_tested == 1022);
    CHECK(r.non_cutting_witnesses.empty());
    CHECK(r.consistent);
}

TEST_CASE("theorem check finds witnesses on the torus") {
    SimplicialComplex K = generate({"torus2", 0});
    TheoremReport r = theorem_check(K, static_cast<int>(K.facets.size()) - 1);
    CHECK_FALSE(r.h1_trivial);
    CHECK(r.exhaustive);
    CHECK(r.candidates_tested == 16382);
    CHECK_FALSE(r.non_cutting_witnesses.empty());
    CHECK(r.consistent);
    for (const auto& w : r.non_cutting_witnesses) {
        CHECK(w.domain_connected);
        CHECK(w.boundary_components >= 2);
        CHECK_FALSE(w.cuts);
    }
    CHECK(verify_certificate(r.non_cutting_witnesses.front()));
}

TEST_CASE("budgeted theorem check reports non-exhaustive") {
    SimplicialComplex K = generate({"torus2", 0});
    TheoremReport r = theorem_check(K, 5);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.consistent);
}

TEST_CASE("theorem check rejects bad input") {
    CHECK_THROWS_AS(theorem_check(build_complex({{0, 1, 2}}), 1), Error);
    CHECK_THROWS_AS(theorem_check(build_complex({{0, 1, 2}, {3, 4, 5}}), 1), Error);
}

TEST_CASE("theorem report json is deterministic") {
    SimplicialComplex K = generate({"sphere", 2});
    std::string a = theorem_report_to_json(theorem_check(K, 3)).dump(2);
    std::string b = theorem_report_to_json(theorem_check(K, 3)).dump(2);
    CHECK(a == b);
}
