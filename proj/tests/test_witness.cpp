#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cutcert/complex.hpp"
#include "cutcert/generators.hpp"
#include "cutcert/homology.hpp"
#include "cutcert/witness.hpp"

using namespace cutcert;

namespace {

IntegerCochain odd_basis_cocycle(const SimplicialComplex& K) {
    for (const auto& z : cocycle_basis(K))
        for (const Int& v : z.values)
            if (v % 2 != 0) return z;
    FAIL("no basis cocycle with an odd entry");
    return {};
}

void check_witness_shape(const WitnessCertificate& W, const SimplicialComplex& K) {
    CHECK(W.base_hash == complex_hash(K));
    CHECK(W.base_facets == K.facets);
    CHECK(W.domain_connected);
    CHECK(W.boundary_components >= 2);
    CHECK(W.complement_connected);
    CHECK_FALSE(W.cuts);
    REQUIRE(W.cocycle.has_value());
    REQUIRE(W.loop.has_value());
    REQUIRE(W.pairing_value.has_value());
    CHECK(*W.pairing_value != 0);
    IntegerCochain z{1, *W.cocycle};
    CHECK(is_cocycle(K, z));
    CHECK_FALSE(is_coboundary(K, z));
    CHECK(is_cycle(K, *W.loop));
    CHECK(pairing(K, z, *W.loop) == *W.pairing_value);
}

}  // namespace

TEST_CASE("dual_hypersurface rejects unusable cochains") {
    SimplicialComplex K = generate({"torus2", 0});

    IntegerCochain not_cocycle;
    not_cocycle.values.assign(K.count(1), 0);
    not_cocycle.values[0] = 1;
    if (!is_cocycle(K, not_cocycle))
        CHECK_THROWS_AS(dual_hypersurface(K, not_cocycle), NotACocycleError);

    std::vector<Int> g(K.vertex_count, 0);
    g[0] = 1;
    CHECK_THROWS_AS(dual_hypersurface(K, vertex_coboundary(K, g)), TrivialClassError);

    IntegerCochain doubled = odd_basis_cocycle(K);
    for (auto& v : doubled.values) v *= 2;
    CHECK_THROWS_AS(dual_hypersurface(K, doubled), EmptySurfaceError);
}

TEST_CASE("dual hypersurface of a torus cocycle") {
    SimplicialComplex K = generate({"torus2", 0});
    IntegerCochain z = odd_basis_cocycle(K);
    DualHypersurface H = dual_hypersurface(K, z);
    CHECK_FALSE(H.cells.empty());
    const SimplicialComplex& sd = H.tower.top();
    for (int id : H.cells) CHECK(sd.dim_of_id(id) == K.dimension - 1);

    SECTION("cells count matches the odd support") {
        // one dual edge inside each triangle per odd edge it carries
        long long expect = 0;
        for (const Simplex& t : K.simplices[2])
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = i + 1; j < 3; ++j)
                    if (z.values[K.edge_pos(t[i], t[j])] % 2 != 0) ++expect;
        CHECK(static_cast<long long>(H.cells.size()) == expect);
    }

    SECTION("collar yields a proper nonempty domain over the second subdivision") {
        CollarResult C = collar(std::move(H));
        CHECK(C.tower.height() == 2);
        CHECK_FALSE(C.domain_facets.empty());
        CHECK(C.domain_facets.size() < C.tower.top().facets.size());
        Domain D = make_domain(C.tower.top(), C.domain_facets);
        CutReport cr = cut_report(D);
        CHECK(cr.domain_connected);
    }
}

TEST_CASE("construct_witness rejects trivial first cohomology") {
    CHECK_THROWS_AS(construct_witness(generate({"sphere", 2})), PreconditionViolatedError);
    CHECK_THROWS_AS(construct_witness(generate({"rp2", 0})), PreconditionViolatedError);
    CHECK_THROWS_AS(construct_witness(generate({"sphere", 3})), PreconditionViolatedError);
}

TEST_CASE("construct_witness on the torus") {
    SimplicialComplex K = generate({"torus2", 0});
    WitnessCertificate W = construct_witness(K);
    check_witness_shape(W, K);
    CHECK_FALSE(W.construction_log.empty());
}

TEST_CASE("construct_witness on the klein bottle") {
    SimplicialComplex K = generate({"klein", 0});
    check_witness_shape(construct_witness(K), K);
}

TEST_CASE("construct_witness on the genus two surface") {
    SimplicialComplex K = generate({"genus", 2});
    check_witness_shape(construct_witness(K), K);
}

TEST_CASE("construct_witness is deterministic") {
    SimplicialComplex K = generate({"torus2", 0});
    WitnessCertificate a = construct_witness(K);
    WitnessCertificate b = construct_witness(K);
    CHECK(a.subdivision_level == b.subdivision_level);
    CHECK(a.domain_facets == b.domain_facets);
    CHECK(a.cocycle == b.cocycle);
    CHECK(a.loop == b.loop);
    CHECK(a.construction_log == b.construction_log);
}

TEST_CASE("thicken partitions the ambient facets into four parts") {
    SimplicialComplex K = generate({"torus2", 0});
    WitnessSearchResult ws = construct_witness_search(K);
    Domain D = make_domain(ws.tower.top(), ws.certificate.domain_facets);
    Thickening T = thicken(std::move(ws.tower), D);

    const SimplicialComplex& amb = T.tower.top();
    CHECK_FALSE(T.a_hat.empty());
    CHECK_FALSE(T.b_hat.empty());
    CHECK_FALSE(T.u_side.empty());
    CHECK_FALSE(T.v_side.empty());
    std::set<int> all;
    for (const auto* part : {&T.a_hat, &T.b_hat, &T.u_side, &T.v_side}) {
        for (int f : *part) {
            CHECK(all.insert(f).second);  // no facet in two parts
        }
    }
    CHECK(all.size() == amb.facets.size());

    SECTION("no facet touches both hats") {
        std::set<int> va, vb;
        for (int f : T.a_hat)
            for (int v : amb.facets[f]) va.insert(v);
        for (int f : T.b_hat)
            for (int v : amb.facets[f]) vb.insert(v);
        for (int v : va) CHECK(vb.count(v) == 0);
    }
}

TEST_CASE("thicken rejects domains that are not witnesses") {
    // a cutting band on a sphere
    SimplicialComplex K = build_complex({{0, 1, 2},
                                         {3, 4, 5},
                                         {0, 1, 3},
                                         {1, 3, 4},
                                         {1, 2, 4},
                                         {2, 4, 5},
                                         {0, 2, 5},
                                         {0, 3, 5}});
    std::vector<int> band;
    for (size_t f = 0; f < K.facets.size(); ++f)
        if (K.facets[f] != Simplex{0, 1, 2} && K.facets[f] != Simplex{3, 4, 5})
            band.push_back(static_cast<int>(f));
    CHECK_THROWS_AS(thicken(K, make_domain(K, band)), Error);

    // a disk on a torus: connected boundary
    SimplicialComplex T2 = generate({"torus2", 0});
    CHECK_THROWS_AS(thicken(T2, make_domain(T2, {0})), Error);
}
