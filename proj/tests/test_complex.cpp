#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "cutcert/complex.hpp"
#include "cutcert/generators.hpp"

using namespace cutcert;

namespace {

SimplicialComplex tetra_boundary() {
    return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

}  // namespace

TEST_CASE("build_complex on the boundary of the tetrahedron") {
    SimplicialComplex K = tetra_boundary();
    CHECK(K.dimension == 2);
    CHECK(K.vertex_count == 4);
    CHECK(K.facets.size() == 4);
    CHECK(K.count(1) == 6);
    CHECK(K.count(0) == 4);
}

TEST_CASE("build_complex edge cases") {
    SimplicialComplex K = build_complex({{0, 1}});
    CHECK(K.dimension == 1);
    CHECK(K.vertex_count == 2);
    ValidationReport v = validate(K);
    CHECK(v.boundary_ridges.size() == 2);

    CHECK_THROWS_AS(build_complex({{0, 0, 1}}), DegenerateSimplexError);
    CHECK_THROWS_AS(build_complex({}), EmptyComplexError);
    CHECK_THROWS_AS(build_complex({{0, 1, 2}, {3, 4}}), MixedDimensionError);
}

TEST_CASE("build_complex relabels to dense indices preserving order") {
    SimplicialComplex K = build_complex({{10, 7, 42}});
    CHECK(K.vertex_count == 3);
    CHECK(K.facets == std::vector<Simplex>{{0, 1, 2}});
}

TEST_CASE("rebuilding from built facets is the identity") {
    for (const char* name : {"torus2", "rp2", "klein"}) {
        SimplicialComplex K = generate({name, 0});
        SimplicialComplex K2 = build_complex(K.facets);
        CHECK(K == K2);
    }
}

TEST_CASE("validate verdicts") {
    SECTION("closed connected pseudomanifold") {
        ValidationReport v = validate(tetra_boundary());
        CHECK(v.is_pseudomanifold);
        CHECK(v.is_connected);
        CHECK(v.closed());
    }
    SECTION("two disjoint triangles") {
        ValidationReport v = validate(build_complex({{0, 1, 2}, {3, 4, 5}}));
        CHECK(v.is_pseudomanifold);
        CHECK_FALSE(v.is_connected);
        CHECK(v.boundary_ridges.size() == 6);
    }
    SECTION("three triangles sharing an edge") {
        ValidationReport v = validate(build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}));
        CHECK_FALSE(v.is_pseudomanifold);
        REQUIRE(v.bad_ridges.size() == 1);
        CHECK(v.bad_ridges[0] == Simplex{0, 1});
    }
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(tetra_boundary()) == 2);
    CHECK(euler_characteristic(generate({"torus2", 0})) == 0);
    CHECK(euler_characteristic(generate({"rp2", 0})) == 1);
}

TEST_CASE("barycentric subdivision") {
    SimplicialComplex K = tetra_boundary();
    Subdivision sd = barycentric_subdivision(K);
    CHECK(sd.complex.vertex_count == 14);  // 4 + 6 + 4 barycenters
    CHECK(sd.complex.facets.size() == 24);
    CHECK(sd.facet_parent.size() == 24);

    SECTION("a single edge splits at its barycenter") {
        SimplicialComplex E = build_complex({{0, 1}});
        Subdivision se = barycentric_subdivision(E);
        CHECK(se.complex.facets.size() == 2);
        CHECK(se.complex.vertex_count == 3);
    }

    SECTION("euler characteristic is preserved") {
        for (const char* name : {"torus2", "rp2", "klein"}) {
            SimplicialComplex G = generate({name, 0});
            CHECK(euler_characteristic(barycentric_subdivision(G).complex) ==
                  euler_characteristic(G));
        }
        SimplicialComplex S3 = generate({"sphere", 3});
        CHECK(euler_characteristic(barycentric_subdivision(S3).complex) == 0);
    }

    SECTION("validation verdicts survive subdivision") {
        for (const char* name : {"torus2", "rp2", "klein"}) {
            SimplicialComplex G = generate({name, 0});
            ValidationReport before = validate(G);
            ValidationReport after = validate(barycentric_subdivision(G).complex);
            CHECK(before.is_pseudomanifold == after.is_pseudomanifold);
            CHECK(before.closed() == after.closed());
        }
    }
}

TEST_CASE("connected components") {
    SimplicialComplex K = tetra_boundary();
    std::vector<int> all;
    for (int id = 0; id < K.total_simplices; ++id) all.push_back(id);
    CHECK(connected_components(K, all, Adjacency::VertexSharing).size() == 1);

    SimplicialComplex two = build_complex({{0, 1, 2}, {3, 4, 5}});
    std::vector<int> both = {two.simplex_id({0, 1, 2}), two.simplex_id({3, 4, 5})};
    CHECK(connected_components(two, both, Adjacency::VertexSharing).size() == 2);

    CHECK(connected_components(K, {}, Adjacency::VertexSharing).empty());
}

TEST_CASE("vertex-sharing and face-incidence agree on full subcomplexes") {
    std::mt19937 rng(7);
    for (const char* name : {"torus2", "rp2"}) {
        SimplicialComplex K = generate({name, 0});
        for (int trial = 0; trial < 20; ++trial) {
            // random facet subset, closed under faces
            std::vector<uint8_t> in(K.total_simplices, 0);
            std::vector<int> ids;
            for (size_t f = 0; f < K.facets.size(); ++f) {
                if (rng() % 2) continue;
                for (int id : K.facet_faces[f]) in[id] = 1;
            }
            for (int id = 0; id < K.total_simplices; ++id)
                if (in[id]) ids.push_back(id);
            if (ids.empty()) continue;
            auto a = connected_components(K, ids, Adjacency::VertexSharing);
            auto b = connected_components(K, ids, Adjacency::FaceIncidence);
            CHECK(a.size() == b.size());
        }
    }
}

TEST_CASE("sc format round trip and rejection") {
    SimplicialComplex K = generate({"torus2", 0});
    std::string text = to_sc(K);
    std::istringstream in(text);
    SimplicialComplex K2 = parse_sc(in);
    CHECK(K == K2);
    CHECK(to_sc(K2) == text);

    SECTION("comments and blank lines are ignored") {
        std::istringstream s("# a comment\ndim 1\n\nvertices 2\n0 1\n");
        CHECK(parse_sc(s).dimension == 1);
    }
    SECTION("arity mismatch is rejected") {
        std::istringstream s("dim 2\nvertices 3\n0 1\n");
        CHECK_THROWS_AS(parse_sc(s), MixedDimensionError);
    }
    SECTION("missing header is rejected") {
        std::istringstream s("0 1 2\n");
        CHECK_THROWS_AS(parse_sc(s), ScParseError);
    }
    SECTION("degenerate facet is rejected") {
        std::istringstream s("dim 2\nvertices 3\n0 0 1\n");
        CHECK_THROWS_AS(parse_sc(s), DegenerateSimplexError);
    }
}
