#include <catch2/catch_amalgamated.hpp>

#include "cutcert/complex.hpp"
#include "cutcert/generators.hpp"

using namespace cutcert;

TEST_CASE("every generator yields a closed connected pseudomanifold") {
    std::vector<GeneratorSpec> specs = {
        {"sphere", 1}, {"sphere", 2}, {"sphere", 3}, {"torus2", 0}, {"rp2", 0},
        {"klein", 0},  {"genus", 2},  {"genus", 3},  {"torus3", 0},
    };
    for (const auto& spec : specs) {
        CAPTURE(spec.name, spec.parameter);
        SimplicialComplex K = generate(spec);
        ValidationReport v = validate(K);
        CHECK(v.is_pseudomanifold);
        CHECK(v.is_connected);
        CHECK(v.closed());
    }
}

TEST_CASE("generator sizes and euler characteristics") {
    SimplicialComplex s1 = generate({"sphere", 1});
    CHECK(s1.dimension == 1);
    CHECK(s1.vertex_count == 3);
    CHECK(euler_characteristic(s1) == 0);

    SimplicialComplex s2 = generate({"sphere", 2});
    CHECK(s2.vertex_count == 4);
    CHECK(s2.facets.size() == 4);
    CHECK(euler_characteristic(s2) == 2);

    SimplicialComplex s3 = generate({"sphere", 3});
    CHECK(s3.vertex_count == 5);
    CHECK(s3.facets.size() == 5);
    CHECK(euler_characteristic(s3) == 0);

    SimplicialComplex t = generate({"torus2", 0});
    CHECK(t.vertex_count == 7);
    CHECK(t.facets.size() == 14);
    CHECK(euler_characteristic(t) == 0);

    SimplicialComplex p = generate({"rp2", 0});
    CHECK(p.vertex_count == 6);
    CHECK(p.facets.size() == 10);
    CHECK(euler_characteristic(p) == 1);

    CHECK(euler_characteristic(generate({"klein", 0})) == 0);
    CHECK(euler_characteristic(generate({"genus", 2})) == -2);
    CHECK(euler_characteristic(generate({"genus", 3})) == -4);

    SimplicialComplex t3 = generate({"torus3", 0});
    CHECK(t3.dimension == 3);
    CHECK(t3.vertex_count == 27);
    CHECK(t3.facets.size() == 162);
    CHECK(euler_characteristic(t3) == 0);
}

TEST_CASE("generators are deterministic") {
    CHECK(generate({"genus", 2}) == generate({"genus", 2}));
    CHECK(generate({"torus3", 0}) == generate({"torus3", 0}));
}

TEST_CASE("bad generator specs are rejected") {
    CHECK_THROWS_AS(generate({"moebius", 0}), BadSpecError);
    CHECK_THROWS_AS(generate({"sphere", 0}), BadSpecError);
    CHECK_THROWS_AS(generate({"sphere", 4}), BadSpecError);
    CHECK_THROWS_AS(generate({"genus", 0}), BadSpecError);
}

TEST_CASE("parse_generator_spec") {
    GeneratorSpec g = parse_generator_spec("genus:2");
    CHECK(g.name == "genus");
    CHECK(g.parameter == 2);
    CHECK(parse_generator_spec("torus2").name == "torus2");
    CHECK(parse_generator_spec("sphere:3").parameter == 3);
    CHECK_THROWS_AS(parse_generator_spec("sphere"), BadSpecError);
    CHECK_THROWS_AS(parse_generator_spec("genus"), BadSpecError);
    CHECK_THROWS_AS(parse_generator_spec("genus:x"), BadSpecError);
}
