/**
 * Deterministic generators for the bundled test manifolds.
 *
 * sphere(d)  boundary of the (d+1)-simplex, d in {1,2,3}
 * torus2     the 7-vertex torus (7 vertices, 21 edges, 14 triangles)
 * rp2        the 6-vertex projective plane (6, 15, 10)
 * klein      square-identification triangulation, word a b a b^-1
 * genus(g)   4g-gon identification, word prod a_i b_i a_i^-1 b_i^-1, g >= 2
 * torus3     3x3x3 periodic grid, each cube split into 6 tetrahedra
 *            (27 vertices, 162 tetrahedra)
 */

#ifndef CUTCERT_GENERATORS_HPP
#define CUTCERT_GENERATORS_HPP

#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cutcert/complex.hpp"

namespace cutcert {

struct GeneratorSpec {
    std::string name;  // sphere, torus2, rp2, klein, genus, torus3
    int parameter = 0; // sphere dimension or genus
};

namespace detail {

inline SimplicialComplex sphere_complex(int d) {
    if (d < 1 || d > 3) throw BadSpecError("sphere dimension must be in {1,2,3}");
    std::vector<Simplex> facets;
    int n = d + 2;
    for (int omit = 0; omit < n; ++omit) {
        Simplex f;
        for (int v = 0; v < n; ++v)
            if (v != omit) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return build_complex(facets);
}

inline SimplicialComplex torus2_complex() {
    // cyclic 7-vertex triangulation: {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return build_complex(facets);
}

inline SimplicialComplex rp2_complex() {
    std::vector<Simplex> facets = {
        {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
        {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5},
    };
    return build_complex(facets);
}

/**
 * Closed surface from an identified polygon. Each side of the L-gon is
 * subdivided into three arcs; the disk is triangulated with an inner ring
 * so that identified boundary edges never produce duplicate triangles.
 * word[s] = (letter, orientation) read counterclockwise.
 */
inline SimplicialComplex polygon_surface(const std::vector<std::pair<int, int>>& word) {
    int L = static_cast<int>(word.size());
    // boundary vertex positions 0..3L-1: corner of side s at 3s,
    // interior vertices at 3s+1, 3s+2
    int nb = 3 * L;
    std::vector<int> uf(nb);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto arrow = [&](int side, int orient) {
        // the four boundary positions of a side in the letter's direction
        std::vector<int> a = {3 * side, 3 * side + 1, 3 * side + 2, (3 * side + 3) % nb};
        if (orient < 0) std::reverse(a.begin(), a.end());
        return a;
    };
    for (int s = 0; s < L; ++s)
        for (int t = s + 1; t < L; ++t) {
            if (word[s].first != word[t].first) continue;
            auto as = arrow(s, word[s].second);
            auto at = arrow(t, word[t].second);
            for (int i = 0; i < 4; ++i) uf[find(as[i])] = find(at[i]);
        }
    // compact labels: boundary classes, then inner ring, then center
    std::vector<int> label(nb, -1);
    int next = 0;
    for (int i = 0; i < nb; ++i)
        if (find(i) == i) label[i] = next++;
    for (int i = 0; i < nb; ++i) label[i] = label[find(i)];
    auto ring = [&](int k) { return next + (k % nb); };
    int center = next + nb;

    std::vector<Simplex> facets;
    for (int k = 0; k < nb; ++k) {
        int b0 = label[k], b1 = label[(k + 1) % nb];
        facets.push_back({ring(k), b0, b1});
        facets.push_back({ring(k), ring(k + 1), b1});
        facets.push_back({center, ring(k), ring(k + 1)});
    }
    return build_complex(facets);
}

inline SimplicialComplex klein_complex() {
    // a b a b^-1
    return polygon_surface({{0, +1}, {1, +1}, {0, +1}, {1, -1}});
}

inline SimplicialComplex genus_complex(int g) {
    if (g < 2) throw BadSpecError("genus must be >= 2");
    std::vector<std::pair<int, int>> word;
    for (int i = 0; i < g; ++i) {
        int a = 2 * i, b = 2 * i + 1;
        word.push_back({a, +1});
        word.push_back({b, +1});
        word.push_back({a, -1});
        word.push_back({b, -1});
    }
    return polygon_surface(word);
}

inline SimplicialComplex torus3_complex() {
    // Freudenthal split of each unit cube on the 3-periodic 3x3x3 grid
    auto vid = [](int x, int y, int z) {
        return ((x % 3 + 3) % 3) * 9 + ((y % 3 + 3) % 3) * 3 + ((z % 3 + 3) % 3);
    };
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<Simplex> facets;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                for (const auto& p : perms) {
                    int c[3] = {x, y, z};
                    Simplex tet = {vid(c[0], c[1], c[2])};
                    for (int step = 0; step < 3; ++step) {
                        c[p[step]] += 1;
                        tet.push_back(vid(c[0], c[1], c[2]));
                    }
                    facets.push_back(std::move(tet));
                }
    return build_complex(facets);
}

}  // namespace detail

inline SimplicialComplex generate(const GeneratorSpec& spec) {
    if (spec.name == "sphere") return detail::sphere_complex(spec.parameter);
    if (spec.name == "torus2") return detail::torus2_complex();
    if (spec.name == "rp2") return detail::rp2_complex();
    if (spec.name == "klein") return detail::klein_complex();
    if (spec.name == "genus") return detail::genus_complex(spec.parameter);
    if (spec.name == "torus3") return detail::torus3_complex();
    throw BadSpecError("unknown generator: " + spec.name);
}

/** Parse "name" or "name:param", e.g. "sphere:2", "genus:2", "torus2". */
inline GeneratorSpec parse_generator_spec(const std::string& text) {
    GeneratorSpec spec;
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        spec.name = text;
    } else {
        spec.name = text.substr(0, colon);
        try {
            spec.parameter = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw BadSpecError("bad generator parameter: " + text);
        }
    }
    if ((spec.name == "sphere" || spec.name == "genus") && colon == std::string::npos)
        throw BadSpecError(spec.name + " needs a parameter, e.g. " + spec.name + ":2");
    return spec;
}

}  // namespace cutcert

#endif  // CUTCERT_GENERATORS_HPP
