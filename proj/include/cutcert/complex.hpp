/**
 * Finite pure simplicial complexes given by facet lists.
 *
 * A complex owns a canonical enumeration of all of its simplices: within
 * each dimension, simplices are sorted lexicographically, and the global id
 * of a simplex is its per-dimension position plus a per-dimension offset.
 * Two complexes built from equal facet sets therefore produce identical
 * enumerations, which keeps every matrix and report downstream reproducible.
 */

#ifndef CUTCERT_COMPLEX_HPP
#define CUTCERT_COMPLEX_HPP

#include <algorithm>
#include <array>
#include <cstdio>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cutcert/errors.hpp"

namespace cutcert {

using Simplex = std::vector<int>;  // vertex indices, sorted ascending

struct ValidationReport {
    bool is_pseudomanifold = false;
    bool is_connected = false;
    std::vector<Simplex> bad_ridges;       // ridges in != 1 and != 2 facets
    std::vector<Simplex> boundary_ridges;  // ridges in exactly 1 facet

    bool closed() const { return boundary_ridges.empty(); }
};

class SimplicialComplex {
public:
    int dimension = 0;
    int vertex_count = 0;
    std::vector<Simplex> facets;  // sorted lexicographically, no duplicates

    // simplices[k] lists all k-simplices in lexicographic order
    std::vector<std::vector<Simplex>> simplices;
    std::vector<std::map<Simplex, int>> face_index;  // per-dim position lookup
    std::vector<int> dim_offset;                     // global id = dim_offset[k] + pos
    int total_simplices = 0;

    std::vector<std::vector<int>> facet_faces;    // per facet: global ids of all faces (incl. itself)
    std::vector<std::vector<int>> vertex_facets;  // per vertex: indices of containing facets

    int count(int k) const {
        if (k < 0 || k > dimension) return 0;
        return static_cast<int>(simplices[k].size());
    }

    int edge_count() const { return count(1); }

    // global id of a sorted vertex tuple, or -1 if absent
    int simplex_id(const Simplex& s) const {
        int k = static_cast<int>(s.size()) - 1;
        if (k < 0 || k > dimension) return -1;
        auto it = face_index[k].find(s);
        if (it == face_index[k].end()) return -1;
        return dim_offset[k] + it->second;
    }

    int dim_of_id(int id) const {
        for (int k = dimension; k >= 0; --k)
            if (id >= dim_offset[k]) return k;
        return -1;
    }

    const Simplex& simplex_by_id(int id) const {
        int k = dim_of_id(id);
        return simplices[k][id - dim_offset[k]];
    }

    // position of an edge within the canonical edge enumeration
    int edge_pos(int u, int v) const {
        Simplex e{std::min(u, v), std::max(u, v)};
        auto it = face_index[1].find(e);
        return it == face_index[1].end() ? -1 : it->second;
    }

    int facet_pos(const Simplex& f) const {
        auto it = std::lower_bound(facets.begin(), facets.end(), f);
        if (it == facets.end() || *it != f) return -1;
        return static_cast<int>(it - facets.begin());
    }

    bool operator==(const SimplicialComplex& other) const {
        return dimension == other.dimension && vertex_count == other.vertex_count &&
               facets == other.facets;
    }
};

namespace detail {

inline void enumerate_subsets(const Simplex& s, std::vector<Simplex>& out) {
    int n = static_cast<int>(s.size());
    out.clear();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(s[i]);
        out.push_back(std::move(sub));
    }
}

// Index facets (already relabeled, sorted, deduplicated) into a complex.
inline SimplicialComplex index_complex(std::vector<Simplex> facet_list, int n_vertices) {
    SimplicialComplex K;
    K.facets = std::move(facet_list);
    K.dimension = static_cast<int>(K.facets.front().size()) - 1;
    K.vertex_count = n_vertices;

    K.face_index.assign(K.dimension + 1, {});
    std::vector<Simplex> subs;
    for (const auto& f : K.facets) {
        enumerate_subsets(f, subs);
        for (auto& s : subs) {
            int k = static_cast<int>(s.size()) - 1;
            K.face_index[k].emplace(std::move(s), 0);
        }
    }
    K.simplices.assign(K.dimension + 1, {});
    K.dim_offset.assign(K.dimension + 1, 0);
    int next = 0;
    for (int k = 0; k <= K.dimension; ++k) {
        K.dim_offset[k] = next;
        int pos = 0;
        for (auto& [s, idx] : K.face_index[k]) {
            idx = pos++;
            K.simplices[k].push_back(s);
        }
        next += pos;
    }
    K.total_simplices = next;

    K.facet_faces.resize(K.facets.size());
    K.vertex_facets.assign(K.vertex_count, {});
    for (size_t fi = 0; fi < K.facets.size(); ++fi) {
        enumerate_subsets(K.facets[fi], subs);
        auto& ff = K.facet_faces[fi];
        for (const auto& s : subs) ff.push_back(K.simplex_id(s));
        std::sort(ff.begin(), ff.end());
        for (int v : K.facets[fi]) K.vertex_facets[v].push_back(static_cast<int>(fi));
    }
    return K;
}

}  // namespace detail

/**
 * Build a complex from raw facet tuples. Vertices are relabeled to the dense
 * range [0,n) preserving their numeric order; facets are stored sorted.
 */
inline SimplicialComplex build_complex(const std::vector<Simplex>& facet_list) {
    if (facet_list.empty()) throw EmptyComplexError("no facets given");
    size_t arity = facet_list.front().size();
    if (arity == 0) throw EmptyComplexError("empty facet tuple");
    std::map<int, int> relabel;
    for (const auto& f : facet_list) {
        if (f.size() != arity)
            throw MixedDimensionError("facets of mixed dimension");
        for (int v : f) {
            if (v < 0) throw ScParseError("negative vertex index");
            relabel.emplace(v, 0);
        }
    }
    int next = 0;
    for (auto& [v, label] : relabel) label = next++;
    std::vector<Simplex> out;
    out.reserve(facet_list.size());
    for (const auto& f : facet_list) {
        Simplex g;
        for (int v : f) g.push_back(relabel.at(v));
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw DegenerateSimplexError("repeated vertex in facet");
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return detail::index_complex(std::move(out), static_cast<int>(relabel.size()));
}

/**
 * Same as build_complex but keeps the given labels, which must already be a
 * dense range [0,n) with every label used. Internal constructor for
 * subdivisions, where labels carry meaning.
 */
inline SimplicialComplex build_complex_prelabeled(std::vector<Simplex> facet_list,
                                                  int n_vertices) {
    if (facet_list.empty()) throw EmptyComplexError("no facets given");
    for (auto& f : facet_list) std::sort(f.begin(), f.end());
    std::sort(facet_list.begin(), facet_list.end());
    facet_list.erase(std::unique(facet_list.begin(), facet_list.end()), facet_list.end());
    return detail::index_complex(std::move(facet_list), n_vertices);
}

inline ValidationReport validate(const SimplicialComplex& K) {
    ValidationReport r;
    // ridge -> number of containing facets
    std::map<Simplex, int> ridge_count;
    for (const auto& f : K.facets) {
        for (size_t i = 0; i < f.size(); ++i) {
            Simplex ridge;
            for (size_t j = 0; j < f.size(); ++j)
                if (j != i) ridge.push_back(f[j]);
            if (!ridge.empty()) ridge_count[ridge]++;
        }
    }
    for (const auto& [ridge, c] : ridge_count) {
        if (c == 1) r.boundary_ridges.push_back(ridge);
        if (c != 1 && c != 2) r.bad_ridges.push_back(ridge);
    }
    r.is_pseudomanifold = r.bad_ridges.empty();

    // connectivity of facets through shared vertices; no isolated vertices exist
    std::vector<int> uf(K.facets.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    std::vector<int> seen(K.vertex_count, -1);
    for (size_t fi = 0; fi < K.facets.size(); ++fi)
        for (int v : K.facets[fi]) {
            if (seen[v] < 0)
                seen[v] = static_cast<int>(fi);
            else
                uf[find(static_cast<int>(fi))] = find(seen[v]);
        }
    int comps = 0;
    for (size_t fi = 0; fi < K.facets.size(); ++fi)
        if (find(static_cast<int>(fi)) == static_cast<int>(fi)) comps++;
    r.is_connected = (comps == 1);
    return r;
}

inline long long euler_characteristic(const SimplicialComplex& K) {
    long long chi = 0;
    for (int k = 0; k <= K.dimension; ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(K.count(k));
    return chi;
}

// -------------------------------------------------------------------------
// Barycentric subdivision
// -------------------------------------------------------------------------

/**
 * One barycentric subdivision step. Vertex labels of the result are the
 * global simplex ids of the parent complex (the barycenters); in particular
 * parent vertices keep their labels. edge_children records, for each parent
 * edge, the two signed child edges that subdivide it (the 1-chain carrying a
 * parent edge, used to transport cycles up and cochains down).
 */
struct Subdivision {
    SimplicialComplex complex;
    std::vector<int> facet_parent;  // child facet index -> parent facet index
    std::vector<std::array<std::pair<int, int>, 2>> edge_children;  // (child edge pos, sign)
};

inline Subdivision barycentric_subdivision(const SimplicialComplex& K) {
    Subdivision sd;
    std::vector<std::pair<Simplex, int>> new_facets;  // (facet, parent)
    for (size_t fi = 0; fi < K.facets.size(); ++fi) {
        Simplex perm = K.facets[fi];
        std::sort(perm.begin(), perm.end());
        do {
            Simplex flag_facet;
            Simplex prefix;
            for (int v : perm) {
                prefix.push_back(v);
                Simplex sorted_prefix = prefix;
                std::sort(sorted_prefix.begin(), sorted_prefix.end());
                flag_facet.push_back(K.simplex_id(sorted_prefix));
            }
            std::sort(flag_facet.begin(), flag_facet.end());
            new_facets.emplace_back(std::move(flag_facet), static_cast<int>(fi));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(new_facets.begin(), new_facets.end());
    std::vector<Simplex> facet_list;
    facet_list.reserve(new_facets.size());
    sd.facet_parent.reserve(new_facets.size());
    for (auto& [f, parent] : new_facets) {
        facet_list.push_back(std::move(f));
        sd.facet_parent.push_back(parent);
    }
    sd.complex = detail::index_complex(std::move(facet_list), K.total_simplices);

    sd.edge_children.resize(K.count(1));
    for (int e = 0; e < K.count(1); ++e) {
        const Simplex& uv = K.simplices[1][e];
        int u = uv[0], v = uv[1];
        int b = K.dim_offset[1] + e;  // barycenter label of the edge
        int c0 = sd.complex.edge_pos(u, b);
        int c1 = sd.complex.edge_pos(v, b);
        // traversal u -> b -> v; stored tuples are (u,b) and (v,b)
        sd.edge_children[e] = {{{c0, +1}, {c1, -1}}};
    }
    return sd;
}

// -------------------------------------------------------------------------
// Connectivity of simplex sets
// -------------------------------------------------------------------------

enum class Adjacency {
    FaceIncidence,  // s ~ t iff s is a face of t or vice versa
    VertexSharing,  // s ~ t iff they share a vertex
};

/**
 * Partition a set of simplices (given by global ids) into connected
 * components under the transitive closure of the chosen relation. Classes
 * are ordered by smallest member; members ascend within a class.
 */
inline std::vector<std::vector<int>> connected_components(const SimplicialComplex& K,
                                                          const std::vector<int>& ids,
                                                          Adjacency rel) {
    std::vector<int> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    sorted_ids.erase(std::unique(sorted_ids.begin(), sorted_ids.end()), sorted_ids.end());
    if (sorted_ids.empty()) return {};

    std::map<int, int> pos;  // global id -> index in sorted_ids
    for (size_t i = 0; i < sorted_ids.size(); ++i) pos[sorted_ids[i]] = static_cast<int>(i);

    std::vector<int> uf(sorted_ids.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };

    if (rel == Adjacency::VertexSharing) {
        std::vector<int> seen(K.vertex_count, -1);
        for (size_t i = 0; i < sorted_ids.size(); ++i)
            for (int v : K.simplex_by_id(sorted_ids[i])) {
                if (seen[v] < 0)
                    seen[v] = static_cast<int>(i);
                else
                    unite(static_cast<int>(i), seen[v]);
            }
    } else {
        std::vector<Simplex> subs;
        for (size_t i = 0; i < sorted_ids.size(); ++i) {
            detail::enumerate_subsets(K.simplex_by_id(sorted_ids[i]), subs);
            for (const auto& s : subs) {
                int id = K.simplex_id(s);
                if (id == sorted_ids[i]) continue;
                auto it = pos.find(id);
                if (it != pos.end()) unite(static_cast<int>(i), it->second);
            }
        }
    }

    std::map<int, std::vector<int>> classes;
    for (size_t i = 0; i < sorted_ids.size(); ++i) classes[find(static_cast<int>(i))].push_back(sorted_ids[i]);
    std::vector<std::vector<int>> out;
    out.reserve(classes.size());
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

// -------------------------------------------------------------------------
// .sc text format
// -------------------------------------------------------------------------

inline std::string to_sc(const SimplicialComplex& K) {
    std::ostringstream os;
    os << "dim " << K.dimension << "\n";
    os << "vertices " << K.vertex_count << "\n";
    for (const auto& f : K.facets) {
        for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << "\n";
    }
    return os.str();
}

inline SimplicialComplex parse_sc(std::istream& in) {
    std::string line;
    int dim = -1, nverts = -1;
    std::vector<Simplex> facet_list;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "dim") {
            if (!(ls >> dim) || dim < 0) throw ScParseError("bad dim line");
        } else if (first == "vertices") {
            if (!(ls >> nverts) || nverts < 0) throw ScParseError("bad vertices line");
        } else {
            Simplex f;
            try {
                f.push_back(std::stoi(first));
            } catch (const std::exception&) {
                throw ScParseError("bad token: " + first);
            }
            int v;
            while (ls >> v) f.push_back(v);
            if (!ls.eof()) throw ScParseError("bad facet line: " + line);
            facet_list.push_back(std::move(f));
        }
    }
    if (dim < 0 || nverts < 0) throw ScParseError("missing dim/vertices header");
    SimplicialComplex K = build_complex(facet_list);
    if (K.dimension != dim)
        throw MixedDimensionError("declared dim does not match facet arity");
    if (K.vertex_count != nverts)
        throw ScParseError("declared vertex count does not match facets");
    return K;
}

// FNV-1a over the canonical .sc serialization; the complex fingerprint used
// in certificates.
inline std::string complex_hash(const SimplicialComplex& K) {
    std::string text = to_sc(K);
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

}  // namespace cutcert

#endif  // CUTCERT_COMPLEX_HPP
