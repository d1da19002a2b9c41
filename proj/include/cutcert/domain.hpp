/**
 * Facet-union domains and the cutting predicate.
 *
 * A domain is a non-empty proper subset F of the facets of a complex M.
 * With K_F the subcomplex generated by F and K_C the one generated by the
 * complement, the open set is U = |M| \ |K_C|, the closed complement is
 * |K_C|, and the topological boundary is |K_F cap K_C|. Connectivity of U
 * is face-incidence on the simplex set K_F \ K_C (open-set path
 * components); connectivity of the complement is vertex-sharing on K_C.
 * U cuts M iff the complement is disconnected.
 */

#ifndef CUTCERT_DOMAIN_HPP
#define CUTCERT_DOMAIN_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "cutcert/complex.hpp"

namespace cutcert {

struct Domain {
    const SimplicialComplex* complex = nullptr;
    std::vector<int> facet_set;  // sorted facet indices, proper non-empty subset
};

inline Domain make_domain(const SimplicialComplex& K, std::vector<int> facet_set) {
    std::sort(facet_set.begin(), facet_set.end());
    facet_set.erase(std::unique(facet_set.begin(), facet_set.end()), facet_set.end());
    if (facet_set.empty()) throw Error("domain: empty facet set");
    if (facet_set.size() >= K.facets.size()) throw Error("domain: facet set not proper");
    if (facet_set.front() < 0 || facet_set.back() >= static_cast<int>(K.facets.size()))
        throw Error("domain: facet index out of range");
    return Domain{&K, std::move(facet_set)};
}

struct BoundaryReport {
    std::vector<int> boundary_simplices;       // global ids, ascending
    int component_count = 0;
    std::vector<std::vector<int>> components;  // vertex-sharing classes
};

struct CutReport {
    bool domain_connected = false;
    BoundaryReport boundary;
    bool complement_connected = false;
    bool cuts = false;  // iff complement disconnected
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

inline CutReport cut_report(const Domain& D) {
    const SimplicialComplex& K = *D.complex;
    int n_facets = static_cast<int>(K.facets.size());
    int N = K.total_simplices;

    std::vector<uint8_t> in_F(n_facets, 0);
    for (int f : D.facet_set) in_F[f] = 1;

    std::vector<uint8_t> in_KF(N, 0), in_KC(N, 0);
    for (int f = 0; f < n_facets; ++f) {
        auto& mark = in_F[f] ? in_KF : in_KC;
        for (int id : K.facet_faces[f]) mark[id] = 1;
    }

    CutReport r;

    // boundary = K_F cap K_C, components under vertex sharing
    {
        detail::UnionFind uf(K.vertex_count);
        std::vector<int> boundary_ids;
        for (int id = 0; id < N; ++id)
            if (in_KF[id] && in_KC[id]) {
                boundary_ids.push_back(id);
                const Simplex& s = K.simplex_by_id(id);
                for (size_t i = 1; i < s.size(); ++i) uf.unite(s[0], s[i]);
            }
        std::map<int, std::vector<int>> classes;
        for (int id : boundary_ids)
            classes[uf.find(K.simplex_by_id(id)[0])].push_back(id);
        r.boundary.boundary_simplices = std::move(boundary_ids);
        for (auto& [root, members] : classes)
            r.boundary.components.push_back(std::move(members));
        std::sort(r.boundary.components.begin(), r.boundary.components.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        r.boundary.component_count = static_cast<int>(r.boundary.components.size());
    }

    // connectivity of the open set K_F \ K_C under face incidence: every
    // open face is unioned with each open facet of F containing it, which
    // generates the full incidence relation
    {
        detail::UnionFind uf(N);
        for (int f : D.facet_set) {
            int fid = K.facet_faces[f].back();  // the facet itself has the largest id
            for (int id : K.facet_faces[f])
                if (in_KF[id] && !in_KC[id]) uf.unite(id, fid);
        }
        int root = -1;
        bool connected = true;
        for (int id = 0; id < N && connected; ++id)
            if (in_KF[id] && !in_KC[id]) {
                int rr = uf.find(id);
                if (root < 0)
                    root = rr;
                else if (rr != root)
                    connected = false;
            }
        r.domain_connected = connected;
    }

    // complement |K_C| connectivity under vertex sharing
    {
        detail::UnionFind uf(K.vertex_count);
        std::vector<uint8_t> vert_in_C(K.vertex_count, 0);
        for (int f = 0; f < n_facets; ++f) {
            if (in_F[f]) continue;
            const Simplex& fv = K.facets[f];
            for (size_t i = 0; i < fv.size(); ++i) {
                vert_in_C[fv[i]] = 1;
                if (i) uf.unite(fv[0], fv[i]);
            }
        }
        int root = -1;
        bool connected = true;
        for (int v = 0; v < K.vertex_count && connected; ++v)
            if (vert_in_C[v]) {
                int rr = uf.find(v);
                if (root < 0)
                    root = rr;
                else if (rr != root)
                    connected = false;
            }
        r.complement_connected = connected;
    }

    r.cuts = !r.complement_connected;
    return r;
}

inline BoundaryReport boundary_report(const Domain& D) { return cut_report(D).boundary; }

// -------------------------------------------------------------------------
// Candidate enumeration
// -------------------------------------------------------------------------

struct EnumStats {
    long long visited = 0;    // facet subsets examined
    bool exhaustive = false;  // every proper non-empty subset was examined
};

/**
 * Visit every domain with |F| <= max_facets whose open set is connected and
 * whose boundary has >= 2 components, in deterministic order. When the
 * budget covers every proper subset, all of them are examined directly (the
 * universal quantifier over the finite family); otherwise connected facet
 * sets are grown by vertex-sharing adjacency, which covers every
 * open-connected domain. The callback may return false to stop early.
 */
inline EnumStats enumerate_candidates(
    const SimplicialComplex& K, int max_facets,
    const std::function<bool(const Domain&, const CutReport&)>& visit) {
    if (max_facets < 1) throw Error("enumerate_candidates: max_facets must be >= 1");
    int n = static_cast<int>(K.facets.size());
    EnumStats stats;
    stats.exhaustive = (max_facets >= n - 1);

    bool stop = false;
    auto consider = [&](const std::vector<int>& F) {
        stats.visited++;
        Domain D{&K, F};
        CutReport cr = cut_report(D);
        if (cr.domain_connected && cr.boundary.component_count >= 2)
            if (!visit(D, cr)) stop = true;
    };

    if (stats.exhaustive) {
        // all proper non-empty subsets, lexicographic on the sorted index list
        std::vector<int> F;
        std::function<void(int)> rec = [&](int start) {
            if (stop) return;
            for (int i = start; i < n && !stop; ++i) {
                F.push_back(i);
                if (static_cast<int>(F.size()) < n) consider(F);
                rec(i + 1);
                F.pop_back();
            }
        };
        rec(0);
        return stats;
    }

    // facet adjacency by shared vertices
    std::vector<std::vector<int>> adj(n);
    {
        for (int v = 0; v < K.vertex_count; ++v) {
            const auto& star = K.vertex_facets[v];
            for (size_t i = 0; i < star.size(); ++i)
                for (size_t j = i + 1; j < star.size(); ++j) {
                    adj[star[i]].push_back(star[j]);
                    adj[star[j]].push_back(star[i]);
                }
        }
        for (auto& a : adj) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
    }

    // connected-subset enumeration: each connected set visited exactly once
    std::vector<uint8_t> in_set(n, 0), forbidden(n, 0);
    std::vector<int> F;
    std::function<void()> grow = [&]() {
        if (stop) return;
        std::vector<int> sorted_F = F;
        std::sort(sorted_F.begin(), sorted_F.end());
        if (static_cast<int>(F.size()) < n) consider(sorted_F);
        if (static_cast<int>(F.size()) >= max_facets) return;
        std::vector<int> ext;
        for (int f : F)
            for (int g : adj[f])
                if (!in_set[g] && !forbidden[g]) ext.push_back(g);
        std::sort(ext.begin(), ext.end());
        ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
        std::vector<int> locally_forbidden;
        for (int g : ext) {
            if (stop) break;
            in_set[g] = 1;
            F.push_back(g);
            grow();
            F.pop_back();
            in_set[g] = 0;
            forbidden[g] = 1;
            locally_forbidden.push_back(g);
        }
        for (int g : locally_forbidden) forbidden[g] = 0;
    };
    for (int v = 0; v < n && !stop; ++v) {
        std::fill(forbidden.begin(), forbidden.end(), 0);
        for (int u = 0; u < v; ++u) forbidden[u] = 1;
        in_set[v] = 1;
        F.push_back(v);
        grow();
        F.pop_back();
        in_set[v] = 0;
    }
    return stats;
}

/** Convenience wrapper collecting the yielded domains. */
inline std::vector<Domain> enumerate_candidates(const SimplicialComplex& K, int max_facets) {
    std::vector<Domain> out;
    enumerate_candidates(K, max_facets, [&](const Domain& D, const CutReport&) {
        out.push_back(D);
        return true;
    });
    return out;
}

}  // namespace cutcert

#endif  // CUTCERT_DOMAIN_HPP
