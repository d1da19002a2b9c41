/**
 * Exact integer (co)homology of a simplicial complex: boundary matrices in
 * the canonical bases, Betti numbers and torsion via Smith normal form,
 * integer cocycle/cycle bases, the coboundary decision, and the pairing
 * between 1-cocycles and 1-cycles.
 *
 * Orientation convention: a k-simplex is oriented by its ascending vertex
 * order, everywhere.
 */

#ifndef CUTCERT_HOMOLOGY_HPP
#define CUTCERT_HOMOLOGY_HPP

#include <vector>

#include "cutcert/complex.hpp"
#include "cutcert/matrix.hpp"

namespace cutcert {

struct IntegerCochain {
    int degree = 1;
    std::vector<Int> values;  // indexed by the canonical k-simplex enumeration
};

struct CohomologyResult {
    std::vector<long long> betti;    // b_0 ... b_d
    std::vector<Int> h1_torsion;     // invariant factors > 1 of H_1 (informational)
    bool h1_trivial = false;         // iff b_1 == 0; torsion never enters
};

/** Matrix of the boundary map C_k -> C_{k-1}, entries in {-1,0,+1}. */
inline IntegerMatrix boundary_matrix(const SimplicialComplex& K, int k) {
    if (k < 1 || k > K.dimension) throw BadDegreeError("boundary_matrix: bad k");
    IntegerMatrix M(K.count(k - 1), K.count(k));
    for (int j = 0; j < K.count(k); ++j) {
        const Simplex& s = K.simplices[k][j];
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != i) face.push_back(s[t]);
            int row = K.face_index[k - 1].at(face);
            M.at(row, j) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return M;
}

inline CohomologyResult homology_summary(const SimplicialComplex& K) {
    CohomologyResult r;
    int d = K.dimension;
    std::vector<int> rank(d + 2, 0);  // rank[k] = rank of del_k; del_0 = del_{d+1} = 0
    std::vector<Int> h1_factors;
    for (int k = 1; k <= d; ++k) {
        SNFResult s = smith_normal_form(boundary_matrix(K, k));
        rank[k] = s.rank;
        if (k == 2) h1_factors = s.invariant_factors;
    }
    r.betti.resize(d + 1);
    for (int k = 0; k <= d; ++k)
        r.betti[k] = K.count(k) - rank[k] - rank[k + 1];
    for (const Int& f : h1_factors)
        if (f > 1) r.h1_torsion.push_back(f);
    r.h1_trivial = (d < 1) || (r.betti[1] == 0);
    return r;
}

// delta^1 z, i.e. z evaluated on the boundary of every 2-simplex
inline std::vector<Int> coboundary_of(const SimplicialComplex& K, const IntegerCochain& z) {
    if (K.dimension < 2) return {};
    std::vector<Int> out(K.count(2));
    for (int t = 0; t < K.count(2); ++t) {
        const Simplex& s = K.simplices[2][t];
        out[t] = z.values[K.edge_pos(s[1], s[2])] - z.values[K.edge_pos(s[0], s[2])] +
                 z.values[K.edge_pos(s[0], s[1])];
    }
    return out;
}

inline bool is_cocycle(const SimplicialComplex& K, const IntegerCochain& z) {
    if (static_cast<int>(z.values.size()) != K.count(1)) return false;
    for (const Int& v : coboundary_of(K, z))
        if (v != 0) return false;
    return true;
}

// delta^0 g as a 1-cochain
inline IntegerCochain vertex_coboundary(const SimplicialComplex& K, const std::vector<Int>& g) {
    if (static_cast<int>(g.size()) != K.vertex_count)
        throw DimensionMismatchError("potential size mismatch");
    IntegerCochain z;
    z.values.resize(K.count(1));
    for (int e = 0; e < K.count(1); ++e) {
        const Simplex& uv = K.simplices[1][e];
        z.values[e] = g[uv[1]] - g[uv[0]];
    }
    return z;
}

/**
 * Decide whether a 1-cocycle is a coboundary delta^0 g. A candidate g is
 * integrated edge by edge along a spanning forest; z cobounds iff every
 * remaining edge agrees with that g. Integer solvability coincides with
 * solvability here because the forest integration never divides.
 */
inline bool is_coboundary(const SimplicialComplex& K, const IntegerCochain& z) {
    if (static_cast<int>(z.values.size()) != K.count(1))
        throw DimensionMismatchError("cochain length mismatch");
    if (!is_cocycle(K, z)) throw NotACocycleError("delta z != 0");
    std::vector<std::vector<std::pair<int, int>>> adj(K.vertex_count);  // (nbr, edge)
    for (int e = 0; e < K.count(1); ++e) {
        const Simplex& uv = K.simplices[1][e];
        adj[uv[0]].push_back({uv[1], e});
        adj[uv[1]].push_back({uv[0], e});
    }
    std::vector<Int> g(K.vertex_count);
    std::vector<uint8_t> seen(K.vertex_count, 0);
    std::vector<int> stack;
    for (int root = 0; root < K.vertex_count; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[u]) {
                const Simplex& uv = K.simplices[1][e];
                Int val = (u == uv[0]) ? Int(g[u] + z.values[e]) : Int(g[u] - z.values[e]);
                if (!seen[w]) {
                    seen[w] = 1;
                    g[w] = val;
                    stack.push_back(w);
                } else if (g[w] != val) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_cycle(const SimplicialComplex& K, const std::vector<Int>& c) {
    if (static_cast<int>(c.size()) != K.count(1)) return false;
    std::vector<Int> vertex_sum(K.vertex_count);
    for (int e = 0; e < K.count(1); ++e) {
        if (c[e] == 0) continue;
        const Simplex& uv = K.simplices[1][e];
        vertex_sum[uv[0]] -= c[e];
        vertex_sum[uv[1]] += c[e];
    }
    for (const Int& v : vertex_sum)
        if (v != 0) return false;
    return true;
}

/** <z, c> = sum over oriented edges of z(e) * c(e). */
inline Int pairing(const SimplicialComplex& K, const IntegerCochain& z, const std::vector<Int>& c) {
    if (z.values.size() != c.size() || static_cast<int>(c.size()) != K.count(1))
        throw DimensionMismatchError("pairing: size mismatch");
    if (!is_cycle(K, c)) throw NotACycleError("boundary of c != 0");
    Int s = 0;
    for (size_t e = 0; e < c.size(); ++e) s += z.values[e] * c[e];
    return s;
}

namespace detail {

/**
 * Free-part generators of ker(A)/im(B), where im(B) is contained in ker(A).
 * Returns generator vectors (in ambient coordinates) plus the invariant
 * factors of the relation matrix (torsion of the quotient).
 */
struct QuotientFreePart {
    std::vector<std::vector<Int>> generators;
    std::vector<Int> torsion;  // invariant factors > 1
};

inline QuotientFreePart quotient_free_part(const SNFResult& snfA, const IntegerMatrix& B) {
    QuotientFreePart out;
    int amb = snfA.V.rows;  // ambient dimension (columns of A)
    int k = snfA.V.cols - snfA.rank;  // kernel rank
    if (k == 0) return out;

    // coordinates of im(B) in the kernel basis: y = Vinv * B, rows rank..end
    IntegerMatrix C(k, B.cols);
    for (int j = 0; j < B.cols; ++j) {
        std::vector<Int> col(B.rows);
        for (int i = 0; i < B.rows; ++i) col[i] = B.at(i, j);
        std::vector<Int> y = snfA.Vinv.apply(col);
        for (int i = 0; i < snfA.rank; ++i)
            if (y[i] != 0)
                throw Error("quotient_free_part: image not contained in kernel");
        for (int i = 0; i < k; ++i) C.at(i, j) = y[snfA.rank + i];
    }
    SNFResult sc = smith_normal_form(C);
    for (const Int& f : sc.invariant_factors)
        if (f > 1) out.torsion.push_back(f);

    // free generators: columns of Uinv beyond the rank of C, mapped back
    for (int j = sc.rank; j < k; ++j) {
        std::vector<Int> coords(k);
        for (int i = 0; i < k; ++i) coords[i] = sc.Uinv.at(i, j);
        std::vector<Int> gen(amb);
        for (int i = 0; i < k; ++i) {
            if (coords[i] == 0) continue;
            for (int r = 0; r < amb; ++r)
                gen[r] += coords[i] * snfA.V.at(r, snfA.rank + i);
        }
        out.generators.push_back(std::move(gen));
    }
    return out;
}

}  // namespace detail

/**
 * Integer 1-cochains whose classes form a basis of H^1(K;Z) = Z^{b_1}.
 * Empty iff H^1 is trivial.
 */
inline std::vector<IntegerCochain> cocycle_basis(const SimplicialComplex& K) {
    std::vector<IntegerCochain> out;
    if (K.dimension < 1) return out;
    int edges = K.count(1);

    SNFResult snfDelta = [&] {
        if (K.dimension >= 2) {
            IntegerMatrix d2 = boundary_matrix(K, 2);
            IntegerMatrix delta(d2.cols, d2.rows);  // triangles x edges
            for (int i = 0; i < d2.rows; ++i)
                for (int j = 0; j < d2.cols; ++j) delta.at(j, i) = d2.at(i, j);
            return smith_normal_form(delta);
        }
        return smith_normal_form(IntegerMatrix(0, edges));
    }();

    // im(delta^0) as columns of (del_1)^T
    IntegerMatrix d1 = boundary_matrix(K, 1);
    IntegerMatrix B(edges, K.vertex_count);
    for (int i = 0; i < d1.rows; ++i)
        for (int j = 0; j < d1.cols; ++j) B.at(j, i) = d1.at(i, j);

    auto q = detail::quotient_free_part(snfDelta, B);
    if (!q.torsion.empty())
        throw Error("cocycle_basis: H^1 reported torsion, which cannot happen");
    for (auto& g : q.generators) {
        IntegerCochain z;
        z.values = std::move(g);
        out.push_back(std::move(z));
    }
    return out;
}

/**
 * Integer 1-cycles whose classes generate the free part of H_1(K;Z)
 * (the fundamental cycles; torsion classes are dropped).
 */
inline std::vector<std::vector<Int>> cycle_basis(const SimplicialComplex& K) {
    if (K.dimension < 1) return {};
    SNFResult snfD1 = smith_normal_form(boundary_matrix(K, 1));
    IntegerMatrix B = K.dimension >= 2 ? boundary_matrix(K, 2)
                                       : IntegerMatrix(K.count(1), 0);
    auto q = detail::quotient_free_part(snfD1, B);
    return q.generators;
}

}  // namespace cutcert

#endif  // CUTCERT_HOMOLOGY_HPP
