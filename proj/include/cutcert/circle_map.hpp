/**
 * Constructive direction 1: from a verified non-cutting connected domain
 * with disconnected boundary, build a circle-valued vertex map by per-side
 * graph distances, lift it to a rational edge cochain, extract the integer
 * winding cocycle, and certify that H^1 is nontrivial.
 *
 * The circle is [0,1) with 0 = N and 1/2 = S; (0,1/2) is the arc through U
 * and (1/2,1) the arc through the complement side. All values are exact
 * rationals; no floating point enters this module.
 */

#ifndef CUTCERT_CIRCLE_MAP_HPP
#define CUTCERT_CIRCLE_MAP_HPP

#include <cstdint>
#include <deque>
#include <limits>
#include <utility>
#include <vector>

#include "cutcert/certificate.hpp"
#include "cutcert/domain.hpp"
#include "cutcert/homology.hpp"
#include "cutcert/tower.hpp"

namespace cutcert {

enum class Region : int8_t { AHat = 0, BHat = 1, USide = 2, VSide = 3 };

/**
 * The decomposition M = U u A_hat u V u B_hat on an iterated subdivision:
 * A_hat and B_hat are disjoint closed facet neighborhoods of the two
 * boundary parts, the remaining facets split by which side of the domain
 * their ancestor facet lies on.
 */
struct Thickening {
    SubdivisionTower tower;      // base = the complex the pipeline started from
    int domain_level = 0;        // the domain lives on tower.level(domain_level)
    std::vector<int> domain_facets;
    // facet partition of tower.top()
    std::vector<int> a_hat, b_hat, u_side, v_side;
};

namespace detail {

inline std::vector<Region> facet_regions(const Thickening& T) {
    std::vector<Region> region(T.tower.top().facets.size(), Region::USide);
    for (int f : T.b_hat) region[f] = Region::BHat;
    for (int f : T.v_side) region[f] = Region::VSide;
    for (int f : T.u_side) region[f] = Region::USide;
    for (int f : T.a_hat) region[f] = Region::AHat;
    return region;
}

// vertex classes from a facet partition: hat facets claim their vertices
inline std::vector<Region> vertex_classes(const SimplicialComplex& K,
                                          const std::vector<Region>& region) {
    std::vector<Region> cls(K.vertex_count, Region::USide);
    std::vector<uint8_t> assigned(K.vertex_count, 0);
    for (size_t f = 0; f < K.facets.size(); ++f) {
        if (region[f] != Region::AHat && region[f] != Region::BHat) continue;
        for (int v : K.facets[f]) {
            if (assigned[v] && cls[v] != region[f])
                throw CannotSeparateError("vertex shared by both hats");
            cls[v] = region[f];
            assigned[v] = 1;
        }
    }
    for (size_t f = 0; f < K.facets.size(); ++f) {
        if (region[f] != Region::USide && region[f] != Region::VSide) continue;
        for (int v : K.facets[f])
            if (!assigned[v]) {
                cls[v] = region[f];
                assigned[v] = 2;
            } else if (assigned[v] == 2 && cls[v] != region[f]) {
                throw Error("vertex between U and V sides outside the hats");
            }
    }
    return cls;
}

inline std::vector<std::vector<int>> skeleton_adjacency(const SimplicialComplex& K) {
    std::vector<std::vector<int>> adj(K.vertex_count);
    for (const Simplex& e : K.simplices[1]) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

constexpr int kUnreached = std::numeric_limits<int>::max();

// multi-source BFS restricted to allowed vertices; parents recorded for paths
inline std::vector<int> restricted_bfs(const std::vector<std::vector<int>>& adj,
                                       const std::vector<uint8_t>& allowed,
                                       const std::vector<int>& sources,
                                       std::vector<int>* parent = nullptr) {
    std::vector<int> dist(adj.size(), kUnreached);
    if (parent) parent->assign(adj.size(), -1);
    std::deque<int> queue;
    for (int s : sources)
        if (allowed[s] && dist[s] == kUnreached) {
            dist[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj[x]) {
            if (!allowed[y] || dist[y] != kUnreached) continue;
            dist[y] = dist[x] + 1;
            if (parent) (*parent)[y] = x;
            queue.push_back(y);
        }
    }
    return dist;
}

inline std::vector<int> backtrack_path(const std::vector<int>& parent, int target) {
    std::vector<int> path{target};
    while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;  // runs source -> target
}

// lift a mod-1 increment into (-1/2, 1/2]
inline Rational lift_increment(const Rational& diff) {
    Rational half(1, 2);
    Rational l = diff;
    while (l > half) l -= 1;
    while (l <= -half) l += 1;
    return l;
}

}  // namespace detail

/**
 * Build the thickening of a verified domain. A_hat / B_hat are the closed
 * facet stars of the subdivided boundary parts, taken two subdivisions up;
 * if their closures are not disjoint, further subdivisions are tried up to
 * the given bound.
 */
inline Thickening thicken(SubdivisionTower tower, const Domain& D, int retries = 3) {
    int domain_level = tower.height();
    if (&tower.top() != D.complex)
        throw Error("thicken: domain does not live on the tower top");
    CutReport cr = cut_report(D);
    if (!cr.domain_connected || cr.boundary.component_count < 2 || cr.cuts)
        throw Error("thicken: domain is not a non-cutting connected domain "
                    "with disconnected boundary");

    // A = boundary component containing the smallest canonical simplex,
    // B = union of all the others
    const SimplicialComplex& base = tower.top();
    std::vector<uint8_t> in_A(base.total_simplices, 0), in_B(base.total_simplices, 0);
    for (size_t c = 0; c < cr.boundary.components.size(); ++c)
        for (int id : cr.boundary.components[c]) (c == 0 ? in_A : in_B)[id] = 1;

    tower.push();
    tower.push();
    for (int attempt = 0; attempt <= retries; ++attempt) {
        const SimplicialComplex& top = tower.top();
        int h = tower.height();
        std::vector<uint8_t> va(top.vertex_count, 0), vb(top.vertex_count, 0);
        for (int v = 0; v < top.vertex_count; ++v) {
            int carrier = tower.vertex_carrier(h, v, domain_level);
            if (in_A[carrier]) va[v] = 1;
            if (in_B[carrier]) vb[v] = 1;
        }
        Thickening T;
        T.domain_level = domain_level;
        T.domain_facets = D.facet_set;
        std::vector<uint8_t> hat_vertex(top.vertex_count, 0);  // 1 = A side, 2 = B side
        bool separated = true;
        for (size_t f = 0; f < top.facets.size() && separated; ++f) {
            bool meets_a = false, meets_b = false;
            for (int v : top.facets[f]) {
                meets_a = meets_a || va[v];
                meets_b = meets_b || vb[v];
            }
            if (meets_a && meets_b) separated = false;
            if (meets_a)
                T.a_hat.push_back(static_cast<int>(f));
            else if (meets_b)
                T.b_hat.push_back(static_cast<int>(f));
        }
        if (separated) {
            for (int f : T.a_hat)
                for (int v : top.facets[f]) hat_vertex[v] = 1;
            for (int f : T.b_hat)
                for (int v : top.facets[f]) {
                    if (hat_vertex[v] == 1) separated = false;
                    hat_vertex[v] = 2;
                }
        }
        if (!separated) {
            if (attempt == retries)
                throw CannotSeparateError("hat neighborhoods still meet after retries");
            tower.push();
            continue;
        }
        std::vector<uint8_t> in_F(base.facets.size(), 0);
        for (int f : D.facet_set) in_F[f] = 1;
        std::vector<uint8_t> hat_facet(top.facets.size(), 0);
        for (int f : T.a_hat) hat_facet[f] = 1;
        for (int f : T.b_hat) hat_facet[f] = 1;
        for (size_t f = 0; f < top.facets.size(); ++f) {
            if (hat_facet[f]) continue;
            int anc = tower.facet_ancestor(static_cast<int>(f), domain_level);
            (in_F[anc] ? T.u_side : T.v_side).push_back(static_cast<int>(f));
        }
        if (T.a_hat.empty() || T.b_hat.empty() || T.u_side.empty() || T.v_side.empty())
            throw CannotSeparateError("degenerate thickening: an empty part");
        T.tower = std::move(tower);
        return T;
    }
    throw CannotSeparateError("unreachable");
}

inline Thickening thicken(const SimplicialComplex& K, const Domain& D, int retries = 3) {
    if (D.complex != &K) throw Error("thicken: domain complex mismatch");
    SubdivisionTower tower(K);
    Domain over_tower = make_domain(tower.top(), D.facet_set);
    return thicken(std::move(tower), over_tower, retries);
}

struct CircleMapResult {
    SubdivisionTower tower;  // top = the final ambient complex
    int domain_level = 0;
    std::vector<int> domain_facets;
    std::vector<int> a_hat, b_hat, u_side, v_side;  // facets of the final ambient
    std::vector<Region> vertex_class;               // final ambient vertices

    std::vector<Rational> vertex_values;  // in [0,1); 0 on A_hat, 1/2 on B_hat
    std::vector<Rational> lift_cochain;   // edge increments in (-1/2, 1/2]
    std::vector<Int> winding_ambient;     // integer winding cocycle, ambient edges
    std::vector<Int> winding_cocycle;     // transported to the tower base
    int subdivisions_used = 0;            // extra subdivisions spent on wrap repair

    std::vector<Int> loop;  // 1-cycle gamma on the ambient complex
    Int pairing_value = 0;  // <winding_ambient, loop>
    Int crossing_count = 0; // independent signed interface-crossing count
};

inline CircleMapResult build_circle_map(Thickening T, int retries = 8) {
    CircleMapResult R;
    R.domain_level = T.domain_level;
    R.domain_facets = T.domain_facets;

    std::vector<Region> region = detail::facet_regions(T);
    std::vector<Rational> values;

    // initial values from per-side path distances
    {
        const SimplicialComplex& amb = T.tower.top();
        std::vector<Region> cls = detail::vertex_classes(amb, region);
        auto adj = detail::skeleton_adjacency(amb);
        values.assign(amb.vertex_count, Rational(0));

        std::vector<int> src_a, src_b;
        for (int v = 0; v < amb.vertex_count; ++v) {
            if (cls[v] == Region::AHat) src_a.push_back(v);
            if (cls[v] == Region::BHat) src_b.push_back(v);
        }
        for (Region side : {Region::USide, Region::VSide}) {
            std::vector<uint8_t> allowed(amb.vertex_count, 0);
            for (int v = 0; v < amb.vertex_count; ++v)
                allowed[v] = (cls[v] == side || cls[v] == Region::AHat ||
                              cls[v] == Region::BHat);
            auto da = detail::restricted_bfs(adj, allowed, src_a);
            auto db = detail::restricted_bfs(adj, allowed, src_b);
            for (int v = 0; v < amb.vertex_count; ++v) {
                if (cls[v] != side) continue;
                if (da[v] == detail::kUnreached || db[v] == detail::kUnreached)
                    throw DisconnectedSideError(
                        "a side vertex cannot reach both neighborhoods");
                Rational frac;
                if (side == Region::USide)
                    frac = Rational(da[v], 2 * (da[v] + db[v]));  // in (0, 1/2)
                else
                    frac = Rational(1, 2) + Rational(db[v], 2 * (da[v] + db[v]));
                values[v] = frac;
            }
        }
        for (int v : src_b) values[v] = Rational(1, 2);
        // A_hat vertices stay at exactly 0
    }

    // lift; on a wrapping 2-simplex, subdivide and interpolate on the circle
    for (int attempt = 0;; ++attempt) {
        const SimplicialComplex& amb = T.tower.top();
        std::vector<Rational> lifts(amb.count(1));
        for (int e = 0; e < amb.count(1); ++e) {
            const Simplex& uv = amb.simplices[1][e];
            lifts[e] = detail::lift_increment(values[uv[1]] - values[uv[0]]);
        }
        bool wrapped = false;
        for (const Simplex& t : amb.simplices[2]) {
            Rational w = lifts[amb.edge_pos(t[1], t[2])] - lifts[amb.edge_pos(t[0], t[2])] +
                         lifts[amb.edge_pos(t[0], t[1])];
            if (w != 0) {
                wrapped = true;
                break;
            }
        }
        if (!wrapped) {
            R.lift_cochain = std::move(lifts);
            break;
        }
        if (attempt >= retries)
            throw NoWrapFixpointError("wrap condition persists after subdivision retries");

        T.tower.push();
        R.subdivisions_used++;
        const SimplicialComplex& prev = amb;
        const SimplicialComplex& next = T.tower.top();
        // circle interpolation: average lifted representatives rel. the first vertex
        std::vector<Rational> nv(next.vertex_count);
        for (int v = 0; v < next.vertex_count; ++v) {
            const Simplex& parent = prev.simplex_by_id(v);
            Rational base = values[parent[0]];
            Rational acc = base;
            for (size_t i = 1; i < parent.size(); ++i)
                acc += base + detail::lift_increment(values[parent[i]] - base);
            Rational avg = acc / static_cast<int>(parent.size());
            // reduce into [0,1)
            while (avg < 0) avg += 1;
            while (avg >= 1) avg -= 1;
            nv[v] = avg;
        }
        values = std::move(nv);
        // refine the facet partition
        std::vector<Region> next_region(next.facets.size());
        int h = T.tower.height();
        for (size_t f = 0; f < next.facets.size(); ++f)
            next_region[f] = region[T.tower.facet_ancestor(static_cast<int>(f), h - 1)];
        region = std::move(next_region);
    }

    const SimplicialComplex& amb = T.tower.top();
    R.vertex_values = std::move(values);
    R.vertex_class = detail::vertex_classes(amb, region);
    for (size_t f = 0; f < region.size(); ++f) {
        switch (region[f]) {
            case Region::AHat: R.a_hat.push_back(static_cast<int>(f)); break;
            case Region::BHat: R.b_hat.push_back(static_cast<int>(f)); break;
            case Region::USide: R.u_side.push_back(static_cast<int>(f)); break;
            case Region::VSide: R.v_side.push_back(static_cast<int>(f)); break;
        }
    }

    // integer winding cocycle: lift minus actual increment, per edge
    R.winding_ambient.resize(amb.count(1));
    for (int e = 0; e < amb.count(1); ++e) {
        const Simplex& uv = amb.simplices[1][e];
        Rational z = R.lift_cochain[e] - (R.vertex_values[uv[1]] - R.vertex_values[uv[0]]);
        if (denominator(z) != 1)
            throw Error("winding cochain is not integral");
        R.winding_ambient[e] = numerator(z);
    }

    // gamma: A_hat --(U side)--> B_hat --(V side)--> A_hat, closed up inside
    // the hats
    {
        auto adj = detail::skeleton_adjacency(amb);
        const auto& cls = R.vertex_class;
        auto allowed_for = [&](Region side) {
            std::vector<uint8_t> allowed(amb.vertex_count, 0);
            for (int v = 0; v < amb.vertex_count; ++v)
                allowed[v] = (cls[v] == side || cls[v] == Region::AHat ||
                              cls[v] == Region::BHat);
            return allowed;
        };
        auto hat_only = [&](Region hat) {
            std::vector<uint8_t> allowed(amb.vertex_count, 0);
            for (int v = 0; v < amb.vertex_count; ++v) allowed[v] = (cls[v] == hat);
            return allowed;
        };
        std::vector<int> src_a, src_b;
        for (int v = 0; v < amb.vertex_count; ++v) {
            if (cls[v] == Region::AHat) src_a.push_back(v);
            if (cls[v] == Region::BHat) src_b.push_back(v);
        }

        std::vector<int> parent;
        auto du = detail::restricted_bfs(adj, allowed_for(Region::USide), src_a, &parent);
        int b1 = -1;
        for (int v = 0; v < amb.vertex_count; ++v)
            if (cls[v] == Region::BHat && du[v] != detail::kUnreached &&
                (b1 < 0 || du[v] < du[b1]))
                b1 = v;
        if (b1 < 0) throw DisconnectedSideError("no A->B path through U");
        std::vector<int> p1 = detail::backtrack_path(parent, b1);  // a1 ... b1

        // restrict the V-side return to the B_hat component of b1
        auto hb = hat_only(Region::BHat);
        std::vector<int> bparent;
        auto db_skel = detail::restricted_bfs(adj, hb, {b1}, &bparent);
        std::vector<int> src_b1;
        for (int v = 0; v < amb.vertex_count; ++v)
            if (db_skel[v] != detail::kUnreached) src_b1.push_back(v);

        auto dv = detail::restricted_bfs(adj, allowed_for(Region::VSide), src_b1, &parent);
        int a2 = -1;
        for (int v = 0; v < amb.vertex_count; ++v)
            if (cls[v] == Region::AHat && dv[v] != detail::kUnreached &&
                (a2 < 0 || dv[v] < dv[a2]))
                a2 = v;
        if (a2 < 0) throw DisconnectedSideError("no B->A path through V");
        std::vector<int> p2 = detail::backtrack_path(parent, a2);  // b2 ... a2
        int b2 = p2.front();

        std::vector<int> conn_b = detail::backtrack_path(bparent, b2);  // b1 ... b2
        auto ha = hat_only(Region::AHat);
        std::vector<int> aparent;
        auto da_skel = detail::restricted_bfs(adj, ha, {a2}, &aparent);
        int a1 = p1.front();
        if (da_skel[a1] == detail::kUnreached)
            throw DisconnectedSideError("A_hat skeleton is not connected");
        std::vector<int> conn_a = detail::backtrack_path(aparent, a1);  // a2 ... a1

        std::vector<int> walk;
        auto extend = [&](const std::vector<int>& part) {
            for (int v : part) {
                if (!walk.empty() && walk.back() == v) continue;
                walk.push_back(v);
            }
        };
        extend(p1);
        extend(conn_b);
        extend(p2);
        extend(conn_a);
        if (walk.front() != walk.back()) throw Error("gamma walk is not closed");

        R.loop.assign(amb.count(1), 0);
        R.crossing_count = 0;
        for (size_t i = 0; i + 1 < walk.size(); ++i) {
            int x = walk[i], y = walk[i + 1];
            int e = amb.edge_pos(x, y);
            if (e < 0) throw Error("gamma step is not an edge");
            R.loop[e] += (x < y) ? 1 : -1;
            if (cls[x] == Region::VSide && cls[y] == Region::AHat) R.crossing_count += 1;
            if (cls[x] == Region::AHat && cls[y] == Region::VSide) R.crossing_count -= 1;
        }
        if (!is_cycle(amb, R.loop)) throw Error("gamma is not a cycle");

        R.pairing_value = 0;
        for (int e = 0; e < amb.count(1); ++e)
            R.pairing_value += R.winding_ambient[e] * R.loop[e];
        // orient gamma so the pairing is positive
        if (R.pairing_value < 0) {
            for (auto& c : R.loop) c = -c;
            R.pairing_value = -R.pairing_value;
            R.crossing_count = -R.crossing_count;
        }
    }

    R.winding_cocycle = T.tower.transport_cochain_down(R.winding_ambient, 0);
    R.tower = std::move(T.tower);
    return R;
}

/**
 * Bundle a CircleMapResult into a certificate. The winding class must be
 * non-cobounding; a cobounding winding cocycle contradicts the construction
 * and aborts loudly.
 */
inline WitnessCertificate certify_nontrivial(const CircleMapResult& R) {
    const SimplicialComplex& base = R.tower.base();
    IntegerCochain z;
    z.values = R.winding_cocycle;
    if (!is_cocycle(base, z))
        throw NotACocycleError("winding cocycle fails the cocycle condition");
    if (is_coboundary(base, z))
        throw CoboundaryContradictionError(
            "winding cocycle is a coboundary; the construction is contradicted");
    if (R.pairing_value == 0)
        throw CoboundaryContradictionError("gamma pairing vanished");

    WitnessCertificate W;
    W.base_hash = complex_hash(base);
    W.base_facets = base.facets;
    W.subdivision_level = R.domain_level;
    W.domain_facets = R.domain_facets;

    Domain D = make_domain(R.tower.level(R.domain_level), R.domain_facets);
    CutReport cr = cut_report(D);
    W.domain_connected = cr.domain_connected;
    W.boundary_components = cr.boundary.component_count;
    W.complement_connected = cr.complement_connected;
    W.cuts = cr.cuts;

    W.cocycle = R.winding_cocycle;
    for (const auto& c : cycle_basis(base)) {
        Int p = pairing(base, z, c);
        if (p != 0) {
            W.loop = c;
            W.pairing_value = p;
            break;
        }
    }
    if (!W.loop)
        throw CoboundaryContradictionError(
            "winding cocycle pairs to zero with every fundamental cycle");
    W.construction_log.push_back("circle map: pairing " + R.pairing_value.str() +
                                 ", crossings " + R.crossing_count.str());
    return W;
}

inline json circle_map_result_to_json(const CircleMapResult& R) {
    auto rat = [](const Rational& q) {
        return numerator(q).str() + "/" + denominator(q).str();
    };
    json j;
    j["ambient_facets"] = R.tower.top().facets.size();
    j["subdivisions_used"] = R.subdivisions_used;
    json vv = json::array();
    for (const auto& q : R.vertex_values) vv.push_back(rat(q));
    j["vertex_values"] = vv;
    json lc = json::array();
    for (const auto& q : R.lift_cochain) lc.push_back(rat(q));
    j["lift_cochain"] = lc;
    j["winding_cocycle"] = detail::int_vector_to_json(R.winding_cocycle);
    j["loop"] = detail::int_vector_to_json(R.loop);
    j["pairing_value"] = static_cast<long long>(R.pairing_value);
    j["crossing_count"] = static_cast<long long>(R.crossing_count);
    return j;
}

}  // namespace cutcert

#endif  // CUTCERT_CIRCLE_MAP_HPP
