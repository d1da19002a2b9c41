/**
 * A chain of iterated barycentric subdivisions rooted at a base complex,
 * with the bookkeeping needed to move data between levels: facet ancestry,
 * vertex carriers, and the edge-subdivision chain map that transports
 * 1-cycles up and 1-cochains down.
 */

#ifndef CUTCERT_TOWER_HPP
#define CUTCERT_TOWER_HPP

#include <memory>
#include <vector>

#include "cutcert/complex.hpp"
#include "cutcert/matrix.hpp"

namespace cutcert {

class SubdivisionTower {
public:
    SubdivisionTower() = default;  // empty; only valid as a move target

    explicit SubdivisionTower(SimplicialComplex base) {
        levels_.push_back(std::make_unique<SimplicialComplex>(std::move(base)));
    }

    int height() const { return static_cast<int>(levels_.size()) - 1; }
    const SimplicialComplex& base() const { return *levels_.front(); }
    const SimplicialComplex& top() const { return *levels_.back(); }
    const SimplicialComplex& level(int i) const { return *levels_[i]; }

    void push() {
        Subdivision sd = barycentric_subdivision(top());
        facet_parents_.push_back(std::move(sd.facet_parent));
        edge_children_.push_back(std::move(sd.edge_children));
        levels_.push_back(std::make_unique<SimplicialComplex>(std::move(sd.complex)));
    }

    /** Facet index at `from_level` containing (the ancestry of) a top facet. */
    int facet_ancestor(int facet, int from_level) const {
        for (int l = height(); l > from_level; --l)
            facet = facet_parents_[l - 1][facet];
        return facet;
    }

    /**
     * Carrier of a vertex of level `at_level` down at `target_level`: the
     * simplex (global id) of the target level in whose open star the vertex
     * sits. A vertex label at level l is the global id of a level l-1
     * simplex; descending takes the top of each flag.
     */
    int vertex_carrier(int at_level, int vertex, int target_level) const {
        int level = at_level - 1;  // the label is a global id at this level
        int id = vertex;
        while (level > target_level) {
            // vertices of a subdivision simplex form a flag one level down;
            // the carrier is its top (largest-dimension) element
            const Simplex& flag = levels_[level]->simplex_by_id(id);
            const SimplicialComplex& below = *levels_[level - 1];
            int best = flag.front();
            int best_dim = -1;
            for (int v : flag) {
                int d = below.dim_of_id(v);
                if (d > best_dim) {
                    best_dim = d;
                    best = v;
                }
            }
            id = best;
            --level;
        }
        return id;
    }

    /** Transport a 1-cochain on the top complex down to `target_level`. */
    std::vector<Int> transport_cochain_down(std::vector<Int> z, int target_level) const {
        for (int l = height(); l > target_level; --l) {
            const auto& children = edge_children_[l - 1];
            std::vector<Int> out(children.size());
            for (size_t e = 0; e < children.size(); ++e)
                for (auto [pos, sign] : children[e]) out[e] += sign * z[pos];
            z = std::move(out);
        }
        return z;
    }

    /** Push a 1-chain at `from_level` up to the top via the subdivision chain map. */
    std::vector<Int> lift_chain_up(std::vector<Int> c, int from_level) const {
        for (int l = from_level; l < height(); ++l) {
            const auto& children = edge_children_[l];
            std::vector<Int> out(levels_[l + 1]->count(1));
            for (size_t e = 0; e < children.size(); ++e) {
                if (c[e] == 0) continue;
                for (auto [pos, sign] : children[e]) out[pos] += sign * c[e];
            }
            c = std::move(out);
        }
        return c;
    }

private:
    std::vector<std::unique_ptr<SimplicialComplex>> levels_;
    std::vector<std::vector<int>> facet_parents_;
    std::vector<std::vector<std::array<std::pair<int, int>, 2>>> edge_children_;
};

}  // namespace cutcert

#endif  // CUTCERT_TOWER_HPP
