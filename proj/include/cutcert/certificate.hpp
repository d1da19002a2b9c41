/**
 * Witness certificates: the unit of proof this library emits.
 *
 * A certificate names a base complex (by facets and hash), a working
 * complex (an iterated barycentric subdivision of the base), a domain on
 * the working complex, and the three cutting verdicts. Optionally it
 * carries an integer 1-cocycle on the base, a 1-cycle, and their pairing
 * value as evidence that H^1 is nontrivial. verify_certificate re-derives
 * every claim from scratch.
 */

#ifndef CUTCERT_CERTIFICATE_HPP
#define CUTCERT_CERTIFICATE_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cutcert/domain.hpp"
#include "cutcert/homology.hpp"
#include "cutcert/tower.hpp"

namespace cutcert {

using json = nlohmann::ordered_json;

struct WitnessCertificate {
    std::string base_hash;
    std::vector<Simplex> base_facets;
    int subdivision_level = 0;      // working complex = Sd^level(base)
    std::vector<int> domain_facets;  // F, sorted indices into the working complex

    bool domain_connected = false;
    int boundary_components = 0;
    bool complement_connected = false;
    bool cuts = false;

    std::optional<std::vector<Int>> cocycle;  // on the base, canonical edge order
    std::optional<std::vector<Int>> loop;     // 1-cycle on the base
    std::optional<Int> pairing_value;

    std::vector<std::string> construction_log;
};

namespace detail {

inline json int_vector_to_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(static_cast<long long>(x));
    return arr;
}

inline std::vector<Int> int_vector_from_json(const json& arr) {
    std::vector<Int> out;
    for (const auto& x : arr) out.push_back(Int(x.get<long long>()));
    return out;
}

}  // namespace detail

inline json certificate_to_json(const WitnessCertificate& W) {
    json j;
    j["base_hash"] = W.base_hash;
    j["base_facets"] = W.base_facets;
    j["subdivision_level"] = W.subdivision_level;
    j["domain_facets"] = W.domain_facets;
    j["domain_connected"] = W.domain_connected;
    j["boundary_components"] = W.boundary_components;
    j["complement_connected"] = W.complement_connected;
    j["cuts"] = W.cuts;
    if (W.cocycle) j["cocycle"] = detail::int_vector_to_json(*W.cocycle);
    if (W.loop) j["loop"] = detail::int_vector_to_json(*W.loop);
    if (W.pairing_value) j["pairing_value"] = static_cast<long long>(*W.pairing_value);
    j["construction_log"] = W.construction_log;
    return j;
}

inline WitnessCertificate certificate_from_json(const json& j) {
    WitnessCertificate W;
    W.base_hash = j.at("base_hash").get<std::string>();
    W.base_facets = j.at("base_facets").get<std::vector<Simplex>>();
    W.subdivision_level = j.at("subdivision_level").get<int>();
    W.domain_facets = j.at("domain_facets").get<std::vector<int>>();
    W.domain_connected = j.at("domain_connected").get<bool>();
    W.boundary_components = j.at("boundary_components").get<int>();
    W.complement_connected = j.at("complement_connected").get<bool>();
    W.cuts = j.at("cuts").get<bool>();
    if (j.contains("cocycle")) W.cocycle = detail::int_vector_from_json(j["cocycle"]);
    if (j.contains("loop")) W.loop = detail::int_vector_from_json(j["loop"]);
    if (j.contains("pairing_value")) W.pairing_value = Int(j["pairing_value"].get<long long>());
    if (j.contains("construction_log"))
        W.construction_log = j["construction_log"].get<std::vector<std::string>>();
    return W;
}

/**
 * Re-derive every claim of a certificate. True iff the base complex matches
 * its hash, the working complex is reproduced by subdividing, the cutting
 * verdicts all match a fresh cut_report, the verdicts form a genuine
 * witness (connected domain, disconnected boundary, non-cutting), and any
 * attached cocycle is a non-cobounding cocycle with the stated pairing.
 */
inline bool verify_certificate(const WitnessCertificate& W) {
    try {
        SimplicialComplex base = build_complex(W.base_facets);
        if (complex_hash(base) != W.base_hash) return false;

        SubdivisionTower tower(std::move(base));
        for (int i = 0; i < W.subdivision_level; ++i) tower.push();
        const SimplicialComplex& work = tower.top();

        Domain D = make_domain(work, W.domain_facets);
        CutReport cr = cut_report(D);
        if (cr.domain_connected != W.domain_connected) return false;
        if (cr.boundary.component_count != W.boundary_components) return false;
        if (cr.complement_connected != W.complement_connected) return false;
        if (cr.cuts != W.cuts) return false;
        // a witness must be a connected non-cutting domain with split boundary
        if (!cr.domain_connected || cr.boundary.component_count < 2 || cr.cuts) return false;

        if (W.cocycle) {
            IntegerCochain z;
            z.values = *W.cocycle;
            if (!is_cocycle(tower.base(), z)) return false;
            if (is_coboundary(tower.base(), z)) return false;
            if (W.loop && W.pairing_value) {
                if (!is_cycle(tower.base(), *W.loop)) return false;
                if (pairing(tower.base(), z, *W.loop) != *W.pairing_value) return false;
                if (*W.pairing_value == 0) return false;
            }
        }
        return true;
    } catch (const Error&) {
        return false;
    } catch (const std::exception&) {
        return false;
    }
}

// -------------------------------------------------------------------------
// Theorem consistency check
// -------------------------------------------------------------------------

struct TheoremReport {
    bool h1_trivial = false;
    long long candidates_tested = 0;
    bool exhaustive = false;  // false means the budget truncated the search
    std::vector<WitnessCertificate> non_cutting_witnesses;
    bool consistent = false;  // h1_trivial implies no witness found
};

/**
 * Scan domains up to the budget and test the universal direction of the
 * equivalence: if H^1 is trivial, no connected domain with disconnected
 * boundary may fail to cut. Non-cutting witnesses found on a complex with
 * nontrivial H^1 are the expected outcome and are reported as certificates.
 */
inline TheoremReport theorem_check(const SimplicialComplex& K, int max_facets) {
    ValidationReport v = validate(K);
    if (!v.is_connected || !v.is_pseudomanifold || !v.closed())
        throw Error("theorem_check: complex is not a closed connected pseudomanifold");

    TheoremReport r;
    r.h1_trivial = homology_summary(K).h1_trivial;
    std::string hash = complex_hash(K);

    EnumStats stats =
        enumerate_candidates(K, max_facets, [&](const Domain& D, const CutReport& cr) {
            if (!cr.cuts) {
                WitnessCertificate W;
                W.base_hash = hash;
                W.base_facets = K.facets;
                W.subdivision_level = 0;
                W.domain_facets = D.facet_set;
                W.domain_connected = cr.domain_connected;
                W.boundary_components = cr.boundary.component_count;
                W.complement_connected = cr.complement_connected;
                W.cuts = cr.cuts;
                r.non_cutting_witnesses.push_back(std::move(W));
            }
            return true;
        });
    r.candidates_tested = stats.visited;
    r.exhaustive = stats.exhaustive;
    r.consistent = !(r.h1_trivial && !r.non_cutting_witnesses.empty());
    return r;
}

inline json theorem_report_to_json(const TheoremReport& r, bool include_witnesses = true) {
    json j;
    j["h1_trivial"] = r.h1_trivial;
    j["candidates_tested"] = r.candidates_tested;
    j["exhaustive"] = r.exhaustive;
    j["witness_count"] = r.non_cutting_witnesses.size();
    j["consistent"] = r.consistent;
    if (include_witnesses) {
        json arr = json::array();
        for (const auto& w : r.non_cutting_witnesses) arr.push_back(certificate_to_json(w));
        j["non_cutting_witnesses"] = arr;
    }
    return j;
}

}  // namespace cutcert

#endif  // CUTCERT_CERTIFICATE_HPP
