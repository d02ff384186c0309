#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "theorems.hpp"

namespace eccs {

// A pair of input graphs (by index) related through their spectra. Pairs
// whose members are provably isomorphic are filtered out; `isomorphism_checked`
// is false when the instances were too large to certify either way.
struct SearchPair {
    int i = 0;
    int j = 0;
    std::string kind;
    double spectral_gap = 0.0;  // L-infinity distance between the two spectra
    double energy_gap = 0.0;
    bool isomorphism_checked = false;
    bool isomorphic = false;
};

namespace detail {

inline bool check_isomorphic(const Graph& a, const Graph& b, bool& checked) {
    try {
        checked = true;
        return is_isomorphic(a, b);
    } catch (const SizeLimit&) {
        checked = false;
        return false;
    }
}

// Pairs with equal spectra (then non-isomorphic) or equal energy but
// different spectra, depending on `want_cospectral`.
inline std::vector<SearchPair> spectral_pairs(const std::vector<Graph>& gs,
                                              const std::vector<std::optional<Spectrum>>& spec,
                                              const std::string& kind, bool want_cospectral,
                                              double tol) {
    std::vector<SearchPair> out;
    for (size_t i = 0; i < gs.size(); ++i) {
        if (!spec[i]) continue;
        for (size_t j = i + 1; j < gs.size(); ++j) {
            if (!spec[j]) continue;
            if (spec[i]->size() != spec[j]->size()) continue;
            const bool cosp = spectra_equal(*spec[i], *spec[j], tol);
            SearchPair p;
            p.i = static_cast<int>(i);
            p.j = static_cast<int>(j);
            p.kind = kind;
            p.spectral_gap = spectra_distance(*spec[i], *spec[j]);
            p.energy_gap = std::abs(energy(*spec[i]) - energy(*spec[j]));
            if (want_cospectral) {
                if (!cosp) continue;
                p.isomorphic = check_isomorphic(gs[i], gs[j], p.isomorphism_checked);
                if (p.isomorphism_checked && p.isomorphic) continue;
            } else {
                if (cosp || p.energy_gap > tol) continue;
                // Different spectra already certify the graphs differ.
                p.isomorphism_checked = true;
                p.isomorphic = false;
            }
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace detail

// Eccentricity-cospectral, non-isomorphic pairs among the connected inputs.
inline std::vector<SearchPair> search_cospectral(const std::vector<Graph>& gs,
                                                 double tol = 1e-7) {
    std::vector<std::optional<Spectrum>> spec(gs.size());
    for (size_t i = 0; i < gs.size(); ++i)
        if (is_connected(gs[i])) spec[i] = ecc_spectrum(gs[i]);
    return detail::spectral_pairs(gs, spec, "eps-cospectral", true, tol);
}

// Equal eccentricity energy but different eccentricity spectra.
inline std::vector<SearchPair> search_equienergetic(const std::vector<Graph>& gs,
                                                    double tol = 1e-7) {
    std::vector<std::optional<Spectrum>> spec(gs.size());
    for (size_t i = 0; i < gs.size(); ++i)
        if (is_connected(gs[i])) spec[i] = ecc_spectrum(gs[i]);
    return detail::spectral_pairs(gs, spec, "eps-equienergetic", false, tol);
}

// Same as search_equienergetic but on the line graphs of the inputs; indices
// still refer to the input list.
inline std::vector<SearchPair> search_line_equienergetic(const std::vector<Graph>& gs,
                                                         double tol = 1e-7) {
    std::vector<std::optional<Spectrum>> spec(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) {
        if (!is_connected(gs[i]) || gs[i].size() == 0) continue;
        spec[i] = ecc_spectrum(line_graph(gs[i]));
    }
    return detail::spectral_pairs(gs, spec, "line-eps-equienergetic", false, tol);
}

// A certified pair of non-isomorphic regular seeds with equal adjacency
// spectra, together with the comparison of the central vertex joins they
// induce over a fixed base graph.
struct FamilySearchPair {
    int i = 0;
    int j = 0;
    double seed_gap = 0.0;  // adjacency spectral gap between the seeds
    double join_gap = 0.0;  // eccentricity spectral gap between the joins
    bool joins_isomorphism_checked = false;
    bool joins_isomorphic = false;
};

// Adjacency-cospectral non-isomorphic regular seed pairs produce
// eccentricity-cospectral central vertex joins over the same base. Returns
// every certified seed pair with the measured join gap; regular seeds only.
inline std::vector<FamilySearchPair> search_cvj_family(const Graph& base,
                                                       const std::vector<Graph>& seeds,
                                                       double tol = 1e-7) {
    detail::join_base(base);  // fail early if the base is out of scope
    std::vector<std::optional<Spectrum>> spec(seeds.size());
    for (size_t i = 0; i < seeds.size(); ++i)
        if (regular_degree(seeds[i])) spec[i] = eig_sym(adjacency_matrix(seeds[i]));

    std::vector<FamilySearchPair> out;
    for (size_t i = 0; i < seeds.size(); ++i) {
        if (!spec[i]) continue;
        for (size_t j = i + 1; j < seeds.size(); ++j) {
            if (!spec[j]) continue;
            if (spec[i]->size() != spec[j]->size()) continue;
            if (!spectra_equal(*spec[i], *spec[j], tol)) continue;
            bool checked = false;
            if (detail::check_isomorphic(seeds[i], seeds[j], checked) || !checked) continue;

            FamilySearchPair p;
            p.i = static_cast<int>(i);
            p.j = static_cast<int>(j);
            p.seed_gap = spectra_distance(*spec[i], *spec[j]);
            const Graph ji = central_vertex_join(base, seeds[i]).graph;
            const Graph jj = central_vertex_join(base, seeds[j]).graph;
            p.join_gap = spectra_distance(ecc_spectrum(ji), ecc_spectrum(jj));
            p.joins_isomorphic =
                detail::check_isomorphic(ji, jj, p.joins_isomorphism_checked);
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace eccs
