#pragma once

#include <optional>
#include <vector>

#include "central.hpp"
#include "distance.hpp"
#include "jacobi.hpp"
#include "rational.hpp"

namespace eccs {

// Eccentricity matrix: entry (i,j) keeps the distance d(i,j) iff it equals
// min(e(i), e(j)), else 0. Defined for connected graphs. For n >= 2 every row
// has a nonzero entry (each vertex has an eccentric partner of no smaller
// eccentricity).
struct EccMatrix {
    int n = 0;
    std::vector<int> m;  // flat row-major, integer entries
    std::vector<long long> row_sums;
    EccentricityVector ecc;

    int at(int i, int j) const { return m[static_cast<size_t>(i) * n + j]; }

    SymMatrix to_sym() const {
        SymMatrix s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) s.set(i, j, at(i, j));
        return s;
    }
};

inline EccMatrix eccentricity_matrix(const Graph& g) {
    auto dm = all_pairs_distances(g);  // throws Disconnected
    EccMatrix em;
    em.n = g.order();
    em.ecc = eccentricities(dm);
    em.m.assign(static_cast<size_t>(em.n) * em.n, 0);
    em.row_sums.assign(em.n, 0);
    for (int i = 0; i < em.n; ++i) {
        for (int j = 0; j < em.n; ++j) {
            if (i != j && dm.at(i, j) == std::min(em.ecc[i], em.ecc[j])) {
                em.m[static_cast<size_t>(i) * em.n + j] = dm.at(i, j);
                em.row_sums[i] += dm.at(i, j);
            }
        }
    }
    return em;
}

// Eccentricity-based Wiener index: half the sum of all matrix entries, exact.
inline Rational ecc_wiener(const EccMatrix& em) {
    long long total = 0;
    for (long long r : em.row_sums) total += r;
    return Rational(total, 2);
}

inline Rational ecc_wiener(const Graph& g) { return ecc_wiener(eccentricity_matrix(g)); }

// Common row sum when all rows agree, otherwise empty.
inline std::optional<long long> ecc_regular_value(const EccMatrix& em) {
    for (int i = 1; i < em.n; ++i)
        if (em.row_sums[i] != em.row_sums[0]) return std::nullopt;
    return em.row_sums[0];
}

inline bool is_ecc_regular(const EccMatrix& em) { return ecc_regular_value(em).has_value(); }
inline bool is_ecc_regular(const Graph& g) {
    return is_ecc_regular(eccentricity_matrix(g));
}

// Irreducibility of the eccentricity matrix == connectivity of the eccentric
// graph (for symmetric matrices, reducible means block-decomposable, i.e. the
// support graph is disconnected).
inline bool is_irreducible(const Graph& g) {
    return is_connected(eccentric_graph(g));
}

inline Spectrum ecc_spectrum(const EccMatrix& em, double tol = 1e-12) {
    return eig_sym(em.to_sym(), tol);
}

inline Spectrum ecc_spectrum(const Graph& g, double tol = 1e-12) {
    return ecc_spectrum(eccentricity_matrix(g), tol);
}

inline double ecc_energy(const Graph& g) { return energy(ecc_spectrum(g)); }
inline double ecc_spectral_radius(const Graph& g) { return spectral_radius(ecc_spectrum(g)); }
inline Inertia ecc_inertia(const Graph& g) { return inertia(ecc_spectrum(g)); }

}  // namespace eccs
