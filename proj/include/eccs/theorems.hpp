#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "central.hpp"
#include "ecc.hpp"
#include "line_graph.hpp"
#include "predicates.hpp"
#include "quotient.hpp"
#include "rational.hpp"

namespace eccs {

// Closed-form eigenvalue with its multiplicity and the family it came from
// ("constant", "pair+", "quotient-", ...). Families matter for the inertia
// sign checks.
struct PredictedEntry {
    double value = 0.0;
    int multiplicity = 1;
    std::string source;
};

// A complete predicted spectrum plus a consistency measure: when a result is
// stated through two redundant parameterizations, `cross_check` records the
// worst disagreement between them.
class PredictedSpectrum {
public:
    PredictedSpectrum() = default;
    explicit PredictedSpectrum(std::vector<PredictedEntry> entries)
        : entries_(std::move(entries)) {}

    const std::vector<PredictedEntry>& entries() const { return entries_; }

    int total() const {
        int t = 0;
        for (const auto& e : entries_) t += e.multiplicity;
        return t;
    }

    std::vector<double> values() const {
        std::vector<double> v;
        v.reserve(total());
        for (const auto& e : entries_)
            for (int k = 0; k < e.multiplicity; ++k) v.push_back(e.value);
        std::sort(v.begin(), v.end(), std::greater<double>());
        return v;
    }

    Spectrum to_spectrum() const { return Spectrum(values()); }

    double cross_check = 0.0;

private:
    std::vector<PredictedEntry> entries_;
};

// Largest absolute gap between a prediction and a computed spectrum, matched
// in sorted order. Sizes must agree.
inline double max_deviation(const PredictedSpectrum& pred, const Spectrum& got) {
    return spectra_distance(pred.to_spectrum(), got);
}

namespace detail {

inline void hyp(bool ok, const std::string& what) {
    if (!ok) throw HypothesisFailed(what);
}

inline int require_regular(const Graph& g, const std::string& who) {
    auto r = regular_degree(g);
    hyp(r.has_value(), who + " is regular");
    return *r;
}

inline std::vector<double> adjacency_eigs(const Graph& g) {
    return eig_sym(adjacency_matrix(g)).values();
}

// Eigenvalue pair attached to each non-principal adjacency eigenvalue of the
// base graph in the central construction and the central vertex join:
//   (3 - (3r + lam) +- sqrt(D)) / 2,  D = (5 lam + 3(r-1))^2 + 16(lam + r).
// `cross` accumulates the disagreement with the proof-side parameterization
//   2(lam+r) t^2 - (5 lam + 3(r-1)) t - 2 = 0,  mu = 2 lam - 2 t (lam + r),
// whose +sqrt root maps onto the -sqrt eigenvalue and vice versa.
inline void central_pair_entries(const std::vector<double>& lam, int r,
                                 std::vector<PredictedEntry>& out, double& cross) {
    for (size_t i = 1; i < lam.size(); ++i) {
        const double l = lam[i];
        const double disc = (5 * l + 3 * (r - 1)) * (5 * l + 3 * (r - 1)) + 16 * (l + r);
        const double sd = std::sqrt(std::max(0.0, disc));
        const double plus = (3 - (3 * r + l) + sd) / 2;
        const double minus = (3 - (3 * r + l) - sd) / 2;
        out.push_back({plus, 1, "pair+"});
        out.push_back({minus, 1, "pair-"});

        const double a = 2 * (l + r), b = -(5 * l + 3 * (r - 1)), c = -2;
        if (std::abs(a) > 1e-9) {
            const double q = std::sqrt(std::max(0.0, b * b - 4 * a * c));
            const double t_hi = (-b + q) / (2 * a);
            const double t_lo = (-b - q) / (2 * a);
            const double mu_hi = 2 * l - 2 * t_hi * (l + r);
            const double mu_lo = 2 * l - 2 * t_lo * (l + r);
            cross = std::max({cross, std::abs(mu_hi - minus), std::abs(mu_lo - plus)});
        } else {
            // lam = -r: the quadratic degenerates to a single root; its image
            // must hit the -sqrt eigenvalue (the +sqrt one becomes the
            // constant 3, already covered by the constant family).
            const double t = -c / b;
            cross = std::max(cross, std::abs(2 * l - 2 * t * (l + r) - minus));
        }
    }
}

// Eigenvalue pair for the central edge join and the vertex-edge join:
//   (lam - 1) +- sqrt((lam + 1)^2 + 4(lam + r)),
// proof-side parameterization (lam+r) t^2 - (lam+1) t - 1 = 0 with the same
// substitution and branch swap.
inline void edge_pair_entries(const std::vector<double>& lam, int r,
                              std::vector<PredictedEntry>& out, double& cross) {
    for (size_t i = 1; i < lam.size(); ++i) {
        const double l = lam[i];
        const double sd = std::sqrt(std::max(0.0, (l + 1) * (l + 1) + 4 * (l + r)));
        const double plus = (l - 1) + sd;
        const double minus = (l - 1) - sd;
        out.push_back({plus, 1, "pair+"});
        out.push_back({minus, 1, "pair-"});

        const double a = l + r, b = -(l + 1), c = -1;
        if (std::abs(a) > 1e-9) {
            const double q = std::sqrt(std::max(0.0, b * b - 4 * a * c));
            const double t_hi = (-b + q) / (2 * a);
            const double t_lo = (-b - q) / (2 * a);
            cross = std::max({cross, std::abs(2 * l - 2 * t_hi * a - minus),
                              std::abs(2 * l - 2 * t_lo * a - plus)});
        } else {
            const double t = -c / b;
            cross = std::max(cross, std::abs(2 * l - 2 * t * a - minus));
        }
    }
}

// Appends the eigenvalues of an equitable-quotient matrix (given with its
// part sizes) as closed-form entries tagged quotient+/-/0 by sign order.
inline void quotient_entries(const std::vector<std::vector<double>>& q,
                             const std::vector<int>& sizes,
                             std::vector<PredictedEntry>& out) {
    const Spectrum s = quotient_eigenvalues(q, sizes);
    const auto& v = s.values();
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back({v[i], 1, i == 0 ? "quotient+" : (i + 1 == v.size() ? "quotient-" : "quotient")});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Regular-graph lemmas
// ---------------------------------------------------------------------------

// Adjacency spectrum of the line graph of a connected r-regular graph
// (r >= 2): {2r-2} u {lam_i + r - 2 : i >= 2} u {-2 with multiplicity q-p}.
inline PredictedSpectrum lemma_line_graph_spectrum(const Graph& g) {
    detail::hyp(is_connected(g), "G is connected");
    const int r = detail::require_regular(g, "G");
    detail::hyp(r >= 2, "G is regular of degree at least 2");
    const int p = g.order();
    const int q = g.size();
    const auto lam = detail::adjacency_eigs(g);
    std::vector<PredictedEntry> e;
    e.push_back({2.0 * r - 2, 1, "principal"});
    for (size_t i = 1; i < lam.size(); ++i) e.push_back({lam[i] + r - 2, 1, "shifted"});
    if (q > p) e.push_back({-2.0, q - p, "kernel"});
    return PredictedSpectrum(std::move(e));
}

// Eccentricity spectrum of an r-regular self-centered graph of diameter 2:
// eps = 2(J - I - A), so {2(p-r-1)} u {-2(1+lam_i) : i >= 2}.
inline PredictedSpectrum lemma_diam2_spectrum(const Graph& g) {
    detail::hyp(is_connected(g), "G is connected");
    const int r = detail::require_regular(g, "G");
    const EccentricityVector ev = eccentricities(g);
    detail::hyp(diameter(ev) == 2, "G has diameter 2");
    detail::hyp(radius(ev) == 2, "every eccentricity of G exceeds 1");
    const int p = g.order();
    const auto lam = detail::adjacency_eigs(g);
    std::vector<PredictedEntry> e;
    e.push_back({2.0 * (p - r - 1), 1, "principal"});
    for (size_t i = 1; i < lam.size(); ++i) e.push_back({-2 * (1 + lam[i]), 1, "shifted"});
    return PredictedSpectrum(std::move(e));
}

// Adjacency spectrum of the central graph of a connected r-regular graph
// (r >= 2): {0 x(q-p)} u {((p-1-r) +- sqrt((p-1-r)^2 + 8r))/2}
//           u {(-(1+lam_i) +- sqrt((1+lam_i)^2 + 4(lam_i+r)))/2 : i >= 2}.
inline PredictedSpectrum lemma_central_adjacency_spectrum(const Graph& g) {
    detail::hyp(is_connected(g), "G is connected");
    const int r = detail::require_regular(g, "G");
    detail::hyp(r >= 2, "G is regular of degree at least 2");
    const int p = g.order();
    const int q = g.size();
    const auto lam = detail::adjacency_eigs(g);
    std::vector<PredictedEntry> e;
    if (q > p) e.push_back({0.0, q - p, "kernel"});
    {
        const double b = p - 1.0 - r;
        const double sd = std::sqrt(b * b + 8.0 * r);
        e.push_back({(b + sd) / 2, 1, "principal+"});
        e.push_back({(b - sd) / 2, 1, "principal-"});
    }
    for (size_t i = 1; i < lam.size(); ++i) {
        const double l = lam[i];
        const double sd = std::sqrt(std::max(0.0, (1 + l) * (1 + l) + 4 * (l + r)));
        e.push_back({(-(1 + l) + sd) / 2, 1, "pair+"});
        e.push_back({(-(1 + l) - sd) / 2, 1, "pair-"});
    }
    return PredictedSpectrum(std::move(e));
}

// ---------------------------------------------------------------------------
// Central graph: eccentricity spectrum and its corollaries
// ---------------------------------------------------------------------------

namespace detail {

// Shared gate for every central-graph eccentricity result.
inline int require_central_hypotheses(const Graph& g) {
    hyp(is_connected(g), "G is connected");
    const int r = require_regular(g, "G");
    hyp(r >= 2, "G is regular of degree at least 2");
    hyp(is_triangle_free(g), "G is triangle-free");
    return r;
}

}  // namespace detail

// Eccentricity spectrum of C[G] for connected triangle-free r-regular G
// (r >= 2): the constant family {3 x(q-p)}, one pair per non-principal
// adjacency eigenvalue, and the pair from the 2x2 equitable quotient
// [[2r, 2(q-r)], [2(p-2), 3(q-2r+1)]] over (originals, subdivisions).
inline PredictedSpectrum thm_central_spectrum(const Graph& g) {
    const int r = detail::require_central_hypotheses(g);
    const int p = g.order();
    const long long q = g.size();
    const auto lam = detail::adjacency_eigs(g);

    std::vector<PredictedEntry> e;
    double cross = 0.0;
    if (q > p) e.push_back({3.0, static_cast<int>(q - p), "constant"});
    detail::central_pair_entries(lam, r, e, cross);

    // The quotient pair is also printed in closed form; check the two against
    // each other.
    const double base = 3.0 * q - 4 * r + 3;
    const double disc = (3.0 * q - 8 * r + 3) * (3.0 * q - 8 * r + 3) +
                        16.0 * (p - 2) * (q - r);
    const double sd = std::sqrt(std::max(0.0, disc));
    std::vector<PredictedEntry> qe;
    detail::quotient_entries({{2.0 * r, 2.0 * (q - r)}, {2.0 * (p - 2), 3.0 * (q - 2 * r + 1)}},
                             {p, static_cast<int>(q)}, qe);
    cross = std::max({cross, std::abs(qe.front().value - (base + sd) / 2),
                      std::abs(qe.back().value - (base - sd) / 2)});
    e.push_back({(base + sd) / 2, 1, "quotient+"});
    e.push_back({(base - sd) / 2, 1, "quotient-"});

    PredictedSpectrum out(std::move(e));
    out.cross_check = cross;
    return out;
}

// Eccentricity spectral radius of C[G], the +sqrt quotient eigenvalue.
inline double cor_central_radius(const Graph& g) {
    const int r = detail::require_central_hypotheses(g);
    const int p = g.order();
    const long long q = g.size();
    const double disc = (3.0 * q - 8 * r + 3) * (3.0 * q - 8 * r + 3) +
                        16.0 * (p - 2) * (q - r);
    return (3.0 * q - 4 * r + 3 + std::sqrt(std::max(0.0, disc))) / 2;
}

// Stated inertia of eps(C[G]): q positive, p negative, no zero eigenvalues.
inline Inertia cor_central_inertia(const Graph& g) {
    detail::require_central_hypotheses(g);
    return Inertia{g.size(), g.order(), 0};
}

// The stated inertia presumes every +-pair straddles zero. That holds for
// r <= 3 but can fail from degree 4 on; this reports whether it holds here.
inline bool central_inertia_sign_ok(const Graph& g, double margin = 1e-9) {
    const PredictedSpectrum ps = thm_central_spectrum(g);
    for (const auto& e : ps.entries()) {
        if (e.source == "pair+" || e.source == "quotient+") {
            if (!(e.value > margin)) return false;
        } else if (e.source == "pair-" || e.source == "quotient-") {
            if (!(e.value < -margin)) return false;
        }
    }
    return true;
}

// Closed-form eccentricity energy of C[G]:
//   3(q-p) + sqrt((3q-8r+3)^2 + 16(p-2)(q-r)) + sum_i sqrt(D_i).
// Valid only under the same straddling assumption; refuses otherwise.
inline double cor_central_energy(const Graph& g) {
    const int r = detail::require_central_hypotheses(g);
    detail::hyp(central_inertia_sign_ok(g),
                "every eigenvalue pair straddles zero (energy closed form)");
    const int p = g.order();
    const long long q = g.size();
    const auto lam = detail::adjacency_eigs(g);
    double e = 3.0 * (q - p);
    e += std::sqrt(std::max(0.0, (3.0 * q - 8 * r + 3) * (3.0 * q - 8 * r + 3) +
                                     16.0 * (p - 2) * (q - r)));
    for (size_t i = 1; i < lam.size(); ++i) {
        const double l = lam[i];
        e += std::sqrt(std::max(0.0, (5 * l + 3 * (r - 1)) * (5 * l + 3 * (r - 1)) +
                                         16 * (l + r)));
    }
    return e;
}

// Complement of the central graph: when it is connected and self-centered of
// diameter 2, eps = 2 A(C[G]), so energy and inertia follow from the central
// adjacency spectrum. The plain inertia form (p, p, q-p) fails for bipartite
// inputs, where one closed-form adjacency eigenvalue lands on zero;
// `plain_inertia_valid` records whether it applies.
struct ComplementCentralPrediction {
    Inertia inertia;
    bool plain_inertia_valid = false;
    double energy = 0.0;
};

inline ComplementCentralPrediction cor_complement_central(const Graph& g, double margin = 1e-9) {
    detail::hyp(is_connected(g), "G is connected");
    const int r = detail::require_regular(g, "G");
    detail::hyp(r >= 2, "G is regular of degree at least 2");
    const Graph cc = complement(central(g).graph);
    detail::hyp(is_connected(cc), "complement of the central graph is connected");
    const EccentricityVector ev = eccentricities(cc);
    detail::hyp(radius(ev) == 2 && diameter(ev) == 2,
                "complement of the central graph is self-centered of diameter 2");

    const PredictedSpectrum adj = lemma_central_adjacency_spectrum(g);
    ComplementCentralPrediction out;
    out.inertia = Inertia{0, 0, 0};
    for (const auto& e : adj.entries()) {
        out.energy += 2.0 * std::abs(e.value) * e.multiplicity;
        if (e.value > margin)
            out.inertia.positive += e.multiplicity;
        else if (e.value < -margin)
            out.inertia.negative += e.multiplicity;
        else
            out.inertia.zero += e.multiplicity;
    }
    const int p = g.order();
    const int q = g.size();
    out.plain_inertia_valid = out.inertia == Inertia{p, p, q - p};
    return out;
}

// Irreducibility of eps(C[G]). Case 1: G triangle-free. Case 2: G has
// triangles but some vertex lies on none. No claim otherwise.
struct CentralIrreducibility {
    int case_id = 0;  // 1 or 2
};

inline CentralIrreducibility thm_central_irreducible(const Graph& g) {
    detail::hyp(is_connected(g), "G is connected");
    detail::hyp(g.size() >= 1, "G has an edge");
    if (is_triangle_free(g)) return {1};
    const int n = g.order();
    std::vector<char> on_triangle(n, 0);
    for (const auto& [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w != v && g.adjacent(w, v)) {
                on_triangle[u] = on_triangle[v] = on_triangle[w] = 1;
            }
    for (int v = 0; v < n; ++v)
        if (!on_triangle[v]) return {2};
    throw Inapplicable("every vertex of G lies on a triangle; no irreducibility claim");
}

// ---------------------------------------------------------------------------
// Central joins
// ---------------------------------------------------------------------------

namespace detail {

struct JoinBase {
    int p1, q1, r1;
    std::vector<double> lam;
};

// Gate shared by all central-join results: the subdivided operand must be
// connected, triangle-free and r-regular with r >= 2.
inline JoinBase join_base(const Graph& g1) {
    hyp(is_connected(g1), "G1 is connected");
    const int r1 = require_regular(g1, "G1");
    hyp(r1 >= 2, "G1 is regular of degree at least 2");
    hyp(is_triangle_free(g1), "G1 is triangle-free");
    return {g1.order(), g1.size(), r1, adjacency_eigs(g1)};
}

}  // namespace detail

inline void require_vertex_join_hypotheses(const Graph& g1, const Graph& g2) {
    detail::join_base(g1);
    detail::require_regular(g2, "G2");
}

inline void require_edge_join_hypotheses(const Graph& g1, const Graph& g2) {
    require_vertex_join_hypotheses(g1, g2);
}

inline void require_vertex_edge_join_hypotheses(const Graph& g1, const Graph& g2,
                                                const Graph& g3) {
    detail::join_base(g1);
    detail::require_regular(g2, "G2");
    detail::require_regular(g3, "G3");
}

// Eccentricity spectrum of the central vertex join C[G1] v G2 (G2 regular):
// constant family {3 x(q1-p1)}, {-2(1+beta_j) : j >= 2} from G2, the central
// pair family of G1, and a 3x3 equitable quotient.
inline PredictedSpectrum thm_vertex_join_spectrum(const Graph& g1, const Graph& g2) {
    const detail::JoinBase b = detail::join_base(g1);
    const int r2 = detail::require_regular(g2, "G2");
    const int p2 = g2.order();
    const auto beta = detail::adjacency_eigs(g2);

    std::vector<PredictedEntry> e;
    double cross = 0.0;
    if (b.q1 > b.p1) e.push_back({3.0, b.q1 - b.p1, "constant"});
    for (size_t j = 1; j < beta.size(); ++j)
        e.push_back({-2 * (1 + beta[j]), 1, "second-operand"});
    detail::central_pair_entries(b.lam, b.r1, e, cross);
    detail::quotient_entries(
        {{2.0 * b.r1, 2.0 * (b.q1 - b.r1), 0.0},
         {2.0 * (b.p1 - 2), 3.0 * (b.q1 - 2 * b.r1 + 1), 2.0 * p2},
         {0.0, 2.0 * b.q1, 2.0 * (p2 - 1 - r2)}},
        {b.p1, b.q1, p2}, e);

    PredictedSpectrum out(std::move(e));
    out.cross_check = cross;
    return out;
}

// W_eps of the central vertex join in terms of the parameters alone.
inline Rational vertex_join_wiener_formula(long long p1, long long q1, long long r1,
                                           long long p2, long long r2) {
    return Rational(2 * q1 * (p1 - 1)) + Rational(3 * q1 * (q1 - 2 * r1 + 1), 2) +
           Rational(p2 * (2 * q1 + p2 - r2 - 1));
}

inline Rational cor_vertex_join_wiener(const Graph& g1, const Graph& g2) {
    const detail::JoinBase b = detail::join_base(g1);
    const int r2 = detail::require_regular(g2, "G2");
    return vertex_join_wiener_formula(b.p1, b.q1, b.r1, g2.order(), r2);
}

// Strict lower bound rho_eps > 2 W_eps / n for the vertex join.
inline BoundReport cor_vertex_join_radius_bound(const Graph& g1, const Graph& g2,
                                                double tol = kBoundTol) {
    const Rational w = cor_vertex_join_wiener(g1, g2);
    const LabeledProduct prod = central_vertex_join(g1, g2);
    BoundReport r;
    r.id = "vertex-join-radius";
    r.applicable = true;
    r.strict = true;
    r.lhs = ecc_spectral_radius(prod.graph);
    r.rhs = (Rational(2) * w / Rational(prod.graph.order())).to_double();
    r.slack = r.lhs - r.rhs;
    detail::judge(r, tol);
    return r;
}

// Eccentricity spectrum of the central edge join C[G1] with G2 joined onto
// the subdivision vertices (G2 regular).
inline PredictedSpectrum thm_edge_join_spectrum(const Graph& g1, const Graph& g2) {
    const detail::JoinBase b = detail::join_base(g1);
    const int r2 = detail::require_regular(g2, "G2");
    const int p2 = g2.order();
    const auto beta = detail::adjacency_eigs(g2);

    std::vector<PredictedEntry> e;
    double cross = 0.0;
    if (b.q1 > b.p1) e.push_back({-2.0, b.q1 - b.p1, "constant"});
    for (size_t j = 1; j < beta.size(); ++j)
        e.push_back({-2 * (1 + beta[j]), 1, "second-operand"});
    detail::edge_pair_entries(b.lam, b.r1, e, cross);
    detail::quotient_entries(
        {{2.0 * b.r1, 2.0 * (b.q1 - b.r1), 2.0 * p2},
         {2.0 * (b.p1 - 2), 2.0 * (b.q1 - 1), 0.0},
         {2.0 * b.p1, 0.0, 2.0 * (p2 - 1 - r2)}},
        {b.p1, b.q1, p2}, e);

    PredictedSpectrum out(std::move(e));
    out.cross_check = cross;
    return out;
}

inline Rational edge_join_wiener_formula(long long p1, long long q1, long long p2,
                                         long long r2) {
    return Rational(q1 * (2 * p1 + q1 - 3)) + Rational(p2 * (2 * p1 + p2 - 1 - r2));
}

inline Rational cor_edge_join_wiener(const Graph& g1, const Graph& g2) {
    const detail::JoinBase b = detail::join_base(g1);
    const int r2 = detail::require_regular(g2, "G2");
    return edge_join_wiener_formula(b.p1, b.q1, g2.order(), r2);
}

inline BoundReport cor_edge_join_radius_bound(const Graph& g1, const Graph& g2,
                                              double tol = kBoundTol) {
    const Rational w = cor_edge_join_wiener(g1, g2);
    const LabeledProduct prod = central_edge_join(g1, g2);
    BoundReport r;
    r.id = "edge-join-radius";
    r.applicable = true;
    r.strict = true;
    r.lhs = ecc_spectral_radius(prod.graph);
    r.rhs = (Rational(2) * w / Rational(prod.graph.order())).to_double();
    r.slack = r.lhs - r.rhs;
    detail::judge(r, tol);
    return r;
}

// Eccentricity spectrum of the central vertex-edge join (G2 joined onto the
// original vertices, G3 onto the subdivision vertices; both regular). The
// matrix does not see the internal edges of G2 or G3 at all, so only their
// orders and degrees enter; the zero family has multiplicity p2 + p3 - 2.
inline PredictedSpectrum thm_vertex_edge_join_spectrum(const Graph& g1, const Graph& g2,
                                                       const Graph& g3) {
    const detail::JoinBase b = detail::join_base(g1);
    detail::require_regular(g2, "G2");  // stated hypothesis; degrees drop out
    detail::require_regular(g3, "G3");
    const int p2 = g2.order();
    const int p3 = g3.order();

    std::vector<PredictedEntry> e;
    double cross = 0.0;
    if (b.q1 > b.p1) e.push_back({-2.0, b.q1 - b.p1, "constant"});
    if (p2 + p3 > 2) e.push_back({0.0, p2 + p3 - 2, "kernel"});
    detail::edge_pair_entries(b.lam, b.r1, e, cross);
    detail::quotient_entries(
        {{2.0 * b.r1, 2.0 * (b.q1 - b.r1), 0.0, 2.0 * p3},
         {2.0 * (b.p1 - 2), 2.0 * (b.q1 - 1), 2.0 * p2, 0.0},
         {0.0, 2.0 * b.q1, 0.0, 3.0 * p3},
         {2.0 * b.p1, 0.0, 3.0 * p2, 0.0}},
        {b.p1, b.q1, p2, p3}, e);

    PredictedSpectrum out(std::move(e));
    out.cross_check = cross;
    return out;
}

// ---------------------------------------------------------------------------
// Line graphs: closed-form eccentricity energies
// ---------------------------------------------------------------------------

// E_eps(L(G)) = 4p(r-1) + 4(1-2r) for connected r-regular G on p >= 4
// vertices with no induced F1/F2/F3 and smallest adjacency eigenvalue
// >= 1 - r.
inline double thm_line_graph_energy(const Graph& g) {
    detail::hyp(is_connected(g), "G is connected");
    const int r = detail::require_regular(g, "G");
    const int p = g.order();
    detail::hyp(p >= 4, "G has at least 4 vertices");
    detail::hyp(!has_induced_forbidden(g), "G has no induced F1, F2 or F3");
    const auto lam = detail::adjacency_eigs(g);
    detail::hyp(lam.back() >= 1.0 - r - 1e-9,
                "smallest adjacency eigenvalue of G is at least 1-r");
    return 4.0 * p * (r - 1) + 4.0 * (1 - 2 * r);
}

// E_eps(complement of L(G)) = 4p(r-2) for connected r-regular G whose
// smallest adjacency eigenvalue is >= 2 - r and whose line graph has
// property (dagger); there eps = 2 A(L(G)).
inline double thm_complement_line_graph_energy(const Graph& g) {
    detail::hyp(is_connected(g), "G is connected");
    const int r = detail::require_regular(g, "G");
    detail::hyp(g.size() >= 1, "G has an edge");
    const auto lam = detail::adjacency_eigs(g);
    detail::hyp(lam.back() >= 2.0 - r - 1e-9,
                "smallest adjacency eigenvalue of G is at least 2-r");
    detail::hyp(has_property_dagger(line_graph(g)), "L(G) has property (dagger)");
    return 4.0 * g.order() * (r - 2);
}

}  // namespace eccs
