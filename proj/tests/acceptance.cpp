// Acceptance gate: nine end-to-end criteria, one PASS/FAIL line each.
// Exit status is the number of failed criteria (0 = all green).
//
// Tolerances are pinned here on purpose; they are the contract, not knobs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eccs/bounds.hpp"
#include "eccs/central.hpp"
#include "eccs/ecc.hpp"
#include "eccs/enumerate.hpp"
#include "eccs/generators.hpp"
#include "eccs/graph6.hpp"
#include "eccs/jacobi.hpp"
#include "eccs/line_graph.hpp"
#include "eccs/predicates.hpp"
#include "eccs/search.hpp"
#include "eccs/spectrum.hpp"
#include "eccs/theorems.hpp"

namespace {

using namespace eccs;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Collects sub-checks; remembers only the first failure so the one-line
// verdict stays readable.
struct Criterion {
    bool ok = true;
    std::string why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }

    void near(double got, double want, double tol, const std::string& what) {
        if (std::fabs(got - want) > tol && ok) {
            ok = false;
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s: got %.12g, want %.12g (tol %.1g)", what.c_str(),
                          got, want, tol);
            why = buf;
        }
    }
};

int failures = 0;

template <typename Body>
void criterion(int idx, const char* title, Body body) {
    Criterion c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    if (c.ok) {
        std::printf("PASS criterion %d: %s\n", idx, title);
    } else {
        std::printf("FAIL criterion %d: %s (%s)\n", idx, title, c.why.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

// Independent connectivity probe of the eccentricity-matrix support graph,
// used to audit is_irreducible without sharing its code path.
bool support_connected(const EccMatrix& em) {
    if (em.n == 0) return false;
    std::vector<char> seen(em.n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < em.n; ++u)
            if (!seen[u] && em.at(v, u) != 0) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == em.n;
}

const BoundReport* find_report(const std::vector<BoundReport>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.id == id) return &r;
    return nullptr;
}

void criterion_1_petersen(Criterion& c) {
    Timer t;
    const Graph g = petersen();
    const Spectrum s = ecc_spectrum(g);
    const std::vector<double> want = {12, 2, 2, 2, 2, -4, -4, -4, -4, -4};
    c.expect(s.size() == 10, "spectrum size");
    if (c.ok)
        for (int i = 0; i < 10; ++i)
            c.near(s.values()[i], want[i], 1e-8, "eigenvalue " + std::to_string(i));
    c.near(ecc_energy(g), 40.0, 1e-8, "energy");
    c.near(ecc_spectral_radius(g), 12.0, 1e-8, "spectral radius");
    c.expect(ecc_wiener(g) == Rational(60), "Wiener value 60");
    c.expect(ecc_inertia(g) == Inertia{5, 5, 0}, "inertia (5,5,0)");
    c.expect(is_ecc_regular(g), "row-regular matrix");
    // Radius meets the 2W/p lower bound with equality here.
    c.expect(ecc_spectral_radius(g) >= 2.0 * 60 / 10 - 1e-9, "radius lower bound");
    c.expect(t.seconds() < 0.1, "time budget 0.1s");
}

void criterion_2_central_c4(Criterion& c) {
    Timer t;
    const double s65 = std::sqrt(65.0);
    const double s41 = std::sqrt(41.0);
    const std::vector<double> want = {(7 + s65) / 2, 3.0,  (-3 + s41) / 2, (-3 + s41) / 2,
                                      (7 - s65) / 2, -4.0, (-3 - s41) / 2, (-3 - s41) / 2};
    const Graph base = cycle(4);
    const Spectrum got = ecc_spectrum(central(base).graph);
    c.expect(got.size() == 8, "spectrum size");
    if (c.ok)
        for (int i = 0; i < 8; ++i)
            c.near(got.values()[i], want[i], 1e-8, "eigenvalue " + std::to_string(i));
    const PredictedSpectrum pred = thm_central_spectrum(base);
    c.expect(max_deviation(pred, got) <= 1e-8, "closed form vs computed");
    c.expect(pred.cross_check <= 1e-10, "parameterization cross-check");
    c.expect(inertia(got) == Inertia{4, 4, 0}, "inertia (4,4,0)");
    c.near(energy(got), 7 + s65 + 2 * s41, 1e-6, "energy");
    c.near(cor_central_radius(base), (7 + s65) / 2, 1e-9, "radius closed form");
    c.expect(cor_central_inertia(base) == Inertia{4, 4, 0}, "inertia closed form");
    c.near(cor_central_energy(base), 7 + s65 + 2 * s41, 1e-9, "energy closed form");
    c.expect(t.seconds() < 0.1, "time budget 0.1s");
}

void criterion_3_joins(Criterion& c) {
    Timer t;
    struct Case {
        Graph a, b;
        long long wiener;
    };
    const std::vector<Case> vertex_cases = {{cycle(4), complete(2), 46},
                                            {cycle(6), complete(3), 123},
                                            {petersen(), complete(2), 555}};
    for (const auto& k : vertex_cases) {
        const Graph j = central_vertex_join(k.a, k.b).graph;
        const PredictedSpectrum pred = thm_vertex_join_spectrum(k.a, k.b);
        const Spectrum got = ecc_spectrum(j);
        c.expect(pred.total() == got.size(), "vertex join size " + j.name);
        c.expect(max_deviation(pred, got) <= 1e-7, "vertex join spectrum " + j.name);
        c.expect(pred.cross_check <= 1e-10, "vertex join cross-check " + j.name);
        c.expect(cor_vertex_join_wiener(k.a, k.b) == Rational(k.wiener),
                 "vertex join Wiener formula " + j.name);
        c.expect(ecc_wiener(j) == Rational(k.wiener), "vertex join Wiener matrix " + j.name);
        const BoundReport br = cor_vertex_join_radius_bound(k.a, k.b);
        c.expect(br.applicable && br.holds && br.strict && br.slack > 1e-9,
                 "vertex join radius bound " + j.name);
    }
    const std::vector<Case> edge_cases = {{cycle(4), complete(2), 52},
                                          {cycle(6), complete(3), 126},
                                          {petersen(), complete(2), 520}};
    for (const auto& k : edge_cases) {
        const Graph j = central_edge_join(k.a, k.b).graph;
        const PredictedSpectrum pred = thm_edge_join_spectrum(k.a, k.b);
        const Spectrum got = ecc_spectrum(j);
        c.expect(pred.total() == got.size(), "edge join size " + j.name);
        c.expect(max_deviation(pred, got) <= 1e-7, "edge join spectrum " + j.name);
        c.expect(pred.cross_check <= 1e-10, "edge join cross-check " + j.name);
        c.expect(cor_edge_join_wiener(k.a, k.b) == Rational(k.wiener),
                 "edge join Wiener formula " + j.name);
        c.expect(ecc_wiener(j) == Rational(k.wiener), "edge join Wiener matrix " + j.name);
        const BoundReport br = cor_edge_join_radius_bound(k.a, k.b);
        c.expect(br.applicable && br.holds && br.strict && br.slack > 1e-9,
                 "edge join radius bound " + j.name);
    }
    const std::vector<std::pair<std::vector<Graph>, const char*>> ve_cases = {
        {{cycle(4), complete(2), complete(2)}, "cvej(C4,K2,K2)"},
        {{cycle(6), complete(3), complete(2)}, "cvej(C6,K3,K2)"}};
    for (const auto& [gs, label] : ve_cases) {
        const Graph j = central_vertex_edge_join(gs[0], gs[1], gs[2]).graph;
        const PredictedSpectrum pred = thm_vertex_edge_join_spectrum(gs[0], gs[1], gs[2]);
        const Spectrum got = ecc_spectrum(j);
        c.expect(pred.total() == got.size(), std::string("size ") + label);
        c.expect(max_deviation(pred, got) <= 1e-7, std::string("spectrum ") + label);
    }
    c.expect(t.seconds() < 1.0, "time budget 1s");
}

void criterion_4_line_energies(Criterion& c) {
    c.near(thm_line_graph_energy(complete(4)), 12.0, 1e-9, "closed form L(K4)");
    c.near(ecc_energy(line_graph(complete(4))), 12.0, 1e-7, "computed L(K4)");
    c.near(thm_line_graph_energy(complete(5)), 32.0, 1e-9, "closed form L(K5)");
    c.near(ecc_energy(line_graph(complete(5))), 32.0, 1e-7, "computed L(K5)");
    c.near(thm_complement_line_graph_energy(cocktail_party(3)), 48.0, 1e-9,
           "closed form co-L(CP3)");
    c.near(ecc_energy(complement(line_graph(cocktail_party(3)))), 48.0, 1e-7,
           "computed co-L(CP3)");
    c.near(thm_complement_line_graph_energy(cocktail_party(4)), 128.0, 1e-9,
           "closed form co-L(CP4)");
    c.near(ecc_energy(complement(line_graph(cocktail_party(4)))), 128.0, 1e-7,
           "computed co-L(CP4)");
}

void criterion_5_exhaustive(Criterion& c) {
    Timer t;
    int total = 0;
    int at_seven = 0;
    for (int n = 1; n <= 7 && c.ok; ++n) {
        const auto gs = enumerate_connected_graphs(n);
        if (n == 7) at_seven = static_cast<int>(gs.size());
        for (const Graph& g : gs) {
            ++total;
            const std::string id = to_graph6(g);
            const EccMatrix em = eccentricity_matrix(g);
            c.expect(is_irreducible(g) == support_connected(em), "irreducibility vs support " + id);
            for (const BoundReport& r : bounds_suite(g)) {
                if (!r.applicable) continue;
                if (r.asserted) c.expect(r.holds, r.id + " violated on " + id);
                if (r.id == "radius-wiener-lower" || r.id == "wiener-upper-ecc")
                    c.expect(r.equality == r.equality_expected,
                             r.id + " equality characterization on " + id);
                if (r.id == "wiener-total-ecc-lower" && r.equality_expected)
                    c.expect(r.equality, r.id + " promised equality on " + id);
            }
            if (g.size() >= 1) {
                const Graph lg = line_graph(g);
                const bool far = diameter(eccentricities(lg)) > 2;
                c.expect(has_induced_forbidden(g) == far, "forbidden-subgraph test on " + id);
            }
            if (!c.ok) break;
        }
    }
    c.expect(total == 996, "996 connected graphs through order 7");
    c.expect(at_seven == 853, "853 connected graphs at order 7");
    c.expect(t.seconds() < 60.0, "time budget 60s");
}

void criterion_6_trees(Criterion& c) {
    int total = 0;
    for (int n = 1; n <= 9 && c.ok; ++n)
        for (const Graph& g : enumerate_trees(n)) {
            ++total;
            const auto reports = bounds_suite(g);
            const BoundReport* r = find_report(reports, "tree-wiener-upper");
            const std::string id = to_graph6(g);
            c.expect(r != nullptr && r->applicable && r->holds, "tree bound on " + id);
            if (r != nullptr)
                c.expect(r->equality == r->equality_expected,
                         "tree equality characterization on " + id);
            if (!c.ok) break;
        }
    c.expect(total == 95, "95 trees through order 9");
    for (int p = 4; p <= 10 && c.ok; ++p) {
        const auto reports = bounds_suite(star(p));
        const BoundReport* r = find_report(reports, "tree-wiener-upper");
        c.expect(r != nullptr && r->equality && std::fabs(r->slack) <= 1e-9,
                 "star equality at order " + std::to_string(p));
    }
}

void criterion_7_self_centered_energy(Criterion& c) {
    int applicable = 0;
    for (int n = 1; n <= 7 && c.ok; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const auto reports = bounds_suite(g);
            const BoundReport* r = find_report(reports, "self-centered-energy-upper");
            if (r == nullptr || !r->applicable) continue;
            ++applicable;
            const std::string id = to_graph6(g);
            c.expect(r->holds, "energy bound on " + id);
            if (r->equality) {
                // Equality must land only on row-regular matrices with at most
                // three distinct eigenvalues; recheck both from scratch.
                c.expect(is_ecc_regular(g), "equality needs row regularity on " + id);
                c.expect(ecc_spectrum(g).groups().size() <= 3,
                         "equality needs <=3 eigenvalue groups on " + id);
            }
            if (!c.ok) break;
        }
    c.expect(applicable > 0, "bound exercised at least once");
    const auto reports = bounds_suite(petersen());
    const BoundReport* r = find_report(reports, "self-centered-energy-upper");
    c.expect(r != nullptr && r->applicable && r->holds && !r->equality, "Petersen report");
    if (r != nullptr) {
        c.near(r->lhs, 40.0, 1e-8, "Petersen energy");
        c.near(r->rhs, 41.3938769134, 1e-6, "Petersen bound value");
    }
}

void criterion_8_searches(Criterion& c) {
    const auto seeds = enumerate_regular_connected(10, 4);
    c.expect(seeds.size() == 59, "59 quartic graphs of order 10");
    const auto family = search_cvj_family(cycle(6), seeds);
    c.expect(family.size() == 2, "two cospectral join pairs");
    std::set<std::set<std::string>> found;
    for (const FamilySearchPair& p : family) {
        c.expect(p.seed_gap <= 1e-7, "seed spectra agree");
        c.expect(p.join_gap <= 1e-7, "join spectra agree");
        c.expect(p.joins_isomorphism_checked && !p.joins_isomorphic, "joins non-isomorphic");
        found.insert({to_graph6(seeds[p.i]), to_graph6(seeds[p.j])});
    }
    const std::set<std::set<std::string>> expected = {{"I}opGgJAw", "I}hPGoJ@w"},
                                                      {"I}opGcLAw", "I}hP?sM@w"}};
    c.expect(found == expected, "known seed pairs recovered");

    const auto cubics = enumerate_regular_connected(10, 3);
    c.expect(cubics.size() == 19, "19 cubic graphs of order 10");
    const auto pairs = search_line_equienergetic(cubics);
    c.expect(pairs.size() == 1, "one equienergetic line pair");
    if (pairs.size() == 1) {
        const SearchPair& p = pairs.front();
        c.expect(p.kind == "line-eps-equienergetic", "pair kind");
        c.expect(p.energy_gap <= 1e-7, "energies agree");
        c.expect(p.spectral_gap > 1e-7, "spectra differ");
        c.expect(p.isomorphism_checked && !p.isomorphic, "line graphs non-isomorphic");
        const std::set<std::string> names = {to_graph6(cubics[p.i]), to_graph6(cubics[p.j])};
        c.expect(names == std::set<std::string>{"IsX___J@o", "IsP@PGXD_"},
                 "known cubic pair recovered");
    }
}

void criterion_9_eigensolver(Criterion& c) {
    std::mt19937 rng(20260825u);
    std::uniform_int_distribution<int> entry(-9, 9);
    const auto random_sym = [&](int n) {
        SymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
        return m;
    };
    for (int k = 0; k < 100 && c.ok; ++k) {
        const int n = 2 + (k * 198) / 99;  // sizes spread over [2, 200]
        const SymMatrix m = random_sym(n);
        const Spectrum s = eig_sym(m);
        c.expect(s.size() == n, "eigenvalue count at n=" + std::to_string(n));
        double tr = 0.0;
        double sq = 0.0;
        for (double v : s.values()) {
            tr += v;
            sq += v * v;
        }
        c.expect(std::fabs(tr - m.trace()) <= 1e-8 * n * 9,
                 "trace conservation at n=" + std::to_string(n));
        const double fro = m.frobenius();
        c.expect(std::fabs(std::sqrt(sq) - fro) <= 1e-8 * std::max(1.0, fro),
                 "Frobenius conservation at n=" + std::to_string(n));
        c.expect(s.trace_residual() <= 1e-8 * std::max(1.0, fro),
                 "residual bookkeeping at n=" + std::to_string(n));
    }
    for (int n : {23, 57}) {
        const SymMatrix m = random_sym(n);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SymMatrix pm(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pm.set(perm[i], perm[j], m.at(i, j));
        c.expect(spectra_distance(eig_sym(m), eig_sym(pm)) <= 1e-8,
                 "permutation invariance at n=" + std::to_string(n));
    }
    {
        const int n = 31;
        const SymMatrix m = random_sym(n);
        SymMatrix neg(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) neg.set(i, j, -m.at(i, j));
        const auto a = eig_sym(m).values();
        const auto b = eig_sym(neg).values();
        for (int i = 0; i < n && c.ok; ++i)
            c.near(b[i], -a[n - 1 - i], 1e-9, "negation symmetry");
    }
}

}  // namespace

int main() {
    criterion(1, "Petersen eccentricity-matrix invariants", criterion_1_petersen);
    criterion(2, "central graph of the 4-cycle matches its closed-form spectrum",
              criterion_2_central_c4);
    criterion(3, "join constructions match closed-form spectra, Wiener values, radius bounds",
              criterion_3_joins);
    criterion(4, "line-graph eccentricity energies match closed forms", criterion_4_line_energies);
    criterion(5, "exhaustive audit of all connected graphs through order 7",
              criterion_5_exhaustive);
    criterion(6, "tree Wiener bound with equality characterization through order 9",
              criterion_6_trees);
    criterion(7, "self-centered energy bound across the corpus and Petersen",
              criterion_7_self_centered_energy);
    criterion(8, "cospectral join family and equienergetic line-graph searches",
              criterion_8_searches);
    criterion(9, "eigensolver conservation and invariance on random symmetric matrices",
              criterion_9_eigensolver);
    return failures == 0 ? 0 : 1;
}
