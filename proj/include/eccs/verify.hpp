#pragma once

#include <atomic>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "graph6.hpp"
#include "theorems.hpp"

namespace eccs {

enum class VerifyStatus { pass, fail, inapplicable };

inline std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::fail: return "fail";
        default: return "inapplicable";
    }
}

// Outcome of checking one result on one instance. `max_dev` is the largest
// numeric discrepancy found (0 for purely structural checks).
struct VerificationReport {
    std::string theorem;
    std::string instance;
    VerifyStatus status = VerifyStatus::inapplicable;
    double max_dev = 0.0;
    std::string notes;
};

struct VerifyOptions {
    double tol = 1e-7;           // closed form vs computed spectrum/energy
    double cross_tol = 1e-10;    // agreement between redundant parameterizations
    double strict_margin = 1e-9; // strict inequalities and zero decisions
};

namespace detail {

inline std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

inline std::string describe(const Graph& g) {
    return g.name.empty() ? "graph6:" + to_graph6(g) : g.name;
}

inline void add_note(VerificationReport& r, const std::string& s) {
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += s;
}

// Compare a predicted spectrum against a computed one, including the
// internal parameterization cross-check.
inline void spectrum_check(VerificationReport& rep, const PredictedSpectrum& pred,
                           const Spectrum& got, const VerifyOptions& opt) {
    rep.max_dev = max_deviation(pred, got);
    bool ok = rep.max_dev <= opt.tol;
    if (pred.cross_check > opt.cross_tol) {
        ok = false;
        add_note(rep, "parameterizations disagree by " + fmt_g(pred.cross_check));
    }
    rep.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
}

inline void value_check(VerificationReport& rep, double predicted, double computed,
                        const VerifyOptions& opt) {
    rep.max_dev = std::abs(predicted - computed);
    rep.status = rep.max_dev <= opt.tol ? VerifyStatus::pass : VerifyStatus::fail;
    if (rep.status == VerifyStatus::fail)
        add_note(rep, "predicted " + fmt_g(predicted) + ", computed " + fmt_g(computed));
}

inline void exact_check(VerificationReport& rep, const Rational& predicted,
                        const Rational& computed) {
    rep.max_dev = std::abs(predicted.to_double() - computed.to_double());
    rep.status = predicted == computed ? VerifyStatus::pass : VerifyStatus::fail;
    if (rep.status == VerifyStatus::fail)
        add_note(rep, "predicted " + predicted.str() + ", computed " + computed.str());
}

inline void bound_check(VerificationReport& rep, const BoundReport& b) {
    rep.max_dev = b.slack;
    rep.status = b.holds ? VerifyStatus::pass : VerifyStatus::fail;
    add_note(rep, "lhs " + fmt_g(b.lhs) + ", rhs " + fmt_g(b.rhs));
}

inline Inertia inertia_at_margin(const Spectrum& s, double margin) {
    return inertia(s, margin * std::max(1.0, s.max_abs()));
}

inline std::string inertia_str(const Inertia& in) {
    return "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) + "," +
           std::to_string(in.zero) + ")";
}

}  // namespace detail

// One registered result: a stable id, how many operand graphs it takes, and
// the check itself (filling status/max_dev/notes of the report).
struct TheoremInfo {
    std::string id;
    int arity = 1;
    std::string summary;
    std::function<void(const Graph&, const Graph&, const Graph&, const VerifyOptions&,
                       VerificationReport&)>
        check;
};

inline const std::vector<TheoremInfo>& theorem_registry() {
    using R = VerificationReport;
    using O = VerifyOptions;
    static const std::vector<TheoremInfo> reg = {
        {"line-graph-spectrum", 1, "adjacency spectrum of the line graph of a regular graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const auto pred = lemma_line_graph_spectrum(g);
             detail::spectrum_check(r, pred, eig_sym(adjacency_matrix(line_graph(g))), o);
         }},
        {"diam2-spectrum", 1, "eccentricity spectrum of a regular self-centered diameter-2 graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const auto pred = lemma_diam2_spectrum(g);
             detail::spectrum_check(r, pred, ecc_spectrum(g), o);
         }},
        {"central-adjacency-spectrum", 1, "adjacency spectrum of the central graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const auto pred = lemma_central_adjacency_spectrum(g);
             detail::spectrum_check(r, pred,
                                    eig_sym(adjacency_matrix(central(g).graph)), o);
         }},
        {"central-spectrum", 1, "eccentricity spectrum of the central graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const auto pred = thm_central_spectrum(g);
             detail::spectrum_check(r, pred, ecc_spectrum(central(g).graph), o);
         }},
        {"central-radius", 1, "eccentricity spectral radius of the central graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const double pred = cor_central_radius(g);
             detail::value_check(r, pred, ecc_spectral_radius(central(g).graph), o);
         }},
        {"central-inertia", 1, "inertia (q, p, 0) of the central graph's eccentricity matrix",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const Inertia pred = cor_central_inertia(g);
             if (!central_inertia_sign_ok(g, o.strict_margin))
                 throw Inapplicable(
                     "an eigenvalue pair does not straddle zero; the stated inertia "
                     "is not implied for this instance");
             const Inertia got =
                 detail::inertia_at_margin(ecc_spectrum(central(g).graph), o.strict_margin);
             r.status = pred == got ? VerifyStatus::pass : VerifyStatus::fail;
             if (r.status == VerifyStatus::fail)
                 detail::add_note(r, "predicted " + detail::inertia_str(pred) + ", computed " +
                                         detail::inertia_str(got));
         }},
        {"central-energy", 1, "closed-form eccentricity energy of the central graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const double pred = cor_central_energy(g);
             detail::value_check(r, pred, ecc_energy(central(g).graph), o);
         }},
        {"complement-central", 1,
         "energy and inertia of the complement of the central graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const auto pred = cor_complement_central(g, o.strict_margin);
             const Graph cc = complement(central(g).graph);
             const Spectrum s = ecc_spectrum(cc);
             const double de = std::abs(pred.energy - energy(s));
             const Inertia got = detail::inertia_at_margin(s, o.strict_margin);
             r.max_dev = de;
             const bool ok = de <= o.tol && pred.inertia == got;
             r.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
             if (!pred.plain_inertia_valid)
                 detail::add_note(r, "bipartite input: zero multiplicity is " +
                                         std::to_string(pred.inertia.zero) +
                                         ", one above the plain closed form");
             if (pred.inertia != got)
                 detail::add_note(r, "predicted inertia " + detail::inertia_str(pred.inertia) +
                                         ", computed " + detail::inertia_str(got));
         }},
        {"central-irreducible", 1, "irreducibility of the central graph's eccentricity matrix",
         [](const Graph& g, const Graph&, const Graph&, const O&, R& r) {
             const auto c = thm_central_irreducible(g);
             const bool ok = is_irreducible(central(g).graph);
             r.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
             detail::add_note(r, "case " + std::to_string(c.case_id));
         }},
        {"vertex-join-spectrum", 2, "eccentricity spectrum of the central vertex join",
         [](const Graph& g1, const Graph& g2, const Graph&, const O& o, R& r) {
             const auto pred = thm_vertex_join_spectrum(g1, g2);
             detail::spectrum_check(r, pred,
                                    ecc_spectrum(central_vertex_join(g1, g2).graph), o);
         }},
        {"vertex-join-wiener", 2, "eccentricity Wiener index of the central vertex join",
         [](const Graph& g1, const Graph& g2, const Graph&, const O&, R& r) {
             const Rational pred = cor_vertex_join_wiener(g1, g2);
             detail::exact_check(r, pred, ecc_wiener(central_vertex_join(g1, g2).graph));
         }},
        {"vertex-join-radius", 2,
         "strict spectral-radius lower bound for the central vertex join",
         [](const Graph& g1, const Graph& g2, const Graph&, const O& o, R& r) {
             detail::bound_check(r, cor_vertex_join_radius_bound(g1, g2, o.strict_margin));
         }},
        {"vertex-join-irreducible", 2,
         "irreducibility of the central vertex join's eccentricity matrix",
         [](const Graph& g1, const Graph& g2, const Graph&, const O&, R& r) {
             require_vertex_join_hypotheses(g1, g2);
             const bool ok = is_irreducible(central_vertex_join(g1, g2).graph);
             r.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
         }},
        {"edge-join-spectrum", 2, "eccentricity spectrum of the central edge join",
         [](const Graph& g1, const Graph& g2, const Graph&, const O& o, R& r) {
             const auto pred = thm_edge_join_spectrum(g1, g2);
             detail::spectrum_check(r, pred,
                                    ecc_spectrum(central_edge_join(g1, g2).graph), o);
         }},
        {"edge-join-wiener", 2, "eccentricity Wiener index of the central edge join",
         [](const Graph& g1, const Graph& g2, const Graph&, const O&, R& r) {
             const Rational pred = cor_edge_join_wiener(g1, g2);
             detail::exact_check(r, pred, ecc_wiener(central_edge_join(g1, g2).graph));
         }},
        {"edge-join-radius", 2,
         "strict spectral-radius lower bound for the central edge join",
         [](const Graph& g1, const Graph& g2, const Graph&, const O& o, R& r) {
             detail::bound_check(r, cor_edge_join_radius_bound(g1, g2, o.strict_margin));
         }},
        {"edge-join-irreducible", 2,
         "irreducibility of the central edge join's eccentricity matrix",
         [](const Graph& g1, const Graph& g2, const Graph&, const O&, R& r) {
             require_edge_join_hypotheses(g1, g2);
             const bool ok = is_irreducible(central_edge_join(g1, g2).graph);
             r.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
         }},
        {"vertex-edge-join-spectrum", 3,
         "eccentricity spectrum of the central vertex-edge join",
         [](const Graph& g1, const Graph& g2, const Graph& g3, const O& o, R& r) {
             const auto pred = thm_vertex_edge_join_spectrum(g1, g2, g3);
             detail::spectrum_check(
                 r, pred, ecc_spectrum(central_vertex_edge_join(g1, g2, g3).graph), o);
         }},
        {"vertex-edge-join-irreducible", 3,
         "irreducibility of the central vertex-edge join's eccentricity matrix",
         [](const Graph& g1, const Graph& g2, const Graph& g3, const O&, R& r) {
             require_vertex_edge_join_hypotheses(g1, g2, g3);
             const bool ok = is_irreducible(central_vertex_edge_join(g1, g2, g3).graph);
             r.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
         }},
        {"line-energy", 1, "closed-form eccentricity energy of the line graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const double pred = thm_line_graph_energy(g);
             detail::value_check(r, pred, ecc_energy(line_graph(g)), o);
         }},
        {"complement-line-energy", 1,
         "closed-form eccentricity energy of the complement of the line graph",
         [](const Graph& g, const Graph&, const Graph&, const O& o, R& r) {
             const double pred = thm_complement_line_graph_energy(g);
             detail::value_check(r, pred, ecc_energy(complement(line_graph(g))), o);
         }},
    };
    return reg;
}

inline const TheoremInfo* find_theorem(const std::string& id) {
    for (const auto& t : theorem_registry())
        if (t.id == id) return &t;
    return nullptr;
}

inline std::vector<std::string> theorem_ids() {
    std::vector<std::string> ids;
    for (const auto& t : theorem_registry()) ids.push_back(t.id);
    return ids;
}

// Runs one registered check on one instance, mapping hypothesis failures and
// out-of-scope inputs to `inapplicable`.
inline VerificationReport verify_one(const TheoremInfo& t, const Graph& g1, const Graph& g2,
                                     const Graph& g3, const VerifyOptions& opt) {
    VerificationReport r;
    r.theorem = t.id;
    r.instance = detail::describe(g1);
    if (t.arity >= 2) r.instance += " + " + detail::describe(g2);
    if (t.arity >= 3) r.instance += " + " + detail::describe(g3);
    try {
        t.check(g1, g2, g3, opt, r);
    } catch (const HypothesisFailed& e) {
        r.status = VerifyStatus::inapplicable;
        r.notes = e.hypothesis;
    } catch (const Inapplicable& e) {
        r.status = VerifyStatus::inapplicable;
        r.notes = e.what();
    } catch (const EmptyEdgeSet& e) {
        r.status = VerifyStatus::inapplicable;
        r.notes = e.what();
    } catch (const Disconnected& e) {
        r.status = VerifyStatus::inapplicable;
        r.notes = e.what();
    } catch (const NoConvergence& e) {
        r.status = VerifyStatus::fail;
        r.notes = e.what();
    }
    return r;
}

struct VerifyRun {
    std::vector<VerificationReport> reports;
    int passed = 0;
    int failed = 0;
    int inapplicable = 0;
};

// Cartesian product of theorems x first operands, optionally multithreaded.
// Results come back in deterministic order regardless of the job count.
inline VerifyRun run_verification(const std::vector<const TheoremInfo*>& theorems,
                                  const std::vector<Graph>& firsts, const Graph& g2,
                                  const Graph& g3, const VerifyOptions& opt, int jobs = 1) {
    const size_t total = theorems.size() * firsts.size();
    VerifyRun run;
    run.reports.resize(total);

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1)) {
            const TheoremInfo& t = *theorems[k / firsts.size()];
            const Graph& g1 = firsts[k % firsts.size()];
            try {
                run.reports[k] = verify_one(t, g1, g2, g3, opt);
            } catch (const std::exception& e) {
                run.reports[k].theorem = t.id;
                run.reports[k].instance = detail::describe(g1);
                run.reports[k].status = VerifyStatus::fail;
                run.reports[k].notes = e.what();
            }
        }
    };

    int nthreads = jobs;
    if (nthreads < 1) nthreads = 1;
    if (static_cast<size_t>(nthreads) > total) nthreads = static_cast<int>(total);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& rep : run.reports) {
        switch (rep.status) {
            case VerifyStatus::pass: ++run.passed; break;
            case VerifyStatus::fail: ++run.failed; break;
            default: ++run.inapplicable; break;
        }
    }
    return run;
}

}  // namespace eccs
