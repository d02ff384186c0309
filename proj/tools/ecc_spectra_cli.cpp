// Command-line front end: eccentricity-matrix invariants, graph operations,
// closed-form verification, bounds and spectral searches.
//
// Exit codes: 0 success, 2 malformed input or arguments, 3 disconnected input
// where connectivity is required, 4 eigensolver non-convergence, 5 bad
// operation arguments, 6 verification failure, 1 anything else.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eccs/bounds.hpp"
#include "eccs/central.hpp"
#include "eccs/ecc.hpp"
#include "eccs/enumerate.hpp"
#include "eccs/generators.hpp"
#include "eccs/graph6.hpp"
#include "eccs/search.hpp"
#include "eccs/theorems.hpp"
#include "eccs/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace eccs;

// Errors in the arguments of the `op` subcommand (exit code 5).
struct OpUsage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Round doubles to 12 significant digits before emitting so output is stable
// and free of representation noise.
double norm(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string num_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json rational_json(const Rational& r) {
    if (r.is_integer()) return Json(r.num());
    return Json(r.str());
}

Json spectrum_json(const Spectrum& s) {
    Json values = Json::array();
    for (double v : s.values()) values.push_back(norm(v));
    Json groups = Json::array();
    for (const auto& g : s.groups())
        groups.push_back(Json{{"value", norm(g.value)}, {"multiplicity", g.multiplicity}});
    const Inertia in = inertia(s);
    return Json{{"values", values},
                {"groups", groups},
                {"energy", norm(energy(s))},
                {"spectral_radius", norm(spectral_radius(s))},
                {"inertia",
                 {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}}},
                {"trace_residual", norm(s.trace_residual())}};
}

// --- graph input -----------------------------------------------------------

struct GraphInput {
    std::vector<std::string> gen;
    std::string graph6_path;
    int index = 0;
    std::string edges_path;

    bool given() const {
        return !gen.empty() || !graph6_path.empty() || !edges_path.empty();
    }
};

void add_graph_options(CLI::App* cmd, GraphInput& in, const std::string& suffix,
                       const std::string& noun) {
    cmd->add_option("--gen" + suffix, in.gen,
                    "generator for " + noun + ": NAME [PARAMS...]")
        ->expected(-1);
    cmd->add_option("--graph6" + suffix, in.graph6_path,
                    "file with graph6 lines for " + noun);
    cmd->add_option("--index" + suffix, in.index,
                    "0-based line to take from the graph6 file (default 0)");
    cmd->add_option("--edges" + suffix, in.edges_path,
                    "edge-list file for " + noun + " (\"p q\" header, then \"u v\" lines)");
}

Graph load_graph(const GraphInput& in) {
    const int sources = !in.gen.empty() + !in.graph6_path.empty() + !in.edges_path.empty();
    if (sources == 0) throw BadParams("no graph given: use --gen, --graph6 or --edges");
    if (sources > 1) throw BadParams("give exactly one of --gen, --graph6, --edges");

    if (!in.gen.empty()) {
        std::vector<long> params;
        for (size_t i = 1; i < in.gen.size(); ++i) {
            try {
                params.push_back(std::stol(in.gen[i]));
            } catch (const std::exception&) {
                throw BadParams("generator parameter \"" + in.gen[i] + "\" is not a number");
            }
        }
        return generate(in.gen[0], params);
    }
    if (!in.graph6_path.empty()) {
        std::ifstream f(in.graph6_path);
        if (!f) throw MalformedGraph6("cannot open " + in.graph6_path);
        std::vector<Graph> gs = read_graph6(f);
        if (in.index < 0 || static_cast<size_t>(in.index) >= gs.size())
            throw MalformedGraph6(in.graph6_path + " has " + std::to_string(gs.size()) +
                                  " graphs, index " + std::to_string(in.index) +
                                  " out of range");
        Graph g = gs[in.index];
        g.name = in.graph6_path + "[" + std::to_string(in.index) + "]";
        return g;
    }
    std::ifstream f(in.edges_path);
    if (!f) throw MalformedEdgeList("cannot open " + in.edges_path);
    Graph g = parse_edge_list(f);
    g.name = in.edges_path;
    return g;
}

std::vector<Graph> load_corpus(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MalformedGraph6("cannot open " + path);
    std::vector<Graph> gs = read_graph6(f);
    for (size_t i = 0; i < gs.size(); ++i)
        gs[i].name = path + "[" + std::to_string(i) + "]";
    return gs;
}

int default_jobs() {
    if (const char* s = std::getenv("ECC_SPECTRA_JOBS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(std::min(hw, 8u)) : 1;
}

// --- compute ----------------------------------------------------------------

int cmd_compute(const GraphInput& in, double tol, const std::string& out, bool with_matrix) {
    const Graph g = load_graph(in);
    const EccMatrix em = eccentricity_matrix(g);  // throws Disconnected
    const Spectrum s = ecc_spectrum(em, tol);
    const Rational w = ecc_wiener(em);
    const Inertia inert = inertia(s);
    const EccentricityVector& ev = em.ecc;
    const bool regular_rows = is_ecc_regular(em);
    const bool irr = is_irreducible(g);

    if (out == "json") {
        Json j;
        j["graph"] = Json{{"name", g.name.empty() ? to_graph6(g) : g.name},
                          {"order", g.order()},
                          {"size", g.size()},
                          {"graph6", to_graph6(g)}};
        Json evj = Json::array();
        for (int e : ev) evj.push_back(e);
        j["eccentricity"] = Json{{"radius", radius(ev)},
                                 {"diameter", diameter(ev)},
                                 {"vector", evj},
                                 {"total", total_eccentricity(ev)},
                                 {"connectivity_index", eccentric_connectivity_index(g, ev)},
                                 {"self_centered", radius(ev) == diameter(ev)}};
        Json rows = Json::array();
        for (long long r : em.row_sums) rows.push_back(r);
        j["matrix"] = Json{{"wiener", rational_json(w)},
                           {"row_sums", rows},
                           {"regular", regular_rows},
                           {"irreducible", irr}};
        if (with_matrix) {
            Json m = Json::array();
            for (int i = 0; i < em.n; ++i) {
                Json row = Json::array();
                for (int k = 0; k < em.n; ++k) row.push_back(em.at(i, k));
                m.push_back(row);
            }
            j["matrix"]["entries"] = m;
        }
        j["spectrum"] = spectrum_json(s);
        std::cout << j.dump(2) << "\n";
    } else {
        auto line = [&](const std::string& k, const std::string& v) {
            if (out == "tsv")
                std::cout << k << "\t" << v << "\n";
            else
                std::cout << k << ": " << v << "\n";
        };
        line("graph", g.name.empty() ? to_graph6(g) : g.name);
        line("order", std::to_string(g.order()));
        line("size", std::to_string(g.size()));
        line("radius", std::to_string(radius(ev)));
        line("diameter", std::to_string(diameter(ev)));
        line("total_eccentricity", std::to_string(total_eccentricity(ev)));
        line("connectivity_index", std::to_string(eccentric_connectivity_index(g, ev)));
        line("wiener", w.str());
        line("ecc_regular", regular_rows ? "true" : "false");
        line("irreducible", irr ? "true" : "false");
        std::string vals;
        for (double v : s.values()) vals += (vals.empty() ? "" : ",") + num_str(norm(v));
        line("spectrum", vals);
        std::string grp;
        for (const auto& gr : s.groups())
            grp += (grp.empty() ? "" : " ") + num_str(norm(gr.value)) + "^" +
                   std::to_string(gr.multiplicity);
        line("groups", grp);
        line("energy", num_str(norm(energy(s))));
        line("spectral_radius", num_str(norm(spectral_radius(s))));
        line("inertia", "(" + std::to_string(inert.positive) + "," +
                            std::to_string(inert.negative) + "," + std::to_string(inert.zero) +
                            ")");
        if (with_matrix && out == "pretty") {
            for (int i = 0; i < em.n; ++i) {
                std::string row;
                for (int k = 0; k < em.n; ++k)
                    row += (k ? " " : "") + std::to_string(em.at(i, k));
                std::cout << "  " << row << "\n";
            }
        }
    }
    return 0;
}

// --- op ----------------------------------------------------------------------

int cmd_op(const std::string& op, const GraphInput& in1, const GraphInput& in2,
           const GraphInput& in3, const std::string& out) {
    const Graph g1 = load_graph(in1);
    Graph result(1);
    std::vector<Block> blocks;
    std::vector<std::string> operands{g1.name.empty() ? to_graph6(g1) : g1.name};

    auto need2 = [&]() {
        if (!in2.given()) throw OpUsage(op + " needs a second graph (--gen2/...)");
        Graph g = load_graph(in2);
        operands.push_back(g.name.empty() ? to_graph6(g) : g.name);
        return g;
    };
    auto need3 = [&]() {
        if (!in3.given()) throw OpUsage(op + " needs a third graph (--gen3/...)");
        Graph g = load_graph(in3);
        operands.push_back(g.name.empty() ? to_graph6(g) : g.name);
        return g;
    };

    try {
        if (op == "central") {
            LabeledProduct p = central(g1);
            result = p.graph;
            blocks = p.blocks;
        } else if (op == "central_vertex_join") {
            const Graph g2 = need2();
            LabeledProduct p = central_vertex_join(g1, g2);
            result = p.graph;
            blocks = p.blocks;
        } else if (op == "central_edge_join") {
            const Graph g2 = need2();
            LabeledProduct p = central_edge_join(g1, g2);
            result = p.graph;
            blocks = p.blocks;
        } else if (op == "central_vertex_edge_join") {
            const Graph g2 = need2();
            const Graph g3 = need3();
            LabeledProduct p = central_vertex_edge_join(g1, g2, g3);
            result = p.graph;
            blocks = p.blocks;
        } else if (op == "complement") {
            result = complement(g1);
        } else if (op == "line_graph") {
            result = line_graph(g1);
        } else if (op == "eccentric_graph") {
            result = eccentric_graph(g1);
        } else {
            throw OpUsage("unknown operation \"" + op +
                          "\" (known: central, central_vertex_join, central_edge_join, "
                          "central_vertex_edge_join, complement, line_graph, eccentric_graph)");
        }
    } catch (const BadParams& e) {
        throw OpUsage(e.what());
    }

    if (out == "json") {
        Json j;
        j["op"] = op;
        j["operands"] = operands;
        Json edges = Json::array();
        for (const auto& [u, v] : result.edges()) edges.push_back(Json::array({u, v}));
        j["result"] = Json{{"order", result.order()},
                           {"size", result.size()},
                           {"graph6", to_graph6(result)},
                           {"edges", edges}};
        if (!blocks.empty()) {
            Json bj = Json::array();
            for (const auto& b : blocks)
                bj.push_back(Json{{"role", to_string(b.role)},
                                  {"start", b.start},
                                  {"count", b.count}});
            j["result"]["blocks"] = bj;
        }
        std::cout << j.dump(2) << "\n";
    } else if (out == "tsv") {
        std::cout << result.order() << "\t" << result.size() << "\n";
        for (const auto& [u, v] : result.edges()) std::cout << u << "\t" << v << "\n";
    } else {
        std::cout << op << " -> " << result.order() << " vertices, " << result.size()
                  << " edges\n";
        std::cout << "graph6: " << to_graph6(result) << "\n";
        for (const auto& b : blocks)
            std::cout << "block " << to_string(b.role) << ": [" << b.start << ", "
                      << b.start + b.count << ")\n";
        std::cout << to_edge_list(result);
    }
    return 0;
}

// --- verify -------------------------------------------------------------------

int cmd_verify(const std::string& theorem, const GraphInput& in1, const std::string& corpus,
               const GraphInput& in2, const GraphInput& in3, double tol, int jobs,
               const std::string& out) {
    std::vector<const TheoremInfo*> theorems;
    if (theorem == "all") {
        for (const auto& t : theorem_registry()) theorems.push_back(&t);
    } else {
        const TheoremInfo* t = find_theorem(theorem);
        if (!t) {
            std::string known;
            for (const auto& id : theorem_ids()) known += (known.empty() ? "" : ", ") + id;
            throw BadParams("unknown theorem \"" + theorem + "\" (known: all, " + known + ")");
        }
        theorems.push_back(t);
    }

    std::vector<Graph> firsts;
    if (!corpus.empty()) {
        if (in1.given()) throw BadParams("give either --corpus or a single graph, not both");
        firsts = load_corpus(corpus);
        if (firsts.empty()) throw MalformedGraph6(corpus + " contains no graphs");
    } else {
        firsts.push_back(load_graph(in1));
    }
    const Graph g2 = in2.given() ? load_graph(in2) : complete(2);
    const Graph g3 = in3.given() ? load_graph(in3) : complete(2);

    VerifyOptions opt;
    opt.tol = tol;
    const VerifyRun run = run_verification(theorems, firsts, g2, g3, opt, jobs);

    if (out == "json") {
        Json reports = Json::array();
        for (const auto& r : run.reports)
            reports.push_back(Json{{"theorem", r.theorem},
                                   {"instance", r.instance},
                                   {"status", to_string(r.status)},
                                   {"max_dev", norm(r.max_dev)},
                                   {"notes", r.notes}});
        Json j{{"reports", reports},
               {"summary",
                {{"passed", run.passed},
                 {"failed", run.failed},
                 {"inapplicable", run.inapplicable}}}};
        std::cout << j.dump(2) << "\n";
    } else if (out == "tsv") {
        for (const auto& r : run.reports)
            std::cout << r.theorem << "\t" << r.instance << "\t" << to_string(r.status) << "\t"
                      << num_str(norm(r.max_dev)) << "\t" << r.notes << "\n";
        std::cerr << "passed " << run.passed << ", failed " << run.failed << ", inapplicable "
                  << run.inapplicable << "\n";
    } else {
        for (const auto& r : run.reports) {
            std::cout << (r.status == VerifyStatus::pass   ? "PASS "
                          : r.status == VerifyStatus::fail ? "FAIL "
                                                           : "  -  ")
                      << r.theorem << "  [" << r.instance << "]";
            if (r.status != VerifyStatus::inapplicable)
                std::cout << "  max_dev=" << num_str(norm(r.max_dev));
            if (!r.notes.empty()) std::cout << "  (" << r.notes << ")";
            std::cout << "\n";
        }
        std::cout << "passed " << run.passed << ", failed " << run.failed << ", inapplicable "
                  << run.inapplicable << "\n";
    }
    return run.failed > 0 ? 6 : 0;
}

// --- bounds --------------------------------------------------------------------

int cmd_bounds(const GraphInput& in1, const std::string& corpus, double tol,
               const std::string& out) {
    std::vector<Graph> gs;
    if (!corpus.empty()) {
        if (in1.given()) throw BadParams("give either --corpus or a single graph, not both");
        gs = load_corpus(corpus);
    } else {
        gs.push_back(load_graph(in1));
    }

    int asserted_failures = 0;
    Json jlist = Json::array();
    for (const auto& g : gs) {
        std::vector<BoundReport> reports;
        try {
            reports = bounds_suite(g, tol);
        } catch (const Disconnected& e) {
            if (gs.size() == 1) throw;  // single-graph runs demand connectivity
            std::cerr << "skipping " << (g.name.empty() ? to_graph6(g) : g.name) << ": "
                      << e.what() << "\n";
            continue;
        }
        const std::string name = g.name.empty() ? to_graph6(g) : g.name;
        for (const auto& r : reports) {
            if (r.applicable && !r.holds && r.asserted) ++asserted_failures;
            if (out == "json") {
                jlist.push_back(Json{{"graph", name},
                                     {"id", r.id},
                                     {"applicable", r.applicable},
                                     {"holds", r.holds},
                                     {"equality", r.equality},
                                     {"equality_expected", r.equality_expected},
                                     {"exact", r.exact},
                                     {"asserted", r.asserted},
                                     {"lhs", norm(r.lhs)},
                                     {"rhs", norm(r.rhs)},
                                     {"slack", norm(r.slack)},
                                     {"note", r.note}});
            } else if (out == "tsv") {
                std::cout << name << "\t" << r.id << "\t" << (r.applicable ? "yes" : "no")
                          << "\t" << (r.holds ? "holds" : "-") << "\t"
                          << (r.equality ? "eq" : "-") << "\t" << num_str(norm(r.lhs)) << "\t"
                          << num_str(norm(r.rhs)) << "\t" << num_str(norm(r.slack)) << "\t"
                          << r.note << "\n";
            } else {
                std::cout << name << "  " << r.id << ": ";
                if (!r.applicable) {
                    std::cout << "skipped (" << r.note << ")\n";
                } else {
                    std::cout << (r.holds ? "holds" : "VIOLATED")
                              << (r.equality ? " with equality" : "") << "  lhs="
                              << num_str(norm(r.lhs)) << " rhs=" << num_str(norm(r.rhs))
                              << " slack=" << num_str(norm(r.slack));
                    if (!r.note.empty()) std::cout << "  (" << r.note << ")";
                    std::cout << "\n";
                }
            }
        }
    }
    if (out == "json") std::cout << jlist.dump(2) << "\n";
    return asserted_failures > 0 ? 6 : 0;
}

// --- search ----------------------------------------------------------------------

int cmd_search(const std::string& mode, const std::string& corpus,
               const std::vector<int>& regular_spec, int connected_n,
               const GraphInput& base_in, double tol, const std::string& out) {
    std::vector<Graph> gs;
    int sources = !corpus.empty();
    sources += !regular_spec.empty();
    sources += connected_n > 0;
    if (sources != 1)
        throw BadParams("give exactly one input set: --corpus, --regular N R, --connected N");
    if (!corpus.empty()) {
        gs = load_corpus(corpus);
    } else if (!regular_spec.empty()) {
        if (regular_spec.size() != 2) throw BadParams("--regular wants two values: N R");
        gs = enumerate_regular_connected(regular_spec[0], regular_spec[1]);
    } else {
        gs = enumerate_connected_graphs(connected_n);
    }
    std::cerr << "searching " << gs.size() << " graphs, mode " << mode << "\n";

    Json jout = Json::array();
    auto emit_pair = [&](const SearchPair& p) {
        const std::string a = gs[p.i].name.empty() ? to_graph6(gs[p.i]) : gs[p.i].name;
        const std::string b = gs[p.j].name.empty() ? to_graph6(gs[p.j]) : gs[p.j].name;
        if (out == "json") {
            jout.push_back(Json{{"kind", p.kind},
                                {"i", p.i},
                                {"j", p.j},
                                {"graph_i", a},
                                {"graph_j", b},
                                {"spectral_gap", norm(p.spectral_gap)},
                                {"energy_gap", norm(p.energy_gap)},
                                {"isomorphism_checked", p.isomorphism_checked},
                                {"isomorphic", p.isomorphic}});
        } else if (out == "tsv") {
            std::cout << p.kind << "\t" << a << "\t" << b << "\t" << num_str(norm(p.spectral_gap))
                      << "\t" << num_str(norm(p.energy_gap)) << "\t"
                      << (p.isomorphism_checked ? (p.isomorphic ? "iso" : "noniso") : "unchecked")
                      << "\n";
        } else {
            std::cout << p.kind << ": " << a << "  ~  " << b
                      << "  spectral_gap=" << num_str(norm(p.spectral_gap))
                      << "  energy_gap=" << num_str(norm(p.energy_gap))
                      << (p.isomorphism_checked ? (p.isomorphic ? "  isomorphic" : "  non-isomorphic")
                                                : "  isomorphism unchecked")
                      << "\n";
        }
    };

    size_t found = 0;
    if (mode == "cospectral") {
        for (const auto& p : search_cospectral(gs, tol)) emit_pair(p), ++found;
    } else if (mode == "equienergetic") {
        for (const auto& p : search_equienergetic(gs, tol)) emit_pair(p), ++found;
    } else if (mode == "line-equienergetic") {
        for (const auto& p : search_line_equienergetic(gs, tol)) emit_pair(p), ++found;
    } else if (mode == "cvj-family") {
        const Graph base = base_in.given() ? load_graph(base_in) : cycle(6);
        for (const auto& p : search_cvj_family(base, gs, tol)) {
            const std::string a = gs[p.i].name.empty() ? to_graph6(gs[p.i]) : gs[p.i].name;
            const std::string b = gs[p.j].name.empty() ? to_graph6(gs[p.j]) : gs[p.j].name;
            ++found;
            if (out == "json") {
                jout.push_back(Json{{"kind", "cvj-family"},
                                    {"i", p.i},
                                    {"j", p.j},
                                    {"seed_i", a},
                                    {"seed_j", b},
                                    {"seed_gap", norm(p.seed_gap)},
                                    {"join_gap", norm(p.join_gap)},
                                    {"joins_isomorphism_checked", p.joins_isomorphism_checked},
                                    {"joins_isomorphic", p.joins_isomorphic}});
            } else if (out == "tsv") {
                std::cout << "cvj-family\t" << a << "\t" << b << "\t"
                          << num_str(norm(p.seed_gap)) << "\t" << num_str(norm(p.join_gap))
                          << "\t"
                          << (p.joins_isomorphism_checked
                                  ? (p.joins_isomorphic ? "iso" : "noniso")
                                  : "unchecked")
                          << "\n";
            } else {
                std::cout << "cvj-family: seeds " << a << "  ~  " << b
                          << "  seed_gap=" << num_str(norm(p.seed_gap))
                          << "  join_gap=" << num_str(norm(p.join_gap))
                          << (p.joins_isomorphism_checked
                                  ? (p.joins_isomorphic ? "  joins isomorphic"
                                                        : "  joins non-isomorphic")
                                  : "  joins unchecked")
                          << "\n";
            }
        }
    } else {
        throw BadParams("unknown mode \"" + mode +
                        "\" (known: cospectral, equienergetic, line-equienergetic, cvj-family)");
    }
    if (out == "json") std::cout << jout.dump(2) << "\n";
    std::cerr << "found " << found << " pair(s)\n";
    return 0;
}

// --- corpus ------------------------------------------------------------------------

int cmd_corpus(const std::string& family, int n, int r) {
    std::vector<Graph> gs;
    if (family == "all") {
        gs = enumerate_graphs(n);
    } else if (family == "connected") {
        gs = enumerate_connected_graphs(n);
    } else if (family == "trees") {
        gs = enumerate_trees(n);
    } else if (family == "regular") {
        if (r < 0) throw BadParams("--family regular needs --r");
        gs = enumerate_regular_connected(n, r);
    } else {
        throw BadParams("unknown family \"" + family +
                        "\" (known: all, connected, trees, regular)");
    }
    for (const auto& g : gs) std::cout << to_graph6(g) << "\n";
    std::cerr << gs.size() << " graph(s)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eccentricity-matrix spectra: invariants, constructions, verification"};
    app.require_subcommand(1);
    int rc = 0;

    const std::vector<std::string> formats{"json", "tsv", "pretty"};

    // compute
    auto* compute = app.add_subcommand("compute", "eccentricity-matrix invariants of one graph");
    GraphInput c_in;
    double c_tol = 1e-12;
    std::string c_out = "pretty";
    bool c_matrix = false;
    add_graph_options(compute, c_in, "", "the graph");
    compute->add_option("--tol", c_tol, "eigensolver relative tolerance (default 1e-12)");
    compute->add_option("--out", c_out, "output format")->check(CLI::IsMember(formats));
    compute->add_flag("--matrix", c_matrix, "include the matrix entries");
    compute->callback([&] { rc = cmd_compute(c_in, c_tol, c_out, c_matrix); });

    // op
    auto* op = app.add_subcommand("op", "build a derived graph");
    std::string op_name;
    GraphInput o_in1, o_in2, o_in3;
    std::string o_out = "pretty";
    op->add_option("name", op_name, "operation name")->required();
    add_graph_options(op, o_in1, "", "the first operand");
    add_graph_options(op, o_in2, "2", "the second operand");
    add_graph_options(op, o_in3, "3", "the third operand");
    op->add_option("--out", o_out, "output format")->check(CLI::IsMember(formats));
    op->callback([&] { rc = cmd_op(op_name, o_in1, o_in2, o_in3, o_out); });

    // verify
    auto* verify = app.add_subcommand("verify", "check closed-form results against computation");
    std::string v_theorem = "all";
    GraphInput v_in1, v_in2, v_in3;
    std::string v_corpus;
    double v_tol = 1e-7;
    int v_jobs = default_jobs();
    std::string v_out = "pretty";
    verify->add_option("--theorem", v_theorem, "result id or \"all\"");
    add_graph_options(verify, v_in1, "", "the instance");
    verify->add_option("--corpus", v_corpus, "graph6 file: run on every graph in it");
    add_graph_options(verify, v_in2, "2", "the second operand (default complete 2)");
    add_graph_options(verify, v_in3, "3", "the third operand (default complete 2)");
    verify->add_option("--tol", v_tol, "comparison tolerance (default 1e-7)");
    verify->add_option("--jobs", v_jobs, "worker threads (env ECC_SPECTRA_JOBS)");
    verify->add_option("--out", v_out, "output format")->check(CLI::IsMember(formats));
    verify->callback(
        [&] { rc = cmd_verify(v_theorem, v_in1, v_corpus, v_in2, v_in3, v_tol, v_jobs, v_out); });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the general bounds on a graph");
    GraphInput b_in;
    std::string b_corpus;
    double b_tol = kBoundTol;
    std::string b_out = "pretty";
    add_graph_options(bounds, b_in, "", "the graph");
    bounds->add_option("--corpus", b_corpus, "graph6 file: run on every graph in it");
    bounds->add_option("--tol", b_tol, "comparison tolerance (default 1e-9)");
    bounds->add_option("--out", b_out, "output format")->check(CLI::IsMember(formats));
    bounds->callback([&] { rc = cmd_bounds(b_in, b_corpus, b_tol, b_out); });

    // search
    auto* search = app.add_subcommand("search", "look for cospectral/equienergetic pairs");
    std::string s_mode;
    std::string s_corpus;
    std::vector<int> s_regular;
    int s_connected = 0;
    GraphInput s_base;
    double s_tol = 1e-7;
    std::string s_out = "pretty";
    search->add_option("--mode", s_mode, "cospectral | equienergetic | line-equienergetic | cvj-family")
        ->required();
    search->add_option("--corpus", s_corpus, "graph6 file with the candidate graphs");
    search->add_option("--regular", s_regular, "enumerate connected N-vertex R-regular candidates")
        ->expected(2);
    search->add_option("--connected", s_connected, "enumerate all connected graphs on N vertices");
    add_graph_options(search, s_base, "-base", "the join base (cvj-family, default cycle 6)");
    search->add_option("--tol", s_tol, "spectral equality tolerance (default 1e-7)");
    search->add_option("--out", s_out, "output format")->check(CLI::IsMember(formats));
    search->callback(
        [&] { rc = cmd_search(s_mode, s_corpus, s_regular, s_connected, s_base, s_tol, s_out); });

    // corpus
    auto* corpus = app.add_subcommand("corpus", "enumerate graph families as graph6 lines");
    std::string f_family = "connected";
    int f_n = 0, f_r = -1;
    corpus->add_option("--family", f_family, "all | connected | trees | regular");
    corpus->add_option("--n", f_n, "number of vertices")->required();
    corpus->add_option("--r", f_r, "degree (family regular)");
    corpus->callback([&] { rc = cmd_corpus(f_family, f_n, f_r); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const OpUsage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const MalformedGraph6& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedEdgeList& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Disconnected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const EmptyEdgeSet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const SizeLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
