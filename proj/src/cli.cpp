#include "bookem/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bookem/bounds.hpp"
#include "bookem/construct.hpp"
#include "bookem/embedding.hpp"
#include "bookem/graph.hpp"
#include "bookem/render.hpp"
#include "bookem/solver.hpp"

namespace bookem {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Primary payload sink: stdout by default, a file when -o/--output is given.
struct Output {
    std::ostream& out;
    std::string path;

    void emit(const std::string& payload) const {
        if (path.empty()) {
            out << payload;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + path);
        f << payload;
    }
};

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

// Spine file: '#' comments, an optional leading "spine:" tag, then the n
// vertex ids in spine order, whitespace-separated.
SpineOrder load_spine(const std::string& path, int n) {
    std::istringstream in(read_file(path));
    std::vector<int> order;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) {
            if (tok == "spine:") continue;
            try {
                order.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw UsageError("spine file " + path + ": bad token '" + tok + "'");
            }
        }
    }
    if (static_cast<int>(order.size()) != n) {
        throw UsageError("spine file " + path + ": " + std::to_string(order.size()) +
                         " vertices, graph has " + std::to_string(n));
    }
    return SpineOrder::from_order(std::move(order));
}

json edges_json(const Graph& g) {
    json arr = json::array();
    for (const Edge& e : g.edges()) arr.push_back(json::array({e.u, e.v}));
    return arr;
}

const char* parameter_name(SolveParameter p) {
    switch (p) {
        case SolveParameter::pn: return "pn";
        case SolveParameter::pn_local: return "pn_local";
        case SolveParameter::pn_union: return "pn_union";
    }
    return "?";
}

SolveParameter parse_parameter(const std::string& s) {
    if (s == "pn") return SolveParameter::pn;
    if (s == "pnl" || s == "pn_local") return SolveParameter::pn_local;
    if (s == "pnu" || s == "pn_union") return SolveParameter::pn_union;
    throw UsageError("unknown parameter '" + s + "'");
}

const char* target_name(BoundTarget t) {
    switch (t) {
        case BoundTarget::pn_classic: return "pn";
        case BoundTarget::pn_local: return "pn_local";
        case BoundTarget::pn_union: return "pn_union";
    }
    return "?";
}

BoundTarget parse_target(const std::string& s) {
    if (s == "pn") return BoundTarget::pn_classic;
    if (s == "pnl" || s == "pn_local") return BoundTarget::pn_local;
    if (s == "pnu" || s == "pn_union") return BoundTarget::pn_union;
    throw UsageError("unknown target '" + s + "'");
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
    std::string family;
    int n = -1, a = -1, b = -1, k = -1, level = -1;
    unsigned long long seed = 1;
};

int cmd_generate(const GenerateOpts& o, bool json_mode, const Output& sink) {
    auto need = [&](int value, const char* flag) {
        if (value < 0) throw UsageError("family '" + o.family + "' needs " + flag);
        return value;
    };
    Graph g;
    std::string family;
    if (o.family == "kn" || o.family == "complete") {
        g = gen_complete(need(o.n, "--n"));
        family = "complete";
    } else if (o.family == "knm" || o.family == "complete-bipartite") {
        g = gen_complete_bipartite(need(o.a, "--a"), need(o.b, "--b"));
        family = "complete-bipartite";
    } else if (o.family == "path") {
        g = gen_path(need(o.n, "--n"));
        family = "path";
    } else if (o.family == "cycle") {
        g = gen_cycle(need(o.n, "--n"));
        family = "cycle";
    } else if (o.family == "stacked" || o.family == "stacked-triangulation") {
        g = gen_stacked_triangulation(need(o.level, "--level"));
        family = "stacked-triangulation";
    } else if (o.family == "ktree" || o.family == "k-tree") {
        g = gen_k_tree(need(o.k, "--k"), need(o.n, "--n"), o.seed).graph;
        family = "k-tree";
    } else {
        throw UsageError("unknown family '" + o.family + "'");
    }

    if (json_mode) {
        json j;
        j["family"] = family;
        j["n"] = g.n();
        j["m"] = g.m();
        j["edges"] = edges_json(g);
        sink.emit(dump_json(j));
    } else {
        sink.emit(serialize_graph(g));
    }
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
    std::string emb_path, graph_path, expect;
    int witness_cap = kDefaultWitnessCap;
};

int cmd_verify(const VerifyOpts& o, bool json_mode, const Output& sink) {
    const Graph g = load_graph(o.graph_path);
    const LinearEmbedding emb = parse_embedding(read_file(o.emb_path), g);
    const VerificationReport rep = verify(emb, o.witness_cap);

    auto kind_name = [](Violation::Kind k) {
        return k == Violation::Kind::same_page ? "same_page" : "same_component";
    };

    if (json_mode) {
        json j;
        j["is_book"] = rep.is_book;
        j["is_union"] = rep.is_union;
        j["page_count"] = rep.page_count;
        j["locality"] = rep.locality;
        j["per_vertex_locality"] = rep.per_vertex_locality;
        json vs = json::array();
        for (const Violation& v : rep.violations) {
            vs.push_back(json{{"e1", {v.e1.u, v.e1.v}},
                              {"e2", {v.e2.u, v.e2.v}},
                              {"page", v.page},
                              {"kind", kind_name(v.kind)}});
        }
        j["violations"] = vs;
        j["violations_truncated"] = rep.violations_truncated;
        sink.emit(dump_json(j));
    } else {
        std::ostringstream txt;
        txt << "is_book: " << (rep.is_book ? "true" : "false") << "\n";
        txt << "is_union: " << (rep.is_union ? "true" : "false") << "\n";
        txt << "pages: " << rep.page_count << "\n";
        txt << "locality: " << rep.locality << "\n";
        for (const Violation& v : rep.violations) {
            txt << "violation (" << kind_name(v.kind) << "): " << v.e1.u << "-" << v.e1.v
                << " x " << v.e2.u << "-" << v.e2.v << " on page " << v.page << "\n";
        }
        if (rep.violations_truncated) txt << "violations truncated\n";
        sink.emit(txt.str());
    }

    if (o.expect == "book") return rep.is_book ? 0 : 1;
    if (o.expect == "union") return rep.is_union ? 0 : 1;
    return 0;
}

// ------------------------------------------------------------------- bound

struct BoundOpts {
    std::string graph_path;
    std::string target = "pnl";
    int pn_lower = 0;
};

int cmd_bound(const BoundOpts& o, bool json_mode, const Output& sink) {
    if (o.pn_lower < 0) throw UsageError("--pn-lower must be nonnegative");
    const Graph g = load_graph(o.graph_path);
    const BoundReport rep = make_bound_report(g, parse_target(o.target), o.pn_lower);

    if (json_mode) {
        json j;
        j["target"] = target_name(rep.target);
        j["lower"] = rep.lower;
        j["upper"] = rep.upper;
        json prov = json::array();
        for (const BoundProvenance& p : rep.provenance) {
            prov.push_back(json{{"rule", p.rule}, {"value", p.value}, {"witness", p.witness}});
        }
        j["provenance"] = prov;
        sink.emit(dump_json(j));
    } else {
        std::ostringstream txt;
        txt << "target: " << target_name(rep.target) << "\n";
        txt << "lower: " << rep.lower << "\n";
        if (rep.upper < 0) {
            txt << "upper: unknown\n";
        } else {
            txt << "upper: " << rep.upper << "\n";
        }
        for (const BoundProvenance& p : rep.provenance) {
            txt << "rule " << p.rule << " = " << p.value;
            if (!p.witness.empty()) txt << " [" << p.witness << "]";
            txt << "\n";
        }
        sink.emit(txt.str());
    }
    return 0;
}

// --------------------------------------------------------------- construct

struct ConstructOpts {
    std::string method, graph_path, graph_out;
    int n = -1, k = -1, locality = -1, num_templates = 1, shifts = -1;
    unsigned long long seed = 1;
    long long budget = 50'000'000;
};

void write_side_graph(const std::string& path, const Graph& g) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << serialize_graph(g);
}

int cmd_construct(const ConstructOpts& o, bool json_mode, const Output& sink,
                  std::ostream& err) {
    auto need = [&](int value, const char* flag) {
        if (value < 0) throw UsageError("method '" + o.method + "' needs " + flag);
        return value;
    };
    auto need_graph = [&]() {
        if (o.graph_path.empty()) {
            throw UsageError("method '" + o.method + "' needs an input graph file");
        }
        return load_graph(o.graph_path);
    };

    std::optional<LinearEmbedding> emb;
    std::string status = "ok";
    int exit_code = 0;

    if (o.method == "star-union") {
        const Graph g = need_graph();
        emb = union_embedding_from_star_forests(
            star_forests_from_forests(arboricity_partition(g), g), g);
    } else if (o.method == "star-local") {
        const Graph g = need_graph();
        emb = local_embedding_from_stars(g, greedy_star_partition(g));
    } else if (o.method == "kn-zigzag") {
        emb = kn_zigzag(need(o.n, "--n"));
    } else if (o.method == "ktree-colors") {
        const KTree kt = gen_k_tree(need(o.k, "--k"), need(o.n, "--n"), o.seed);
        const KTreeColoring kc = ktree_color_partition(kt);
        std::vector<int> assignment(static_cast<size_t>(kt.graph.m()), -1);
        int page = 0;
        for (const auto& [pair, edge_ids] : kc.pair_trees) {
            for (int e : edge_ids) assignment[static_cast<size_t>(e)] = page;
            ++page;
        }
        emb = LinearEmbedding::make(kt.graph, SpineOrder::identity(kt.graph.n()),
                                    PagePartition::normalized(assignment));
    } else if (o.method == "template") {
        const TemplateSearchResult ts = template_search(
            need(o.n, "--n"), need(o.locality, "--locality"), o.num_templates,
            need(o.shifts, "--shifts"), o.budget);
        if (ts.status == TemplateSearchResult::Status::found) {
            emb = embedding_from_templates(ts.templates);
        } else if (ts.status == TemplateSearchResult::Status::not_found) {
            status = "not-found";
        } else {
            status = "timeout";
            exit_code = 3;
        }
    } else {
        throw UsageError("unknown method '" + o.method + "'");
    }

    json j;
    j["method"] = o.method;
    j["status"] = status;
    std::ostringstream txt;
    if (emb.has_value()) {
        const VerificationReport rep = verify(*emb, 0);
        err << "pages: " << rep.page_count << ", locality: " << rep.locality << "\n";
        j["pages"] = rep.page_count;
        j["locality"] = rep.locality;
        j["embedding"] = serialize_embedding(*emb);
        if (!o.graph_out.empty()) {
            write_side_graph(o.graph_out, emb->graph);
            j["graph"] = serialize_graph(emb->graph);
        }
        txt << serialize_embedding(*emb);
    } else {
        txt << "status: " << status << "\n";
    }
    sink.emit(json_mode ? dump_json(j) : txt.str());
    return exit_code;
}

// ------------------------------------------------------------------- solve

struct SolveOpts {
    std::string graph_path, param, spine_path, cert_path;
    double timeout = 0.0;
    long long nodes = 0;
    int jobs = 1;
};

int cmd_solve(const SolveOpts& o, bool json_mode, const Output& sink, std::ostream& err) {
    SolveRequest req;
    req.graph = load_graph(o.graph_path);
    req.parameter = parse_parameter(o.param);
    if (!o.spine_path.empty()) req.spine = load_spine(o.spine_path, req.graph.n());
    req.budget.time_limit_s = o.timeout;
    req.budget.node_limit = o.nodes;
    req.jobs = o.jobs;

    const SolveResult res = solve(req);
    err << "nodes: " << res.stats.nodes << ", spines: " << res.stats.spines
        << ", elapsed: " << res.stats.elapsed_s << "s\n";

    if (!o.cert_path.empty() && res.certificate.has_value()) {
        std::ofstream f(o.cert_path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + o.cert_path);
        f << serialize_embedding(*res.certificate);
    }

    const char* name = parameter_name(req.parameter);
    if (json_mode) {
        json j;
        j["parameter"] = name;
        j["lower"] = res.lower;
        j["upper"] = res.upper;
        j["exact"] = res.exact;
        if (res.certificate.has_value()) j["certificate"] = serialize_embedding(*res.certificate);
        sink.emit(dump_json(j));
    } else {
        std::ostringstream txt;
        if (res.exact) {
            txt << name << " = " << res.upper << "\n";
        } else {
            txt << name << " in [" << res.lower << ", " << res.upper << "]\n";
        }
        sink.emit(txt.str());
    }
    return res.exact ? 0 : 3;
}

// ---------------------------------------------------------------- template

struct TemplateOpts {
    int n = -1, locality = -1, num_templates = 1, shifts = -1;
    long long budget = 50'000'000;
};

int cmd_template(const TemplateOpts& o, bool json_mode, const Output& sink) {
    if (o.n < 0 || o.locality < 0 || o.shifts < 0) {
        throw UsageError("template needs --n, --locality and --shifts");
    }
    const TemplateSearchResult ts =
        template_search(o.n, o.locality, o.num_templates, o.shifts, o.budget);
    const char* status = ts.status == TemplateSearchResult::Status::found      ? "found"
                         : ts.status == TemplateSearchResult::Status::not_found ? "not-found"
                                                                                : "timeout";

    if (json_mode) {
        json j;
        j["status"] = status;
        j["n"] = o.n;
        j["locality"] = o.locality;
        j["num_templates"] = o.num_templates;
        j["shifts"] = o.shifts;
        j["nodes"] = ts.nodes;
        json tpls = json::array();
        for (const CyclicTemplate& t : ts.templates) {
            json chords = json::array();
            for (const auto& [start, len] : t.chords) chords.push_back(json::array({start, len}));
            tpls.push_back(chords);
        }
        j["templates"] = tpls;
        sink.emit(dump_json(j));
    } else {
        std::ostringstream txt;
        txt << "status: " << status << "\n";
        for (size_t i = 0; i < ts.templates.size(); ++i) {
            txt << "template " << i << ":";
            for (const auto& [start, len] : ts.templates[i].chords) {
                txt << " (" << start << "," << len << ")";
            }
            txt << "\n";
        }
        sink.emit(txt.str());
    }
    return ts.status == TemplateSearchResult::Status::timeout ? 3 : 0;
}

// ------------------------------------------------------------------ render

struct RenderOpts {
    std::string emb_path, graph_path;
    int width = 800, height = 360;
    bool union_mode = false;
};

int cmd_render(const RenderOpts& o, bool json_mode, const Output& sink) {
    const Graph g = load_graph(o.graph_path);
    const LinearEmbedding emb = parse_embedding(read_file(o.emb_path), g);
    RenderSpec spec;
    spec.width = o.width;
    spec.height = o.height;
    spec.union_mode = o.union_mode;
    const std::string svg = render_svg(emb, spec);
    if (json_mode) {
        sink.emit(dump_json(json{{"svg", svg}}));
    } else {
        sink.emit(svg);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "book embedding toolkit: graph generators, embedding verification, page-number "
        "bounds, constructive embeddings, exact solving and SVG arc diagrams",
        "bookem"};
    app.require_subcommand(1);

    bool json_mode = false;
    std::string out_path;
    app.add_flag("--json", json_mode, "emit machine-readable JSON instead of text");
    app.add_option("-o,--output", out_path, "write the primary output to FILE instead of stdout");

    GenerateOpts gen;
    auto* sub_gen = app.add_subcommand("generate", "emit a graph from a named family");
    sub_gen->fallthrough();
    sub_gen->add_option("--family", gen.family, "kn|knm|path|cycle|stacked|ktree")
        ->required()
        ->check(CLI::IsMember({"kn", "complete", "knm", "complete-bipartite", "path", "cycle",
                               "stacked", "stacked-triangulation", "ktree", "k-tree"}));
    sub_gen->add_option("--n", gen.n, "vertex count (kn, path, cycle, ktree)");
    sub_gen->add_option("--a", gen.a, "left side size (knm)");
    sub_gen->add_option("--b", gen.b, "right side size (knm)");
    sub_gen->add_option("--k", gen.k, "clique size parameter (ktree)");
    sub_gen->add_option("--level", gen.level, "stacking depth (stacked)");
    sub_gen->add_option("--seed", gen.seed, "generator seed (ktree)");

    VerifyOpts ver;
    auto* sub_ver = app.add_subcommand("verify", "check an embedding file against a graph file");
    sub_ver->fallthrough();
    sub_ver->add_option("embedding", ver.emb_path, "embedding file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_ver->add_option("graph", ver.graph_path, "graph file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_ver->add_option("--expect", ver.expect, "fail (exit 1) unless this property holds")
        ->check(CLI::IsMember({"book", "union"}));
    sub_ver->add_option("--witness-cap", ver.witness_cap,
                        "max violations reported, -1 for all");

    BoundOpts bnd;
    auto* sub_bnd = app.add_subcommand("bound", "report lower/upper page-number bounds");
    sub_bnd->fallthrough();
    sub_bnd->add_option("graph", bnd.graph_path, "graph file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_bnd->add_option("--target", bnd.target, "pn|pnl|pnu (default pnl)")
        ->check(CLI::IsMember({"pn", "pnl", "pnu", "pn_local", "pn_union"}));
    sub_bnd->add_option("--pn-lower", bnd.pn_lower,
                        "known lower bound on the classical page number");

    ConstructOpts con;
    auto* sub_con = app.add_subcommand("construct", "build an embedding constructively");
    sub_con->fallthrough();
    sub_con->add_option("graph", con.graph_path, "input graph file (star-union, star-local)")
        ->check(CLI::ExistingFile);
    sub_con
        ->add_option("--method", con.method,
                     "star-union|star-local|kn-zigzag|ktree-colors|template")
        ->required()
        ->check(CLI::IsMember(
            {"star-union", "star-local", "kn-zigzag", "ktree-colors", "template"}));
    sub_con->add_option("--n", con.n, "vertex count (kn-zigzag, ktree-colors, template)");
    sub_con->add_option("--k", con.k, "clique size parameter (ktree-colors)");
    sub_con->add_option("--seed", con.seed, "generator seed (ktree-colors)");
    sub_con->add_option("--locality", con.locality, "locality bound (template)");
    sub_con->add_option("--templates", con.num_templates, "number of templates (template)");
    sub_con->add_option("--shifts", con.shifts, "cyclic copies per template (template)");
    sub_con->add_option("--budget", con.budget, "search node budget (template)");
    sub_con->add_option("--graph-out", con.graph_out,
                        "also write the constructed graph to FILE");

    SolveOpts sol;
    auto* sub_sol = app.add_subcommand("solve", "compute a page-number parameter exactly");
    sub_sol->fallthrough();
    sub_sol->add_option("graph", sol.graph_path, "graph file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_sol->add_option("--param", sol.param, "pn|pnl|pnu")
        ->required()
        ->check(CLI::IsMember({"pn", "pnl", "pnu", "pn_local", "pn_union"}));
    sub_sol->add_option("--spine", sol.spine_path, "fix the spine from this file")
        ->check(CLI::ExistingFile);
    sub_sol->add_option("--timeout", sol.timeout, "time budget in seconds (0 = unlimited)");
    sub_sol->add_option("--nodes", sol.nodes, "search node budget (0 = unlimited)");
    sub_sol->add_option("--jobs", sol.jobs, "worker threads for spine enumeration");
    sub_sol->add_option("--cert", sol.cert_path, "write the certificate embedding to FILE");

    TemplateOpts tpl;
    auto* sub_tpl = app.add_subcommand("template", "search for cyclic complete-graph templates");
    sub_tpl->fallthrough();
    sub_tpl->add_option("--n", tpl.n, "complete graph order")->required();
    sub_tpl->add_option("--locality", tpl.locality, "locality bound")->required();
    sub_tpl->add_option("--templates", tpl.num_templates, "number of templates");
    sub_tpl->add_option("--shifts", tpl.shifts, "cyclic copies per template")->required();
    sub_tpl->add_option("--budget", tpl.budget, "search node budget");

    RenderOpts ren;
    auto* sub_ren = app.add_subcommand("render", "draw an embedding as an SVG arc diagram");
    sub_ren->fallthrough();
    sub_ren->add_option("embedding", ren.emb_path, "embedding file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_ren->add_option("graph", ren.graph_path, "graph file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_ren->add_option("--width", ren.width, "canvas width in pixels");
    sub_ren->add_option("--height", ren.height, "canvas height in pixels");
    sub_ren->add_flag("--union", ren.union_mode,
                      "dash only crossings within one page component");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Output sink{out, out_path};
        if (sub_gen->parsed()) return cmd_generate(gen, json_mode, sink);
        if (sub_ver->parsed()) return cmd_verify(ver, json_mode, sink);
        if (sub_bnd->parsed()) return cmd_bound(bnd, json_mode, sink);
        if (sub_con->parsed()) return cmd_construct(con, json_mode, sink, err);
        if (sub_sol->parsed()) return cmd_solve(sol, json_mode, sink, err);
        if (sub_tpl->parsed()) return cmd_template(tpl, json_mode, sink);
        if (sub_ren->parsed()) return cmd_render(ren, json_mode, sink);
        err << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bookem
