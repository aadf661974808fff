#include "emd/cli.hpp"

#include "emd/construct.hpp"
#include "emd/report.hpp"
#include "emd/resolve.hpp"
#include "emd/silicate.hpp"
#include "emd/solver.hpp"
#include "emd/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace emd::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct GraphSource {
    std::string path;
    std::string family;
    int n = 0;
    std::string skeleton_path;
};

void add_source_options(CLI::App* cmd, GraphSource& src, bool positional_graph)
{
    if (positional_graph)
        cmd->add_option("graph", src.path, "Edge-list file");
    cmd->add_option("--family", src.family, "chain, cyclic or skeleton");
    cmd->add_option("-n", src.n, "Number of tetrahedra");
    cmd->add_option("--skeleton", src.skeleton_path, "Base graph for --family skeleton");
}

std::optional<SilicateSpec> spec_of(const GraphSource& src)
{
    if (src.family.empty())
        return std::nullopt;
    SilicateSpec spec;
    spec.family = parse_family(src.family);
    spec.n = src.n;
    if (spec.family == Family::skeleton) {
        if (src.skeleton_path.empty())
            throw UsageError("--family skeleton needs --skeleton <edge-list>");
        spec.skeleton = read_edge_list_file(src.skeleton_path);
        spec.n = static_cast<int>(spec.skeleton->edge_count());
    }
    return spec;
}

Graph load_graph(const GraphSource& src, const std::optional<SilicateSpec>& spec)
{
    if (!src.path.empty())
        return read_edge_list_file(src.path);
    if (spec)
        return make_silicate(*spec).graph;
    throw UsageError("no graph given: pass an edge-list file or --family/-n");
}

std::vector<VertexId> parse_ids(const std::string& text)
{
    std::vector<VertexId> ids;
    std::string token;
    std::istringstream in(text);
    while (in >> token) {
        std::istringstream parts(token);
        std::string piece;
        while (std::getline(parts, piece, ',')) {
            if (piece.empty())
                continue;
            std::size_t used = 0;
            long long value = -1;
            try {
                value = std::stoll(piece, &used);
            }
            catch (const std::exception&) {
                used = 0;
            }
            if (used != piece.size() || value < 0)
                throw UsageError("bad vertex id '" + piece + "'");
            ids.push_back(static_cast<VertexId>(value));
        }
    }
    return ids;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write " + path);
    f << text;
}

GraphDescriptor describe(const Graph& g, const std::optional<SilicateSpec>& spec)
{
    GraphDescriptor d;
    if (spec) {
        d.family = std::string(to_string(spec->family));
        d.n = spec->n;
    }
    d.vertex_count = g.vertex_count();
    d.edge_count = g.edge_count();
    return d;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Edge metric dimension toolkit for chain and cyclic silicate networks",
                 "silicate-emd"};
    app.require_subcommand(1);

    // generate
    GraphSource gen_src;
    std::string gen_family_pos;
    int gen_n_pos = 0;
    std::string gen_output;
    bool gen_json = false;
    auto* generate = app.add_subcommand("generate", "Write a silicate network as an edge list");
    generate->add_option("family_pos", gen_family_pos, "chain, cyclic or skeleton");
    generate->add_option("n_pos", gen_n_pos, "Number of tetrahedra");
    add_source_options(generate, gen_src, false);
    generate->add_option("-o,--output", gen_output,
                         "Write <prefix>.edges and <prefix>.json instead of stdout");
    generate->add_flag("--json", gen_json, "Print the structure sidecar instead of the edge list");

    // verify
    GraphSource ver_src;
    std::string ver_set;
    std::string ver_set_file;
    std::string ver_target = "edge";
    bool ver_json = false;
    bool ver_codes = false;
    auto* verify = app.add_subcommand("verify", "Check whether a vertex set resolves the graph");
    add_source_options(verify, ver_src, true);
    auto* set_opt = verify->add_option("--set", ver_set, "Landmark ids, comma or space separated");
    verify->add_option("--set-file", ver_set_file, "File holding landmark ids")
        ->excludes(set_opt);
    verify->add_option("--target", ver_target, "edge or vertex");
    verify->add_flag("--json", ver_json, "Print the verification certificate as JSON");
    verify->add_flag("--codes", ver_codes, "Include the code table in the JSON certificate");

    // analyze
    GraphSource ana_src;
    std::vector<std::string> ana_sets;
    auto* analyze = app.add_subcommand(
        "analyze", "Decompose into tetrahedra and twins; evaluate cubic-vertex conditions");
    add_source_options(analyze, ana_src, true);
    analyze->add_option("--set", ana_sets, "Landmark ids to evaluate (repeatable)");

    // solve
    GraphSource sol_src;
    std::string sol_target = "edge";
    unsigned sol_workers = 1;
    std::uint64_t sol_budget = 0;
    int sol_start = -1;
    int sol_max = -1;
    bool sol_cubic = false;
    bool sol_timing = false;
    std::string sol_output;
    auto* solve_cmd = app.add_subcommand("solve", "Exact minimum resolving set with certificate");
    add_source_options(solve_cmd, sol_src, true);
    solve_cmd->add_option("--target", sol_target, "edge or vertex");
    solve_cmd->add_option("--workers", sol_workers, "Worker threads")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--budget-subsets", sol_budget, "Stop after this many subsets (0 = no limit)");
    solve_cmd->add_option("--start-size", sol_start, "First set size to try");
    solve_cmd->add_option("--max-size", sol_max, "Largest set size to try");
    solve_cmd->add_flag("--cubic-only", sol_cubic, "Search degree-3 vertices only");
    solve_cmd->add_flag("--timing", sol_timing, "Include elapsed time in the certificate");
    solve_cmd->add_flag("--json", "Accepted for symmetry; output is always JSON");
    solve_cmd->add_option("-o,--output", sol_output, "Write the certificate here instead of stdout");

    // construct
    GraphSource con_src;
    auto* construct = app.add_subcommand(
        "construct", "Build the labeling-based edge resolving set for CS_n or CC_n");
    add_source_options(construct, con_src, false);

    // table
    std::string tab_family;
    int tab_from = 0;
    int tab_to = 0;
    std::uint64_t tab_budget = 0;
    unsigned tab_workers = 1;
    bool tab_json = false;
    auto* table = app.add_subcommand("table", "Compare bounds, constructions and exact values");
    table->add_option("--family", tab_family, "chain or cyclic")->required();
    table->add_option("--from", tab_from, "First n")->required();
    table->add_option("--to", tab_to, "Last n")->required();
    table->add_option("--budget-subsets", tab_budget,
                      "Exact-solver budget per row (0 skips the exact column)");
    table->add_option("--workers", tab_workers, "Worker threads")->check(CLI::PositiveNumber);
    table->add_flag("--json", tab_json, "Print JSON instead of text");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*generate) {
            if (!gen_family_pos.empty())
                gen_src.family = gen_family_pos;
            if (gen_n_pos != 0)
                gen_src.n = gen_n_pos;
            const auto spec = spec_of(gen_src);
            if (!spec)
                throw UsageError("generate needs a family");
            const LabeledSilicate sil = make_silicate(*spec);
            if (!gen_output.empty()) {
                write_text(gen_output + ".edges", format_edge_list(sil.graph));
                write_text(gen_output + ".json", structure_json(sil));
            }
            else if (gen_json) {
                out << structure_json(sil);
            }
            else {
                write_edge_list(out, sil.graph);
            }
            return kOk;
        }

        if (*verify) {
            const auto spec = spec_of(ver_src);
            const Graph g = load_graph(ver_src, spec);
            std::string ids_text = ver_set;
            if (!ver_set_file.empty()) {
                std::ifstream f(ver_set_file);
                if (!f)
                    throw UsageError("cannot open " + ver_set_file);
                ids_text.assign(std::istreambuf_iterator<char>(f), {});
            }
            else if (verify->count("--set") == 0) {
                throw UsageError("verify needs --set or --set-file");
            }
            const LandmarkSet s(parse_ids(ids_text));
            s.check_range(g.vertex_count());
            const Target target = parse_target(ver_target);
            const DistanceMatrix d = all_pairs_distances(g);
            const std::string cert =
                verification_json(describe(g, spec), g, d, s, target, ver_codes);
            const bool resolving = nlohmann::json::parse(cert)["resolving"].get<bool>();
            if (ver_json) {
                out << cert;
            }
            else if (resolving) {
                out << "resolving: " << s.size() << " landmarks distinguish every "
                    << to_string(target) << '\n';
            }
            else if (target == Target::edge) {
                auto w = is_edge_resolving(g, d, s).witness;
                out << "not resolving: edges (" << w->first.u << ", " << w->first.v << ") and ("
                    << w->second.u << ", " << w->second.v << ") share code\n";
            }
            else {
                auto w = is_vertex_resolving(g, d, s).witness;
                out << "not resolving: vertices " << w->first << " and " << w->second
                    << " share code\n";
            }
            return resolving ? kOk : kNotResolving;
        }

        if (*analyze) {
            const auto spec = spec_of(ana_src);
            const Graph g = load_graph(ana_src, spec);
            const Decomposition dec = decompose(g);
            std::vector<std::pair<LandmarkSet, ConditionReport>> reports;
            for (const auto& text : ana_sets) {
                LandmarkSet s(parse_ids(text));
                s.check_range(g.vertex_count());
                auto rep = check_sufficient(g, s, dec.tetrahedra, dec.twins);
                reports.emplace_back(std::move(s), std::move(rep));
            }
            out << decomposition_json(dec, reports);
            return kOk;
        }

        if (*solve_cmd) {
            const auto spec = spec_of(sol_src);
            const Graph g = load_graph(sol_src, spec);
            SolveOptions opts;
            opts.target = parse_target(sol_target);
            opts.parallel_workers = sol_workers;
            if (sol_budget > 0)
                opts.budget_subsets = sol_budget;
            if (sol_max >= 0)
                opts.max_size = sol_max;
            opts.restrict_to_cubic = sol_cubic;
            if (sol_start >= 0)
                opts.start_size = sol_start;
            else if (spec && spec->family != Family::skeleton && opts.target == Target::edge)
                opts.start_size = lemma_lower_bound(*spec);
            const Certificate cert = solve(g, opts);
            CertificateContext ctx;
            if (spec) {
                ctx.family = std::string(to_string(spec->family));
                ctx.n = spec->n;
            }
            const std::string text = certificate_json(cert, ctx, sol_timing);
            if (sol_output.empty())
                out << text;
            else
                write_text(sol_output, text);
            return cert.optimal ? kOk : kPartial;
        }

        if (*construct) {
            const auto spec = spec_of(con_src);
            if (!spec || spec->family == Family::skeleton)
                throw UsageError("construct needs --family chain|cyclic and -n");
            const LabeledSilicate sil = make_silicate(*spec);
            const LandmarkSet s = construct_ers(sil, labeling_for(spec->family, spec->n));
            const bool resolving = is_edge_resolving(sil.graph, s).resolving;
            Certificate cert;
            if (resolving)
                cert.dimension = static_cast<int>(s.size());
            cert.witness = s;
            cert.lower_bound = lemma_lower_bound(*spec);
            cert.upper_bound = resolving ? static_cast<int>(s.size())
                                         : static_cast<int>(sil.graph.vertex_count());
            CertificateContext ctx{std::string(to_string(spec->family)), spec->n,
                                   "theorem-construction"};
            auto j = nlohmann::ordered_json::parse(certificate_json(cert, ctx));
            j["predicted"] = predicted_dimension(spec->family, spec->n);
            j["resolving"] = resolving;
            out << j.dump(2) << '\n';
            return resolving ? kOk : kNotResolving;
        }

        if (*table) {
            const Family family = parse_family(tab_family);
            if (family == Family::skeleton)
                throw UsageError("table supports chain and cyclic only");
            TableOptions opts;
            opts.budget_subsets = tab_budget;
            opts.workers = tab_workers;
            const auto rows = build_table(family, tab_from, tab_to, opts);
            out << (tab_json ? table_json(rows) : table_text(rows));
            return kOk;
        }
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace emd::cli
