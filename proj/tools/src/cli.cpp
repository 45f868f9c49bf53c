#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "tautdrg/error.hpp"
#include "tautdrg/generators.hpp"
#include "tautdrg/graph.hpp"
#include "tautdrg/pipeline.hpp"

namespace tautdrg::cli {

namespace {

void add_analysis_options(CLI::App& sub, AnalysisConfig& cfg, std::string& sections)
{
    auto* in = sub.add_option("--input", cfg.input, "edge-list file, one 'u v' pair per line");
    auto* fam = sub.add_option("--family", cfg.family, "hypercube:D, doubled_odd:m, cycle:n, double:SPEC");
    in->excludes(fam);
    sub.add_option("--vertex", cfg.vertex, "base vertex, or 'all'")->capture_default_str();
    sub.add_flag("--json", cfg.json, "JSON report");
    sub.add_flag("--exhaustive", cfg.exhaustive, "analyze every vertex");
    sub.add_option("--tol-eig", cfg.tol.eig, "eigen-decomposition tolerance")->capture_default_str();
    sub.add_option("--tol-cluster", cfg.tol.cluster, "eigenvalue clustering tolerance")->capture_default_str();
    sub.add_option("--tol-module", cfg.tol.module, "module identity tolerance")->capture_default_str();
    sub.add_option("--tol-class", cfg.tol.classify, "classification equality tolerance")->capture_default_str();
    sub.add_option("--output", cfg.output, "write the report here instead of stdout");
    sub.add_option("--sections", sections,
                   "comma-separated subset of graph,array,spectrum,vertices,classification,verification");
}

std::set<std::string> parse_sections(const std::string& s)
{
    if (s.empty())
        return all_sections();
    std::set<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!all_sections().count(item))
            throw ParseError("unknown section '" + item + "'");
        out.insert(item);
    }
    return out;
}

Graph load(const AnalysisConfig& cfg, Source& src)
{
    if (!cfg.input.empty()) {
        src = {"file", cfg.input};
        return load_graph_file(cfg.input);
    }
    if (!cfg.family.empty()) {
        src = {"family", cfg.family};
        return generate(cfg.family);
    }
    throw ParseError("one of --input or --family is required");
}

AnalysisOptions options(const AnalysisConfig& cfg)
{
    AnalysisOptions o;
    o.tol = cfg.tol;
    if (cfg.exhaustive || cfg.vertex == "all") {
        o.all_vertices = true;
        return o;
    }
    int x = 0;
    const char* b = cfg.vertex.data();
    const char* e = b + cfg.vertex.size();
    const auto [p, ec] = std::from_chars(b, e, x);
    if (ec != std::errc() || p != e)
        throw ParseError("--vertex expects an integer or 'all', got '" + cfg.vertex + "'");
    o.vertices = {x};
    return o;
}

void emit(const AnalysisConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f || !(f << text))
        throw IoError("cannot write '" + cfg.output + "'");
}

int analyze_or_verify(const AnalysisConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.tol.valid())
        throw ParseError("tolerances must be positive");
    Source src;
    Graph g = load(cfg, src);
    const Analysis a = run_analysis(std::move(g), options(cfg));

    const bool verify = cfg.command == "verify";
    const Json doc = verify ? verify_document(a, src) : analysis_document(a, src, cfg.sections);
    std::string text;
    if (cfg.json)
        text = doc.dump(2) + "\n";
    else
        text = verify ? render_verify_table(doc) : render_text(doc);
    emit(cfg, text, out);

    const VerificationReport all = a.combined();
    if (const auto* f = all.first_failure()) {
        err << "verification failed: " << f->name << " (residual " << format_number(f->residual)
            << ", threshold " << format_number(f->threshold) << ")";
        if (!f->detail.empty())
            err << " " << f->detail;
        err << '\n';
        return kVerification;
    }
    return kOk;
}

int generate_cmd(const AnalysisConfig& cfg, std::ostream& out)
{
    if (cfg.family.empty())
        throw ParseError("generate needs a family, e.g. hypercube:4");
    emit(cfg, to_edge_list(generate(cfg.family)), out);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectral and subconstituent analysis of bipartite distance-regular graphs"};
    app.name("tautdrg");
    app.require_subcommand(1);

    AnalysisConfig cfg;
    std::string sections;
    auto* analyze = app.add_subcommand("analyze", "full report: spectrum, local spectra, modules, classification");
    add_analysis_options(*analyze, cfg, sections);
    auto* verify = app.add_subcommand("verify", "residual table, one row per identity");
    add_analysis_options(*verify, cfg, sections);

    auto* gen = app.add_subcommand("generate", "write the edge list of a generated graph");
    std::string positional;
    auto* gpos = gen->add_option("spec", positional, "NAME:PARAMS");
    gen->add_option("--family", cfg.family, "NAME:PARAMS")->excludes(gpos);
    gen->add_option("--output", cfg.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            cfg.command = "generate";
            if (cfg.family.empty())
                cfg.family = positional;
            return generate_cmd(cfg, out);
        }
        cfg.command = analyze->parsed() ? "analyze" : "verify";
        cfg.sections = parse_sections(sections);
        return analyze_or_verify(cfg, out, err);
    } catch (const HypothesisError& e) {
        err << "hypothesis not satisfied: " << e.what() << '\n';
        return kHypothesis;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kVerification;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace tautdrg::cli
