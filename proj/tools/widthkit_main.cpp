// widthkit: exact width parameters, clique-width expression compilation, and
// corpus verification for desk-scale graphs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "widthkit/compile.hpp"
#include "widthkit/decomposition.hpp"
#include "widthkit/gen.hpp"
#include "widthkit/graph_io.hpp"
#include "widthkit/kexpr.hpp"
#include "widthkit/solvers.hpp"
#include "widthkit/verify.hpp"
#include "widthkit/version.hpp"

namespace fs = std::filesystem;
using namespace widthkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitPartial = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

std::string first_line(const std::string& text) {
    auto nl = text.find('\n');
    std::string line = nl == std::string::npos ? text : text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

Graph load_graph(const std::string& path, std::string format) {
    std::string text = read_file(path);
    if (format.empty()) {
        // sniff: an edge-list header starts with a digit (< '?'), graph6 bytes are >= 63
        std::string line = first_line(text);
        format = (!line.empty() && static_cast<unsigned char>(line[0]) >= 63) ? "g6" : "edgelist";
    }
    if (format == "g6") return from_graph6(first_line(text));
    if (format == "edgelist") return from_edge_list(text);
    throw std::invalid_argument("unknown format '" + format + "' (use g6 or edgelist)");
}

std::vector<NamedGraph> load_corpus(const std::string& dir) {
    std::vector<NamedGraph> corpus;
    fs::path root(dir);
    if (!fs::is_directory(root)) throw std::invalid_argument("not a directory: " + dir);
    std::vector<std::string> files;
    fs::path manifest = root / "manifest.json";
    if (fs::exists(manifest)) {
        auto j = nlohmann::ordered_json::parse(read_file(manifest.string()));
        for (auto& row : j.at("graphs")) files.push_back(row.at("file").get<std::string>());
    } else {
        for (auto& entry : fs::directory_iterator(root))
            if (entry.path().extension() == ".g6") files.push_back(entry.path().filename().string());
        std::sort(files.begin(), files.end());
    }
    for (auto& f : files) {
        std::istringstream in(read_file((root / f).string()));
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            std::string id = lineno == 1 ? f : f + ":" + std::to_string(lineno);
            corpus.push_back({id, from_graph6(line)});
        }
    }
    return corpus;
}

int run_width(const std::string& which, const std::string& input, const std::string& format,
              const std::string& witness_out) {
    Graph g = load_graph(input, format);
    if (which == "treewidth") {
        auto res = exact_treewidth(g);
        std::cout << "treewidth " << res.width << "\n";
        if (!witness_out.empty()) write_file(witness_out, treedec_to_json(res.decomposition).dump(2) + "\n");
    } else {
        auto res = exact_rankwidth(g);
        std::cout << "rankwidth " << res.width << "\n";
        if (!witness_out.empty()) write_file(witness_out, rankdec_to_json(res.decomposition).dump(2) + "\n");
    }
    return kExitOk;
}

int run_compile(const std::string& input, const std::string& format, const std::string& rankdec,
                const std::string& out) {
    Graph g = load_graph(input, format);
    RankDecomposition d;
    if (!rankdec.empty()) {
        d = rankdec_from_json(nlohmann::ordered_json::parse(read_file(rankdec)));
    } else {
        d = exact_rankwidth(g).decomposition;
    }
    CompiledKExpression ce = rankdec_to_kexpr(g, d);
    write_file(out, serialize_kexpr(ce.expr) + "\n");
    bool verified = compiled_matches_input(g, ce);
    std::cout << "C " << ce.c << "\n"
              << "width " << ce.expr.width() << "\n"
              << "budget " << 2 * ce.c + 1 << "\n"
              << "round-trip " << (verified ? "verified" : "FAILED") << "\n";
    return verified ? kExitOk : kExitViolations;
}

int run_eval(const std::string& expr_path, const std::string& out) {
    KExpression e = parse_kexpr(read_file(expr_path));
    LabeledGraph lg = eval_kexpr(e);
    std::set<int> labels(lg.labels.begin(), lg.labels.end());
    std::cout << "n " << lg.graph.vertex_count() << "\n"
              << "m " << lg.graph.edge_count() << "\n"
              << "labels " << labels.size() << "\n";
    if (!out.empty()) write_file(out, to_graph6(lg.graph) + "\n");
    return kExitOk;
}

int run_gen(const std::string& cls, int r, int n_min, int n_max, int count, std::uint64_t seed,
            const std::string& out_dir, bool exhaustive) {
    GeneratedCorpus corpus;
    if (exhaustive) {
        if (cls != "all")
            throw std::invalid_argument("--exhaustive supports only --class all");
        corpus = exhaustive_corpus(n_min, n_max);
    } else {
        CorpusSpec spec;
        spec.cls = graph_class_from_string(cls);
        spec.r = r;
        spec.n_min = n_min;
        spec.n_max = n_max;
        spec.count = count;
        spec.seed = seed;
        corpus = generate_corpus(spec);
    }
    fs::create_directories(out_dir);
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "g%06zu.g6", i);
        write_file((fs::path(out_dir) / name).string(), to_graph6(corpus.graphs[i]) + "\n");
    }
    write_file((fs::path(out_dir) / "manifest.json").string(), corpus.manifest.dump(2) + "\n");
    std::cout << "wrote " << corpus.graphs.size() << " graphs to " << out_dir << "\n";
    if (corpus.partial) {
        std::cerr << "warning: rejection sampling exhausted its retry budget; corpus is partial\n";
        return kExitPartial;
    }
    return kExitOk;
}

int run_verify(const std::string& spec_id, const std::string& params_text,
               const std::string& corpus_dir, const std::string& report_out,
               const std::string& csv_out) {
    BoundParams params = BoundParams::parse(params_text);
    std::vector<NamedGraph> corpus = load_corpus(corpus_dir);
    VerificationReport rep = verify_corpus(corpus, spec_id, params);
    if (!report_out.empty()) write_file(report_out, report_to_json(rep).dump(2) + "\n");
    if (!csv_out.empty()) write_file(csv_out, report_to_csv(rep));
    std::cout << "spec " << rep.spec_id << (rep.asserted ? "" : " (report-only)") << "\n"
              << "graphs " << rep.rows.size() << "\n"
              << "checked " << rep.checked << "\n"
              << "skipped " << rep.skipped << "\n"
              << "violations " << rep.violations << "\n"
              << "max_ratio " << rep.max_ratio << "\n";
    return (rep.asserted && rep.violations > 0) ? kExitViolations : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"widthkit: rank-width, tree-width, and clique-width expression toolkit"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);

    std::string input, format, witness, rankdec, out, expr_path;
    std::string cls = "all", spec_id, params_text, corpus_dir, report_out, csv_out;
    int r = 0, n_min = 1, n_max = 8, count = 10;
    std::uint64_t seed = 0;
    bool exhaustive = false;

    auto* rankwidth = app.add_subcommand("rankwidth", "exact rank-width of a graph");
    rankwidth->add_option("--input", input, "graph file")->required();
    rankwidth->add_option("--format", format, "g6 or edgelist (default: sniff)");
    rankwidth->add_option("--witness", witness, "write the optimal rank-decomposition as JSON");

    auto* treewidth = app.add_subcommand("treewidth", "exact tree-width of a graph");
    treewidth->add_option("--input", input, "graph file")->required();
    treewidth->add_option("--format", format, "g6 or edgelist (default: sniff)");
    treewidth->add_option("--witness", witness, "write the optimal tree decomposition as JSON");

    auto* compile = app.add_subcommand("compile",
                                       "compile a rank-decomposition into a k-expression");
    compile->add_option("--input", input, "graph file")->required();
    compile->add_option("--format", format, "g6 or edgelist (default: sniff)");
    compile->add_option("--rankdec", rankdec, "rank-decomposition JSON (default: solve)");
    compile->add_option("--out", out, "output expression file")->required();

    auto* eval = app.add_subcommand("eval", "evaluate a k-expression to a graph");
    eval->add_option("--expr", expr_path, "expression file")->required();
    eval->add_option("--out", out, "write the evaluated graph as graph6");

    auto* gen = app.add_subcommand("gen", "generate a seeded graph corpus");
    gen->add_option("--class", cls, "all|planar|minor_free|topminor_free|krr_free|nabla1_le");
    gen->add_option("--r", r, "class parameter r");
    gen->add_option("--n-min", n_min, "minimum vertex count");
    gen->add_option("--n-max", n_max, "maximum vertex count");
    gen->add_option("--count", count, "number of graphs");
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("--out", corpus_dir, "output directory")->required();
    gen->add_flag("--exhaustive", exhaustive,
                  "all graphs up to isomorphism in the range (class all)");

    auto* verify = app.add_subcommand("verify", "check a bound spec over a corpus");
    verify->add_option("--spec", spec_id, "spec id (see --list-specs)")->required();
    verify->add_option("--params", params_text, "comma-separated k=v parameters");
    verify->add_option("--corpus", corpus_dir, "corpus directory")->required();
    verify->add_option("--report", report_out, "write the JSON report here");
    verify->add_option("--csv", csv_out, "write a CSV report here");

    auto* specs = app.add_subcommand("list-specs", "list known bound spec ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rankwidth->parsed()) return run_width("rankwidth", input, format, witness);
        if (treewidth->parsed()) return run_width("treewidth", input, format, witness);
        if (compile->parsed()) return run_compile(input, format, rankdec, out);
        if (eval->parsed()) return run_eval(expr_path, out);
        if (gen->parsed()) return run_gen(cls, r, n_min, n_max, count, seed, corpus_dir, exhaustive);
        if (verify->parsed())
            return run_verify(spec_id, params_text, corpus_dir, report_out, csv_out);
        if (specs->parsed()) {
            for (auto& id : known_spec_ids()) std::cout << id << "\n";
            return kExitOk;
        }
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.expected().empty()) {
            std::cerr << "expected:";
            for (auto& t : e.expected()) std::cerr << " " << t;
            std::cerr << "\n";
        }
        return kExitUsage;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
