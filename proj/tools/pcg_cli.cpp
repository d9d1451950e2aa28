// pcg: command-line front end for witness construction, evaluation,
// geometric models and exhaustive PCG recognition.
//
// Exit status: 0 success / witness found, 1 not a PCG or a failed check,
// 2 usage or parse error, 3 I/O error.

#include "pcg/geometry.hpp"
#include "pcg/graph.hpp"
#include "pcg/random_instances.hpp"
#include "pcg/recognizer.hpp"
#include "pcg/text_format.hpp"
#include "pcg/threshold_tolerance.hpp"
#include "pcg/tree.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <thread>

namespace {

using namespace pcg;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct ParseFailure {
    std::string message;
};

// Reads and parses `path`, turning ParseError into a path:line:col diagnostic.
template <class F>
auto load(const std::string& path, F parse) {
    const std::string text = text::read_file(path);
    try {
        return parse(text);
    } catch (const text::ParseError& e) {
        throw ParseFailure{path + ":" + e.what()};
    }
}

void emit(const std::string& output, const std::string& contents) {
    if (output.empty() || output == "-") {
        std::cout << contents;
    } else {
        text::write_file(output, contents);
    }
}

std::size_t default_jobs() {
    if (const char* env = std::getenv("PCG_JOBS")) {
        try {
            return std::max<std::size_t>(1, std::stoul(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

int cmd_tt_witness(const std::string& input, const std::string& output) {
    const auto file = load(input, text::parse_tt);
    const PCGWitness w = tt_witness(file.instance);
    emit(output, text::write_witness(w));
    const Graph g = pcg_eval(w);
    (output.empty() || output == "-" ? std::cerr : std::cout) << "realized edges: " << g.edge_count() << '\n';
    return kOk;
}

int cmd_eval(const std::string& input, const std::string& mode, bool dot) {
    const PCGWitness w = load(input, text::parse_witness);
    const Graph g = mode == "mlpg" ? mlpg_eval(w.tree, w.dmin) : pcg_eval(w);
    std::cout << (dot ? text::write_dot(g) : text::write_graph(g));
    return kOk;
}

int cmd_model(const std::string& input, const std::string& bundled, const std::string& svg, bool dump) {
    const geometry::GeometricModel m =
        bundled.empty() ? load(input, text::parse_model) : geometry::paper_model(bundled);
    if (dump) {
        std::cout << text::write_model(m);
        return kOk;
    }
    if (!svg.empty()) {
        text::write_file(svg, geometry::render_svg(m));
    }
    std::cout << text::write_graph(geometry::model_graph(m));
    return kOk;
}

int cmd_recognize(const std::string& input, std::size_t jobs, bool symmetry, bool prune, bool progress,
                  const std::string& output) {
    const Graph g = load(input, text::parse_graph);
    RecognitionOptions opts;
    opts.jobs = jobs;
    opts.symmetry = symmetry;
    opts.prune = prune;
    if (progress) {
        auto last = std::chrono::steady_clock::now();
        opts.progress = [last](std::size_t done, std::size_t total) mutable {
            const auto now = std::chrono::steady_clock::now();
            if (done == total || now - last > std::chrono::seconds(2)) {
                last = now;
                std::cerr << "topologies " << done << "/" << total << '\n';
            }
        };
    }
    const RecognitionResult r = recognize_pcg(g, opts);
    if (r.is_pcg()) {
        emit(output, text::write_witness(*r.witness));
        return kOk;
    }
    std::cout << r.certificate() << '\n';
    return kNegative;
}

int cmd_iso(const std::string& a, const std::string& b) {
    const Graph ga = load(a, text::parse_graph);
    const Graph gb = load(b, text::parse_graph);
    const auto m = are_isomorphic(ga, gb);
    if (!m) {
        std::cout << "non-isomorphic\n";
        return kNegative;
    }
    for (const auto& name : ga.nodes()) {
        std::cout << name << " -> " << m->at(name) << '\n';
    }
    return kOk;
}

int cmd_verify_paper(bool full, std::size_t jobs, const std::vector<std::string>& overrides) {
    std::map<std::string, std::string> replaced;
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError("--model", "expected NAME=FILE, got '" + o + "'");
        }
        replaced[o.substr(0, eq)] = o.substr(eq + 1);
    }
    bool all_ok = true;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
        all_ok = all_ok && ok;
    };

    const Graph h = graph_h();
    for (const auto& name : geometry::paper_model_names()) {
        auto it = replaced.find(name);
        const geometry::GeometricModel m =
            it == replaced.end() ? geometry::paper_model(name) : load(it->second, text::parse_model);
        const Graph g = geometry::model_graph(m);
        std::string detail = name + " realizes H";
        if (!(g == h)) {
            const Graph sym = [&] {
                std::vector<std::uint8_t> adj(g.size() * g.size());
                for (std::size_t i = 0; i < g.size(); ++i) {
                    for (std::size_t j = 0; j < g.size(); ++j) {
                        adj[i * g.size() + j] = g.adjacent(i, j) != h.adjacent(g.name(i), g.name(j));
                    }
                }
                return Graph(g.nodes(), std::move(adj));
            }();
            detail += " (mismatched pairs:";
            for (const auto& [u, v] : sym.edges()) {
                detail += " " + u + "-" + v;
            }
            detail += ")";
        }
        report(g == h, "model " + detail);
    }

    std::mt19937_64 rng(20140101);
    std::size_t mismatches = 0;
    std::size_t caterpillar_failures = 0;
    std::size_t scaling_failures = 0;
    constexpr std::size_t kInteger = 200;
    constexpr std::size_t kRational = 100;
    for (std::size_t i = 0; i < kInteger + kRational; ++i) {
        const TTInstance inst =
            i < kInteger ? random_integer_tt(rng, 3, 12, 20) : random_rational_tt(rng, 3, 12, 20, 12);
        const PCGWitness w = tt_witness(inst);
        mismatches += pcg_eval(w) == tt_realize(inst) ? 0 : 1;
        caterpillar_failures += is_caterpillar(w.tree) ? 0 : 1;
        scaling_failures += tt_realize(integerize(inst).instance) == tt_realize(inst) ? 0 : 1;
    }
    report(mismatches == 0 && caterpillar_failures == 0,
           "threshold tolerance caterpillar round trip on " + std::to_string(kInteger + kRational) + " instances");
    report(scaling_failures == 0, "integerization preserves realization");

    if (full) {
        RecognitionOptions opts;
        opts.jobs = jobs;
        const RecognitionResult r = recognize_pcg(h, opts);
        std::cout << (r.is_pcg() ? std::string("witness found for H") : r.certificate()) << '\n';
        report(!r.is_pcg() && r.topologies_examined == topology_count(8), "H is not a PCG");
    }
    return all_ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise compatibility graph toolkit"};
    app.require_subcommand(1);

    std::string input, output, mode = "pcg", bundled, svg, other;
    bool dot = false, dump = false, symmetry = false, prune = false, progress = false, full = false;
    std::size_t jobs = default_jobs();
    std::vector<std::string> overrides;

    auto* tt = app.add_subcommand("tt-witness", "Build the caterpillar witness of a threshold tolerance instance");
    tt->add_option("input", input, "ttgraph or threshold file")->required();
    tt->add_option("-o,--output", output, "Witness file (default: stdout)");

    auto* ev = app.add_subcommand("eval", "Evaluate a witness file into a graph");
    ev->add_option("input", input, "Witness file")->required();
    ev->add_option("--mode", mode, "pcg or mlpg")->check(CLI::IsMember({"pcg", "mlpg"}));
    ev->add_flag("--dot", dot, "Emit DOT instead of the graph format");

    auto* md = app.add_subcommand("model", "Intersection graph of a geometric model");
    auto* md_input = md->add_option("input", input, "Model file");
    auto* md_bundled = md->add_option("--bundled", bundled, "Use a bundled model of H instead of a file")
                           ->check(CLI::IsMember(geometry::paper_model_names()));
    md_input->excludes(md_bundled);
    md->add_option("--svg", svg, "Also render a 2d model to this SVG file");
    md->add_flag("--dump", dump, "Print the model in the model format instead of its graph");

    auto* rc = app.add_subcommand("recognize", "Decide PCG membership by exhaustive search");
    rc->add_option("input", input, "Graph file")->required();
    rc->add_option("-j,--jobs", jobs, "Worker threads (default: $PCG_JOBS or 1)");
    rc->add_flag("--symmetry", symmetry, "Examine one topology per automorphism orbit");
    rc->add_flag("--prune", prune, "Refute labelings by infeasible prefixes");
    rc->add_flag("--progress", progress, "Report topology progress on stderr");
    rc->add_option("-o,--output", output, "Witness file (default: stdout)");

    auto* vp = app.add_subcommand("verify-paper", "Reproduce the model, witness and recognition checks");
    vp->add_flag("--full", full, "Also run the exhaustive recognition of H");
    vp->add_option("-j,--jobs", jobs, "Worker threads for --full");
    vp->add_option("--model", overrides, "Replace a bundled model: NAME=FILE");

    auto* iso = app.add_subcommand("iso", "Test two graph files for isomorphism");
    iso->add_option("first", input, "Graph file")->required();
    iso->add_option("second", other, "Graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*tt) return cmd_tt_witness(input, output);
        if (*ev) return cmd_eval(input, mode, dot);
        if (*md) {
            if (input.empty() && bundled.empty()) {
                std::cerr << "model: give a model file or --bundled NAME\n";
                return kUsage;
            }
            return cmd_model(input, bundled, svg, dump);
        }
        if (*rc) return cmd_recognize(input, jobs, symmetry, prune, progress, output);
        if (*vp) return cmd_verify_paper(full, jobs, overrides);
        if (*iso) return cmd_iso(input, other);
    } catch (const ParseFailure& e) {
        std::cerr << e.message << '\n';
        return kUsage;
    } catch (const text::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
