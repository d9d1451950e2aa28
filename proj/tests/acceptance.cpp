// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "pcg/geometry.hpp"
#include "pcg/recognizer.hpp"
#include "properties.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

using namespace pcg;
using namespace pcg::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool g_all_ok = true;

void report(int id, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
    g_all_ok = g_all_ok && ok;
}

std::string tally(const Tally& t) {
    return std::to_string(t.cases - t.failures) + "/" + std::to_string(t.cases);
}

std::size_t worker_count() {
    if (const char* env = std::getenv("PCG_JOBS")) {
        return std::max(1, std::atoi(env));
    }
    return std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 4);
}

void figure_models() {
    const auto start = Clock::now();
    std::size_t matched = 0;
    for (const auto& name : geometry::paper_model_names()) {
        matched += geometry::model_graph(geometry::paper_model(name)) == graph_h() ? 1 : 0;
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << "bundled models equal to H: " << matched << "/" << geometry::paper_model_names().size() << " in " << t
      << " s";
    report(1, matched == 5 && geometry::paper_model_names().size() == 5 && t < 1.0, d.str());
}

void round_trip() {
    const auto start = Clock::now();
    const RoundTrip r = tt_round_trip(20140101, 200, 100);
    const double t = seconds_since(start);
    std::ostringstream d;
    d << "witness round trip " << tally(r.realize) << ", caterpillar " << tally(r.caterpillar) << ", distance formula "
      << tally(r.formula) << ", distances >= 2 " << tally(r.lower_bound) << " in " << t << " s";
    report(2,
           r.realize.ok() && r.caterpillar.ok() && r.formula.ok() && r.lower_bound.ok() && r.realize.cases >= 300 &&
               t < 10.0,
           d.str());
    report(3, r.integerized.ok() && r.integerized.cases >= 100,
           "integerization preserves realization on " + tally(r.integerized) + " rational instances");
}

void negative_result() {
    const std::size_t jobs = worker_count();
    RecognitionOptions plain;
    plain.jobs = jobs;
    auto start = Clock::now();
    const RecognitionResult r = recognize_pcg(graph_h(), plain);
    const double t_plain = seconds_since(start);
    // H has 8 non-edges, so each topology has 2^8 labelings.
    const std::uint64_t expected_labelings = topology_count(8) << 8;

    RecognitionOptions sym = plain;
    sym.symmetry = true;
    start = Clock::now();
    const RecognitionResult s = recognize_pcg(graph_h(), sym);
    const double t_sym = seconds_since(start);

    std::ostringstream d;
    d << r.certificate() << " in " << t_plain << " s on " << jobs << " worker(s); with symmetry: "
      << (s.is_pcg() ? std::string("witness found") : s.certificate()) << " in " << t_sym << " s";
    report(4,
           !r.is_pcg() && r.topologies_examined == 10395 && r.labelings_examined == expected_labelings &&
               !s.is_pcg() && t_plain < 7200,
           d.str());
}

void positive_results() {
    const auto start = Clock::now();
    std::size_t classes = 0, witnessed = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
        for (const auto& g : enumerate_graphs(n)) {
            ++classes;
            const RecognitionResult r = recognize_pcg(g);
            witnessed += r.is_pcg() && pcg_eval(*r.witness) == g ? 1 : 0;
        }
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << "witnesses for " << witnessed << "/" << classes << " classes on 3-5 nodes in " << t << " s";
    report(5, classes == 4 + 11 + 34 && witnessed == classes && t < 900, d.str());
}

void property_suites() {
    const Tally fp = four_point(101, 150);
    const Tally sc = scale_invariance(102, 300);
    const Tally nz = normalize_preserves(103, 400);
    const RoundTrip rt = tt_round_trip(106, 100, 50);
    std::ostringstream d;
    d << "four-point " << tally(fp) << ", scaling " << tally(sc) << ", normalize " << tally(nz)
      << ", mlpg agreement " << tally(rt.mlpg);
    report(6, fp.ok() && sc.ok() && nz.ok() && rt.mlpg.ok(), d.str());
}

}  // namespace

int main(int argc, char** argv) {
    // `--quick` skips the exhaustive search of H.
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    figure_models();
    round_trip();
    if (!quick) {
        negative_result();
    }
    positive_results();
    property_suites();
    return g_all_ok ? 0 : 1;
}
