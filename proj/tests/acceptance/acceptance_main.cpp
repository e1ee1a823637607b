// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail. Criteria 8 and 10 drive the real CLI binary (path in $TSMARK_CLI).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <sys/wait.h>

#include "oracles.hpp"
#include "tsmark/entropy.hpp"
#include "tsmark/errors.hpp"
#include "tsmark/io.hpp"
#include "tsmark/markers.hpp"
#include "tsmark/rng.hpp"
#include "tsmark/series.hpp"
#include "tsmark/simplex.hpp"
#include "tsmark/walk.hpp"
#include "tsmark/zipf.hpp"

using namespace tsmark;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Failure {
    std::string detail;
};

#define REQUIRE_OR_FAIL(cond, message)                                     \
    do {                                                                   \
        if (!(cond)) {                                                     \
            std::ostringstream os_;                                       \
            os_ << message;                                               \
            throw Failure{os_.str()};                                     \
        }                                                                  \
    } while (0)

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<int> random_symbols(SplitMix64& rng, std::size_t length, int alphabet) {
    std::vector<int> symbols(length);
    for (int& s : symbols) {
        s = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(alphabet)));
    }
    return symbols;
}

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1) {
        return -1;
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_path() {
    const char* env = std::getenv("TSMARK_CLI");
    REQUIRE_OR_FAIL(env != nullptr && *env != '\0',
                    "TSMARK_CLI is not set; run through ctest or export the binary path");
    REQUIRE_OR_FAIL(fs::exists(env), "no CLI binary at " << env);
    return env;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_OR_FAIL(in.good(), "cannot open " << path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::map<std::string, std::string> snapshot_tree(const fs::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file()) {
            files[fs::relative(entry.path(), root).string()] = slurp(entry.path());
        }
    }
    return files;
}

// ---- criteria ----

// h in [0,1] on 1,000 random sequences; iid-uniform beats constant by >= 0.5
// at t = 4096; under 10 s.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    SplitMix64 rng(20260808);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t t = 50 + rng.next_below(4951);
        const double h = entropy(SymbolicSeries(random_symbols(rng, t, 4), Alphabet(4)));
        REQUIRE_OR_FAIL(h >= 0.0 && h <= 1.0, "h out of [0,1]: " << h << " at t=" << t);
    }
    double uniform_mean = 0.0;
    const int samples = 50;
    for (int i = 0; i < samples; ++i) {
        uniform_mean +=
            entropy(SymbolicSeries(random_symbols(rng, 4096, 4), Alphabet(4)));
    }
    uniform_mean /= samples;
    const double constant_mean =
        entropy(SymbolicSeries(std::vector<int>(4096, 1), Alphabet(4)));
    REQUIRE_OR_FAIL(uniform_mean - constant_mean >= 0.5,
                    "gap " << uniform_mean << " - " << constant_mean << " < 0.5");
    const double elapsed = seconds_since(start);
    REQUIRE_OR_FAIL(elapsed < 10.0, "took " << elapsed << " s (limit 10)");
}

// Exact phrase-count agreement with the brute-force parser on all 2,046
// binary sequences of length <= 10; under 5 s.
void criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (std::size_t length = 1; length <= 10; ++length) {
        for (std::size_t bits = 0; bits < (std::size_t{1} << length); ++bits) {
            std::vector<int> symbols(length);
            for (std::size_t i = 0; i < length; ++i) {
                symbols[i] = 1 + static_cast<int>((bits >> i) & 1);
            }
            const std::size_t ours =
                lz_parse(SymbolicSeries(symbols, Alphabet(2))).phrase_count;
            const std::size_t oracle = oracles::brute_force_phrase_count(symbols);
            REQUIRE_OR_FAIL(ours == oracle, "mismatch on sequence " << bits << " of length "
                                                                    << length << ": " << ours
                                                                    << " vs " << oracle);
            ++checked;
        }
    }
    REQUIRE_OR_FAIL(checked == 2046, "expected 2046 sequences, checked " << checked);
    const double elapsed = seconds_since(start);
    REQUIRE_OR_FAIL(elapsed < 5.0, "took " << elapsed << " s (limit 5)");
}

// symbolize(aX + b) == symbolize(X) element-wise on 500 random series.
void criterion_3() {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const int L = 2 + static_cast<int>(rng.next_below(7));
        std::vector<double> values(2 + rng.next_below(300));
        for (double& v : values) {
            v = rng.next_unit() * 1000.0 - 500.0;
        }
        const double a = 1e-3 + rng.next_unit() * 100.0;
        const double b = rng.next_unit() * 1000.0 - 500.0;
        std::vector<double> mapped(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            mapped[i] = a * values[i] + b;
        }
        const auto original = symbolize(Series(values), Alphabet(L)).symbols();
        const auto affine = symbolize(Series(mapped), Alphabet(L)).symbols();
        REQUIRE_OR_FAIL(original == affine,
                        "symbols changed under a=" << a << ", b=" << b << " (trial " << trial
                                                   << ", L=" << L << ")");
    }
}

// argmax influence agrees with the geometric polygon oracle on 10^4 random
// 3-component vectors off the tie lines.
void criterion_4() {
    SplitMix64 rng(4);
    int checked = 0;
    while (checked < 10000) {
        const double h1 = rng.next_unit();
        const double h2 = rng.next_unit();
        const double h3 = rng.next_unit();
        if (h1 + h2 + h3 == 0.0 || std::abs(h1 - h2) <= 1e-9 ||
            std::abs(h1 - h3) <= 1e-9 || std::abs(h2 - h3) <= 1e-9) {
            continue;
        }
        const int geometric = oracles::polygon_influence_region(h1, h2, h3);
        const int ours = influence({{h1, h2, h3}, ""}).leading;
        REQUIRE_OR_FAIL(geometric != 0, "oracle failed to place (" << h1 << "," << h2 << ","
                                                                   << h3 << ")");
        REQUIRE_OR_FAIL(ours == geometric, "disagreement at (" << h1 << "," << h2 << "," << h3
                                                               << "): " << ours << " vs "
                                                               << geometric);
        ++checked;
    }
}

// The published window schedule gives exactly 4 windows; the count formula
// matches enumeration on 10^4 random shapes.
void criterion_5() {
    const auto offsets = window_offsets(WindowScheme::overlapping(350, 52), 533);
    REQUIRE_OR_FAIL(offsets.size() == 4, "t=533,w=350,s=52 gave " << offsets.size());
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t t = 1 + rng.next_below(3000);
        const std::size_t w = 1 + rng.next_below(t);
        const std::size_t s = 1 + rng.next_below(80);
        const std::size_t ours =
            window_offsets(WindowScheme::overlapping(w, s), t).size();
        const std::size_t oracle = oracles::enumerate_window_count(t, w, s);
        REQUIRE_OR_FAIL(ours == oracle, "count mismatch at t=" << t << ",w=" << w << ",s=" << s
                                                               << ": " << ours << " vs "
                                                               << oracle);
        REQUIRE_OR_FAIL(ours == (t - w) / s + 1, "formula mismatch at t=" << t << ",w=" << w
                                                                          << ",s=" << s);
    }
}

// Zipf fits: exact power law -> -1, uniform -> 0 exactly, Eq.-(6)
// arithmetic and the category boundaries.
void criterion_6() {
    WordCensus power;
    power.word_length = 1;
    power.equivalence = WordEquivalence::exact;
    power.total_words = 10;
    double harmonic = 0.0;
    for (int r = 1; r <= 10; ++r) {
        harmonic += 1.0 / r;
    }
    for (int r = 1; r <= 10; ++r) {
        WordClass cls;
        cls.key = {r};
        cls.count = static_cast<std::size_t>(11 - r);
        cls.frequency = 1.0 / (r * harmonic);
        power.classes.push_back(cls);
    }
    const ZipfFit power_fit = zipf_coefficient(power, 0.0);
    REQUIRE_OR_FAIL(std::abs(power_fit.rho - (-1.0)) <= 1e-9,
                    "1/r census fit rho=" << power_fit.rho);

    WordCensus uniform;
    uniform.word_length = 1;
    uniform.equivalence = WordEquivalence::exact;
    uniform.total_words = 8;
    for (int r = 1; r <= 8; ++r) {
        WordClass cls;
        cls.key = {r};
        cls.count = 1;
        cls.frequency = 0.125;
        uniform.classes.push_back(cls);
    }
    REQUIRE_OR_FAIL(zipf_coefficient(uniform, 0.0).rho == 0.0, "uniform census rho != 0");

    const double d = 1.0 + (-1.0 - 1.0 - 1.0) / 3.0;
    REQUIRE_OR_FAIL(d == 0.0, "Eq.-(6) arithmetic gave " << d);

    REQUIRE_OR_FAIL(categorize(1.0) == DiversificationCategory::highly_diversified,
                    "D=1 miscategorized");
    REQUIRE_OR_FAIL(categorize(0.8001) == DiversificationCategory::highly_diversified,
                    "D=0.8001 miscategorized");
    REQUIRE_OR_FAIL(categorize(0.8) == DiversificationCategory::rich, "D=0.8 miscategorized");
    REQUIRE_OR_FAIL(categorize(1e-9) == DiversificationCategory::rich,
                    "D=1e-9 miscategorized");
    REQUIRE_OR_FAIL(categorize(0.0) == DiversificationCategory::totally_unbalanced,
                    "D=0 miscategorized");
    REQUIRE_OR_FAIL(categorize(-2.0) == DiversificationCategory::totally_unbalanced,
                    "D=-2 miscategorized");
    REQUIRE_OR_FAIL(categorize(1.0 + 1e-9) == DiversificationCategory::intermediate,
                    "D>1 miscategorized");
}

// The composition class space stays within the stars-and-bars bound 455.
void criterion_7() {
    REQUIRE_OR_FAIL(composition_class_bound(4, 12) == 455,
                    "bound is " << composition_class_bound(4, 12));
    SplitMix64 rng(7);
    std::vector<int> symbols = random_symbols(rng, 20000, 4);
    for (int s = 1; s <= 4; ++s) {  // ensure every symbol occurs
        symbols[static_cast<std::size_t>(s)] = s;
    }
    const WordCensus census = word_census(SymbolicSeries(symbols, Alphabet(4)), 12,
                                          WordEquivalence::composition);
    REQUIRE_OR_FAIL(census.classes.size() <= 455,
                    "observed " << census.classes.size() << " classes > 455");
    REQUIRE_OR_FAIL(census.classes.size() > 100,
                    "suspiciously few classes: " << census.classes.size());
    for (const WordClass& cls : census.classes) {
        int total = 0;
        for (int n : cls.key) {
            total += n;
        }
        REQUIRE_OR_FAIL(total == 12, "class " << cls.id() << " does not sum to 12");
    }
}

constexpr const char* kCorpusArgs =
    " --entities 42 --components 3 --length 585 --seed 2026"
    " --generator markov --generator bursty_sparse --generator markov";
constexpr const char* kAnalysisArgs = " --window-length 350 --window-step 52";

// Full protocol replication at paper scale through the CLI; all report
// self-consistency invariants checked from the artifacts; under 60 s.
void criterion_8() {
    const auto start = std::chrono::steady_clock::now();
    const std::string cli = cli_path();
    const fs::path base = fs::temp_directory_path() / "tsmark_acceptance" / "c8";
    fs::remove_all(base);
    fs::create_directories(base);
    const fs::path corpus = base / "corpus.csv";
    const fs::path holdout = base / "holdout.csv";
    const fs::path out = base / "out";

    REQUIRE_OR_FAIL(run_command(cli + " generate --out " + corpus.string() + kCorpusArgs +
                                " --holdout-length 351 --holdout-out " + holdout.string()) ==
                        0,
                    "generate failed");
    REQUIRE_OR_FAIL(run_command(cli + " markers --input " + corpus.string() + " --holdout " +
                                holdout.string() + " --out " + out.string() +
                                kAnalysisArgs) == 0,
                    "markers failed");

    // artifact inventory
    std::size_t report_count = 0;
    for (const auto& entry : fs::directory_iterator(out / "reports")) {
        report_count += entry.path().extension() == ".json" ? 1 : 0;
    }
    REQUIRE_OR_FAIL(report_count == 42, "expected 42 reports, found " << report_count);
    std::size_t walk_count = 0;
    for (const auto& entry : fs::directory_iterator(out / "walks")) {
        walk_count += entry.path().extension() == ".svg" ? 1 : 0;
    }
    REQUIRE_OR_FAIL(walk_count == 42, "expected 42 walk plots, found " << walk_count);
    for (const char* name : {"simplex.svg", "summary.csv", "summary.json",
                             "diversification.csv", "entropy_vs_total.csv",
                             "attribution.csv"}) {
        REQUIRE_OR_FAIL(fs::exists(out / name), "missing artifact " << name);
    }
    const std::string simplex = slurp(out / "simplex.svg");
    REQUIRE_OR_FAIL(simplex.find("<svg") != std::string::npos, "simplex.svg is not svg");

    const json summary = json::parse(slurp(out / "summary.json"));
    REQUIRE_OR_FAIL(summary.at("report_count") == 42,
                    "summary report_count " << summary.at("report_count"));
    REQUIRE_OR_FAIL(summary.at("failures").empty(), "entities failed in the protocol run");
    REQUIRE_OR_FAIL(summary.at("attributed_count") == 42,
                    "attributed " << summary.at("attributed_count"));
    REQUIRE_OR_FAIL(summary.at("within_walk_fraction").is_number(),
                    "no within_walk_fraction");
    std::cout << "         within-walk fraction on the synthetic corpus: "
              << summary.at("within_walk_fraction") << "\n";

    // self-consistency of every report against the raw corpus
    const IngestResult ingested = ingest(corpus, Layout::stacked);
    REQUIRE_OR_FAIL(ingested.entities.size() == 42, "corpus has "
                                                        << ingested.entities.size()
                                                        << " entities");
    std::size_t normalized_zero = 0;
    std::size_t normalized_one = 0;
    for (const MultiSeries& entity : ingested.entities) {
        const json report =
            json::parse(slurp(out / "reports" / (entity.entity_id() + ".json")));
        const auto hv = report.at("entropy_vector").get<std::vector<double>>();
        REQUIRE_OR_FAIL(hv.size() == 3, "entropy vector size " << hv.size());

        // leading = argmax
        std::size_t argmax = 0;
        for (std::size_t i = 1; i < hv.size(); ++i) {
            if (hv[i] > hv[argmax]) {
                argmax = i;
            }
        }
        REQUIRE_OR_FAIL(report.at("leading").get<int>() == static_cast<int>(argmax) + 1,
                        entity.entity_id() << ": leading mismatch");

        // norms recompute
        double l1 = 0.0;
        double l2 = 0.0;
        for (double h : hv) {
            l1 += h;
            l2 += h * h;
        }
        REQUIRE_OR_FAIL(std::abs(report.at("norm_l1").get<double>() - l1) <= 1e-12,
                        entity.entity_id() << ": l1 mismatch");
        REQUIRE_OR_FAIL(
            std::abs(report.at("norm_euclidean").get<double>() - std::sqrt(l2)) <= 1e-12,
            entity.entity_id() << ": euclidean mismatch");

        // diversification identity
        const auto rho =
            report.at("diversification").at("per_component_rho").get<std::vector<double>>();
        double mean = 0.0;
        for (double r : rho) {
            mean += r;
        }
        mean /= static_cast<double>(rho.size());
        REQUIRE_OR_FAIL(std::abs(report.at("diversification").at("value").get<double>() -
                                 (1.0 + mean)) <= 1e-12,
                        entity.entity_id() << ": diversification mismatch");

        // grand total against the raw data
        double total = 0.0;
        for (const Series& c : entity.components()) {
            for (double v : c.values()) {
                total += v;
            }
        }
        REQUIRE_OR_FAIL(std::abs(report.at("grand_total").get<double>() - total) <=
                            1e-6 * std::max(1.0, std::abs(total)),
                        entity.entity_id() << ": grand total mismatch");

        // full pipeline recomputation via the library
        AnalysisConfig config;
        const MarkerReport recomputed = analyze_entity(entity, config);
        REQUIRE_OR_FAIL(recomputed.entropy_vector == hv,
                        entity.entity_id() << ": entropy vector differs from library");
        REQUIRE_OR_FAIL(recomputed.leading == report.at("leading").get<int>(),
                        entity.entity_id() << ": leading differs from library");

        REQUIRE_OR_FAIL(report.at("config_echo").at("window_length") == 350,
                        "config echo window length");
    }

    // normalized grand totals span [0, 1]
    std::istringstream totals(slurp(out / "entropy_vs_total.csv"));
    std::string line;
    while (std::getline(totals, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("entity_id", 0) == 0) {
            continue;
        }
        std::stringstream fields(line);
        std::string entity_id, grand_total, normalized, norm;
        std::getline(fields, entity_id, ',');
        std::getline(fields, grand_total, ',');
        std::getline(fields, normalized, ',');
        std::getline(fields, norm, ',');
        const double value = std::stod(normalized);
        REQUIRE_OR_FAIL(value >= 0.0 && value <= 1.0, "normalized total " << value);
        normalized_zero += value == 0.0 ? 1 : 0;
        normalized_one += value == 1.0 ? 1 : 0;
    }
    REQUIRE_OR_FAIL(normalized_zero >= 1 && normalized_one >= 1,
                    "min/max normalization not attained");

    // exit codes: usage, data, analysis-limit errors
    REQUIRE_OR_FAIL(run_command(cli + " markers --no-such-flag 2>/dev/null") == 1,
                    "usage error should exit 1");
    REQUIRE_OR_FAIL(run_command(cli + " markers --input " + (base / "none.csv").string() +
                                " --out " + (base / "x").string() + " 2>/dev/null") == 2,
                    "data error should exit 2");
    const fs::path wide4 = base / "wide4.csv";
    write_text_atomic(wide4, "time,a,b,c,d\n0,1,2,3,4\n1,2,3,4,5\n");
    REQUIRE_OR_FAIL(run_command(cli + " simplex-plot --input " + wide4.string() +
                                " --layout wide --out " + (base / "bad.svg").string() +
                                " 2>/dev/null") == 2,
                    "N=4 plot should exit 2 (data error)");

    const double elapsed = seconds_since(start);
    REQUIRE_OR_FAIL(elapsed < 60.0, "took " << elapsed << " s (limit 60)");
    std::cout << "         protocol run took " << elapsed << " s\n";
}

// Colinear trend exactness, orientation flip, translation invariance.
void criterion_9() {
    auto matrix_for = [](const std::vector<std::pair<double, double>>& pts) {
        MovingMatrix mm;
        mm.rows.assign(3, std::vector<double>(pts.size()));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            mm.rows[0][i] = pts[i].first;
            mm.rows[1][i] = pts[i].second;
            mm.rows[2][i] = 1.0 - pts[i].first - pts[i].second;
        }
        return mm;
    };
    auto fit = [&](const std::vector<std::pair<double, double>>& pts) {
        const MovingMatrix mm = matrix_for(pts);
        return fit_trend(walk(mm), mm);
    };

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Trend forward = fit({{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}});
    REQUIRE_OR_FAIL(forward.mean_distance <= 1e-12,
                    "colinear mean distance " << forward.mean_distance);
    REQUIRE_OR_FAIL(std::abs(forward.direction[0] - inv_sqrt2) <= 1e-9 &&
                        std::abs(forward.direction[1] - inv_sqrt2) <= 1e-9,
                    "colinear direction (" << forward.direction[0] << ","
                                           << forward.direction[1] << ")");
    const Trend reversed = fit({{0.3, 0.3}, {0.2, 0.2}, {0.1, 0.1}});
    REQUIRE_OR_FAIL(std::abs(reversed.direction[0] + inv_sqrt2) <= 1e-9 &&
                        std::abs(reversed.direction[1] + inv_sqrt2) <= 1e-9,
                    "reversed orientation did not flip");

    SplitMix64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < 5; ++i) {
            pts.emplace_back(rng.next_unit() * 0.3, rng.next_unit() * 0.3);
        }
        const double tx = rng.next_unit() * 0.2;
        const double ty = rng.next_unit() * 0.2;
        std::vector<std::pair<double, double>> moved;
        for (const auto& [x, y] : pts) {
            moved.emplace_back(x + tx, y + ty);
        }
        Trend a;
        Trend b;
        try {
            a = fit(pts);
            b = fit(moved);
        } catch (const AnalysisError&) {
            continue;  // degenerate draw
        }
        REQUIRE_OR_FAIL(std::abs(a.direction[0] - b.direction[0]) <= 1e-9 &&
                            std::abs(a.direction[1] - b.direction[1]) <= 1e-9,
                        "direction changed under translation (trial " << trial << ")");
        REQUIRE_OR_FAIL(std::abs(a.mean_distance - b.mean_distance) <= 1e-9,
                        "mean distance changed under translation (trial " << trial << ")");
    }
}

// Byte-identical reruns of the protocol, including maximum parallelism.
void criterion_10() {
    const std::string cli = cli_path();
    const fs::path base = fs::temp_directory_path() / "tsmark_acceptance" / "c10";
    fs::remove_all(base);
    fs::create_directories(base);

    auto run_protocol = [&](const std::string& tag, const std::string& threads) {
        const fs::path corpus = base / (tag + "_corpus.csv");
        const fs::path holdout = base / (tag + "_holdout.csv");
        const fs::path out = base / (tag + "_out");
        REQUIRE_OR_FAIL(run_command(cli + " generate --out " + corpus.string() + kCorpusArgs +
                                    " --holdout-length 351 --holdout-out " +
                                    holdout.string()) == 0,
                        "generate failed (" << tag << ")");
        REQUIRE_OR_FAIL(run_command(cli + " markers --input " + corpus.string() +
                                    " --holdout " + holdout.string() + " --out " +
                                    out.string() + kAnalysisArgs + " --threads " + threads) ==
                            0,
                        "markers failed (" << tag << ")");
        auto tree = snapshot_tree(out);
        tree["corpus.csv"] = slurp(corpus);
        tree["holdout.csv"] = slurp(holdout);
        return tree;
    };

    const auto first = run_protocol("first", "1");
    const auto second = run_protocol("second", "1");
    const auto parallel = run_protocol("parallel", "0");

    REQUIRE_OR_FAIL(first.size() == second.size() && first.size() == parallel.size(),
                    "artifact inventories differ: " << first.size() << "/" << second.size()
                                                    << "/" << parallel.size());
    for (const auto& [name, bytes] : first) {
        const auto s = second.find(name);
        REQUIRE_OR_FAIL(s != second.end() && s->second == bytes,
                        "rerun differs in " << name);
        const auto p = parallel.find(name);
        REQUIRE_OR_FAIL(p != parallel.end() && p->second == bytes,
                        "parallel run differs in " << name);
    }
}

struct Criterion {
    int number;
    const char* label;
    void (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "entropy bounds and uniform-vs-constant ordering", criterion_1},
        {2, "parser matches the brute-force oracle on all short sequences", criterion_2},
        {3, "symbolization is affine invariant", criterion_3},
        {4, "influence areas match the geometric oracle", criterion_4},
        {5, "window arithmetic matches enumeration", criterion_5},
        {6, "zipf fits and category boundaries are exact", criterion_6},
        {7, "composition classes stay within the 455 bound", criterion_7},
        {8, "protocol replication at paper scale", criterion_8},
        {9, "trend fit exactness and invariances", criterion_9},
        {10, "byte-identical reruns under parallelism", criterion_10},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        try {
            criterion.run();
            std::cout << "PASS     criterion " << criterion.number << ": " << criterion.label
                      << "\n";
        } catch (const Failure& failure) {
            ++failures;
            std::cout << "FAIL     criterion " << criterion.number << ": " << criterion.label
                      << " -- " << failure.detail << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL     criterion " << criterion.number << ": " << criterion.label
                      << " -- unexpected error: " << e.what() << "\n";
        }
    }
    if (failures == 0) {
        std::cout << "all 10 acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
