// tsmark: behavioral markers for multi-dimensional sparse time series.
//
// Subcommands wrap the library's top-level operations: `generate` writes a
// synthetic corpus, `markers` runs the full analysis, `walk`, `zipf` and
// `simplex-plot` expose the individual views, `attribute` tests held-out
// windows against fitted trends.

#include <CLI11.hpp>

#include <algorithm>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsmark/corpus.hpp"
#include "tsmark/errors.hpp"
#include "tsmark/io.hpp"
#include "tsmark/markers.hpp"
#include "tsmark/svg.hpp"

namespace fs = std::filesystem;
using namespace tsmark;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitAnalysis = 3;

struct ConfigCli {
    std::string config_path;
    std::optional<int> alphabet_size;
    std::optional<bool> differencing;
    std::optional<std::string> window_kind;
    std::optional<std::size_t> window_length;
    std::optional<std::size_t> window_step;
    std::optional<std::size_t> window_count;
    std::optional<std::uint64_t> window_seed;
    std::optional<int> word_length;
    std::optional<std::string> equivalence;
    std::optional<double> rare_threshold;
    std::optional<double> sparsity_delta;
    std::optional<std::string> symbolization;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "Analysis config file (key = value lines)");
        cmd->add_option("--alphabet-size", alphabet_size, "Symbol alphabet size L");
        cmd->add_option("--differencing", differencing,
                        "Analyze first differences (true) or raw values (false)");
        cmd->add_option("--window-kind", window_kind,
                        "overlapping | nonoverlapping | random_starts");
        cmd->add_option("--window-length", window_length, "Window length w");
        cmd->add_option("--window-step", window_step, "Step s for overlapping windows");
        cmd->add_option("--window-count", window_count, "Window count k for random starts");
        cmd->add_option("--window-seed", window_seed, "Seed for random starts");
        cmd->add_option("--word-length", word_length, "Word length p for the census");
        cmd->add_option("--equivalence", equivalence, "exact | composition");
        cmd->add_option("--rare-threshold", rare_threshold,
                        "Frequency below which word classes are dropped");
        cmd->add_option("--sparsity-delta", sparsity_delta, "Zero-density threshold");
        cmd->add_option("--symbolization", symbolization, "global | per_window");
    }

    AnalysisConfig resolve() const {
        AnalysisConfig config;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                throw DataError("cannot open config '" + config_path + "'");
            }
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            config = config_from_text(text);
        }
        if (alphabet_size) config.alphabet_size = *alphabet_size;
        if (differencing) config.differencing = *differencing;
        if (window_kind) {
            if (*window_kind == "overlapping") {
                config.window.kind = WindowScheme::Kind::overlapping;
            } else if (*window_kind == "nonoverlapping") {
                config.window.kind = WindowScheme::Kind::nonoverlapping;
            } else if (*window_kind == "random_starts") {
                config.window.kind = WindowScheme::Kind::random_starts;
            } else {
                throw ConfigError("unknown window kind '" + *window_kind + "'");
            }
        }
        if (window_length) config.window.length = *window_length;
        if (window_step) config.window.step = *window_step;
        if (window_count) config.window.count = *window_count;
        if (window_seed) config.window.seed = *window_seed;
        if (config.window.kind == WindowScheme::Kind::nonoverlapping) {
            config.window.step = config.window.length;
        }
        if (word_length) config.word_length = *word_length;
        if (equivalence) {
            if (*equivalence == "exact") {
                config.equivalence = WordEquivalence::exact;
            } else if (*equivalence == "composition") {
                config.equivalence = WordEquivalence::composition;
            } else {
                throw ConfigError("unknown equivalence '" + *equivalence + "'");
            }
        }
        if (rare_threshold) config.rare_threshold = *rare_threshold;
        if (sparsity_delta) config.sparsity_delta = *sparsity_delta;
        if (symbolization) {
            if (*symbolization == "global") {
                config.symbolization = SymbolizationMode::global_range;
            } else if (*symbolization == "per_window") {
                config.symbolization = SymbolizationMode::per_window;
            } else {
                throw ConfigError("unknown symbolization '" + *symbolization + "'");
            }
        }
        config.validate();
        return config;
    }
};

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& warning : warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
}

void print_failures(const std::vector<EntityFailure>& failures) {
    for (const EntityFailure& failure : failures) {
        std::cerr << "entity '" << failure.entity_id << "' skipped: " << failure.message
                  << "\n";
    }
}

std::vector<std::string> component_labels(const std::vector<MultiSeries>& entities) {
    std::vector<std::string> labels;
    if (!entities.empty()) {
        for (const Series& c : entities.front().components()) {
            labels.push_back(c.label());
        }
    }
    return labels;
}

std::vector<EntropyVector> entropy_vectors_of(const CollectionAnalysis& analysis) {
    std::vector<EntropyVector> vectors;
    for (const EntityAnalysis& entity : analysis.entities) {
        vectors.push_back({entity.report.entropy_vector, entity.report.entity_id});
    }
    return vectors;
}

// ---- subcommand payloads ----

struct GenerateArgs {
    std::string out;
    CorpusSpec spec;
    std::vector<std::string> generator_names;
    double markov_bias = 0.9;
    double zero_density = 0.25;
    std::size_t holdout_length = 0;
    std::string holdout_out;
};

int run_generate(const GenerateArgs& args) {
    CorpusSpec spec = args.spec;
    for (const std::string& name : args.generator_names) {
        ComponentSpec component;
        component.kind = generator_kind_from_string(name);
        component.param = component.kind == GeneratorKind::markov        ? args.markov_bias
                          : component.kind == GeneratorKind::bursty_sparse ? args.zero_density
                                                                           : 0.0;
        spec.generators.push_back(component);
    }
    write_text_atomic(args.out, stacked_csv_text(generate_corpus(spec), 2));
    std::cout << "wrote " << args.out << "\n";
    if (args.holdout_length > 0) {
        if (args.holdout_out.empty()) {
            throw ConfigError("--holdout-length needs --holdout-out");
        }
        write_text_atomic(args.holdout_out,
                          stacked_csv_text(generate_holdout(spec, args.holdout_length), 2));
        std::cout << "wrote " << args.holdout_out << "\n";
    }
    return kExitOk;
}

struct AnalyzeArgs {
    std::string input;
    std::string layout = "stacked";
    std::string holdout;
    std::string out;
    std::string entity;
    std::size_t threads = 1;
    ConfigCli config;
};

CollectionAnalysis run_analysis(const AnalyzeArgs& args, const AnalysisConfig& config,
                                std::vector<MultiSeries>& entities) {
    IngestResult in = ingest(args.input, layout_from_string(args.layout));
    print_warnings(in.warnings);
    entities = std::move(in.entities);
    if (!args.entity.empty()) {
        std::vector<MultiSeries> filtered;
        for (MultiSeries& entity : entities) {
            if (entity.entity_id() == args.entity) {
                filtered.push_back(std::move(entity));
            }
        }
        if (filtered.empty()) {
            throw DataError("no entity '" + args.entity + "' in " + args.input);
        }
        entities = std::move(filtered);
    }

    std::vector<MultiSeries> holdouts;
    if (!args.holdout.empty()) {
        IngestResult h = ingest(args.holdout, layout_from_string(args.layout));
        print_warnings(h.warnings);
        holdouts = std::move(h.entities);
        for (const MultiSeries& held : holdouts) {
            const bool known =
                std::any_of(entities.begin(), entities.end(), [&](const MultiSeries& e) {
                    return e.entity_id() == held.entity_id();
                });
            if (!known) {
                std::cerr << "warning: holdout entity '" << held.entity_id()
                          << "' has no corpus entity\n";
            }
        }
    }
    CollectionAnalysis analysis =
        analyze_collection_full(entities, holdouts, config, args.threads);
    print_failures(analysis.summary.failures);
    return analysis;
}

int run_markers(const AnalyzeArgs& args) {
    const AnalysisConfig config = args.config.resolve();
    std::vector<MultiSeries> entities;
    const CollectionAnalysis analysis = run_analysis(args, config, entities);
    const fs::path out(args.out);

    for (const MarkerReport& report : analysis.summary.reports) {
        write_text_atomic(out / "reports" / (report.entity_id + ".json"),
                          report_json_text(report));
    }
    write_text_atomic(out / "summary.csv", summary_csv_text(analysis, config));
    write_text_atomic(out / "summary.json", summary_json_text(analysis.summary, config));
    write_text_atomic(out / "diversification.csv",
                      diversification_csv_text(analysis.summary.reports, config));
    write_text_atomic(out / "entropy_vs_total.csv",
                      entropy_vs_total_csv_text(analysis.summary, config));
    if (!args.holdout.empty()) {
        write_text_atomic(out / "attribution.csv", attribution_csv_text(analysis, config));
    }

    const std::vector<std::string> labels = component_labels(entities);
    const bool plottable = !entities.empty() && entities.front().component_count() == 3;
    if (plottable) {
        write_text_atomic(out / "simplex.svg",
                          simplex_scatter_svg(influence_map(entropy_vectors_of(analysis)),
                                              labels, config));
        for (const EntityAnalysis& entity : analysis.entities) {
            write_text_atomic(out / "walks" / (entity.report.entity_id + ".svg"),
                              walk_svg(entity.report.entity_id, entity.walk,
                                       entity.report.trend, entity.holdout_point,
                                       entity.attribution, labels, config));
        }
    } else {
        std::cerr << "note: skipping SVG plots (supported for N = 3 only)\n";
    }
    std::cout << "analyzed " << analysis.summary.reports.size() << " entities ("
              << analysis.summary.failures.size() << " failed) -> " << args.out << "\n";
    return kExitOk;
}

int run_walk(const AnalyzeArgs& args) {
    const AnalysisConfig config = args.config.resolve();
    std::vector<MultiSeries> entities;
    const CollectionAnalysis analysis = run_analysis(args, config, entities);
    const fs::path out(args.out);

    std::string points_csv = config_comment_block(config);
    points_csv += "entity_id,window,coords\n";
    std::string trends_csv = config_comment_block(config);
    trends_csv += "entity_id,leading_last,direction,mean_distance\n";
    for (const EntityAnalysis& entity : analysis.entities) {
        for (std::size_t i = 0; i < entity.walk.size(); ++i) {
            points_csv += entity.report.entity_id + "," + std::to_string(i + 1) + ",";
            const auto& coords = entity.walk.points[i].coords;
            for (std::size_t c = 0; c < coords.size(); ++c) {
                points_csv += (c > 0 ? ";" : "") + format_full(coords[c]);
            }
            points_csv += "\n";
        }
        trends_csv += entity.report.entity_id + "," +
                      std::to_string(entity.report.trend.leading_last) + ",";
        for (std::size_t i = 0; i < entity.report.trend.direction.size(); ++i) {
            trends_csv += (i > 0 ? ";" : "") + format_full(entity.report.trend.direction[i]);
        }
        trends_csv += "," + format_full(entity.report.trend.mean_distance) + "\n";
    }
    write_text_atomic(out / "walk_points.csv", points_csv);
    write_text_atomic(out / "trends.csv", trends_csv);

    const std::vector<std::string> labels = component_labels(entities);
    if (!entities.empty() && entities.front().component_count() == 3) {
        for (const EntityAnalysis& entity : analysis.entities) {
            write_text_atomic(out / "walks" / (entity.report.entity_id + ".svg"),
                              walk_svg(entity.report.entity_id, entity.walk,
                                       entity.report.trend, entity.holdout_point,
                                       entity.attribution, labels, config));
        }
    } else {
        std::cerr << "note: skipping SVG plots (supported for N = 3 only)\n";
    }
    std::cout << "walked " << analysis.summary.reports.size() << " entities -> " << args.out
              << "\n";
    return kExitOk;
}

int run_zipf(const AnalyzeArgs& args) {
    const AnalysisConfig config = args.config.resolve();
    IngestResult in = ingest(args.input, layout_from_string(args.layout));
    print_warnings(in.warnings);
    const fs::path out(args.out);
    const Alphabet alphabet(config.alphabet_size);

    std::vector<MarkerReport> reports;
    std::size_t failures = 0;
    for (const MultiSeries& entity : in.entities) {
        if (!args.entity.empty() && entity.entity_id() != args.entity) {
            continue;
        }
        try {
            for (const Series& component : entity.components()) {
                const Series base =
                    config.differencing ? difference(component) : component;
                const WordCensus census = word_census(symbolize(base, alphabet),
                                                      config.word_length, config.equivalence);
                const std::string stem = entity.entity_id() + "_" + component.label();
                write_text_atomic(out / "census" / (stem + ".csv"),
                                  census_csv_text(census, config));
                write_text_atomic(out / "census" / (stem + "_loglog.csv"),
                                  census_loglog_text(census, config));
            }
            MarkerReport report;
            report.entity_id = entity.entity_id();
            report.diversification =
                diversification(entity, alphabet, config.differencing, config.word_length,
                                config.equivalence, config.rare_threshold);
            reports.push_back(std::move(report));
        } catch (const std::exception& e) {
            ++failures;
            std::cerr << "entity '" << entity.entity_id() << "' skipped: " << e.what() << "\n";
        }
    }
    write_text_atomic(out / "diversification.csv", diversification_csv_text(reports, config));
    std::cout << "censused " << reports.size() << " entities (" << failures << " failed) -> "
              << args.out << "\n";
    return kExitOk;
}

int run_simplex_plot(const AnalyzeArgs& args) {
    const AnalysisConfig config = args.config.resolve();
    IngestResult in = ingest(args.input, layout_from_string(args.layout));
    print_warnings(in.warnings);
    if (!in.entities.empty() && in.entities.front().component_count() != 3) {
        throw DataError("plotting supports N = 3 only, got N = " +
                        std::to_string(in.entities.front().component_count()));
    }

    std::vector<EntropyVector> vectors;
    for (const MultiSeries& entity : in.entities) {
        try {
            vectors.push_back(
                entropy_vector(entity, Alphabet(config.alphabet_size), config.differencing));
        } catch (const std::exception& e) {
            std::cerr << "entity '" << entity.entity_id() << "' skipped: " << e.what() << "\n";
        }
    }
    write_text_atomic(args.out, simplex_scatter_svg(influence_map(vectors),
                                                    component_labels(in.entities), config));
    std::cout << "plotted " << vectors.size() << " entities -> " << args.out << "\n";
    return kExitOk;
}

int run_attribute(const AnalyzeArgs& args) {
    if (args.holdout.empty()) {
        throw ConfigError("attribute needs --holdout");
    }
    const AnalysisConfig config = args.config.resolve();
    std::vector<MultiSeries> entities;
    const CollectionAnalysis analysis = run_analysis(args, config, entities);
    const fs::path out(args.out);
    write_text_atomic(out / "attribution.csv", attribution_csv_text(analysis, config));
    write_text_atomic(out / "summary.json", summary_json_text(analysis.summary, config));
    std::cout << "attributed " << analysis.summary.attributed_count << " entities -> "
              << args.out << "\n";
    return kExitOk;
}

nlohmann::json error_record(const std::string& type, const std::string& message) {
    return nlohmann::json{{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"behavioral markers for multi-dimensional sparse time series"};
    app.require_subcommand(1);

    GenerateArgs generate_args;
    CLI::App* generate = app.add_subcommand("generate", "Write a synthetic stacked corpus");
    generate->add_option("--out", generate_args.out, "Output CSV path")->required();
    generate->add_option("--entities", generate_args.spec.entity_count, "Entity count");
    generate->add_option("--components", generate_args.spec.component_count,
                         "Components per entity");
    generate->add_option("--length", generate_args.spec.length, "Measurements per component");
    generate->add_option("--seed", generate_args.spec.seed, "Corpus seed");
    generate->add_option("--generator", generate_args.generator_names,
                         "Per-component generator (repeat, or one for all): "
                         "constant|iid_uniform|markov|bursty_sparse");
    generate->add_option("--markov-bias", generate_args.markov_bias,
                         "Stay probability for markov components");
    generate->add_option("--zero-density", generate_args.zero_density,
                         "Zero fraction for bursty_sparse components");
    generate->add_option("--holdout-length", generate_args.holdout_length,
                         "Also draw holdout windows of this raw length");
    generate->add_option("--holdout-out", generate_args.holdout_out,
                         "Output CSV path for the holdout windows");

    auto add_analysis_options = [](CLI::App* cmd, AnalyzeArgs& args, bool with_holdout,
                                   bool with_threads) {
        cmd->add_option("--input", args.input, "Input corpus path")->required();
        cmd->add_option("--layout", args.layout, "stacked | wide");
        cmd->add_option("--entity", args.entity, "Restrict to one entity id");
        if (with_holdout) {
            cmd->add_option("--holdout", args.holdout, "Holdout windows (stacked CSV)");
        }
        if (with_threads) {
            cmd->add_option("--threads", args.threads,
                            "Worker threads (0 = hardware concurrency)");
        }
        args.config.add_options(cmd);
    };

    AnalyzeArgs markers_args;
    CLI::App* markers = app.add_subcommand("markers", "Full marker analysis of a corpus");
    add_analysis_options(markers, markers_args, true, true);
    markers->add_option("--out", markers_args.out, "Output directory")->required();

    AnalyzeArgs walk_args;
    CLI::App* walk_cmd = app.add_subcommand("walk", "Entropy walks and trends");
    add_analysis_options(walk_cmd, walk_args, true, true);
    walk_cmd->add_option("--out", walk_args.out, "Output directory")->required();

    AnalyzeArgs zipf_args;
    CLI::App* zipf_cmd = app.add_subcommand("zipf", "Word censuses and diversification");
    add_analysis_options(zipf_cmd, zipf_args, false, false);
    zipf_cmd->add_option("--out", zipf_args.out, "Output directory")->required();

    AnalyzeArgs simplex_args;
    CLI::App* simplex_cmd =
        app.add_subcommand("simplex-plot", "Influence-area scatter plot (N = 3)");
    add_analysis_options(simplex_cmd, simplex_args, false, false);
    simplex_cmd->add_option("--out", simplex_args.out, "Output SVG path")->required();

    AnalyzeArgs attribute_args;
    CLI::App* attribute_cmd =
        app.add_subcommand("attribute", "Attribute held-out windows to walks");
    add_analysis_options(attribute_cmd, attribute_args, true, true);
    attribute_cmd->add_option("--out", attribute_args.out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        std::cerr << error_record("usage", e.what()).dump() << "\n";
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return run_generate(generate_args);
        if (markers->parsed()) return run_markers(markers_args);
        if (walk_cmd->parsed()) return run_walk(walk_args);
        if (zipf_cmd->parsed()) return run_zipf(zipf_args);
        if (simplex_cmd->parsed()) return run_simplex_plot(simplex_args);
        if (attribute_cmd->parsed()) return run_attribute(attribute_args);
    } catch (const ConfigError& e) {
        std::cerr << error_record("usage", e.what()).dump() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << error_record("data", e.what()).dump() << "\n";
        return kExitData;
    } catch (const AnalysisError& e) {
        std::cerr << error_record("analysis", e.what()).dump() << "\n";
        return kExitAnalysis;
    } catch (const std::exception& e) {
        std::cerr << error_record("analysis", e.what()).dump() << "\n";
        return kExitAnalysis;
    }
    return kExitUsage;
}
