#include "tsmark/markers.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "tsmark/errors.hpp"

namespace tsmark {

namespace {

double grand_total_of(const MultiSeries& multi) {
    double total = 0.0;
    for (const Series& component : multi.components()) {
        for (double v : component.values()) {
            total += v;
        }
    }
    return total;
}

}  // namespace

EntityAnalysis analyze_entity_full(const MultiSeries& multi, const AnalysisConfig& config,
                                   const MultiSeries* holdout) {
    config.validate();
    const Alphabet alphabet(config.alphabet_size);

    EntityAnalysis analysis;
    MarkerReport& report = analysis.report;
    report.entity_id = multi.entity_id();
    report.config_echo = config;

    for (const Series& component : multi.components()) {
        report.component_labels.push_back(component.label());
        report.sparsity.push_back(sparsity(component, config.sparsity_delta));
    }
    report.grand_total = grand_total_of(multi);

    const EntropyVector ev = entropy_vector(multi, alphabet, config.differencing);
    report.entropy_vector = ev.values;
    report.entropy_vector_raw = entropy_vector_raw(multi, alphabet, config.differencing).values;
    report.norm_euclidean = norm_euclidean(ev);
    report.norm_l1 = norm_l1(ev);
    report.leading = influence(ev).leading;
    analysis.full_point = project(ev);

    analysis.moving = moving_matrix(multi, alphabet, config.differencing, config.window,
                                    config.symbolization);
    analysis.walk = walk(analysis.moving);
    report.trend = fit_trend(analysis.walk, analysis.moving);

    report.diversification =
        diversification(multi, alphabet, config.differencing, config.word_length,
                        config.equivalence, config.rare_threshold);

    if (holdout != nullptr) {
        if (holdout->component_count() != multi.component_count()) {
            throw DataError("holdout for '" + multi.entity_id() + "' has " +
                            std::to_string(holdout->component_count()) +
                            " components, entity has " +
                            std::to_string(multi.component_count()));
        }
        const std::size_t expected_raw =
            config.window.length + (config.differencing ? 1 : 0);
        if (holdout->length() != expected_raw) {
            throw DataError("holdout window length " + std::to_string(holdout->length()) +
                            " does not match configured window length " +
                            std::to_string(config.window.length) +
                            (config.differencing ? " (+1 for differencing)" : ""));
        }
        // The held-out window is symbolized on its own range, like a
        // per-window analysis window.
        const EntropyVector q_entropy =
            entropy_vector(*holdout, alphabet, config.differencing);
        analysis.holdout_point = project(q_entropy);
        analysis.attribution = attribute(*analysis.holdout_point, report.trend, q_entropy);
    }
    return analysis;
}

MarkerReport analyze_entity(const MultiSeries& multi, const AnalysisConfig& config) {
    return analyze_entity_full(multi, config).report;
}

CollectionAnalysis analyze_collection_full(const std::vector<MultiSeries>& entities,
                                           const std::vector<MultiSeries>& holdouts,
                                           const AnalysisConfig& config,
                                           std::size_t threads) {
    config.validate();

    std::unordered_map<std::string, const MultiSeries*> holdout_by_id;
    for (const MultiSeries& h : holdouts) {
        if (!holdout_by_id.emplace(h.entity_id(), &h).second) {
            throw DataError("duplicate holdout entity '" + h.entity_id() + "'");
        }
    }

    const std::size_t n = entities.size();
    std::vector<std::optional<EntityAnalysis>> results(n);
    std::vector<std::string> errors(n);

    auto run_one = [&](std::size_t i) {
        const auto it = holdout_by_id.find(entities[i].entity_id());
        const MultiSeries* holdout = it == holdout_by_id.end() ? nullptr : it->second;
        try {
            results[i] = analyze_entity_full(entities[i], config, holdout);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    std::size_t worker_count = threads == 0 ? std::thread::hardware_concurrency() : threads;
    worker_count = std::max<std::size_t>(1, std::min(worker_count, n));
    if (worker_count <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            run_one(i);
        }
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (std::size_t t = 0; t < worker_count; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < n; i += worker_count) {
                    run_one(i);
                }
            });
        }
        for (std::thread& worker : workers) {
            worker.join();
        }
    }

    CollectionAnalysis analysis;
    CollectionSummary& summary = analysis.summary;
    std::size_t within = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!results[i]) {
            summary.failures.push_back({entities[i].entity_id(), errors[i]});
            continue;
        }
        EntityAnalysis& entity = *results[i];
        summary.diversification_category_histogram[entity.report.diversification.category]++;
        if (entity.attribution) {
            ++summary.attributed_count;
            if (entity.attribution->status == AttributionStatus::within) {
                ++within;
            } else if (entity.attribution->status == AttributionStatus::outside_changed_leading) {
                ++summary.changed_leading_count;
            }
        }
        summary.reports.push_back(entity.report);
        analysis.entities.push_back(std::move(entity));
    }
    if (summary.attributed_count > 0) {
        summary.within_walk_fraction =
            static_cast<double>(within) / static_cast<double>(summary.attributed_count);
    }

    // Grand totals min-max normalized across the analyzed collection; a
    // single-valued collection maps to 0.
    if (!summary.reports.empty()) {
        double lo = summary.reports.front().grand_total;
        double hi = lo;
        for (const MarkerReport& r : summary.reports) {
            lo = std::min(lo, r.grand_total);
            hi = std::max(hi, r.grand_total);
        }
        const double span = hi - lo;
        for (const MarkerReport& r : summary.reports) {
            const double normalized = span > 0.0 ? (r.grand_total - lo) / span : 0.0;
            summary.entropy_vs_total.emplace_back(normalized, r.norm_euclidean);
        }
    }
    return analysis;
}

CollectionSummary analyze_collection(const std::vector<MultiSeries>& entities,
                                     const std::vector<MultiSeries>& holdouts,
                                     const AnalysisConfig& config, std::size_t threads) {
    return analyze_collection_full(entities, holdouts, config, threads).summary;
}

}  // namespace tsmark
