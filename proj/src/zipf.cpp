#include "tsmark/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tsmark/errors.hpp"

namespace tsmark {

std::string WordClass::id() const {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i > 0) {
            out += '-';
        }
        out += std::to_string(key[i]);
    }
    return out;
}

WordCensus word_census(const SymbolicSeries& series, int word_length,
                       WordEquivalence equivalence) {
    const std::size_t t = series.size();
    if (word_length < 1) {
        throw ConfigError("word length must be >= 1, got " + std::to_string(word_length));
    }
    if (static_cast<std::size_t>(word_length) >= t) {
        throw ConfigError("word length p=" + std::to_string(word_length) +
                          " must be smaller than the series length t=" + std::to_string(t));
    }

    const std::size_t p = static_cast<std::size_t>(word_length);
    const std::size_t total = t - p + 1;
    std::map<std::vector<int>, std::size_t> counts;
    for (std::size_t start = 0; start + p <= t; ++start) {
        std::vector<int> key;
        if (equivalence == WordEquivalence::exact) {
            key.assign(series.symbols().begin() + static_cast<std::ptrdiff_t>(start),
                       series.symbols().begin() + static_cast<std::ptrdiff_t>(start + p));
        } else {
            key.assign(static_cast<std::size_t>(series.alphabet().size), 0);
            for (std::size_t i = start; i < start + p; ++i) {
                ++key[static_cast<std::size_t>(series[i] - 1)];
            }
        }
        ++counts[std::move(key)];
    }

    WordCensus census;
    census.word_length = word_length;
    census.equivalence = equivalence;
    census.total_words = total;
    census.classes.reserve(counts.size());
    for (auto& [key, count] : counts) {
        WordClass cls;
        cls.key = key;
        cls.count = count;
        cls.frequency = static_cast<double>(count) / static_cast<double>(total);
        census.classes.push_back(std::move(cls));
    }
    // Decreasing frequency; ties ordered by key so ranks are deterministic.
    std::stable_sort(census.classes.begin(), census.classes.end(),
                     [](const WordClass& a, const WordClass& b) {
                         if (a.count != b.count) {
                             return a.count > b.count;
                         }
                         return a.key < b.key;
                     });
    return census;
}

ZipfFit zipf_coefficient(const WordCensus& census, double rare_threshold) {
    if (census.classes.empty()) {
        throw ConfigError("cannot fit a Zipf coefficient to an empty census");
    }
    ZipfFit fit;
    fit.rare_threshold = rare_threshold;

    std::vector<double> log_rank;
    std::vector<double> log_freq;
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
        if (census.classes[i].frequency < rare_threshold) {
            continue;
        }
        log_rank.push_back(std::log(static_cast<double>(i + 1)));
        log_freq.push_back(std::log(census.classes[i].frequency));
    }
    fit.points_used = log_rank.size();
    if (fit.points_used < 2) {
        fit.rho = 0.0;
        fit.degenerate = true;
        return fit;
    }

    // Uniformly distributed words have slope exactly zero; skip the
    // regression so rounding noise cannot leak in.
    const bool all_equal =
        std::all_of(log_freq.begin(), log_freq.end(),
                    [&](double y) { return y == log_freq.front(); });
    if (all_equal) {
        fit.rho = 0.0;
        return fit;
    }

    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < log_rank.size(); ++i) {
        mean_x += log_rank[i];
        mean_y += log_freq[i];
    }
    mean_x /= static_cast<double>(log_rank.size());
    mean_y /= static_cast<double>(log_rank.size());

    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < log_rank.size(); ++i) {
        sxy += (log_rank[i] - mean_x) * (log_freq[i] - mean_y);
        sxx += (log_rank[i] - mean_x) * (log_rank[i] - mean_x);
    }
    fit.rho = sxy / sxx;
    return fit;
}

DiversificationCategory categorize(double d) {
    if (d <= 0.0) {
        return DiversificationCategory::totally_unbalanced;
    }
    if (d <= 0.8) {
        return DiversificationCategory::rich;
    }
    if (d <= 1.0) {
        return DiversificationCategory::highly_diversified;
    }
    return DiversificationCategory::intermediate;
}

Diversification diversification(const MultiSeries& multi, Alphabet alphabet,
                                bool use_differencing, int word_length,
                                WordEquivalence equivalence, double rare_threshold) {
    Diversification result;
    result.per_component_rho.reserve(multi.component_count());
    for (const Series& component : multi.components()) {
        try {
            const Series base = use_differencing ? difference(component) : component;
            const WordCensus census =
                word_census(symbolize(base, alphabet), word_length, equivalence);
            const ZipfFit fit = zipf_coefficient(census, rare_threshold);
            result.per_component_rho.push_back(fit.rho);
            result.per_component_class_count.push_back(census.classes.size());
            result.any_degenerate_fit = result.any_degenerate_fit || fit.degenerate;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::runtime_error& e) {
            throw AnalysisError("component '" + component.label() + "': " + e.what());
        }
    }

    double sum = 0.0;
    for (double rho : result.per_component_rho) {
        sum += rho;
    }
    result.value = 1.0 + sum / static_cast<double>(result.per_component_rho.size());
    result.category = categorize(result.value);
    return result;
}

const char* to_string(DiversificationCategory category) {
    switch (category) {
        case DiversificationCategory::highly_diversified:
            return "highly_diversified";
        case DiversificationCategory::rich:
            return "rich";
        case DiversificationCategory::totally_unbalanced:
            return "totally_unbalanced";
        case DiversificationCategory::intermediate:
            return "intermediate";
    }
    return "unknown";
}

const char* to_string(WordEquivalence equivalence) {
    return equivalence == WordEquivalence::exact ? "exact" : "composition";
}

std::size_t composition_class_bound(int alphabet_size, int word_length) {
    // C(p + L - 1, L - 1) evaluated multiplicatively.
    const std::size_t n = static_cast<std::size_t>(word_length + alphabet_size - 1);
    const std::size_t k = static_cast<std::size_t>(alphabet_size - 1);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace tsmark
