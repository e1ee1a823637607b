#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsmark/series.hpp"

namespace tsmark {

/// How two length-p words are identified: literally, or by their symbol
/// counts (n_1, ..., n_L) ignoring order.
enum class WordEquivalence { exact, composition };

/// One equivalence class of words: its key (the word itself in exact mode,
/// the count vector in composition mode), occurrences, and relative
/// frequency.
struct WordClass {
    std::vector<int> key;
    std::size_t count = 0;
    double frequency = 0.0;

    /// Canonical CSV-safe form, elements joined by '-'.
    std::string id() const;
};

/// Rank-frequency census of the length-p words of a sequence, sorted by
/// decreasing frequency (ties by key, lexicographically). Rank r is the
/// 1-based position.
struct WordCensus {
    std::vector<WordClass> classes;
    int word_length = 0;
    WordEquivalence equivalence = WordEquivalence::exact;
    std::size_t total_words = 0;
};

/// Count all words of length p < t via step-1 sliding windows
/// (t - p + 1 words in total).
WordCensus word_census(const SymbolicSeries& series, int word_length,
                       WordEquivalence equivalence);

/// Zipf coefficient: slope of log f(r) against log r.
struct ZipfFit {
    double rho = 0.0;
    std::size_t points_used = 0;
    double rare_threshold = 0.0;
    bool degenerate = false;  // fewer than 2 classes survived the cutoff
};

/// Drop rare classes (frequency < rare_threshold), then ordinary least
/// squares of log-frequency on log-rank over the survivors. With fewer than
/// 2 survivors the fit reports rho = 0 and the degenerate flag.
ZipfFit zipf_coefficient(const WordCensus& census, double rare_threshold);

enum class DiversificationCategory {
    highly_diversified,  // 0.8 < D <= 1
    rich,                // 0 < D <= 0.8
    totally_unbalanced,  // D <= 0
    intermediate         // D > 1, anomalous
};

/// The diversification marker D = 1 + mean of per-component Zipf
/// coefficients.
struct Diversification {
    double value = 0.0;
    std::vector<double> per_component_rho;
    std::vector<std::size_t> per_component_class_count;  // observed word classes
    DiversificationCategory category = DiversificationCategory::intermediate;
    bool any_degenerate_fit = false;
};

Diversification diversification(const MultiSeries& multi, Alphabet alphabet,
                                bool use_differencing, int word_length,
                                WordEquivalence equivalence, double rare_threshold);

DiversificationCategory categorize(double d);
const char* to_string(DiversificationCategory category);
const char* to_string(WordEquivalence equivalence);

/// Number of possible composition classes: compositions of p into L
/// non-negative parts, C(p + L - 1, L - 1).
std::size_t composition_class_bound(int alphabet_size, int word_length);

}  // namespace tsmark
