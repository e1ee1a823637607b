#pragma once

#include <string>

#include "tsmark/walk.hpp"
#include "tsmark/zipf.hpp"

namespace tsmark {

/// Full analysis configuration; echoed verbatim into every output artifact.
struct AnalysisConfig {
    int alphabet_size = 4;
    bool differencing = true;
    WindowScheme window = WindowScheme::overlapping(350, 52);
    int word_length = 12;
    WordEquivalence equivalence = WordEquivalence::composition;
    double rare_threshold = 0.01;
    double sparsity_delta = 0.25;
    SymbolizationMode symbolization = SymbolizationMode::global_range;

    void validate() const;
};

/// Flat `key = value` text form; parse(to_text(c)) == c.
std::string config_to_text(const AnalysisConfig& config);
AnalysisConfig config_from_text(const std::string& text);

const char* to_string(SymbolizationMode mode);
const char* to_string(WindowScheme::Kind kind);

}  // namespace tsmark
