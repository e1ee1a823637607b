#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsmark/series.hpp"

namespace tsmark {

/// One phrase of an incremental parse: the index of an earlier phrase
/// (0 = empty prefix) extended by one symbol. extension_symbol == 0 marks the
/// final partial phrase, which repeats an earlier phrase with no extension.
struct Phrase {
    std::size_t prefix_index = 0;
    int extension_symbol = 0;
};

/// Result of incrementally parsing a symbolic sequence. bit_cost charges
/// phrase k with ceil(log2 k) bits for the prefix index plus ceil(log2 L)
/// bits for the extension symbol; the partial final phrase pays full cost.
struct ParseResult {
    std::vector<Phrase> phrases;
    std::size_t phrase_count = 0;
    double bit_cost = 0.0;
};

/// Incremental dictionary parse: scanning left to right, each new phrase is
/// the longest previously parsed phrase plus one fresh symbol. The final
/// phrase may be a pure repeat of an earlier phrase and still counts.
ParseResult lz_parse(const SymbolicSeries& sequence);

/// Reconstruct the original symbol sequence from a parse.
std::vector<int> decode(const ParseResult& parse);

/// Compression-ratio entropy h = min(1, bit_cost / (t * log2 L)) in [0, 1].
double entropy(const SymbolicSeries& sequence);

/// Unclamped compression ratio bit_cost / (t * log2 L); exceeds 1 for short
/// strings because of header overhead.
double entropy_raw(const SymbolicSeries& sequence);

/// Per-component entropies of a multi-series.
struct EntropyVector {
    std::vector<double> values;
    std::string entity_id;

    std::size_t dimension() const noexcept { return values.size(); }
};

/// Component-wise pipeline: optional differencing, then symbolization, then
/// entropy. Component order is preserved.
EntropyVector entropy_vector(const MultiSeries& multi, Alphabet alphabet,
                             bool use_differencing);

/// Same pipeline without the clamp, for reporting the raw ratios.
EntropyVector entropy_vector_raw(const MultiSeries& multi, Alphabet alphabet,
                                 bool use_differencing);

double norm_euclidean(const EntropyVector& v);
double norm_l1(const EntropyVector& v);

}  // namespace tsmark
