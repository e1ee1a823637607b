#include "tsmark/entropy.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>

#include "tsmark/errors.hpp"

namespace tsmark {

namespace {

// ceil(log2(n)) with ceil(log2(1)) = 0.
std::uint64_t ceil_log2(std::uint64_t n) {
    return std::bit_width(n - 1);
}

}  // namespace

ParseResult lz_parse(const SymbolicSeries& sequence) {
    if (sequence.size() == 0) {
        throw AnalysisError("cannot parse an empty sequence");
    }

    // Phrase dictionary as a trie; node 0 is the empty prefix.
    std::map<std::pair<std::size_t, int>, std::size_t> children;

    ParseResult result;
    std::size_t current = 0;  // node currently matched
    for (int symbol : sequence.symbols()) {
        auto it = children.find({current, symbol});
        if (it != children.end()) {
            current = it->second;
            continue;
        }
        result.phrases.push_back({current, symbol});
        children.emplace(std::make_pair(current, symbol), result.phrases.size());
        current = 0;
    }
    if (current != 0) {
        // Input ended mid-phrase: a pure repeat of phrase `current`.
        result.phrases.push_back({current, 0});
    }

    result.phrase_count = result.phrases.size();
    const std::uint64_t symbol_bits = ceil_log2(static_cast<std::uint64_t>(sequence.alphabet().size));
    std::uint64_t bits = 0;
    for (std::size_t k = 1; k <= result.phrase_count; ++k) {
        bits += ceil_log2(k) + symbol_bits;
    }
    result.bit_cost = static_cast<double>(bits);
    return result;
}

std::vector<int> decode(const ParseResult& parse) {
    std::vector<std::vector<int>> expansions;
    expansions.reserve(parse.phrases.size() + 1);
    expansions.emplace_back();  // phrase 0: empty prefix

    std::vector<int> output;
    for (const Phrase& phrase : parse.phrases) {
        std::vector<int> word = expansions[phrase.prefix_index];
        if (phrase.extension_symbol != 0) {
            word.push_back(phrase.extension_symbol);
        }
        output.insert(output.end(), word.begin(), word.end());
        expansions.push_back(std::move(word));
    }
    return output;
}

double entropy_raw(const SymbolicSeries& sequence) {
    const ParseResult parse = lz_parse(sequence);
    const double denom =
        static_cast<double>(sequence.size()) * std::log2(static_cast<double>(sequence.alphabet().size));
    return parse.bit_cost / denom;
}

double entropy(const SymbolicSeries& sequence) {
    return std::min(1.0, entropy_raw(sequence));
}

namespace {

EntropyVector entropy_vector_impl(const MultiSeries& multi, Alphabet alphabet,
                                  bool use_differencing, bool clamp) {
    EntropyVector result;
    result.entity_id = multi.entity_id();
    result.values.reserve(multi.component_count());
    for (const Series& component : multi.components()) {
        try {
            const SymbolicSeries symbols =
                use_differencing ? symbolize(difference(component), alphabet)
                                 : symbolize(component, alphabet);
            result.values.push_back(clamp ? entropy(symbols) : entropy_raw(symbols));
        } catch (const std::runtime_error& e) {
            throw AnalysisError("component '" + component.label() + "': " + e.what());
        }
    }
    return result;
}

}  // namespace

EntropyVector entropy_vector(const MultiSeries& multi, Alphabet alphabet,
                             bool use_differencing) {
    return entropy_vector_impl(multi, alphabet, use_differencing, true);
}

EntropyVector entropy_vector_raw(const MultiSeries& multi, Alphabet alphabet,
                                 bool use_differencing) {
    return entropy_vector_impl(multi, alphabet, use_differencing, false);
}

double norm_euclidean(const EntropyVector& v) {
    double sum = 0.0;
    for (double h : v.values) {
        sum += h * h;
    }
    return std::sqrt(sum);
}

double norm_l1(const EntropyVector& v) {
    double sum = 0.0;
    for (double h : v.values) {
        sum += h;
    }
    return sum;
}

}  // namespace tsmark
