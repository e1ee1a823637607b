#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tsmark/series.hpp"

namespace tsmark {

/// Per-component synthetic generator.
///   constant      - one level for the whole component
///   iid_uniform   - independent uniform draws
///   markov        - two-regime chain; param = stay probability
///   bursty_sparse - zeros at an exact quota; param = zero density
enum class GeneratorKind { constant, iid_uniform, markov, bursty_sparse };

struct ComponentSpec {
    GeneratorKind kind = GeneratorKind::iid_uniform;
    double param = 0.0;
};

/// Deterministic synthetic corpus description: one RNG stream per
/// (entity, component), so the output is independent of generation order.
struct CorpusSpec {
    std::size_t entity_count = 1;
    std::size_t component_count = 3;
    std::size_t length = 100;
    std::vector<ComponentSpec> generators;  // one per component
    std::uint64_t seed = 0;
};

std::vector<MultiSeries> generate_corpus(const CorpusSpec& spec);

/// Extra windows drawn from the same per-entity generative process, for
/// holdout attribution. length values per component.
std::vector<MultiSeries> generate_holdout(const CorpusSpec& spec, std::size_t length);

GeneratorKind generator_kind_from_string(const std::string& name);
const char* to_string(GeneratorKind kind);

}  // namespace tsmark
