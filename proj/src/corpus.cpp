#include "tsmark/corpus.hpp"

#include <cmath>
#include <unordered_map>

#include "tsmark/errors.hpp"
#include "tsmark/rng.hpp"

namespace tsmark {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    SplitMix64 mix(base ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL));
    return mix.next();
}

namespace {

// Values are money-like: non-negative with two decimals, so they survive a
// CSV round trip bit-exactly.
double cents(std::uint64_t hundredths) {
    return static_cast<double>(hundredths) / 100.0;
}

std::vector<double> generate_component(const ComponentSpec& spec, std::size_t length,
                                       SplitMix64& rng) {
    std::vector<double> values(length, 0.0);
    switch (spec.kind) {
        case GeneratorKind::constant: {
            const double level = cents(100 + rng.next_below(9900));
            for (double& v : values) {
                v = level;
            }
            break;
        }
        case GeneratorKind::iid_uniform: {
            for (double& v : values) {
                v = cents(rng.next_below(10000));
            }
            break;
        }
        case GeneratorKind::markov: {
            const double stay = spec.param > 0.0 ? spec.param : 0.9;
            int regime = static_cast<int>(rng.next_below(2));
            for (double& v : values) {
                if (rng.next_unit() >= stay) {
                    regime = 1 - regime;
                }
                v = regime == 0 ? cents(rng.next_below(2000))
                                : cents(6000 + rng.next_below(4000));
            }
            break;
        }
        case GeneratorKind::bursty_sparse: {
            const double density = spec.param > 0.0 ? spec.param : 0.25;
            if (density > 1.0) {
                throw ConfigError("zero density must lie in [0, 1]");
            }
            // Exact zero quota split into short runs, so the realized
            // density is round(density * t) / t for every seed and the
            // zeros arrive in bursts.
            const std::size_t zeros =
                static_cast<std::size_t>(std::llround(density * static_cast<double>(length)));
            const std::size_t active = length - zeros;
            std::size_t run_count = zeros == 0 ? 0 : std::max<std::size_t>(1, zeros / 4);
            run_count = std::min(run_count, active + 1);
            std::vector<std::size_t> run_lengths(run_count, 0);
            for (std::size_t i = 0; i < run_count; ++i) {
                run_lengths[i] = zeros / run_count + (i < zeros % run_count ? 1 : 0);
            }
            // runs go into distinct gaps between active cells
            std::vector<std::size_t> run_at(active + 1, 0);
            std::unordered_map<std::size_t, std::size_t> swapped;
            for (std::size_t i = 0; i < run_count; ++i) {
                const std::size_t j =
                    i + static_cast<std::size_t>(rng.next_below(active + 1 - i));
                auto it_j = swapped.find(j);
                const std::size_t gap_j = it_j == swapped.end() ? j : it_j->second;
                auto it_i = swapped.find(i);
                swapped[j] = it_i == swapped.end() ? i : it_i->second;
                run_at[gap_j] = run_lengths[i];
            }
            // active spells follow a bounded random walk
            double level = cents(2000 + rng.next_below(6000));
            values.clear();
            values.reserve(length);
            for (std::size_t gap = 0; gap <= active; ++gap) {
                values.insert(values.end(), run_at[gap], 0.0);
                if (gap < active) {
                    const double step = cents(rng.next_below(1601)) - 8.0;
                    level = std::min(99.0, std::max(1.0, level + step));
                    level = cents(static_cast<std::uint64_t>(std::llround(level * 100.0)));
                    values.push_back(level);
                }
            }
            break;
        }
    }
    return values;
}

std::string entity_name(std::size_t index, std::size_t count) {
    std::size_t width = 1;
    for (std::size_t c = count; c > 10; c = (c + 9) / 10) {
        ++width;
    }
    std::string digits = std::to_string(index + 1);
    while (digits.size() < width) {
        digits.insert(digits.begin(), '0');
    }
    return "e" + digits;
}

std::vector<MultiSeries> generate(const CorpusSpec& spec, std::size_t length,
                                  std::uint64_t stream_salt) {
    if (spec.component_count < 2) {
        throw ConfigError("corpus needs at least 2 components");
    }
    if (spec.entity_count == 0 || length == 0) {
        throw ConfigError("corpus needs at least 1 entity and length >= 1");
    }
    std::vector<ComponentSpec> generators = spec.generators;
    if (generators.empty()) {
        generators.assign(spec.component_count, ComponentSpec{});
    }
    if (generators.size() == 1) {
        generators.assign(spec.component_count, generators.front());
    }
    if (generators.size() != spec.component_count) {
        throw ConfigError("got " + std::to_string(generators.size()) + " generators for " +
                          std::to_string(spec.component_count) + " components");
    }

    std::vector<MultiSeries> corpus;
    corpus.reserve(spec.entity_count);
    for (std::size_t e = 0; e < spec.entity_count; ++e) {
        std::vector<Series> components;
        components.reserve(spec.component_count);
        for (std::size_t c = 0; c < spec.component_count; ++c) {
            SplitMix64 rng(derive_seed(spec.seed ^ stream_salt, e, c));
            components.emplace_back(generate_component(generators[c], length, rng),
                                    "c" + std::to_string(c + 1));
        }
        corpus.emplace_back(std::move(components), entity_name(e, spec.entity_count));
    }
    return corpus;
}

}  // namespace

std::vector<MultiSeries> generate_corpus(const CorpusSpec& spec) {
    return generate(spec, spec.length, 0);
}

std::vector<MultiSeries> generate_holdout(const CorpusSpec& spec, std::size_t length) {
    return generate(spec, length, 0x484f4c44ULL);  // distinct stream per purpose
}

GeneratorKind generator_kind_from_string(const std::string& name) {
    if (name == "constant") return GeneratorKind::constant;
    if (name == "iid_uniform") return GeneratorKind::iid_uniform;
    if (name == "markov") return GeneratorKind::markov;
    if (name == "bursty_sparse") return GeneratorKind::bursty_sparse;
    throw ConfigError("unknown generator '" + name +
                      "' (expected constant|iid_uniform|markov|bursty_sparse)");
}

const char* to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::constant:
            return "constant";
        case GeneratorKind::iid_uniform:
            return "iid_uniform";
        case GeneratorKind::markov:
            return "markov";
        case GeneratorKind::bursty_sparse:
            return "bursty_sparse";
    }
    return "unknown";
}

}  // namespace tsmark
