#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "tsmark/errors.hpp"
#include "tsmark/rng.hpp"
#include "tsmark/zipf.hpp"

using namespace tsmark;

namespace {

SymbolicSeries seq(std::vector<int> symbols, int L = 4) {
    return SymbolicSeries(std::move(symbols), Alphabet(L));
}

// Hand-built census with the given frequencies, already sorted.
WordCensus census_with_frequencies(const std::vector<double>& frequencies) {
    WordCensus census;
    census.word_length = 1;
    census.equivalence = WordEquivalence::exact;
    census.total_words = frequencies.size();
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        WordClass cls;
        cls.key = {static_cast<int>(i + 1)};
        cls.count = frequencies.size() - i;  // consistent ordering only
        cls.frequency = frequencies[i];
        census.classes.push_back(cls);
    }
    return census;
}

std::vector<int> random_symbols(SplitMix64& rng, std::size_t length, int L) {
    std::vector<int> symbols(length);
    for (int& s : symbols) {
        s = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(L)));
    }
    return symbols;
}

}  // namespace

TEST_CASE("census of a short alternating sequence") {
    SUBCASE("exact words") {
        const WordCensus c = word_census(seq({1, 2, 1, 2}), 2, WordEquivalence::exact);
        REQUIRE(c.classes.size() == 2);
        CHECK(c.total_words == 3);
        CHECK(c.classes[0].key == std::vector<int>{1, 2});
        CHECK(c.classes[0].count == 2);
        CHECK(c.classes[0].frequency == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(c.classes[1].key == std::vector<int>{2, 1});
        CHECK(c.classes[1].frequency == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("composition classes merge anagrams") {
        const WordCensus c = word_census(seq({1, 2, 1, 2}), 2, WordEquivalence::composition);
        REQUIRE(c.classes.size() == 1);
        CHECK(c.classes[0].key == std::vector<int>{1, 1, 0, 0});
        CHECK(c.classes[0].frequency == 1.0);
    }
}

TEST_CASE("census rejects words no shorter than the series") {
    CHECK_THROWS_AS(word_census(seq({1, 2, 1}), 3, WordEquivalence::exact), ConfigError);
    CHECK_THROWS_AS(word_census(seq({1, 2, 1}), 0, WordEquivalence::exact), ConfigError);
}

TEST_CASE("census frequencies sum to one and count t - p + 1 words") {
    SplitMix64 rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t t = 20 + rng.next_below(200);
        const int p = 1 + static_cast<int>(rng.next_below(12));
        const auto mode = trial % 2 == 0 ? WordEquivalence::exact : WordEquivalence::composition;
        const WordCensus c = word_census(seq(random_symbols(rng, t, 4)), p, mode);
        CHECK(c.total_words == t - static_cast<std::size_t>(p) + 1);
        double sum = 0.0;
        std::size_t count_sum = 0;
        for (const WordClass& cls : c.classes) {
            sum += cls.frequency;
            count_sum += cls.count;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(count_sum == c.total_words);
        for (std::size_t i = 0; i + 1 < c.classes.size(); ++i) {
            CHECK(c.classes[i].frequency >= c.classes[i + 1].frequency);
        }
    }
}

TEST_CASE("exact classes refine composition classes") {
    SplitMix64 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t t = 30 + rng.next_below(100);
        const int p = 2 + static_cast<int>(rng.next_below(5));
        const std::vector<int> symbols = random_symbols(rng, t, 4);
        const WordCensus exact = word_census(seq(symbols), p, WordEquivalence::exact);
        const WordCensus composition =
            word_census(seq(symbols), p, WordEquivalence::composition);

        std::map<std::vector<int>, std::size_t> merged;
        for (const WordClass& cls : exact.classes) {
            std::vector<int> key(4, 0);
            for (int s : cls.key) {
                ++key[static_cast<std::size_t>(s - 1)];
            }
            merged[key] += cls.count;
        }
        REQUIRE(merged.size() == composition.classes.size());
        for (const WordClass& cls : composition.classes) {
            CHECK(merged.at(cls.key) == cls.count);
        }
    }
}

TEST_CASE("the composition class space for L=4, p=12 has 455 members") {
    CHECK(composition_class_bound(4, 12) == 455);
    CHECK(composition_class_bound(2, 3) == 4);  // (3,0) (2,1) (1,2) (0,3)
}

TEST_CASE("an exact 1/r census fits rho = -1") {
    std::vector<double> frequencies;
    double harmonic = 0.0;
    for (int r = 1; r <= 10; ++r) {
        harmonic += 1.0 / r;
    }
    for (int r = 1; r <= 10; ++r) {
        frequencies.push_back(1.0 / (r * harmonic));
    }
    const ZipfFit fit = zipf_coefficient(census_with_frequencies(frequencies), 0.0);
    CHECK(fit.rho == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fit.points_used == 10);
    CHECK_FALSE(fit.degenerate);
}

TEST_CASE("uniformly distributed words have coefficient exactly zero") {
    const ZipfFit fit =
        zipf_coefficient(census_with_frequencies(std::vector<double>(8, 0.125)), 0.0);
    CHECK(fit.rho == 0.0);
    CHECK_FALSE(fit.degenerate);
}

TEST_CASE("rare words are dropped before the regression") {
    // 4 frequent classes and one rare one
    const ZipfFit fit =
        zipf_coefficient(census_with_frequencies({0.4, 0.3, 0.2, 0.095, 0.005}), 0.01);
    CHECK(fit.points_used == 4);
}

TEST_CASE("a single surviving class makes the fit degenerate") {
    const ZipfFit fit = zipf_coefficient(census_with_frequencies({0.995, 0.005}), 0.01);
    CHECK(fit.rho == 0.0);
    CHECK(fit.degenerate);
    CHECK(fit.points_used == 1);
}

TEST_CASE("the slope ignores a constant scaling of the frequencies") {
    SplitMix64 rng(89);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> frequencies;
        double sum = 0.0;
        for (int i = 0; i < 12; ++i) {
            frequencies.push_back(rng.next_unit() + 1e-3);
            sum += frequencies.back();
        }
        std::sort(frequencies.rbegin(), frequencies.rend());
        std::vector<double> normalized;
        std::vector<double> counts;
        for (double f : frequencies) {
            normalized.push_back(f / sum);
            counts.push_back(f * 1000.0);  // unnormalized "raw counts"
        }
        const double rho_f = zipf_coefficient(census_with_frequencies(normalized), 0.0).rho;
        const double rho_c = zipf_coefficient(census_with_frequencies(counts), 0.0).rho;
        CHECK(rho_f == doctest::Approx(rho_c).epsilon(1e-9));
    }
}

TEST_CASE("sorted censuses never fit a positive slope") {
    SplitMix64 rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> frequencies;
        for (int i = 0; i < 2 + static_cast<int>(rng.next_below(20)); ++i) {
            frequencies.push_back(rng.next_unit() + 1e-6);
        }
        std::sort(frequencies.rbegin(), frequencies.rend());
        double sum = 0.0;
        for (double f : frequencies) {
            sum += f;
        }
        for (double& f : frequencies) {
            f /= sum;
        }
        CHECK(zipf_coefficient(census_with_frequencies(frequencies), 0.0).rho <= 1e-12);
    }
}

TEST_CASE("diversification categories follow the published thresholds") {
    CHECK(categorize(1.0) == DiversificationCategory::highly_diversified);
    CHECK(categorize(0.81) == DiversificationCategory::highly_diversified);
    CHECK(categorize(0.8) == DiversificationCategory::rich);
    CHECK(categorize(0.1) == DiversificationCategory::rich);
    CHECK(categorize(0.0) == DiversificationCategory::totally_unbalanced);
    CHECK(categorize(-0.5) == DiversificationCategory::totally_unbalanced);
    CHECK(categorize(1.1) == DiversificationCategory::intermediate);
}

TEST_CASE("diversification is one plus the mean component coefficient") {
    SplitMix64 rng(101);
    std::vector<Series> components;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> values(120);
        for (double& v : values) {
            v = rng.next_unit() * 100.0;
        }
        components.emplace_back(std::move(values), "c" + std::to_string(c + 1));
    }
    const MultiSeries m(std::move(components), "x");
    const Diversification d =
        diversification(m, Alphabet(4), true, 12, WordEquivalence::composition, 0.01);
    REQUIRE(d.per_component_rho.size() == 3);
    double mean = 0.0;
    for (double rho : d.per_component_rho) {
        mean += rho;
    }
    mean /= 3.0;
    CHECK(d.value == 1.0 + mean);
    CHECK(d.category == categorize(d.value));
}

TEST_CASE("diversification arithmetic on fixed coefficients") {
    // D = 1 + mean(rho): all-zero coefficients sit at the top boundary
    CHECK(categorize(1.0 + (0.0 + 0.0 + 0.0) / 3.0) ==
          DiversificationCategory::highly_diversified);
    // rho = (-1, -1, -1) lands exactly on the unbalanced boundary
    CHECK(1.0 + (-1.0 - 1.0 - 1.0) / 3.0 == 0.0);
    CHECK(categorize(0.0) == DiversificationCategory::totally_unbalanced);
    // rho = (-0.3, -0.3, -0.3) gives a rich 0.7
    const double d = 1.0 + (-0.3 - 0.3 - 0.3) / 3.0;
    CHECK(d == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(categorize(d) == DiversificationCategory::rich);
}
