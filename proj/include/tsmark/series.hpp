#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tsmark {

/// A one-dimensional series of real measurements. Values are validated at
/// construction: at least one value, all finite.
class Series {
public:
    explicit Series(std::vector<double> values, std::string label = "");

    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
    std::string label_;
};

/// N aligned component series describing one entity. Requires N >= 2 and
/// equal component lengths (ingestion pads before constructing).
class MultiSeries {
public:
    MultiSeries(std::vector<Series> components, std::string entity_id);

    const std::vector<Series>& components() const noexcept { return components_; }
    const std::string& entity_id() const noexcept { return entity_id_; }
    std::size_t component_count() const noexcept { return components_.size(); }
    std::size_t length() const noexcept { return components_.front().size(); }

private:
    std::vector<Series> components_;
    std::string entity_id_;
};

/// Finite alphabet {1, ..., size} used for symbolization. size >= 2.
struct Alphabet {
    int size;
    explicit Alphabet(int size);
};

/// A series translated onto a finite alphabet: every symbol lies in
/// [1, alphabet.size].
class SymbolicSeries {
public:
    SymbolicSeries(std::vector<int> symbols, Alphabet alphabet);

    const std::vector<int>& symbols() const noexcept { return symbols_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    int operator[](std::size_t i) const { return symbols_[i]; }

private:
    std::vector<int> symbols_;
    Alphabet alphabet_;
};

/// Zero-density summary of a series. is_sparse holds exactly when
/// null_count >= length * threshold_delta.
struct SparsityProfile {
    std::size_t null_count = 0;
    std::size_t length = 0;
    double threshold_delta = 0.0;
    bool is_sparse = false;
};

/// First differences d_j = y_{j+1} - y_j. Length shrinks by one.
Series difference(const Series& series);

/// Count exact zeros and flag the series sparse when the count reaches
/// length * delta. delta must lie in [0, 1].
SparsityProfile sparsity(const Series& series, double delta);

/// Translate a series onto the alphabet via a uniform partition of its range.
/// Interval l covers [min + (l-1)w, min + l*w) with w = (max-min)/L; the last
/// interval is closed at the maximum. A degenerate range (min == max) maps
/// everything to symbol 1.
SymbolicSeries symbolize(const Series& series, Alphabet alphabet);

}  // namespace tsmark
