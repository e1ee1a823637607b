#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tsmark/config.hpp"
#include "tsmark/corpus.hpp"
#include "tsmark/entropy.hpp"
#include "tsmark/errors.hpp"
#include "tsmark/io.hpp"
#include "tsmark/markers.hpp"
#include "tsmark/series.hpp"
#include "tsmark/simplex.hpp"
#include "tsmark/walk.hpp"
#include "tsmark/zipf.hpp"

namespace py = pybind11;
using namespace tsmark;

namespace {

MultiSeries multi_from_lists(const std::vector<std::vector<double>>& components,
                             const std::string& entity_id) {
    std::vector<Series> series;
    series.reserve(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
        series.emplace_back(components[i], "c" + std::to_string(i + 1));
    }
    return MultiSeries(std::move(series), entity_id);
}

SymbolicSeries symbolic_from_list(const std::vector<int>& symbols, int alphabet_size) {
    return SymbolicSeries(symbols, Alphabet(alphabet_size));
}

WordEquivalence equivalence_from_string(const std::string& name) {
    if (name == "exact") return WordEquivalence::exact;
    if (name == "composition") return WordEquivalence::composition;
    throw ConfigError("unknown equivalence '" + name + "'");
}

WindowScheme scheme_from_args(const std::string& kind, std::size_t length, std::size_t step,
                              std::size_t count, std::uint64_t seed) {
    if (kind == "overlapping") return WindowScheme::overlapping(length, step);
    if (kind == "nonoverlapping") return WindowScheme::nonoverlapping(length);
    if (kind == "random_starts") return WindowScheme::random_starts(length, count, seed);
    throw ConfigError("unknown window kind '" + kind + "'");
}

AnalysisConfig config_from_kwargs(int alphabet_size, bool differencing,
                                  const std::string& window_kind, std::size_t window_length,
                                  std::size_t window_step, std::size_t window_count,
                                  std::uint64_t window_seed, int word_length,
                                  const std::string& equivalence, double rare_threshold,
                                  double sparsity_delta, const std::string& symbolization) {
    AnalysisConfig config;
    config.alphabet_size = alphabet_size;
    config.differencing = differencing;
    config.window =
        scheme_from_args(window_kind, window_length, window_step, window_count, window_seed);
    config.word_length = word_length;
    config.equivalence = equivalence_from_string(equivalence);
    config.rare_threshold = rare_threshold;
    config.sparsity_delta = sparsity_delta;
    if (symbolization == "global") {
        config.symbolization = SymbolizationMode::global_range;
    } else if (symbolization == "per_window") {
        config.symbolization = SymbolizationMode::per_window;
    } else {
        throw ConfigError("unknown symbolization '" + symbolization + "'");
    }
    config.validate();
    return config;
}

}  // namespace

PYBIND11_MODULE(_tsmark, m) {
    m.doc() = "behavioral markers for multi-dimensional sparse time series";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<AnalysisError>(m, "AnalysisError", PyExc_RuntimeError);

    py::class_<SparsityProfile>(m, "SparsityProfile")
        .def_readonly("null_count", &SparsityProfile::null_count)
        .def_readonly("length", &SparsityProfile::length)
        .def_readonly("threshold_delta", &SparsityProfile::threshold_delta)
        .def_readonly("is_sparse", &SparsityProfile::is_sparse);

    py::class_<ParseResult>(m, "ParseResult")
        .def_readonly("phrase_count", &ParseResult::phrase_count)
        .def_readonly("bit_cost", &ParseResult::bit_cost)
        .def_property_readonly("phrases", [](const ParseResult& r) {
            std::vector<std::pair<std::size_t, int>> flat;
            for (const Phrase& p : r.phrases) {
                flat.emplace_back(p.prefix_index, p.extension_symbol);
            }
            return flat;
        });

    py::class_<ZipfFit>(m, "ZipfFit")
        .def_readonly("rho", &ZipfFit::rho)
        .def_readonly("points_used", &ZipfFit::points_used)
        .def_readonly("rare_threshold", &ZipfFit::rare_threshold)
        .def_readonly("degenerate", &ZipfFit::degenerate);

    py::class_<Diversification>(m, "Diversification")
        .def_readonly("value", &Diversification::value)
        .def_readonly("per_component_rho", &Diversification::per_component_rho)
        .def_readonly("any_degenerate_fit", &Diversification::any_degenerate_fit)
        .def_property_readonly("category", [](const Diversification& d) {
            return std::string(to_string(d.category));
        });

    py::class_<Trend>(m, "Trend")
        .def_readonly("leading_last", &Trend::leading_last)
        .def_readonly("direction", &Trend::direction)
        .def_readonly("line_point", &Trend::line_point)
        .def_readonly("mean_distance", &Trend::mean_distance);

    py::class_<AttributionVerdict>(m, "AttributionVerdict")
        .def_readonly("distance", &AttributionVerdict::distance)
        .def_readonly("threshold", &AttributionVerdict::threshold)
        .def_property_readonly("status", [](const AttributionVerdict& v) {
            return std::string(to_string(v.status));
        });

    m.def(
        "difference",
        [](const std::vector<double>& values) { return difference(Series(values)).values(); },
        py::arg("values"), "First differences of a series.");

    m.def(
        "sparsity",
        [](const std::vector<double>& values, double delta) {
            return sparsity(Series(values), delta);
        },
        py::arg("values"), py::arg("delta") = 0.25,
        "Zero-density profile of a series.");

    m.def(
        "symbolize",
        [](const std::vector<double>& values, int alphabet_size) {
            return symbolize(Series(values), Alphabet(alphabet_size)).symbols();
        },
        py::arg("values"), py::arg("alphabet_size") = 4,
        "Translate a series onto a finite alphabet via a uniform range partition.");

    m.def(
        "lz_parse",
        [](const std::vector<int>& symbols, int alphabet_size) {
            return lz_parse(symbolic_from_list(symbols, alphabet_size));
        },
        py::arg("symbols"), py::arg("alphabet_size") = 4,
        "Incremental dictionary parse of a symbol sequence.");

    m.def(
        "entropy",
        [](const std::vector<int>& symbols, int alphabet_size) {
            return entropy(symbolic_from_list(symbols, alphabet_size));
        },
        py::arg("symbols"), py::arg("alphabet_size") = 4,
        "Compression-ratio entropy in [0, 1].");

    m.def(
        "entropy_raw",
        [](const std::vector<int>& symbols, int alphabet_size) {
            return entropy_raw(symbolic_from_list(symbols, alphabet_size));
        },
        py::arg("symbols"), py::arg("alphabet_size") = 4);

    m.def(
        "entropy_vector",
        [](const std::vector<std::vector<double>>& components, int alphabet_size,
           bool differencing) {
            return entropy_vector(multi_from_lists(components, ""), Alphabet(alphabet_size),
                                  differencing)
                .values;
        },
        py::arg("components"), py::arg("alphabet_size") = 4, py::arg("differencing") = true,
        "Per-component entropies of a multi-dimensional series.");

    m.def(
        "norm_euclidean",
        [](const std::vector<double>& values) { return norm_euclidean({values, ""}); },
        py::arg("values"));
    m.def(
        "norm_l1", [](const std::vector<double>& values) { return norm_l1({values, ""}); },
        py::arg("values"));

    m.def(
        "project",
        [](const std::vector<double>& values) { return project({values, ""}).coords; },
        py::arg("values"),
        "Simplex projection: l1-normalize and drop the last coordinate.");

    m.def(
        "influence",
        [](const std::vector<double>& values) {
            const InfluenceVerdict v = influence({values, ""});
            return std::make_pair(v.leading, v.barycentric);
        },
        py::arg("values"),
        "(leading component, barycentric coordinates) of an entropy vector.");

    m.def(
        "window_offsets",
        [](std::size_t series_length, const std::string& kind, std::size_t length,
           std::size_t step, std::size_t count, std::uint64_t seed) {
            return window_offsets(scheme_from_args(kind, length, step, count, seed),
                                  series_length);
        },
        py::arg("series_length"), py::arg("kind") = "overlapping", py::arg("length") = 350,
        py::arg("step") = 52, py::arg("count") = 0, py::arg("seed") = 0);

    m.def(
        "moving_matrix",
        [](const std::vector<std::vector<double>>& components, int alphabet_size,
           bool differencing, const std::string& kind, std::size_t length, std::size_t step,
           std::size_t count, std::uint64_t seed, const std::string& symbolization) {
            const SymbolizationMode mode = symbolization == "per_window"
                                               ? SymbolizationMode::per_window
                                               : SymbolizationMode::global_range;
            return moving_matrix(multi_from_lists(components, ""), Alphabet(alphabet_size),
                                 differencing,
                                 scheme_from_args(kind, length, step, count, seed), mode)
                .rows;
        },
        py::arg("components"), py::arg("alphabet_size") = 4, py::arg("differencing") = true,
        py::arg("kind") = "overlapping", py::arg("length") = 350, py::arg("step") = 52,
        py::arg("count") = 0, py::arg("seed") = 0, py::arg("symbolization") = "global",
        "N x k matrix of per-window entropies.");

    m.def(
        "walk_points",
        [](const std::vector<std::vector<double>>& rows) {
            MovingMatrix mm;
            mm.rows = rows;
            std::vector<std::vector<double>> points;
            for (const SimplexPoint& p : walk(mm).points) {
                points.push_back(p.coords);
            }
            return points;
        },
        py::arg("moving_matrix"), "Project each matrix column onto the simplex.");

    m.def(
        "fit_trend",
        [](const std::vector<std::vector<double>>& rows) {
            MovingMatrix mm;
            mm.rows = rows;
            return fit_trend(walk(mm), mm);
        },
        py::arg("moving_matrix"),
        "Total-least-squares trend of the entropy walk of a moving matrix.");

    m.def(
        "attribute",
        [](const std::vector<double>& point, const Trend& trend,
           const std::vector<double>& point_entropy) {
            SimplexPoint q;
            q.coords = point;
            q.dimension = static_cast<int>(point.size()) + 1;
            return attribute(q, trend, {point_entropy, ""});
        },
        py::arg("point"), py::arg("trend"), py::arg("point_entropy"),
        "Within/outside-walk verdict for a new simplex point.");

    m.def(
        "word_census",
        [](const std::vector<int>& symbols, int alphabet_size, int word_length,
           const std::string& equivalence) {
            const WordCensus census =
                word_census(symbolic_from_list(symbols, alphabet_size), word_length,
                            equivalence_from_string(equivalence));
            std::vector<std::tuple<std::string, std::size_t, double>> rows;
            for (const WordClass& cls : census.classes) {
                rows.emplace_back(cls.id(), cls.count, cls.frequency);
            }
            return rows;
        },
        py::arg("symbols"), py::arg("alphabet_size") = 4, py::arg("word_length") = 12,
        py::arg("equivalence") = "composition",
        "Rank-ordered (class_id, count, frequency) rows.");

    m.def(
        "zipf_coefficient",
        [](const std::vector<int>& symbols, int alphabet_size, int word_length,
           const std::string& equivalence, double rare_threshold) {
            return zipf_coefficient(
                word_census(symbolic_from_list(symbols, alphabet_size), word_length,
                            equivalence_from_string(equivalence)),
                rare_threshold);
        },
        py::arg("symbols"), py::arg("alphabet_size") = 4, py::arg("word_length") = 12,
        py::arg("equivalence") = "composition", py::arg("rare_threshold") = 0.01);

    m.def(
        "diversification",
        [](const std::vector<std::vector<double>>& components, int alphabet_size,
           bool differencing, int word_length, const std::string& equivalence,
           double rare_threshold) {
            return diversification(multi_from_lists(components, ""), Alphabet(alphabet_size),
                                   differencing, word_length,
                                   equivalence_from_string(equivalence), rare_threshold);
        },
        py::arg("components"), py::arg("alphabet_size") = 4, py::arg("differencing") = true,
        py::arg("word_length") = 12, py::arg("equivalence") = "composition",
        py::arg("rare_threshold") = 0.01,
        "Diversification marker D = 1 + mean per-component Zipf coefficient.");

    m.def("composition_class_bound", &composition_class_bound, py::arg("alphabet_size"),
          py::arg("word_length"));

    m.def(
        "analyze_entity",
        [](const std::vector<std::vector<double>>& components, const std::string& entity_id,
           int alphabet_size, bool differencing, const std::string& window_kind,
           std::size_t window_length, std::size_t window_step, std::size_t window_count,
           std::uint64_t window_seed, int word_length, const std::string& equivalence,
           double rare_threshold, double sparsity_delta, const std::string& symbolization) {
            const AnalysisConfig config = config_from_kwargs(
                alphabet_size, differencing, window_kind, window_length, window_step,
                window_count, window_seed, word_length, equivalence, rare_threshold,
                sparsity_delta, symbolization);
            const MarkerReport report =
                analyze_entity(multi_from_lists(components, entity_id), config);
            return py::module_::import("json").attr("loads")(report_json_text(report));
        },
        py::arg("components"), py::arg("entity_id") = "", py::arg("alphabet_size") = 4,
        py::arg("differencing") = true, py::arg("window_kind") = "overlapping",
        py::arg("window_length") = 350, py::arg("window_step") = 52,
        py::arg("window_count") = 0, py::arg("window_seed") = 0, py::arg("word_length") = 12,
        py::arg("equivalence") = "composition", py::arg("rare_threshold") = 0.01,
        py::arg("sparsity_delta") = 0.25, py::arg("symbolization") = "global",
        "Full per-entity marker report as a dict.");

    m.attr("__version__") = "0.1.0";
}
