"""Behavioral markers for multi-dimensional sparse time series.

Thin python surface over the C++ core: symbolization, compression-based
entropy, simplex influence areas, entropy walks with trends, and Zipf
rank-frequency diversification.
"""

from ._tsmark import (  # noqa: F401
    AnalysisError,
    AttributionVerdict,
    ConfigError,
    DataError,
    Diversification,
    ParseResult,
    SparsityProfile,
    Trend,
    ZipfFit,
    __version__,
    analyze_entity,
    attribute,
    composition_class_bound,
    difference,
    diversification,
    entropy,
    entropy_raw,
    entropy_vector,
    fit_trend,
    influence,
    lz_parse,
    moving_matrix,
    norm_euclidean,
    norm_l1,
    project,
    sparsity,
    symbolize,
    walk_points,
    window_offsets,
    word_census,
    zipf_coefficient,
)
