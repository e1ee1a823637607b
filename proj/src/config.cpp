#include "tsmark/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "tsmark/errors.hpp"

namespace tsmark {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
        throw ConfigError("config key '" + key + "': not a number: '" + value + "'");
    }
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0') {
        throw ConfigError("config key '" + key + "': not an integer: '" + value + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError("config key '" + key + "': expected true/false, got '" + value + "'");
}

}  // namespace

void AnalysisConfig::validate() const {
    if (alphabet_size < 2) {
        throw ConfigError("alphabet_size must be >= 2, got " + std::to_string(alphabet_size));
    }
    if (window.length == 0) {
        throw ConfigError("window_length must be >= 1");
    }
    if (window.kind == WindowScheme::Kind::overlapping && window.step == 0) {
        throw ConfigError("window_step must be >= 1");
    }
    if (window.kind == WindowScheme::Kind::random_starts && window.count == 0) {
        throw ConfigError("window_count must be >= 1");
    }
    if (word_length < 1) {
        throw ConfigError("word_length must be >= 1, got " + std::to_string(word_length));
    }
    if (!(rare_threshold >= 0.0 && rare_threshold <= 1.0)) {
        throw ConfigError("rare_threshold must lie in [0, 1]");
    }
    if (!(sparsity_delta >= 0.0 && sparsity_delta <= 1.0)) {
        throw ConfigError("sparsity_delta must lie in [0, 1]");
    }
}

std::string config_to_text(const AnalysisConfig& config) {
    std::ostringstream out;
    out << "alphabet_size = " << config.alphabet_size << "\n";
    out << "differencing = " << (config.differencing ? "true" : "false") << "\n";
    out << "window_kind = " << to_string(config.window.kind) << "\n";
    out << "window_length = " << config.window.length << "\n";
    if (config.window.kind == WindowScheme::Kind::overlapping) {
        out << "window_step = " << config.window.step << "\n";
    }
    if (config.window.kind == WindowScheme::Kind::random_starts) {
        out << "window_count = " << config.window.count << "\n";
        out << "window_seed = " << config.window.seed << "\n";
    }
    out << "word_length = " << config.word_length << "\n";
    out << "equivalence = " << to_string(config.equivalence) << "\n";
    out << "rare_threshold = " << format_double(config.rare_threshold) << "\n";
    out << "sparsity_delta = " << format_double(config.sparsity_delta) << "\n";
    out << "symbolization = " << to_string(config.symbolization) << "\n";
    return out.str();
}

AnalysisConfig config_from_text(const std::string& text) {
    AnalysisConfig config;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line is not 'key = value': '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "alphabet_size") {
            config.alphabet_size = static_cast<int>(parse_int(key, value));
        } else if (key == "differencing") {
            config.differencing = parse_bool(key, value);
        } else if (key == "window_kind") {
            if (value == "overlapping") {
                config.window.kind = WindowScheme::Kind::overlapping;
            } else if (value == "nonoverlapping") {
                config.window.kind = WindowScheme::Kind::nonoverlapping;
            } else if (value == "random_starts") {
                config.window.kind = WindowScheme::Kind::random_starts;
            } else {
                throw ConfigError("unknown window_kind '" + value + "'");
            }
        } else if (key == "window_length") {
            config.window.length = static_cast<std::size_t>(parse_int(key, value));
        } else if (key == "window_step") {
            config.window.step = static_cast<std::size_t>(parse_int(key, value));
        } else if (key == "window_count") {
            config.window.count = static_cast<std::size_t>(parse_int(key, value));
        } else if (key == "window_seed") {
            config.window.seed = static_cast<std::uint64_t>(parse_int(key, value));
        } else if (key == "word_length") {
            config.word_length = static_cast<int>(parse_int(key, value));
        } else if (key == "equivalence") {
            if (value == "exact") {
                config.equivalence = WordEquivalence::exact;
            } else if (value == "composition") {
                config.equivalence = WordEquivalence::composition;
            } else {
                throw ConfigError("unknown equivalence '" + value + "'");
            }
        } else if (key == "rare_threshold") {
            config.rare_threshold = parse_double(key, value);
        } else if (key == "sparsity_delta") {
            config.sparsity_delta = parse_double(key, value);
        } else if (key == "symbolization") {
            if (value == "global") {
                config.symbolization = SymbolizationMode::global_range;
            } else if (value == "per_window") {
                config.symbolization = SymbolizationMode::per_window;
            } else {
                throw ConfigError("unknown symbolization '" + value + "'");
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    // nonoverlapping windows step by their own length
    if (config.window.kind == WindowScheme::Kind::nonoverlapping) {
        config.window.step = config.window.length;
    }
    config.validate();
    return config;
}

const char* to_string(SymbolizationMode mode) {
    return mode == SymbolizationMode::global_range ? "global" : "per_window";
}

const char* to_string(WindowScheme::Kind kind) {
    switch (kind) {
        case WindowScheme::Kind::overlapping:
            return "overlapping";
        case WindowScheme::Kind::nonoverlapping:
            return "nonoverlapping";
        case WindowScheme::Kind::random_starts:
            return "random_starts";
    }
    return "unknown";
}

}  // namespace tsmark
