#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cooldec {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation refuses to start because the requested search or
// expansion space exceeds its budget. Distinct from "searched and found
// nothing".
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SearchStatus { found, none_found, budget_exceeded };

inline const char* to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_found: return "none-found";
    case SearchStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::none_found;
    std::optional<T> witness;

    bool found() const { return status == SearchStatus::found; }

    static SearchResult make_found(T value) {
        return SearchResult{SearchStatus::found, std::move(value)};
    }
    static SearchResult make_none() { return SearchResult{SearchStatus::none_found, std::nullopt}; }
    static SearchResult make_refused() {
        return SearchResult{SearchStatus::budget_exceeded, std::nullopt};
    }
};

// Grid-size guard shared by the brute-force searches: refuses when
// base^exponent (or a product of list sizes) exceeds the budget.
inline bool grid_within_budget(long double grid_points, std::uint64_t budget) {
    return grid_points <= static_cast<long double>(budget);
}

} // namespace cooldec
