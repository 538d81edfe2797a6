#pragma once

#include <stdexcept>
#include <string>

namespace em {

// File/format problems (missing digit file, malformed headers, ...).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Exact searches refuse inputs they cannot finish (isomorphism/canonical
// bounds, digit compute budgets) instead of stalling.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative searches that exhaust their budget without hitting the target.
struct TargetError : std::runtime_error {
    explicit TargetError(const std::string& what) : std::runtime_error(what) {}
};

// An experiment's internal consistency check failed. The CLI maps this to
// exit code 2.
struct CheckFailure : std::runtime_error {
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace em
