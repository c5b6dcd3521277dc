#pragma once

#include <stdexcept>
#include <string>

namespace pathdiv {

// Malformed user input: bad JSON, out-of-range indices, invalid valuations.
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A search exhausted its space without finding a witness whose existence is
// guaranteed. This falsifies the underlying existence theorem or reveals an
// implementation bug; it must never be absorbed silently. Exit code 3.
struct TheoremViolation : std::runtime_error {
    explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (never reachable through valid inputs).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pathdiv
