#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltanu {

using Value = std::int64_t;

/// Strictly increasing, duplicate-free sequence of nonnegative integers.
using SortedSet = std::vector<Value>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input (exit code 2 in the CLI).
struct ValidationError : Error {
    using Error::Error;
};

struct NotPrimitiveError : ValidationError {
    explicit NotPrimitiveError(Value g)
        : ValidationError("generators are not coprime (gcd = " + std::to_string(g) + ")") {}
};

struct DegenerateError : ValidationError {
    DegenerateError() : ValidationError("minimal generating system has a single element") {}
};

/// Raised by the bound machinery, which needs the index range i = 2..p-1 nonempty.
struct EmbeddingDimensionError : ValidationError {
    EmbeddingDimensionError() : ValidationError("embedding dimension must be at least 3") {}
};

struct BelowBoundError : Error {
    using Error::Error;
};

struct WindowTooSmallError : ValidationError {
    using ValidationError::ValidationError;
};

/// Sort and remove duplicates in place.
inline void canonicalize(SortedSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

/// Deduplicated successive differences of a strictly increasing sequence.
/// Empty for inputs of size <= 1.
inline SortedSet gaps_of(const SortedSet& set) {
    SortedSet out;
    for (std::size_t i = 1; i < set.size(); ++i)
        out.push_back(set[i] - set[i - 1]);
    canonicalize(out);
    return out;
}

}  // namespace deltanu
