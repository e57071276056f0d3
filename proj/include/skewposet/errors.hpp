#pragma once

#include <stdexcept>
#include <string>

namespace skewposet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mu is not contained in lambda.
struct ContainmentError : Error {
    using Error::Error;
};

// Operation requires a nonempty diagram or class.
struct EmptyDiagram : Error {
    using Error::Error;
};

struct EmptyPartition : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// 64-bit count would wrap around; treated as a hard error.
struct OverflowError : Error {
    using Error::Error;
};

// reduce_step called on the minimal (staircase) class.
struct AtMinimum : Error {
    using Error::Error;
};

// No delta-preserving cocover exists; must never fire.
struct TheoremViolation : Error {
    using Error::Error;
};

// Pair of partitions does not differ by exactly one box.
struct MalformedPair : Error {
    using Error::Error;
};

// A check's theorem hypothesis does not apply; skipped, not failed.
struct HypothesisNotMet : Error {
    using Error::Error;
};

} // namespace skewposet
