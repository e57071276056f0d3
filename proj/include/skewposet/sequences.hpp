#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewposet/partition.hpp"

namespace skewposet {

/// Partition of n whose 1s and 2s come in two colors: ordinary parts in
/// `core`, plus n1 primed 1s and n2 primed 2s.
struct BarPartition {
    Partition core;
    int n1 = 0;
    int n2 = 0;

    std::int64_t weight() const { return core.size() + n1 + 2 * n2; }
    std::string to_string() const;
    auto operator<=>(const BarPartition&) const = default;
};

/// Unordered pair of equal-weight partitions differing by exactly one
/// box, oriented with nu1 lexicographically larger.
struct BoxPair {
    Partition nu1;
    Partition nu2;

    BoxPair() = default;
    BoxPair(Partition a, Partition b); // validates the invariants

    std::int64_t weight() const { return nu1.size(); }
    auto operator<=>(const BoxPair&) const = default;
};

// Number of partitions of n.
std::int64_t p_count(int n);

// Number of standard Young tableaux with n boxes, as sum over f^lambda.
std::int64_t f_count(int n);

// The same quantity via the involution recurrence
// f_n = f_{n-1} + (n-1) f_{n-2}; independent cross-check of f_count.
std::int64_t f_count_recurrence(int n);

// Number of one-box-differing pairs of partitions of n, by brute-force
// pair enumeration. Requires n >= 1.
std::int64_t g_count(int n);

// Number of two-colored partitions of weight n, by enumeration over
// (core, n1, n2).
std::int64_t barp_count(int n);

// Coefficients 0..max_n of 1/((1-x)(1-x^2)) * prod 1/(1-x^i); the
// generating-function route to barp_count.
std::vector<std::int64_t> barp_series(int max_n);

std::vector<BarPartition> enumerate_bar_partitions(int n);
std::vector<BoxPair> enumerate_box_pairs(int n);

BoxPair bijection_forward(const BarPartition& b);

// Inverse of bijection_forward. Throws MalformedPair when the pair does
// not differ by exactly one box.
BarPartition bijection_inverse(const BoxPair& p);

// Aligned text table of g, p, f for n = 1..max_n, mirroring the shape
// of the reference table.
std::string sequence_table(int max_n);

} // namespace skewposet
