#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skewposet/errors.hpp"

namespace skewposet {

/// A partition: weakly decreasing sequence of positive integers.
/// Trailing zeros are never stored; the empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;

    // Accepts weakly decreasing parts, possibly with trailing zeros (dropped).
    explicit Partition(std::vector<int> parts);

    static Partition staircase(int n);

    // Text form "4,3,2,1"; the empty string is the empty partition.
    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    std::int64_t size() const;
    bool empty() const { return parts_.empty(); }

    // 1-based part access; parts beyond the length are 0.
    int part(int i) const;

    int distinct_parts() const;
    bool contains(const Partition& inner) const;

    Partition conjugate() const;
    Partition sum(const Partition& other) const;
    Partition union_with(const Partition& other) const;
    Partition intersect(const Partition& other) const;

    // (lambda_1 - lambda_l, ..., lambda_1 - lambda_2), zeros dropped.
    Partition bar_complement() const;

    // Number of standard Young tableaux, by the hook length formula.
    std::int64_t count_syt() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Checked 64-bit arithmetic; throws OverflowError on wraparound.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// All partitions of n in lexicographic descending order.
std::vector<Partition> partitions_of(int n);

} // namespace skewposet

template <>
struct std::hash<skewposet::Partition> {
    std::size_t operator()(const skewposet::Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};
