#pragma once

#include <string>
#include <vector>

#include "skewposet/partition.hpp"

namespace skewposet {

/// Boundary paths of a skew diagram as sequences over {h, v}.
struct PathPair {
    std::string outer_seq;
    std::string inner_seq;

    // The structural invariants: equal lengths, equal h/v multiplicities,
    // and the inner prefix h-count never exceeding the outer one.
    bool valid() const;
};

/// A skew diagram lambda/mu with mu contained in lambda.
/// Boxes are {(r,c) : mu_r < c <= lambda_r} in matrix coordinates.
class SkewDiagram {
public:
    SkewDiagram() = default;
    SkewDiagram(Partition outer, Partition inner);

    // Text form "lambda/mu"; "/mu" part optional for straight shapes.
    static SkewDiagram parse(const std::string& text);
    std::string to_string() const;

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    std::int64_t box_count() const { return outer_.size() - inner_.size(); }
    bool empty() const { return box_count() == 0; }

    // mu_i < lambda_i and mu_i <= lambda_{i+1} for every row: no empty
    // rows or columns.
    bool is_basic() const;

    // Remove empty rows and columns; box set preserved up to translation.
    SkewDiagram to_basic() const;

    // 180-degree rotation, normalized to basic position.
    SkewDiagram rotate() const;

    PathPair paths() const;

    // min(dp(lambda), dp(mu)+1); requires basic and nonempty.
    int delta_value() const;

    int rank() const { return outer_.part(1) + outer_.length(); }

    SkewDiagram skew_sum(const SkewDiagram& other) const;
    SkewDiagram skew_union(const SkewDiagram& other) const;

    auto operator<=>(const SkewDiagram&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Equivalence class of basic skew diagrams up to translation of the
/// components into which they decay. Components are connected, basic,
/// and kept in a canonical order.
class SkewClass {
public:
    SkewClass() = default;

    // Canonicalizes: decays each input diagram, normalizes, sorts.
    static SkewClass of(const SkewDiagram& d);
    static SkewClass from_components(std::vector<SkewDiagram> comps);

    // n disconnected single boxes, the class of delta_n/delta_{n-1}.
    static SkewClass staircase(int n);

    const std::vector<SkewDiagram>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    std::int64_t box_count() const;
    int rank() const;
    int delta_value() const;

    // Concrete basic representative: components stacked anti-diagonally
    // in canonical order, the first component at the lower left.
    SkewDiagram arrangement() const;

    // Every basic representative: one stacking per distinct ordering of
    // the component multiset.
    std::vector<SkewDiagram> all_arrangements() const;

    std::string to_string() const { return arrangement().to_string(); }

    auto operator<=>(const SkewClass&) const = default;

private:
    std::vector<SkewDiagram> comps_;
};

// Maximal connected groups of the box set, each rendered basic.
std::vector<SkewDiagram> decay(const SkewDiagram& d);

// Stack `top` strictly above and to the right of `bottom`.
SkewDiagram stack_above_right(const SkewDiagram& top, const SkewDiagram& bottom);

} // namespace skewposet

template <>
struct std::hash<skewposet::SkewDiagram> {
    std::size_t operator()(const skewposet::SkewDiagram& d) const {
        std::size_t a = std::hash<skewposet::Partition>{}(d.outer());
        std::size_t b = std::hash<skewposet::Partition>{}(d.inner());
        return a * 0x9e3779b97f4a7c15ull + b;
    }
};

template <>
struct std::hash<skewposet::SkewClass> {
    std::size_t operator()(const skewposet::SkewClass& c) const {
        std::size_t h = 0x243f6a8885a308d3ull;
        for (const auto& comp : c.components())
            h = h * 0x100000001b3ull + std::hash<skewposet::SkewDiagram>{}(comp);
        return h;
    }
};
