#pragma once

#include <set>
#include <string>
#include <vector>

#include "skewposet/skew.hpp"

namespace skewposet {

/// One cover move: adding or removing a column strip (1^x)/(1^y) or a
/// row strip (x)/(y), with 0 <= y <= x.
struct CoverMove {
    enum class Kind { column, row };
    enum class Direction { up, down };

    Kind kind = Kind::column;
    int x = 0;
    int y = 0;
    Direction direction = Direction::up;

    std::string to_string() const;
    auto operator<=>(const CoverMove&) const = default;
};

/// A chain of cover moves certifying a poset relation between classes.
struct WitnessChain {
    SkewClass start;
    std::vector<std::pair<CoverMove, SkewClass>> steps;

    const SkewClass& end() const { return steps.empty() ? start : steps.back().second; }

    // Line-oriented text form: the start class, then one "+kind x y rep"
    // or "-kind x y rep" line per step.
    std::string to_string() const;
};

int rank(const SkewClass& c);

// Classes covered by c: one legal strip removed from some arrangement,
// result basic. Every element has rank(c) - 1.
std::set<SkewClass> down_covers(const SkewClass& c);

// Classes covering c: one legal strip added to some arrangement
// (column strips with x <= l(alpha), row strips with x <= alpha_1),
// result basic. Every element has rank(c) + 1.
std::set<SkewClass> up_covers(const SkewClass& c);

// Reachability of b from a by repeated down covers (reflexive).
bool is_geq(const SkewClass& a, const SkewClass& b);

// One delta-preserving rank-reducing step. Throws AtMinimum on the
// staircase class and TheoremViolation if no such cocover exists.
std::pair<SkewClass, CoverMove> reduce_step(const SkewClass& c);

// Full reduction to the staircase class of n = delta_value(c) boxes.
WitnessChain reduce_to_staircase(const SkewClass& c);

// Recheck every step of a chain from scratch.
bool verify_chain(const WitnessChain& w);

} // namespace skewposet
