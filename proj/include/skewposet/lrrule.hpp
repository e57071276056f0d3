#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "skewposet/skew.hpp"

namespace skewposet {

/// Decomposition of a skew character into irreducibles: a map from the
/// content partition nu to the coefficient c(lambda;mu,nu) >= 1.
class SkewCharacter {
public:
    SkewCharacter() = default;
    SkewCharacter(std::int64_t degree, std::map<Partition, std::int64_t> terms);

    std::int64_t degree() const { return degree_; }
    const std::map<Partition, std::int64_t>& terms() const { return terms_; }

    std::int64_t coefficient(const Partition& nu) const;

    // (components, constituents): number of distinct terms and sum of
    // coefficients.
    std::pair<std::int64_t, std::int64_t> cc_type() const;

    // Unordered pairs of terms whose diagrams differ by exactly one box.
    std::int64_t one_box_pairs() const;

    // "c1*[nu1] + c2*[nu2] + ..." with unit coefficients omitted; terms in
    // partition-lexicographic descending order.
    std::string to_string() const;

    bool operator==(const SkewCharacter&) const = default;

private:
    std::int64_t degree_ = 0;
    std::map<Partition, std::int64_t> terms_;
};

// Number of LR tableaux of shape lambda/mu with content nu.
// Throws ContainmentError when mu is not contained in lambda.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Full decomposition [lambda/mu] = sum_nu c(lambda;mu,nu) [nu] by
// backtracking over LR fillings.
SkewCharacter decompose(const SkewDiagram& d);

// [alpha] (x) [beta] computed from LR coefficients c(nu;alpha,beta).
SkewCharacter outer_product(const Partition& alpha, const Partition& beta);

// Standard fillings of the box set, by direct backtracking. Independent
// of the LR kernel; serves as an oracle for sum_nu c(lambda;mu,nu) f^nu.
std::int64_t count_syt_skew(const SkewDiagram& d);

} // namespace skewposet
