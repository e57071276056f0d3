// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "skewposet/lrrule.hpp"
#include "skewposet/poset.hpp"
#include "skewposet/sequences.hpp"
#include "skewposet/verifier.hpp"

using namespace skewposet;

namespace {

Partition P(const std::string& s) {
    return Partition::parse(s);
}

bool criterion_sequences() {
    const std::int64_t G[] = {0, 1, 2, 5, 9, 17, 28, 47, 73, 114, 170, 253, 365};
    const std::int64_t Pn[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101};
    const std::int64_t F[] = {1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152, 568504};
    for (int n = 1; n <= 13; ++n) {
        if (g_count(n) != G[n - 1] || p_count(n) != Pn[n - 1] || f_count(n) != F[n - 1])
            return false;
        if (f_count(n) != f_count_recurrence(n))
            return false;
    }
    return true;
}

bool criterion_reference_decomposition() {
    SkewCharacter ch = decompose(SkewDiagram::parse("4,3,2,1/2,2"));
    std::map<Partition, std::int64_t> want = {
        {P("4,2"), 1},     {P("4,1,1"), 1},   {P("3,3"), 1},     {P("3,2,1"), 2},
        {P("3,1,1,1"), 1}, {P("2,2,2"), 1},   {P("2,2,1,1"), 1}};
    return ch.terms() == want && ch.cc_type() == std::pair<std::int64_t, std::int64_t>(7, 8);
}

bool criterion_staircase_characters() {
    for (int n = 1; n <= 6; ++n) {
        SkewCharacter ch = decompose(SkewClass::staircase(n).arrangement());
        auto parts = partitions_of(n);
        if (static_cast<std::int64_t>(ch.terms().size()) !=
            static_cast<std::int64_t>(parts.size()))
            return false;
        for (const Partition& lam : parts)
            if (ch.coefficient(lam) != lam.count_syt())
                return false;
        if (ch.cc_type() != std::pair<std::int64_t, std::int64_t>(p_count(n), f_count(n)))
            return false;
        if (ch.one_box_pairs() != g_count(n))
            return false;
    }
    return true;
}

bool criterion_bijection() {
    for (int n = 0; n <= 15; ++n) {
        if (barp_count(n) != g_count(n + 2))
            return false;
        std::set<BoxPair> images;
        for (const BarPartition& b : enumerate_bar_partitions(n)) {
            BoxPair p = bijection_forward(b);
            if (p.weight() != n + 2 || !images.insert(p).second || bijection_inverse(p) != b)
                return false;
        }
        auto pairs = enumerate_box_pairs(n + 2);
        if (images != std::set<BoxPair>(pairs.begin(), pairs.end()))
            return false;
    }
    auto series = barp_series(20);
    for (int n = 0; n <= 20; ++n)
        if (series[static_cast<std::size_t>(n)] != barp_count(n))
            return false;
    // the five weight-2 correspondences
    std::set<BoxPair> two;
    for (const BarPartition& b : enumerate_bar_partitions(2))
        two.insert(bijection_forward(b));
    std::set<BoxPair> want = {BoxPair(P("2,2"), P("2,1,1")), BoxPair(P("3,1"), P("2,2")),
                              BoxPair(P("2,1,1"), P("1,1,1,1")), BoxPair(P("3,1"), P("2,1,1")),
                              BoxPair(P("4"), P("3,1"))};
    return two == want;
}

bool sweep_all(const std::vector<SkewClass>& classes,
               const std::function<bool(const SkewClass&)>& check) {
    for (const SkewClass& c : classes) {
        try {
            if (!check(c))
                return false;
        } catch (const HypothesisNotMet&) {
        }
    }
    return true;
}

bool criterion_upper_tightness() {
    for (int n = 1; n <= 5; ++n) {
        SkewCharacter ch = decompose(SkewClass::staircase(n).arrangement());
        if (ch.cc_type() != std::pair<std::int64_t, std::int64_t>(p_count(n), f_count(n)))
            return false;
        if (ch.one_box_pairs() != g_count(n))
            return false;
    }
    return true;
}

bool criterion_monotonicity() {
    return check_monotonicity(2024, 1000, nullptr);
}

} // namespace

int main() {
    std::vector<SkewClass> eight = enumerate_basic(8);
    std::vector<SkewClass> seven = enumerate_basic(7);

    struct Criterion {
        const char* text;
        std::function<bool()> run;
    };
    std::vector<Criterion> criteria = {
        {"1: sequences g_n, p_n, f_n exact for n = 1..13, two routes to f",
         criterion_sequences},
        {"2: decomposition of 4,3,2,1/2,2 with multiplicity 2 at [3,2,1], cc (7,8)",
         criterion_reference_decomposition},
        {"3: staircase class characters sum f^lam [lam], cc (p_n,f_n), pairs g_n, n <= 6",
         criterion_staircase_characters},
        {"4: colored-partition/box-pair bijection for n <= 15, series to x^20, n=2 table",
         criterion_bijection},
        {"5: verified reduction chains to the staircase class, all classes <= 8 boxes",
         [&] {
             return sweep_all(eight, [](const SkewClass& c) { return check_reduction(c); });
         }},
        {"6: lower bound cc >= (p_n, f_n) at n = delta, all classes <= 8 boxes",
         [&] {
             return sweep_all(eight, [](const SkewClass& c) { return check_lower_cc(c); });
         }},
        {"7: pair bounds >= g_n and >= max(a,b), all classes <= 8 boxes with delta >= 2",
         [&] {
             return sweep_all(eight, [](const SkewClass& c) { return check_pair_bounds(c); });
         }},
        {"8: upper bounds on pairs and cc, all classes <= 8 boxes; tight on staircases",
         [&] {
             return sweep_all(eight,
                              [](const SkewClass& c) { return check_upper_bounds(c); }) &&
                    criterion_upper_tightness();
         }},
        {"9: SYT counting oracle and kernel symmetries, all classes <= 7 boxes",
         [&] {
             return sweep_all(seven, [](const SkewClass& c) { return check_symmetry(c); });
         }},
        {"10: +/union monotonicity on 1000 seeded samples", criterion_monotonicity},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "exception in criterion %s: %s\n", c.text, e.what());
        }
        std::printf("%s %s\n", ok ? "PASS" : "FAIL", c.text);
        if (!ok)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
