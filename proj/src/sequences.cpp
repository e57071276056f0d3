#include "skewposet/sequences.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace skewposet {

namespace {

// Remove one occurrence of `x` from the part multiset, if present.
std::optional<std::vector<int>> remove_one(std::vector<int> parts, int x) {
    auto it = std::find(parts.begin(), parts.end(), x);
    if (it == parts.end())
        return std::nullopt;
    parts.erase(it);
    return parts;
}

Partition with_parts(const Partition& base, std::initializer_list<int> extra) {
    std::vector<int> v = base.parts();
    for (int x : extra)
        if (x > 0)
            v.push_back(x);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

} // namespace

std::string BarPartition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int x : core.parts()) {
        if (!first)
            os << ',';
        first = false;
        os << x;
    }
    for (int i = 0; i < n2; ++i) {
        if (!first)
            os << ',';
        first = false;
        os << "2'";
    }
    for (int i = 0; i < n1; ++i) {
        if (!first)
            os << ',';
        first = false;
        os << "1'";
    }
    return os.str();
}

BoxPair::BoxPair(Partition a, Partition b) : nu1(std::move(a)), nu2(std::move(b)) {
    if (nu1.size() != nu2.size() || nu1 == nu2 ||
        nu1.intersect(nu2).size() != nu1.size() - 1)
        throw MalformedPair("partitions do not differ by exactly one box: " + nu1.to_string() +
                            " / " + nu2.to_string());
    if (!(nu1 > nu2))
        throw MalformedPair("box pair must have nu1 lexicographically larger");
}

std::int64_t p_count(int n) {
    if (n < 0)
        return 0;
    // p(n,k) = partitions of n into parts <= k
    std::vector<std::int64_t> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = k; j <= n; ++j)
            dp[static_cast<std::size_t>(j)] =
                checked_add(dp[static_cast<std::size_t>(j)], dp[static_cast<std::size_t>(j - k)]);
    return dp[static_cast<std::size_t>(n)];
}

std::int64_t f_count(int n) {
    std::int64_t s = 0;
    for (const Partition& lam : partitions_of(n))
        s = checked_add(s, lam.count_syt());
    return s;
}

std::int64_t f_count_recurrence(int n) {
    std::int64_t a = 1, b = 1; // f_0, f_1
    if (n <= 0)
        return 1;
    for (int k = 2; k <= n; ++k) {
        std::int64_t c = checked_add(b, checked_mul(k - 1, a));
        a = b;
        b = c;
    }
    return b;
}

std::int64_t g_count(int n) {
    if (n < 1)
        throw Error("g_count requires n >= 1");
    auto parts = partitions_of(n);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersect(parts[j]).size() == n - 1)
                ++g;
    return g;
}

std::int64_t barp_count(int n) {
    std::int64_t s = 0;
    for (int n2 = 0; 2 * n2 <= n; ++n2)
        for (int n1 = 0; n1 + 2 * n2 <= n; ++n1)
            s = checked_add(s, p_count(n - n1 - 2 * n2));
    return s;
}

std::vector<std::int64_t> barp_series(int max_n) {
    std::size_t m = static_cast<std::size_t>(max_n);
    std::vector<std::int64_t> a(m + 1, 0);
    a[0] = 1;
    // prod 1/(1-x^i), then the extra 1/(1-x) and 1/(1-x^2) factors
    for (int i = 1; i <= max_n; ++i)
        for (std::size_t j = static_cast<std::size_t>(i); j <= m; ++j)
            a[j] = checked_add(a[j], a[j - static_cast<std::size_t>(i)]);
    for (std::size_t j = 1; j <= m; ++j)
        a[j] = checked_add(a[j], a[j - 1]);
    for (std::size_t j = 2; j <= m; ++j)
        a[j] = checked_add(a[j], a[j - 2]);
    return a;
}

std::vector<BarPartition> enumerate_bar_partitions(int n) {
    std::vector<BarPartition> out;
    for (int n2 = 0; 2 * n2 <= n; ++n2)
        for (int n1 = 0; n1 + 2 * n2 <= n; ++n1)
            for (const Partition& core : partitions_of(n - n1 - 2 * n2))
                out.push_back({core, n1, n2});
    return out;
}

std::vector<BoxPair> enumerate_box_pairs(int n) {
    auto parts = partitions_of(n);
    std::vector<BoxPair> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersect(parts[j]).size() == n - 1)
                out.push_back(parts[i] > parts[j] ? BoxPair(parts[i], parts[j])
                                                  : BoxPair(parts[j], parts[i]));
    return out;
}

BoxPair bijection_forward(const BarPartition& b) {
    Partition nu1 = with_parts(b.core, {b.n1 + b.n2 + 2, b.n2});
    Partition nu2 = with_parts(b.core, {b.n1 + b.n2 + 1, b.n2 + 1});
    return BoxPair(std::move(nu1), std::move(nu2));
}

BarPartition bijection_inverse(const BoxPair& p) {
    // The differing rows are (c+2, b) in nu1 and (c+1, b+1) in nu2 with
    // c >= b >= 0; that identification is unique.
    int top = p.nu1.part(1);
    for (int c = 0; c + 2 <= top; ++c) {
        for (int b = 0; b <= c; ++b) {
            auto rest = remove_one(p.nu1.parts(), c + 2);
            if (!rest)
                continue;
            if (b > 0) {
                rest = remove_one(*rest, b);
                if (!rest)
                    continue;
            }
            Partition core(*rest);
            if (with_parts(core, {c + 1, b + 1}) == p.nu2)
                return {core, c - b, b};
        }
    }
    throw MalformedPair("no valid row identification for " + p.nu1.to_string() + " / " +
                        p.nu2.to_string());
}

std::string sequence_table(int max_n) {
    std::vector<std::string> labels = {"n:", "g_n:", "p_n:", "f_n:"};
    std::vector<std::vector<std::string>> cols;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> col;
        col.push_back(std::to_string(n));
        col.push_back(n >= 1 ? std::to_string(g_count(n)) : "-");
        col.push_back(std::to_string(p_count(n)));
        col.push_back(std::to_string(f_count(n)));
        cols.push_back(std::move(col));
    }
    std::ostringstream os;
    for (std::size_t row = 0; row < labels.size(); ++row) {
        os << labels[row];
        os << std::string(6 - labels[row].size(), ' ');
        for (const auto& col : cols) {
            std::size_t w = 0;
            for (const auto& cell : col)
                w = std::max(w, cell.size());
            os << ' ' << std::string(w - col[row].size(), ' ') << col[row];
        }
        os << '\n';
    }
    return os.str();
}

} // namespace skewposet
