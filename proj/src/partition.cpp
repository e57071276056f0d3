#include "skewposet/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skewposet {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit multiplication overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit addition overflow");
    return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

Partition Partition::staircase(int n) {
    std::vector<int> v;
    for (int i = n; i >= 1; --i)
        v.push_back(i);
    return Partition(std::move(v));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> v;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            throw ParseError("empty entry in partition '" + text + "'");
        try {
            v.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + cur + "' in partition");
        }
        cur.clear();
    };
    bool any = false;
    for (char c : text) {
        if (c == ' ' || c == '\t')
            continue;
        if (c == ',') {
            flush();
        } else if (c >= '0' && c <= '9') {
            cur.push_back(c);
            any = true;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in partition");
        }
    }
    if (any || !cur.empty())
        flush();
    try {
        return Partition(std::move(v));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    return os.str();
}

std::int64_t Partition::size() const {
    std::int64_t s = 0;
    for (int x : parts_)
        s += x;
    return s;
}

int Partition::part(int i) const {
    if (i < 1 || i > length())
        return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::distinct_parts() const {
    int n = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (i == 0 || parts_[i] != parts_[i - 1])
            ++n;
    return n;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length())
        return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i))
            return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty())
        return {};
    std::vector<int> v(static_cast<std::size_t>(parts_[0]), 0);
    for (int j = 1; j <= parts_[0]; ++j)
        for (int x : parts_)
            if (x >= j)
                ++v[static_cast<std::size_t>(j - 1)];
    return Partition(std::move(v));
}

Partition Partition::sum(const Partition& other) const {
    int l = std::max(length(), other.length());
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i)
        v.push_back(part(i) + other.part(i));
    return Partition(std::move(v));
}

Partition Partition::union_with(const Partition& other) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

Partition Partition::intersect(const Partition& other) const {
    int l = std::min(length(), other.length());
    std::vector<int> v;
    for (int i = 1; i <= l; ++i)
        v.push_back(std::min(part(i), other.part(i)));
    return Partition(std::move(v));
}

Partition Partition::bar_complement() const {
    if (empty())
        throw EmptyPartition("bar_complement of empty partition");
    std::vector<int> v;
    for (int i = length(); i >= 2; --i)
        v.push_back(parts_[0] - part(i));
    return Partition(std::move(v));
}

std::int64_t Partition::count_syt() const {
    // n! / prod(hooks), kept exact via prime exponents so intermediate
    // factorials cannot overflow even when the result fits.
    std::int64_t n = size();
    std::vector<int> exp(static_cast<std::size_t>(n) + 1, 0);
    auto factor = [&](std::int64_t v, int sign) {
        for (std::int64_t p = 2; p * p <= v; ++p)
            while (v % p == 0) {
                exp[static_cast<std::size_t>(p)] += sign;
                v /= p;
            }
        if (v > 1)
            exp[static_cast<std::size_t>(v)] += sign;
    };
    for (std::int64_t k = 2; k <= n; ++k)
        factor(k, +1);
    Partition conj = conjugate();
    for (int r = 1; r <= length(); ++r)
        for (int c = 1; c <= part(r); ++c)
            factor((part(r) - c) + (conj.part(c) - r) + 1, -1);
    std::int64_t out = 1;
    for (std::size_t p = 2; p < exp.size(); ++p)
        for (int e = 0; e < exp[p]; ++e)
            out = checked_mul(out, static_cast<std::int64_t>(p));
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace skewposet
