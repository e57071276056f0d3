#include "skewposet/lrrule.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace skewposet {

SkewCharacter::SkewCharacter(std::int64_t degree, std::map<Partition, std::int64_t> terms)
    : degree_(degree), terms_(std::move(terms)) {
    for (const auto& [nu, c] : terms_) {
        if (c <= 0)
            throw Error("skew character stores only positive coefficients");
        if (nu.size() != degree_)
            throw Error("skew character term of wrong degree: " + nu.to_string());
    }
}

std::int64_t SkewCharacter::coefficient(const Partition& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? 0 : it->second;
}

std::pair<std::int64_t, std::int64_t> SkewCharacter::cc_type() const {
    std::int64_t a = static_cast<std::int64_t>(terms_.size());
    std::int64_t b = 0;
    for (const auto& [nu, c] : terms_)
        b = checked_add(b, c);
    return {a, b};
}

std::int64_t SkewCharacter::one_box_pairs() const {
    std::vector<const Partition*> keys;
    keys.reserve(terms_.size());
    for (const auto& [nu, c] : terms_)
        keys.push_back(&nu);
    std::int64_t n = 0;
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i + 1; j < keys.size(); ++j)
            if (keys[i]->intersect(*keys[j]).size() == degree_ - 1)
                ++n;
    return n;
}

std::string SkewCharacter::to_string() const {
    // Canonical term order is partition-lexicographic descending.
    std::vector<std::pair<Partition, std::int64_t>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [nu, c] : sorted) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << c << "*";
        os << "[" << nu.to_string() << "]";
    }
    if (first)
        os << "0";
    return os.str();
}

namespace {

// Backtracking over LR fillings of a skew shape. Boxes are visited in
// reverse row word order (each row right to left, rows top to bottom) so
// the lattice condition can be checked incrementally. `target`, when
// nonempty, fixes the content.
struct LrKernel {
    const Partition& lam;
    const Partition& mu;
    const std::vector<int>* target; // nullptr = free content
    int max_entry;
    std::vector<std::vector<int>> grid; // grid[r][c], 1-based
    std::vector<std::int64_t> counts;
    std::function<void(const std::vector<std::int64_t>&)> emit;

    LrKernel(const Partition& l, const Partition& m, const std::vector<int>* t)
        : lam(l), mu(m), target(t) {
        max_entry = t ? static_cast<int>(t->size()) : l.length();
        grid.assign(static_cast<std::size_t>(l.length()) + 1,
                    std::vector<int>(static_cast<std::size_t>(l.part(1)) + 1, 0));
        counts.assign(static_cast<std::size_t>(max_entry) + 1, 0);
    }

    bool has_box(int r, int c) const {
        return r >= 1 && r <= lam.length() && c > mu.part(r) && c <= lam.part(r);
    }

    void fill(int r, int c) {
        // Advance to the next box in reverse row word order.
        while (r <= lam.length() && c <= mu.part(r)) {
            ++r;
            c = r <= lam.length() ? lam.part(r) : 0;
        }
        if (r > lam.length()) {
            emit(counts);
            return;
        }
        int lo = 1, hi = max_entry;
        if (has_box(r, c + 1))
            hi = std::min(hi, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        if (has_box(r - 1, c))
            lo = std::max(lo,
                          grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (v >= 2 && counts[static_cast<std::size_t>(v - 1)] <= counts[static_cast<std::size_t>(v)])
                continue; // lattice prefix would fail
            if (target && counts[static_cast<std::size_t>(v)] >=
                              (*target)[static_cast<std::size_t>(v - 1)])
                continue;
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++counts[static_cast<std::size_t>(v)];
            if (c - 1 > mu.part(r))
                fill(r, c - 1);
            else
                fill(r + 1, r + 1 <= lam.length() ? lam.part(r + 1) : 0);
            --counts[static_cast<std::size_t>(v)];
        }
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }

    void run() { fill(1, lam.part(1)); }
};

} // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!lambda.contains(mu))
        throw ContainmentError("lr_coefficient: " + mu.to_string() + " not contained in " +
                               lambda.to_string());
    if (nu.size() != lambda.size() - mu.size())
        return 0;
    if (lambda.size() == mu.size())
        return 1; // empty shape, empty content
    std::vector<int> target = nu.parts();
    std::int64_t n = 0;
    LrKernel kernel(lambda, mu, &target);
    kernel.emit = [&](const std::vector<std::int64_t>&) { n = checked_add(n, 1); };
    kernel.run();
    return n;
}

SkewCharacter decompose(const SkewDiagram& d) {
    std::map<Partition, std::int64_t> terms;
    if (d.empty()) {
        terms[Partition()] = 1;
        return SkewCharacter(0, std::move(terms));
    }
    LrKernel kernel(d.outer(), d.inner(), nullptr);
    kernel.emit = [&](const std::vector<std::int64_t>& counts) {
        std::vector<int> parts;
        for (std::size_t v = 1; v < counts.size(); ++v)
            if (counts[v] > 0)
                parts.push_back(static_cast<int>(counts[v]));
        // the lattice property makes the content weakly decreasing
        Partition nu(std::move(parts));
        terms[nu] = checked_add(terms[nu], 1);
    };
    kernel.run();
    return SkewCharacter(d.box_count(), std::move(terms));
}

SkewCharacter outer_product(const Partition& alpha, const Partition& beta) {
    std::int64_t n = alpha.size() + beta.size();
    std::map<Partition, std::int64_t> terms;
    for (const Partition& nu : partitions_of(static_cast<int>(n))) {
        if (!nu.contains(alpha))
            continue;
        std::int64_t c = lr_coefficient(nu, alpha, beta);
        if (c > 0)
            terms[nu] = c;
    }
    return SkewCharacter(n, std::move(terms));
}

std::int64_t count_syt_skew(const SkewDiagram& d) {
    const Partition& lam = d.outer();
    const Partition& mu = d.inner();
    int l = lam.length();
    std::vector<int> filled(static_cast<std::size_t>(l) + 1, 0); // per row, from the left
    std::int64_t remaining = d.box_count();
    std::int64_t total = 0;
    auto rec = [&](auto&& self) -> void {
        if (remaining == 0) {
            total = checked_add(total, 1);
            return;
        }
        for (int r = 1; r <= l; ++r) {
            int c = mu.part(r) + filled[static_cast<std::size_t>(r)] + 1;
            if (c > lam.part(r))
                continue; // row complete
            if (r > 1 && c > mu.part(r - 1) && c <= lam.part(r - 1)) {
                // box above exists; it must already be filled
                if (mu.part(r - 1) + filled[static_cast<std::size_t>(r - 1)] < c)
                    continue;
            }
            ++filled[static_cast<std::size_t>(r)];
            --remaining;
            self(self);
            ++remaining;
            --filled[static_cast<std::size_t>(r)];
        }
    };
    rec(rec);
    return total;
}

} // namespace skewposet
