#include "skewposet/poset.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace skewposet {

namespace {

// lambda minus (1^k): subtract 1 from the first k parts, if the result
// is still a partition.
std::optional<Partition> sub_column(const Partition& p, int k) {
    if (k < 0 || k > p.length())
        return std::nullopt;
    std::vector<int> v;
    for (int i = 1; i <= p.length(); ++i)
        v.push_back(p.part(i) - (i <= k ? 1 : 0));
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1])
            return std::nullopt;
    return Partition(std::move(v));
}

// lambda minus one part equal to x.
std::optional<Partition> remove_part(const Partition& p, int x) {
    std::vector<int> v = p.parts();
    auto it = std::find(v.begin(), v.end(), x);
    if (x <= 0 || it == v.end())
        return std::nullopt;
    v.erase(it);
    return Partition(std::move(v));
}

std::vector<int> distinct_values(const Partition& p) {
    std::vector<int> v = p.parts();
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Remove the strip described by `m` from the concrete basic diagram `d`;
// result must again be a nonempty basic skew diagram.
std::optional<SkewDiagram> apply_down(const SkewDiagram& d, const CoverMove& m) {
    std::optional<Partition> alpha, beta;
    if (m.kind == CoverMove::Kind::column) {
        alpha = sub_column(d.outer(), m.x);
        beta = sub_column(d.inner(), m.y);
    } else {
        alpha = m.x > 0 ? remove_part(d.outer(), m.x) : std::nullopt;
        beta = m.y > 0 ? remove_part(d.inner(), m.y) : std::optional<Partition>(d.inner());
    }
    if (!alpha || !beta)
        return std::nullopt;
    if (m.y < 0 || m.y > m.x)
        return std::nullopt;
    int bound = m.kind == CoverMove::Kind::column ? alpha->length() : alpha->part(1);
    if (m.x < 1 || m.x > bound)
        return std::nullopt;
    if (!alpha->contains(*beta))
        return std::nullopt;
    SkewDiagram res(*alpha, *beta);
    if (res.empty() || !res.is_basic())
        return std::nullopt;
    return res;
}

// Add the strip described by `m` to the concrete basic diagram `d`.
std::optional<SkewDiagram> apply_up(const SkewDiagram& d, const CoverMove& m) {
    if (m.x < 1 || m.y < 0 || m.y > m.x)
        return std::nullopt;
    Partition lambda, mu;
    if (m.kind == CoverMove::Kind::column) {
        if (m.x > d.outer().length())
            return std::nullopt;
        lambda = d.outer().sum(Partition(std::vector<int>(static_cast<std::size_t>(m.x), 1)));
        mu = m.y ? d.inner().sum(Partition(std::vector<int>(static_cast<std::size_t>(m.y), 1)))
                 : d.inner();
    } else {
        if (m.x > d.outer().part(1))
            return std::nullopt;
        lambda = d.outer().union_with(Partition({m.x}));
        mu = m.y ? d.inner().union_with(Partition({m.y})) : d.inner();
    }
    if (!lambda.contains(mu))
        return std::nullopt;
    SkewDiagram res(lambda, mu);
    if (!res.is_basic())
        return std::nullopt;
    return res;
}

// All down moves from one arrangement, in canonical order: column moves
// before row moves, each ascending in (x, y).
std::vector<CoverMove> down_moves(const SkewDiagram& d) {
    std::vector<CoverMove> out;
    for (int x = 1; x <= d.outer().length(); ++x)
        for (int y = 0; y <= x; ++y)
            out.push_back({CoverMove::Kind::column, x, y, CoverMove::Direction::down});
    for (int x : distinct_values(d.outer()))
        for (int y = 0; y <= x; ++y) {
            if (y != 0 && std::find(d.inner().parts().begin(), d.inner().parts().end(), y) ==
                              d.inner().parts().end())
                continue;
            out.push_back({CoverMove::Kind::row, x, y, CoverMove::Direction::down});
        }
    return out;
}

std::vector<CoverMove> up_moves(const SkewDiagram& d) {
    std::vector<CoverMove> out;
    for (int x = 1; x <= d.outer().length(); ++x)
        for (int y = 0; y <= x; ++y)
            out.push_back({CoverMove::Kind::column, x, y, CoverMove::Direction::up});
    for (int x = 1; x <= d.outer().part(1); ++x)
        for (int y = 0; y <= x; ++y)
            out.push_back({CoverMove::Kind::row, x, y, CoverMove::Direction::up});
    return out;
}

} // namespace

std::string CoverMove::to_string() const {
    std::ostringstream os;
    os << (direction == Direction::up ? '+' : '-')
       << (kind == Kind::column ? "col" : "row") << ' ' << x << ' ' << y;
    return os.str();
}

std::string WitnessChain::to_string() const {
    std::ostringstream os;
    os << "start " << start.to_string() << '\n';
    for (const auto& [move, cls] : steps)
        os << move.to_string() << ' ' << cls.to_string() << '\n';
    return os.str();
}

int rank(const SkewClass& c) {
    return c.rank();
}

std::set<SkewClass> down_covers(const SkewClass& c) {
    std::set<SkewClass> out;
    for (const SkewDiagram& arr : c.all_arrangements())
        for (const CoverMove& m : down_moves(arr))
            if (auto res = apply_down(arr, m))
                out.insert(SkewClass::of(*res));
    return out;
}

std::set<SkewClass> up_covers(const SkewClass& c) {
    std::set<SkewClass> out;
    for (const SkewDiagram& arr : c.all_arrangements())
        for (const CoverMove& m : up_moves(arr))
            if (auto res = apply_up(arr, m))
                out.insert(SkewClass::of(*res));
    return out;
}

bool is_geq(const SkewClass& a, const SkewClass& b) {
    if (a == b)
        return true;
    if (a.rank() <= b.rank())
        return false;
    std::unordered_set<SkewClass> frontier{a};
    int level = a.rank();
    while (level > b.rank()) {
        std::unordered_set<SkewClass> next;
        for (const SkewClass& c : frontier)
            for (const SkewClass& d : down_covers(c))
                next.insert(d);
        frontier = std::move(next);
        --level;
        if (frontier.count(b))
            return true;
    }
    return false;
}

std::pair<SkewClass, CoverMove> reduce_step(const SkewClass& c) {
    if (c.empty())
        throw EmptyDiagram("reduce_step of empty class");
    int n = c.delta_value();
    if (c == SkewClass::staircase(n))
        throw AtMinimum("class is already the staircase class of " + std::to_string(n) +
                        " boxes");
    for (const SkewDiagram& arr : c.all_arrangements())
        for (const CoverMove& m : down_moves(arr))
            if (auto res = apply_down(arr, m)) {
                SkewClass down = SkewClass::of(*res);
                if (down.delta_value() == n)
                    return {down, m};
            }
    throw TheoremViolation("no delta-preserving cocover of " + c.to_string());
}

WitnessChain reduce_to_staircase(const SkewClass& c) {
    if (c.empty())
        throw EmptyDiagram("reduce_to_staircase of empty class");
    WitnessChain w;
    w.start = c;
    SkewClass cur = c;
    int n = c.delta_value();
    SkewClass target = SkewClass::staircase(n);
    while (cur != target) {
        auto [next, move] = reduce_step(cur);
        w.steps.emplace_back(move, next);
        cur = std::move(next);
    }
    return w;
}

bool verify_chain(const WitnessChain& w) {
    SkewClass cur = w.start;
    for (const auto& [move, next] : w.steps) {
        int want = cur.rank() + (move.direction == CoverMove::Direction::up ? 1 : -1);
        if (next.rank() != want)
            return false;
        bool found = false;
        for (const SkewDiagram& arr : cur.all_arrangements()) {
            auto res = move.direction == CoverMove::Direction::up ? apply_up(arr, move)
                                                                  : apply_down(arr, move);
            if (res && SkewClass::of(*res) == next) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
        cur = next;
    }
    return true;
}

} // namespace skewposet
