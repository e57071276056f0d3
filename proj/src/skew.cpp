#include "skewposet/skew.hpp"

#include <algorithm>

namespace skewposet {

namespace {

// Path of a partition from the lower left corner to the upper right,
// ending with an upward segment. Empty partition gives the empty path.
std::string path_of(const Partition& p) {
    std::string s;
    int l = p.length();
    if (l == 0)
        return s;
    s.append(static_cast<std::size_t>(p.part(l)), 'h');
    for (int i = l - 1; i >= 1; --i) {
        s.push_back('v');
        s.append(static_cast<std::size_t>(p.part(i) - p.part(i + 1)), 'h');
    }
    s.push_back('v');
    return s;
}

} // namespace

bool PathPair::valid() const {
    if (outer_seq.size() != inner_seq.size())
        return false;
    int oh = 0, ih = 0;
    for (std::size_t j = 0; j < outer_seq.size(); ++j) {
        if (outer_seq[j] == 'h')
            ++oh;
        if (inner_seq[j] == 'h')
            ++ih;
        if (ih > oh)
            return false;
    }
    return oh == ih;
}

SkewDiagram::SkewDiagram(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw ContainmentError("inner partition not contained in outer: " + inner_.to_string() +
                               " not in " + outer_.to_string());
}

SkewDiagram SkewDiagram::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return SkewDiagram(Partition::parse(text), Partition());
    Partition outer = Partition::parse(text.substr(0, slash));
    Partition inner = Partition::parse(text.substr(slash + 1));
    try {
        return SkewDiagram(std::move(outer), std::move(inner));
    } catch (const ContainmentError& e) {
        throw ParseError(e.what());
    }
}

std::string SkewDiagram::to_string() const {
    if (inner_.empty())
        return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

bool SkewDiagram::is_basic() const {
    int l = outer_.length();
    for (int i = 1; i <= l; ++i) {
        if (inner_.part(i) >= outer_.part(i))
            return false;
        if (inner_.part(i) > outer_.part(i + 1))
            return false;
    }
    return true;
}

SkewDiagram SkewDiagram::to_basic() const {
    if (empty())
        return {};
    // Occupied columns over nonempty rows.
    int maxcol = outer_.part(1);
    std::vector<bool> occ(static_cast<std::size_t>(maxcol) + 1, false);
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c)
            occ[static_cast<std::size_t>(c)] = true;
    std::vector<int> newcol(static_cast<std::size_t>(maxcol) + 1, 0);
    for (int c = 1; c <= maxcol; ++c)
        newcol[static_cast<std::size_t>(c)] =
            newcol[static_cast<std::size_t>(c - 1)] + (occ[static_cast<std::size_t>(c)] ? 1 : 0);
    std::vector<int> lam, mu;
    for (int r = 1; r <= outer_.length(); ++r) {
        if (inner_.part(r) >= outer_.part(r))
            continue; // empty row
        lam.push_back(newcol[static_cast<std::size_t>(outer_.part(r))]);
        mu.push_back(newcol[static_cast<std::size_t>(inner_.part(r))]);
    }
    return SkewDiagram(Partition(std::move(lam)), Partition(std::move(mu)));
}

SkewDiagram SkewDiagram::rotate() const {
    if (empty())
        return {};
    int l = outer_.length();
    int w = outer_.part(1);
    std::vector<int> lam, mu;
    for (int j = 1; j <= l; ++j) {
        lam.push_back(w - inner_.part(l + 1 - j));
        mu.push_back(w - outer_.part(l + 1 - j));
    }
    return SkewDiagram(Partition(std::move(lam)), Partition(std::move(mu))).to_basic();
}

PathPair SkewDiagram::paths() const {
    if (empty())
        throw EmptyDiagram("paths of empty diagram");
    PathPair p;
    p.outer_seq = path_of(outer_);
    p.inner_seq.append(static_cast<std::size_t>(outer_.length() - inner_.length()), 'v');
    p.inner_seq += path_of(inner_);
    p.inner_seq.append(static_cast<std::size_t>(outer_.part(1) - inner_.part(1)), 'h');
    return p;
}

int SkewDiagram::delta_value() const {
    if (empty())
        throw EmptyDiagram("delta_value of empty diagram");
    if (!is_basic())
        throw Error("delta_value requires a basic diagram: " + to_string());
    return std::min(outer_.distinct_parts(), inner_.distinct_parts() + 1);
}

SkewDiagram SkewDiagram::skew_sum(const SkewDiagram& other) const {
    return SkewDiagram(outer_.sum(other.outer_), inner_.sum(other.inner_));
}

SkewDiagram SkewDiagram::skew_union(const SkewDiagram& other) const {
    return SkewDiagram(outer_.union_with(other.outer_), inner_.union_with(other.inner_));
}

std::vector<SkewDiagram> decay(const SkewDiagram& d) {
    std::vector<SkewDiagram> out;
    const Partition& lam = d.outer();
    const Partition& mu = d.inner();
    int l = lam.length();
    int run_start = 0; // 0 = no open run
    auto close = [&](int a, int b) {
        std::vector<int> lo, li;
        for (int r = a; r <= b; ++r) {
            lo.push_back(lam.part(r));
            li.push_back(mu.part(r));
        }
        out.push_back(SkewDiagram(Partition(std::move(lo)), Partition(std::move(li))).to_basic());
    };
    for (int r = 1; r <= l; ++r) {
        bool nonempty = mu.part(r) < lam.part(r);
        if (!nonempty) {
            if (run_start) {
                close(run_start, r - 1);
                run_start = 0;
            }
            continue;
        }
        if (run_start && lam.part(r) <= mu.part(r - 1)) {
            // no shared column with the previous row: the run breaks
            close(run_start, r - 1);
            run_start = r;
        } else if (!run_start) {
            run_start = r;
        }
    }
    if (run_start)
        close(run_start, l);
    return out;
}

SkewDiagram stack_above_right(const SkewDiagram& top, const SkewDiagram& bottom) {
    if (top.empty())
        return bottom;
    if (bottom.empty())
        return top;
    int shift = bottom.outer().part(1);
    std::vector<int> lam, mu;
    for (int r = 1; r <= top.outer().length(); ++r) {
        lam.push_back(top.outer().part(r) + shift);
        mu.push_back(top.inner().part(r) + shift);
    }
    for (int r = 1; r <= bottom.outer().length(); ++r) {
        lam.push_back(bottom.outer().part(r));
        if (bottom.inner().part(r) > 0)
            mu.push_back(bottom.inner().part(r));
    }
    return SkewDiagram(Partition(std::move(lam)), Partition(std::move(mu)));
}

namespace {

// Canonical component order: (rank, boxes, outer, inner) descending.
bool canon_before(const SkewDiagram& a, const SkewDiagram& b) {
    auto key = [](const SkewDiagram& d) {
        return std::make_tuple(d.rank(), d.box_count(), d.outer(), d.inner());
    };
    return key(a) > key(b);
}

} // namespace

SkewClass SkewClass::of(const SkewDiagram& d) {
    return from_components(decay(d));
}

SkewClass SkewClass::from_components(std::vector<SkewDiagram> comps) {
    std::vector<SkewDiagram> flat;
    for (const auto& c : comps)
        for (const auto& piece : decay(c))
            flat.push_back(piece);
    std::sort(flat.begin(), flat.end(), canon_before);
    SkewClass cls;
    cls.comps_ = std::move(flat);
    return cls;
}

SkewClass SkewClass::staircase(int n) {
    std::vector<SkewDiagram> comps(static_cast<std::size_t>(n),
                                   SkewDiagram(Partition({1}), Partition()));
    return from_components(std::move(comps));
}

std::int64_t SkewClass::box_count() const {
    std::int64_t s = 0;
    for (const auto& c : comps_)
        s += c.box_count();
    return s;
}

int SkewClass::rank() const {
    int s = 0;
    for (const auto& c : comps_)
        s += c.rank();
    return s;
}

int SkewClass::delta_value() const {
    if (empty())
        throw EmptyDiagram("delta_value of empty class");
    return arrangement().delta_value();
}

SkewDiagram SkewClass::arrangement() const {
    SkewDiagram arr;
    for (const auto& c : comps_)
        arr = stack_above_right(c, arr);
    return arr;
}

std::vector<SkewDiagram> SkewClass::all_arrangements() const {
    std::vector<SkewDiagram> order = comps_;
    std::sort(order.begin(), order.end());
    std::vector<SkewDiagram> out;
    do {
        SkewDiagram arr;
        for (const auto& c : order)
            arr = stack_above_right(c, arr);
        out.push_back(arr);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

} // namespace skewposet
