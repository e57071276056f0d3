#include "skewposet/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "skewposet/poset.hpp"
#include "skewposet/sequences.hpp"

namespace skewposet {

namespace {

using Clock = std::chrono::steady_clock;

std::string cc_string(const SkewCharacter& ch) {
    auto [a, b] = ch.cc_type();
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

std::vector<SkewClass> enumerate_basic(int max_boxes) {
    if (max_boxes < 1)
        throw Error("enumerate_basic requires max_boxes >= 1");
    std::set<SkewClass> classes;
    std::vector<int> lam, mu;
    // Build basic diagrams row by row. The last row must have inner
    // part 0, so record the prefix whenever the current row does.
    auto rec = [&](auto&& self, int prev_lam, int prev_mu, std::int64_t boxes) -> void {
        for (int lo = 1; lo <= prev_lam; ++lo) {
            if (!lam.empty() && prev_mu > lo)
                continue; // previous inner part would overhang this row
            std::int64_t rest = max_boxes - boxes;
            for (int mi = std::min(lo - 1, prev_mu); mi >= 0 && lo - mi <= rest; --mi) {
                lam.push_back(lo);
                mu.push_back(mi);
                if (mi == 0)
                    classes.insert(SkewClass::of(
                        SkewDiagram(Partition(lam), Partition(mu))));
                self(self, lo, mi, boxes + lo - mi);
                lam.pop_back();
                mu.pop_back();
            }
        }
    };
    rec(rec, max_boxes, max_boxes, 0);
    return {classes.begin(), classes.end()};
}

bool check_lower_cc_against(const SkewClass& c, const SkewCharacter& ch, std::string* detail) {
    int n = c.delta_value();
    auto [a, b] = ch.cc_type();
    std::int64_t pa = p_count(n);
    std::int64_t fb = f_count(n);
    if (a >= pa && b >= fb)
        return true;
    if (detail)
        *detail = "cc = " + cc_string(ch) + " below (p_" + std::to_string(n) + ",f_" +
                  std::to_string(n) + ") = (" + std::to_string(pa) + "," + std::to_string(fb) +
                  "); decomposition: " + ch.to_string();
    return false;
}

bool check_lower_cc(const SkewClass& c, std::string* detail) {
    return check_lower_cc_against(c, decompose(c.arrangement()), detail);
}

bool check_pair_bounds(const SkewClass& c, std::string* detail) {
    int n = c.delta_value();
    if (n < 2)
        throw HypothesisNotMet("pair bounds require delta >= 2");
    SkewCharacter ch = decompose(c.arrangement());
    std::int64_t pairs = ch.one_box_pairs();
    std::int64_t gn = g_count(n);
    if (pairs < gn) {
        if (detail)
            *detail = "one_box_pairs = " + std::to_string(pairs) + " < g_" + std::to_string(n) +
                      " = " + std::to_string(gn) + "; decomposition: " + ch.to_string();
        return false;
    }
    // max(a,b) sub-check on each concrete arrangement with nonempty mu.
    for (const SkewDiagram& arr : c.all_arrangements()) {
        const Partition& lam = arr.outer();
        const Partition& mu = arr.inner();
        if (mu.empty())
            continue;
        int l = lam.length();
        Partition a_outer({lam.part(1) - 2, lam.part(l) - 1});
        Partition a_inner({mu.part(1) - 1});
        std::vector<int> b_outer_v, b_inner_v;
        for (int i = 2; i <= l - 1; ++i)
            b_outer_v.push_back(lam.part(i));
        for (int i = 2; i <= mu.length(); ++i)
            b_inner_v.push_back(mu.part(i));
        SkewDiagram shape_a(a_outer, a_inner);
        SkewDiagram shape_b{Partition(b_outer_v), Partition(b_inner_v)};
        std::int64_t a = decompose(shape_a).cc_type().first;
        std::int64_t b = decompose(shape_b).cc_type().first;
        if (pairs < std::max(a, b)) {
            if (detail)
                *detail = "one_box_pairs = " + std::to_string(pairs) + " < max(a,b) = max(" +
                          std::to_string(a) + "," + std::to_string(b) + ") from arrangement " +
                          arr.to_string() + "; decomposition: " + ch.to_string();
            return false;
        }
    }
    return true;
}

bool check_upper_bounds(const SkewClass& c, std::string* detail) {
    if (c.empty())
        throw EmptyDiagram("check_upper_bounds of empty class");
    SkewDiagram arr = c.arrangement();
    int n = static_cast<int>(c.box_count());
    SkewCharacter ch = decompose(arr);
    auto [a, b] = ch.cc_type();
    std::int64_t pairs = ch.one_box_pairs();
    std::int64_t bound_b = std::min({f_count(n),
                                     checked_mul(p_count(n), arr.inner().count_syt()),
                                     checked_mul(p_count(n), arr.outer().bar_complement().count_syt())});
    if (pairs <= g_count(n) && a <= p_count(n) && b <= bound_b)
        return true;
    if (detail)
        *detail = "upper bounds violated: pairs = " + std::to_string(pairs) + " vs g_" +
                  std::to_string(n) + " = " + std::to_string(g_count(n)) + ", cc = " +
                  cc_string(ch) + " vs (" + std::to_string(p_count(n)) + "," +
                  std::to_string(bound_b) + "); decomposition: " + ch.to_string();
    return false;
}

bool check_reduction(const SkewClass& c, std::string* detail) {
    int n = c.delta_value();
    try {
        WitnessChain w = reduce_to_staircase(c);
        if (w.end() != SkewClass::staircase(n)) {
            if (detail)
                *detail = "chain ends at " + w.end().to_string() + ", not the staircase class";
            return false;
        }
        if (static_cast<int>(w.steps.size()) != c.rank() - 2 * n) {
            if (detail)
                *detail = "chain length " + std::to_string(w.steps.size()) + " != rank - 2n = " +
                          std::to_string(c.rank() - 2 * n);
            return false;
        }
        for (const auto& [move, cls] : w.steps)
            if (cls.delta_value() != n) {
                if (detail)
                    *detail = "step " + move.to_string() + " changes delta at " + cls.to_string();
                return false;
            }
        if (!verify_chain(w)) {
            if (detail)
                *detail = "witness chain failed recheck:\n" + w.to_string();
            return false;
        }
        return true;
    } catch (const TheoremViolation& e) {
        if (detail)
            *detail = e.what();
        return false;
    }
}

bool check_symmetry(const SkewClass& c, std::string* detail) {
    SkewDiagram arr = c.arrangement();
    SkewCharacter ch = decompose(arr);
    auto fail = [&](const std::string& msg) {
        if (detail)
            *detail = msg + "; decomposition: " + ch.to_string();
        return false;
    };
    if (decompose(arr.rotate()) != ch)
        return fail("rotation symmetry violated for " + arr.to_string());
    if (decompose(arr.to_basic()) != ch)
        return fail("to_basic invariance violated for " + arr.to_string());
    SkewCharacter conj = decompose(SkewDiagram(arr.outer().conjugate(), arr.inner().conjugate()));
    for (const auto& [nu, coeff] : ch.terms())
        if (conj.coefficient(nu.conjugate()) != coeff)
            return fail("conjugation symmetry violated at nu = " + nu.to_string());
    if (conj.terms().size() != ch.terms().size())
        return fail("conjugation symmetry: term count differs");
    for (const auto& [nu, coeff] : ch.terms())
        if (lr_coefficient(arr.outer(), nu, arr.inner()) != coeff)
            return fail("argument-swap symmetry violated at nu = " + nu.to_string());
    if (c.box_count() <= 7) {
        std::int64_t lhs = 0;
        for (const auto& [nu, coeff] : ch.terms())
            lhs = checked_add(lhs, checked_mul(coeff, nu.count_syt()));
        std::int64_t rhs = count_syt_skew(arr);
        if (lhs != rhs)
            return fail("SYT oracle identity violated: " + std::to_string(lhs) +
                        " != " + std::to_string(rhs));
    }
    return true;
}

namespace {

Partition random_partition(std::mt19937_64& rng, int max_size) {
    int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_size + 1));
    auto all = partitions_of(n);
    return all[static_cast<std::size_t>(rng() % all.size())];
}

Partition random_subpartition(std::mt19937_64& rng, const Partition& lam) {
    std::vector<int> v;
    int prev = lam.part(1);
    for (int i = 1; i <= lam.length(); ++i) {
        int hi = std::min(lam.part(i), prev);
        int x = static_cast<int>(rng() % static_cast<std::uint64_t>(hi + 1));
        v.push_back(x);
        prev = x;
    }
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

} // namespace

bool check_monotonicity(std::uint64_t seed, int samples, std::vector<Violation>* violations) {
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (int s = 0; s < samples; ++s) {
        Partition lam = random_partition(rng, 7);
        Partition mu = random_subpartition(rng, lam);
        Partition nu = random_partition(rng, 7);
        // Primed triple must have a nonzero coefficient.
        Partition lamp, mup, nup;
        std::int64_t cp = 0;
        while (cp == 0) {
            lamp = random_partition(rng, 7);
            mup = random_subpartition(rng, lamp);
            auto candidates = partitions_of(static_cast<int>(lamp.size() - mup.size()));
            nup = candidates[static_cast<std::size_t>(rng() % candidates.size())];
            cp = lr_coefficient(lamp, mup, nup);
        }
        std::int64_t base = lr_coefficient(lam, mu, nu);
        std::int64_t plus = lr_coefficient(lam.sum(lamp), mu.sum(mup), nu.sum(nup));
        std::int64_t cup =
            lr_coefficient(lam.union_with(lamp), mu.union_with(mup), nu.union_with(nup));
        if (base > plus || base > cup) {
            ok = false;
            if (violations) {
                std::ostringstream os;
                os << "c(" << lam.to_string() << ";" << mu.to_string() << "," << nu.to_string()
                   << ") = " << base << " vs + form " << plus << ", union form " << cup
                   << " with primed triple (" << lamp.to_string() << ";" << mup.to_string()
                   << "," << nup.to_string() << ")";
                violations->push_back({"sample " + std::to_string(s), os.str()});
            }
        }
    }
    return ok;
}

namespace {

// Class-indexed checks run sharded by canonical-form hash; results are
// merged in canonical (enumeration) order so parallelism cannot change
// report content.
struct ClassCheck {
    std::string name;
    // returns false and fills detail on violation; may throw
    // HypothesisNotMet to skip.
    bool (*fn)(const SkewClass&, std::string*);
};

const std::vector<ClassCheck> kClassChecks = {
    {"lower_cc", [](const SkewClass& c, std::string* d) { return check_lower_cc(c, d); }},
    {"pairs", [](const SkewClass& c, std::string* d) { return check_pair_bounds(c, d); }},
    {"upper", [](const SkewClass& c, std::string* d) { return check_upper_bounds(c, d); }},
    {"reduction", [](const SkewClass& c, std::string* d) { return check_reduction(c, d); }},
    {"symmetry", [](const SkewClass& c, std::string* d) { return check_symmetry(c, d); }},
};

} // namespace

Report run_suite(const SweepConfig& cfg) {
    Report report;
    report.config = cfg;
    std::vector<SkewClass> classes = enumerate_basic(cfg.max_boxes);
    int jobs = std::max(1, cfg.parallel_jobs);

    for (const ClassCheck& check : kClassChecks) {
        if (!cfg.enabled(check.name))
            continue;
        auto t0 = Clock::now();
        CheckResult result;
        result.name = check.name;
        std::vector<std::int64_t> examined(static_cast<std::size_t>(jobs), 0);
        std::vector<std::vector<std::pair<std::size_t, Violation>>> found(
            static_cast<std::size_t>(jobs));
        auto worker = [&](int job) {
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (static_cast<int>(std::hash<SkewClass>{}(classes[i]) %
                                     static_cast<std::size_t>(jobs)) != job)
                    continue;
                std::string detail;
                try {
                    if (!check.fn(classes[i], &detail))
                        found[static_cast<std::size_t>(job)].push_back(
                            {i, {classes[i].to_string(), detail}});
                    ++examined[static_cast<std::size_t>(job)];
                } catch (const HypothesisNotMet&) {
                    // skipped, not failed
                }
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> threads;
            for (int j = 0; j < jobs; ++j)
                threads.emplace_back(worker, j);
            for (auto& t : threads)
                t.join();
        }
        std::vector<std::pair<std::size_t, Violation>> merged;
        for (auto& part : found)
            merged.insert(merged.end(), part.begin(), part.end());
        std::sort(merged.begin(), merged.end());
        for (auto& [i, v] : merged)
            result.violations.push_back(std::move(v));
        for (std::int64_t e : examined)
            result.examined += e;
        result.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        report.checks.push_back(std::move(result));
    }

    if (cfg.enabled("monotonicity")) {
        auto t0 = Clock::now();
        CheckResult result;
        result.name = "monotonicity";
        result.examined = cfg.monotonicity_samples;
        check_monotonicity(cfg.sample_seed, cfg.monotonicity_samples, &result.violations);
        result.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        report.checks.push_back(std::move(result));
    }

    for (const auto& c : report.checks)
        if (!c.violations.empty())
            report.pass = false;
    return report;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "verification sweep: max_boxes=" << config.max_boxes
       << " jobs=" << config.parallel_jobs << " seed=" << config.sample_seed << "\n";
    for (const auto& c : checks) {
        os << "  " << c.name << ": examined " << c.examined << ", violations "
           << c.violations.size() << " (" << c.millis << " ms)\n";
        for (const auto& v : c.violations)
            os << "    " << v.subject << ": " << v.message << "\n";
    }
    os << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["config"] = {{"max_boxes", config.max_boxes},
                   {"checks", config.checks.empty()
                                  ? kAllChecks
                                  : std::vector<std::string>(config.checks.begin(),
                                                             config.checks.end())},
                   {"sample_seed", config.sample_seed},
                   {"parallel_jobs", config.parallel_jobs}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["examined"] = c.examined;
        jc["millis"] = c.millis;
        jc["violations"] = nlohmann::json::array();
        for (const auto& v : c.violations)
            jc["violations"].push_back({{"subject", v.subject}, {"message", v.message}});
        j["checks"].push_back(std::move(jc));
    }
    j["pass"] = pass;
    return j.dump(2);
}

} // namespace skewposet
