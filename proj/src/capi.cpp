#include "skewposet.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "json.hpp"
#include "skewposet/lrrule.hpp"
#include "skewposet/poset.hpp"
#include "skewposet/sequences.hpp"
#include "skewposet/verifier.hpp"

using namespace skewposet;

struct sp_skew {
    SkewDiagram d;
};

struct sp_character {
    SkewCharacter ch;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Run `fn`, translating exceptions into status codes.
template <typename Fn>
sp_status guarded(Fn&& fn) {
    try {
        fn();
        return SP_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return SP_ERR_PARSE;
    } catch (const ContainmentError& e) {
        g_last_error = e.what();
        return SP_ERR_CONTAINMENT;
    } catch (const EmptyDiagram& e) {
        g_last_error = e.what();
        return SP_ERR_EMPTY;
    } catch (const EmptyPartition& e) {
        g_last_error = e.what();
        return SP_ERR_EMPTY;
    } catch (const OverflowError& e) {
        g_last_error = e.what();
        return SP_ERR_OVERFLOW;
    } catch (const AtMinimum& e) {
        g_last_error = e.what();
        return SP_ERR_AT_MINIMUM;
    } catch (const TheoremViolation& e) {
        g_last_error = e.what();
        return SP_ERR_THEOREM;
    } catch (const MalformedPair& e) {
        g_last_error = e.what();
        return SP_ERR_MALFORMED_PAIR;
    } catch (const Error& e) {
        g_last_error = e.what();
        return SP_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SP_ERR_INTERNAL;
    }
}

nlohmann::json partition_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

nlohmann::json character_json(const SkewDiagram& d, const SkewCharacter& ch) {
    nlohmann::json j;
    j["skew"] = {{"lambda", partition_json(d.outer())}, {"mu", partition_json(d.inner())}};
    j["terms"] = nlohmann::json::array();
    // canonical order: partition lexicographic descending
    std::vector<std::pair<Partition, std::int64_t>> sorted(ch.terms().begin(), ch.terms().end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [nu, c] : sorted)
        j["terms"].push_back({{"nu", partition_json(nu)}, {"coeff", c}});
    auto [a, b] = ch.cc_type();
    j["cc"] = {a, b};
    j["pairs"] = ch.one_box_pairs();
    return j;
}

std::int64_t seq_value(const std::string& name, int n) {
    if (name == "p")
        return p_count(n);
    if (name == "f")
        return f_count(n);
    if (name == "g")
        return g_count(n);
    if (name == "barp")
        return barp_count(n);
    throw Error("unknown sequence '" + name + "' (expected p, f, g or barp)");
}

} // namespace

extern "C" {

const char* sp_last_error(void) {
    return g_last_error.c_str();
}

void sp_string_free(char* s) {
    delete[] s;
}

sp_status sp_skew_parse(const char* text, sp_skew** out) {
    return guarded([&] { *out = new sp_skew{SkewDiagram::parse(text ? text : "")}; });
}

void sp_skew_free(sp_skew* d) {
    delete d;
}

sp_status sp_skew_format(const sp_skew* d, char** out) {
    return guarded([&] { *out = dup_string(d->d.to_string()); });
}

sp_status sp_skew_box_count(const sp_skew* d, int64_t* out) {
    return guarded([&] { *out = d->d.box_count(); });
}

sp_status sp_skew_delta(const sp_skew* d, int64_t* out) {
    return guarded([&] { *out = SkewClass::of(d->d).delta_value(); });
}

sp_status sp_skew_rank(const sp_skew* d, int64_t* out) {
    return guarded([&] { *out = SkewClass::of(d->d).rank(); });
}

sp_status sp_skew_paths(const sp_skew* d, char** outer_seq, char** inner_seq) {
    return guarded([&] {
        PathPair p = d->d.paths();
        *outer_seq = dup_string(p.outer_seq);
        *inner_seq = dup_string(p.inner_seq);
    });
}

sp_status sp_skew_covers(const sp_skew* d, int up, char** out) {
    return guarded([&] {
        SkewClass c = SkewClass::of(d->d);
        auto covers = up ? up_covers(c) : down_covers(c);
        std::string s;
        for (const SkewClass& cc : covers) {
            s += cc.to_string();
            s += '\n';
        }
        *out = dup_string(s);
    });
}

sp_status sp_skew_covers_json(const sp_skew* d, int up, char** out) {
    return guarded([&] {
        SkewClass c = SkewClass::of(d->d);
        auto covers = up ? up_covers(c) : down_covers(c);
        nlohmann::json j;
        j["class"] = c.to_string();
        j["direction"] = up ? "up" : "down";
        j["covers"] = nlohmann::json::array();
        for (const SkewClass& cc : covers)
            j["covers"].push_back(cc.to_string());
        *out = dup_string(j.dump(2));
    });
}

sp_status sp_skew_compare(const sp_skew* a, const sp_skew* b, int* geq) {
    return guarded(
        [&] { *geq = is_geq(SkewClass::of(a->d), SkewClass::of(b->d)) ? 1 : 0; });
}

sp_status sp_skew_reduce(const sp_skew* d, char** chain_text) {
    return guarded([&] {
        WitnessChain w = reduce_to_staircase(SkewClass::of(d->d));
        *chain_text = dup_string(w.to_string());
    });
}

sp_status sp_skew_reduce_json(const sp_skew* d, char** out) {
    return guarded([&] {
        WitnessChain w = reduce_to_staircase(SkewClass::of(d->d));
        nlohmann::json j;
        j["start"] = w.start.to_string();
        j["steps"] = nlohmann::json::array();
        for (const auto& [move, cls] : w.steps)
            j["steps"].push_back({{"move", move.to_string()}, {"class", cls.to_string()}});
        j["end"] = w.end().to_string();
        *out = dup_string(j.dump(2));
    });
}

sp_status sp_skew_decompose(const sp_skew* d, sp_character** out) {
    return guarded([&] { *out = new sp_character{decompose(d->d)}; });
}

void sp_character_free(sp_character* ch) {
    delete ch;
}

sp_status sp_character_format(const sp_character* ch, char** out) {
    return guarded([&] { *out = dup_string(ch->ch.to_string()); });
}

sp_status sp_character_cc(const sp_character* ch, int64_t* components, int64_t* constituents) {
    return guarded([&] {
        auto [a, b] = ch->ch.cc_type();
        *components = a;
        *constituents = b;
    });
}

sp_status sp_character_one_box_pairs(const sp_character* ch, int64_t* out) {
    return guarded([&] { *out = ch->ch.one_box_pairs(); });
}

sp_status sp_skew_decompose_json(const sp_skew* d, char** out) {
    return guarded([&] {
        SkewCharacter ch = decompose(d->d);
        *out = dup_string(character_json(d->d, ch).dump(2));
    });
}

sp_status sp_seq_values(const char* name, int max_n, char** json) {
    return guarded([&] {
        nlohmann::json j = nlohmann::json::array();
        for (int n = 1; n <= max_n; ++n)
            j.push_back({{"n", n}, {"value", seq_value(name ? name : "", n)}});
        *json = dup_string(j.dump(2));
    });
}

sp_status sp_seq_text(const char* name, int max_n, char** text) {
    return guarded([&] {
        std::string s;
        for (int n = 1; n <= max_n; ++n) {
            if (!s.empty())
                s += ' ';
            s += std::to_string(seq_value(name ? name : "", n));
        }
        s += '\n';
        *text = dup_string(s);
    });
}

sp_status sp_seq_table(int max_n, char** text) {
    return guarded([&] { *text = dup_string(sequence_table(max_n)); });
}

sp_status sp_bijection_table(int n, char** text) {
    return guarded([&] {
        std::string s;
        for (const BarPartition& b : enumerate_bar_partitions(n)) {
            BoxPair p = bijection_forward(b);
            s += b.to_string().empty() ? "()" : b.to_string();
            s += " -> (";
            s += p.nu1.to_string();
            s += ") , (";
            s += p.nu2.to_string();
            s += ")\n";
        }
        *text = dup_string(s);
    });
}

sp_status sp_bijection_table_json(int n, char** json) {
    return guarded([&] {
        nlohmann::json j = nlohmann::json::array();
        for (const BarPartition& b : enumerate_bar_partitions(n)) {
            BoxPair p = bijection_forward(b);
            j.push_back({{"bar", b.to_string()},
                         {"core", partition_json(b.core)},
                         {"n1", b.n1},
                         {"n2", b.n2},
                         {"nu1", partition_json(p.nu1)},
                         {"nu2", partition_json(p.nu2)}});
        }
        *json = dup_string(j.dump(2));
    });
}

sp_status sp_verify(int max_boxes, int jobs, const char* checks_csv, uint64_t seed,
                    int* pass, char** report_text, char** report_json) {
    return guarded([&] {
        SweepConfig cfg;
        cfg.max_boxes = max_boxes;
        cfg.parallel_jobs = jobs;
        cfg.sample_seed = seed;
        if (checks_csv && *checks_csv) {
            std::string csv(checks_csv);
            std::size_t pos = 0;
            while (pos != std::string::npos) {
                std::size_t comma = csv.find(',', pos);
                std::string name = csv.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (!name.empty()) {
                    if (std::find(kAllChecks.begin(), kAllChecks.end(), name) ==
                        kAllChecks.end())
                        throw Error("unknown check '" + name + "'");
                    cfg.checks.insert(name);
                }
                pos = comma == std::string::npos ? comma : comma + 1;
            }
        }
        Report report = run_suite(cfg);
        if (pass)
            *pass = report.pass ? 1 : 0;
        if (report_text)
            *report_text = dup_string(report.to_text());
        if (report_json)
            *report_json = dup_string(report.to_json());
    });
}

} // extern "C"
