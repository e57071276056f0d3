// Command line front end; everything goes through the C API.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "skewposet.h"

namespace {

struct StringOut {
    char* s = nullptr;
    ~StringOut() { sp_string_free(s); }
};

struct SkewHandle {
    sp_skew* d = nullptr;
    ~SkewHandle() { sp_skew_free(d); }
};

struct CharacterHandle {
    sp_character* ch = nullptr;
    ~CharacterHandle() { sp_character_free(ch); }
};

int fail(sp_status st) {
    std::fprintf(stderr, "error: %s\n", sp_last_error());
    return st == SP_ERR_PARSE ? 1 : 1;
}

bool parse_skew(const std::string& text, SkewHandle& h) {
    return sp_skew_parse(text.c_str(), &h.d) == SP_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew diagram poset, LR decompositions and bound verification"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string skew_text, skew_b_text;
    auto* cmd_decompose = app.add_subcommand("decompose", "decompose a skew character");
    cmd_decompose->add_option("skew", skew_text, "skew diagram, e.g. \"4,3,2,1/2,2\"")->required();

    auto* cmd_cc = app.add_subcommand("cc", "components/constituents and one-box pairs");
    cmd_cc->add_option("skew", skew_text)->required();

    auto* cmd_delta = app.add_subcommand("delta", "delta value of a skew diagram");
    cmd_delta->add_option("skew", skew_text)->required();

    auto* cmd_paths = app.add_subcommand("paths", "outer and inner boundary paths");
    cmd_paths->add_option("skew", skew_text)->required();

    bool covers_up = false, covers_down = false;
    auto* cmd_covers = app.add_subcommand("covers", "cover classes in the poset");
    cmd_covers->add_option("skew", skew_text)->required();
    cmd_covers->add_flag("--up", covers_up, "classes covering this one");
    cmd_covers->add_flag("--down", covers_down, "classes covered by this one");

    auto* cmd_compare = app.add_subcommand("compare", "is class(A) >= class(B)?");
    cmd_compare->add_option("a", skew_text)->required();
    cmd_compare->add_option("b", skew_b_text)->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "witness chain down to the staircase class");
    cmd_reduce->add_option("skew", skew_text)->required();

    std::string seq_name = "p";
    int seq_max = 13;
    auto* cmd_seq = app.add_subcommand("seq", "integer sequence values");
    cmd_seq->add_option("--name", seq_name, "p, f, g or barp")->capture_default_str();
    cmd_seq->add_option("--max", seq_max, "largest n")->capture_default_str();
    bool seq_all = false;
    cmd_seq->add_flag("--table", seq_all, "print the aligned g/p/f table");

    int bij_n = 2;
    auto* cmd_bijection =
        app.add_subcommand("bijection", "two-colored partitions vs one-box pairs");
    cmd_bijection->add_option("--n", bij_n, "weight of the two-colored partitions")
        ->capture_default_str();

    int v_max_boxes = 6, v_jobs = 1;
    std::uint64_t v_seed = 1;
    std::string v_checks;
    auto* cmd_verify = app.add_subcommand("verify", "exhaustive verification sweep");
    cmd_verify->add_option("--max-boxes", v_max_boxes)->capture_default_str();
    cmd_verify->add_option("--jobs", v_jobs)->capture_default_str();
    cmd_verify->add_option("--seed", v_seed)->capture_default_str();
    cmd_verify->add_option("--checks", v_checks,
                           "comma-separated subset of "
                           "lower_cc,pairs,upper,reduction,symmetry,monotonicity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    bool json = format == "json";

    if (cmd_decompose->parsed() || cmd_cc->parsed()) {
        SkewHandle d;
        if (!parse_skew(skew_text, d))
            return fail(SP_ERR_PARSE);
        if (json) {
            StringOut out;
            if (sp_status st = sp_skew_decompose_json(d.d, &out.s); st != SP_OK)
                return fail(st);
            std::printf("%s\n", out.s);
            return 0;
        }
        CharacterHandle ch;
        if (sp_status st = sp_skew_decompose(d.d, &ch.ch); st != SP_OK)
            return fail(st);
        if (cmd_decompose->parsed()) {
            StringOut out;
            if (sp_status st = sp_character_format(ch.ch, &out.s); st != SP_OK)
                return fail(st);
            std::printf("%s\n", out.s);
        } else {
            int64_t a = 0, b = 0, pairs = 0;
            sp_character_cc(ch.ch, &a, &b);
            sp_character_one_box_pairs(ch.ch, &pairs);
            std::printf("(%lld,%lld)\n", static_cast<long long>(a), static_cast<long long>(b));
            std::printf("one-box pairs: %lld\n", static_cast<long long>(pairs));
        }
        return 0;
    }

    if (cmd_delta->parsed()) {
        SkewHandle d;
        if (!parse_skew(skew_text, d))
            return fail(SP_ERR_PARSE);
        int64_t delta = 0;
        if (sp_status st = sp_skew_delta(d.d, &delta); st != SP_OK)
            return fail(st);
        if (json)
            std::printf("{\"delta\": %lld}\n", static_cast<long long>(delta));
        else
            std::printf("%lld\n", static_cast<long long>(delta));
        return 0;
    }

    if (cmd_paths->parsed()) {
        SkewHandle d;
        if (!parse_skew(skew_text, d))
            return fail(SP_ERR_PARSE);
        StringOut o, i;
        if (sp_status st = sp_skew_paths(d.d, &o.s, &i.s); st != SP_OK)
            return fail(st);
        if (json)
            std::printf("{\"outer\": \"%s\", \"inner\": \"%s\"}\n", o.s, i.s);
        else
            std::printf("o = %s\ni = %s\n", o.s, i.s);
        return 0;
    }

    if (cmd_covers->parsed()) {
        if (covers_up == covers_down) {
            std::fprintf(stderr, "error: covers needs exactly one of --up or --down\n");
            return 1;
        }
        SkewHandle d;
        if (!parse_skew(skew_text, d))
            return fail(SP_ERR_PARSE);
        StringOut out;
        sp_status st = json ? sp_skew_covers_json(d.d, covers_up ? 1 : 0, &out.s)
                            : sp_skew_covers(d.d, covers_up ? 1 : 0, &out.s);
        if (st != SP_OK)
            return fail(st);
        std::printf("%s", out.s);
        if (json)
            std::printf("\n");
        return 0;
    }

    if (cmd_compare->parsed()) {
        SkewHandle a, b;
        if (!parse_skew(skew_text, a) || !parse_skew(skew_b_text, b))
            return fail(SP_ERR_PARSE);
        int geq = 0;
        if (sp_status st = sp_skew_compare(a.d, b.d, &geq); st != SP_OK)
            return fail(st);
        if (json)
            std::printf("{\"geq\": %s}\n", geq ? "true" : "false");
        else
            std::printf("%s\n", geq ? "true" : "false");
        return 0;
    }

    if (cmd_reduce->parsed()) {
        SkewHandle d;
        if (!parse_skew(skew_text, d))
            return fail(SP_ERR_PARSE);
        StringOut out;
        sp_status st = json ? sp_skew_reduce_json(d.d, &out.s) : sp_skew_reduce(d.d, &out.s);
        if (st != SP_OK)
            return fail(st);
        std::printf("%s", out.s);
        if (json)
            std::printf("\n");
        return 0;
    }

    if (cmd_seq->parsed()) {
        StringOut out;
        sp_status st;
        if (seq_all && !json)
            st = sp_seq_table(seq_max, &out.s);
        else if (json)
            st = sp_seq_values(seq_name.c_str(), seq_max, &out.s);
        else
            st = sp_seq_text(seq_name.c_str(), seq_max, &out.s);
        if (st != SP_OK)
            return fail(st);
        std::printf("%s", out.s);
        if (json)
            std::printf("\n");
        return 0;
    }

    if (cmd_bijection->parsed()) {
        StringOut out;
        sp_status st =
            json ? sp_bijection_table_json(bij_n, &out.s) : sp_bijection_table(bij_n, &out.s);
        if (st != SP_OK)
            return fail(st);
        std::printf("%s", out.s);
        if (json)
            std::printf("\n");
        return 0;
    }

    if (cmd_verify->parsed()) {
        int pass = 0;
        StringOut text, jsn;
        sp_status st = sp_verify(v_max_boxes, v_jobs, v_checks.c_str(), v_seed, &pass,
                                 json ? nullptr : &text.s, json ? &jsn.s : nullptr);
        if (st != SP_OK)
            return fail(st);
        std::printf("%s", json ? jsn.s : text.s);
        if (json)
            std::printf("\n");
        return pass ? 0 : 2;
    }

    return 1;
}
