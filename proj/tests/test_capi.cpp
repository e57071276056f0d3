#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "json.hpp"
#include "skewposet.h"

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { sp_string_free(s); }
    std::string get() const { return s ? s : ""; }
};

struct Skew {
    sp_skew* d = nullptr;
    explicit Skew(const char* text) { REQUIRE(sp_skew_parse(text, &d) == SP_OK); }
    ~Skew() { sp_skew_free(d); }
};

} // namespace

TEST_CASE("parse, format, errors") {
    Skew d("4,3,2,1/2,2");
    Str out;
    CHECK(sp_skew_format(d.d, &out.s) == SP_OK);
    CHECK(out.get() == "4,3,2,1/2,2");

    int64_t boxes = 0;
    CHECK(sp_skew_box_count(d.d, &boxes) == SP_OK);
    CHECK(boxes == 6);

    sp_skew* bad = nullptr;
    CHECK(sp_skew_parse("1/2", &bad) == SP_ERR_PARSE);
    CHECK(std::strlen(sp_last_error()) > 0);
    CHECK(sp_skew_parse("a,b", &bad) == SP_ERR_PARSE);
}

TEST_CASE("delta, rank, paths") {
    Skew d("5,4,3,2,2/4,2,2,1");
    int64_t v = 0;
    CHECK(sp_skew_delta(d.d, &v) == SP_OK);
    CHECK(v == 4);
    CHECK(sp_skew_rank(d.d, &v) == SP_OK);
    CHECK(v == 10);

    Skew box("1");
    Str o, i;
    CHECK(sp_skew_paths(box.d, &o.s, &i.s) == SP_OK);
    CHECK(o.get() == "hv");
    CHECK(i.get() == "vh");

    Skew empty("2,1/2,1");
    Str eo, ei;
    CHECK(sp_skew_paths(empty.d, &eo.s, &ei.s) == SP_ERR_EMPTY);
    int64_t ev = 0;
    CHECK(sp_skew_delta(empty.d, &ev) == SP_ERR_EMPTY);
}

TEST_CASE("decompose and character queries") {
    Skew d("4,3,2,1/2,2");
    sp_character* ch = nullptr;
    REQUIRE(sp_skew_decompose(d.d, &ch) == SP_OK);
    Str text;
    CHECK(sp_character_format(ch, &text.s) == SP_OK);
    CHECK(text.get() ==
          "[4,2] + [4,1,1] + [3,3] + 2*[3,2,1] + [3,1,1,1] + [2,2,2] + [2,2,1,1]");
    int64_t a = 0, b = 0, pairs = 0;
    CHECK(sp_character_cc(ch, &a, &b) == SP_OK);
    CHECK(a == 7);
    CHECK(b == 8);
    CHECK(sp_character_one_box_pairs(ch, &pairs) == SP_OK);
    sp_character_free(ch);

    Str json;
    REQUIRE(sp_skew_decompose_json(d.d, &json.s) == SP_OK);
    auto j = nlohmann::json::parse(json.get());
    CHECK(j["skew"]["lambda"] == nlohmann::json({4, 3, 2, 1}));
    CHECK(j["skew"]["mu"] == nlohmann::json({2, 2}));
    CHECK(j["cc"] == nlohmann::json({7, 8}));
    CHECK(j["terms"].size() == 7);
    CHECK(j["terms"][0]["nu"] == nlohmann::json({4, 2}));
    CHECK(j["terms"][0]["coeff"] == 1);
}

TEST_CASE("covers, compare, reduce") {
    Skew box("1");
    Str ups;
    CHECK(sp_skew_covers(box.d, 1, &ups.s) == SP_OK);
    CHECK(ups.get() == "1,1\n2\n");

    Skew a("5,4,3,2,2/3,3,2,1"), b("4,3,2,1/3,2,1");
    int geq = -1;
    CHECK(sp_skew_compare(a.d, b.d, &geq) == SP_OK);
    CHECK(geq == 1);
    CHECK(sp_skew_compare(b.d, a.d, &geq) == SP_OK);
    CHECK(geq == 0);

    Skew r("5,4,3,2,2/4,2,2,1");
    Str chain;
    CHECK(sp_skew_reduce(r.d, &chain.s) == SP_OK);
    CHECK(chain.get().find("start 5,4,3,2,2/4,2,2,1") == 0);

    Str cjson;
    CHECK(sp_skew_reduce_json(r.d, &cjson.s) == SP_OK);
    auto j = nlohmann::json::parse(cjson.get());
    CHECK(j["steps"].size() == 2);
    CHECK(j["end"] == "4,3,2,1/3,2,1");

    // already minimal: empty chain, not an error
    Skew s("4,3,2,1/3,2,1");
    Str triv;
    CHECK(sp_skew_reduce_json(s.d, &triv.s) == SP_OK);
    CHECK(nlohmann::json::parse(triv.get())["steps"].empty());
}

TEST_CASE("sequences") {
    Str text;
    CHECK(sp_seq_text("g", 6, &text.s) == SP_OK);
    CHECK(text.get() == "0 1 2 5 9 17\n");

    Str json;
    CHECK(sp_seq_values("f", 5, &json.s) == SP_OK);
    auto j = nlohmann::json::parse(json.get());
    REQUIRE(j.size() == 5);
    CHECK(j[4]["n"] == 5);
    CHECK(j[4]["value"] == 26);

    Str bad;
    CHECK(sp_seq_text("q", 3, &bad.s) == SP_ERR_DOMAIN);

    Str table;
    CHECK(sp_seq_table(13, &table.s) == SP_OK);
    CHECK(table.get().find("568504") != std::string::npos);
}

TEST_CASE("bijection table") {
    Str text;
    CHECK(sp_bijection_table(2, &text.s) == SP_OK);
    std::string t = text.get();
    CHECK(std::count(t.begin(), t.end(), '\n') == 5);
    CHECK(t.find("2' -> (3,1) , (2,2)") != std::string::npos);

    Str json;
    CHECK(sp_bijection_table_json(2, &json.s) == SP_OK);
    auto j = nlohmann::json::parse(json.get());
    CHECK(j.size() == 5);
}

TEST_CASE("verification sweep") {
    int pass = 0;
    Str text, json;
    CHECK(sp_verify(4, 2, "", 7, &pass, &text.s, &json.s) == SP_OK);
    CHECK(pass == 1);
    CHECK(text.get().find("PASS") != std::string::npos);
    auto j = nlohmann::json::parse(json.get());
    CHECK(j["pass"] == true);

    CHECK(sp_verify(3, 1, "lower_cc,nonsense", 7, &pass, &text.s, nullptr) == SP_ERR_DOMAIN);
}
