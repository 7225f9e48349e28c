#include <sstream>

#include "doctest.h"
#include "nimlab/sg.hpp"

using namespace nimlab;

namespace {

std::string cache_bytes(const SgTable& t) {
    std::ostringstream os;
    save_cache(t, os);
    return os.str();
}

}  // namespace

TEST_CASE("cache round trip is value- and byte-identical") {
    SgTable t = sg_table_n2(1, 2, 3);
    std::string bytes = cache_bytes(t);
    CHECK(bytes.rfind("grundy-cache v1 exco n=2 box=1,2,3\n", 0) == 0);
    CHECK(bytes.back() == '\n');
    CHECK(bytes.find("\n\n") == std::string::npos);  // no blank lines

    std::istringstream in(bytes);
    SgTable back = load_cache(in);
    CHECK(back == t);
    CHECK(cache_bytes(back) == bytes);
    CHECK(check_self_consistency(back));
}

TEST_CASE("cache round trip for a moore table keeps k") {
    SgTable t = build_table(GameRules::moore_nim(3, 2), {0, 2, 2, 2});
    std::istringstream in(cache_bytes(t));
    SgTable back = load_cache(in);
    CHECK(back.rules() == GameRules::moore_nim(3, 2));
    CHECK(back == t);
}

TEST_CASE("cache loader rejects malformed input with distinct errors") {
    SgTable t = sg_table_n2(0, 1, 1);
    std::string good = cache_bytes(t);

    {
        std::istringstream in("grundy-cache v2 exco n=2 box=0,1,1\n");
        CHECK_THROWS_AS(load_cache(in), cache_version_error);
    }
    {
        std::istringstream in("grundy-cache v1 exco n=2\n");
        CHECK_THROWS_AS(load_cache(in), cache_header_error);
    }
    {
        std::istringstream in("not-a-cache v1 exco n=2 box=0,1,1\n");
        CHECK_THROWS_AS(load_cache(in), cache_header_error);
    }
    {
        std::string bad = good;
        bad.replace(bad.find("\n0 0 0 0") + 1, 7, "0 0 x 0");
        std::istringstream in(bad);
        CHECK_THROWS_WITH_AS(load_cache(in), "line 2: bad cell entry 'x'", cache_parse_error);
    }
    {
        std::string truncated = good.substr(0, good.rfind("0 1 1"));
        std::istringstream in(truncated);
        CHECK_THROWS_AS(load_cache(in), cache_truncated_error);
    }
    {
        std::istringstream in(good + "0 0 0 0\n");
        CHECK_THROWS_AS(load_cache(in), cache_parse_error);
    }
    {
        std::istringstream in(good);
        CHECK_THROWS_AS(load_cache_expect(in, GameRules::standard_nim(2)), cache_variant_error);
    }
    {
        std::istringstream in(good);
        CHECK(load_cache_expect(in, GameRules::exco_nim(2)) == t);
    }
}
