#include <omp.h>

#include <map>
#include <random>

#include "doctest.h"
#include "nimlab/closed_form.hpp"
#include "nimlab/sg.hpp"
#include "test_oracle.hpp"

using namespace nimlab;

TEST_CASE("mex basics") {
    CHECK(mex({}) == 0);
    CHECK(mex({0, 1, 3}) == 2);
    CHECK(mex({1, 2}) == 0);
    CHECK(mex({0, 0, 1, 1, 2}) == 3);
}

TEST_CASE("brute force reproduces known values and memoizes") {
    GameRules nim2 = GameRules::standard_nim(2);
    SgTable memo(nim2, {0, 5, 5});
    CHECK(sg_bruteforce(nim2, Position(0, {3, 5}), memo) == 6);
    CHECK(sg_bruteforce(nim2, Position(0, {3, 5}), memo) == 6);  // idempotent

    GameRules exco2 = GameRules::exco_nim(2);
    SgTable memo2(exco2, {2, 3, 3});
    CHECK(sg_bruteforce(exco2, Position(1, {1, 2}), memo2) == 4);
    CHECK(sg_bruteforce(exco2, Position(2, {1, 3}), memo2) == 6);
}

TEST_CASE("brute force reports the visit limit by name") {
    GameRules exco2 = GameRules::exco_nim(2);
    SgTable memo(exco2, {3, 9, 9});
    BuildLimits limits;
    limits.max_visits = 5;
    CHECK_THROWS_WITH_AS(sg_bruteforce(exco2, Position(3, {9, 9}), memo, limits),
                         "position-visit limit of 5 exceeded", resource_limit_error);
}

TEST_CASE("table memory limit is a clean error") {
    BuildLimits limits;
    limits.max_cells = 100;
    CHECK_THROWS_AS(sg_table_n2(9, 9, 9, limits), resource_limit_error);
}

TEST_CASE("all builders agree with the oracle on an exco n=2 box") {
    std::map<std::vector<int>, int> memo;
    GameRules exco2 = GameRules::exco_nim(2);
    SgTable naive = build_table(exco2, {2, 5, 7});
    SgTable fast = sg_table_n2(2, 5, 7);
    SgTable par = sg_table_n2_parallel(2, 5, 7);
    CHECK(naive == fast);
    CHECK(fast == par);
    fast.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
        CHECK(value == testutil::oracle_sg(exco2, std::vector<int>(cell.begin(), cell.end()), memo));
    });
}

TEST_CASE("dense builder matches the oracle for the other variants") {
    for (const GameRules& rules :
         {GameRules::standard_nim(2), GameRules::moore_nim(3, 2), GameRules::co_nim(3),
          GameRules::exco_nim(3)}) {
        std::vector<int> box(static_cast<std::size_t>(rules.n) + 1, 3);
        box[0] = rules.has_extra_pile() ? 1 : 0;
        SgTable table = build_table(rules, box);
        std::map<std::vector<int>, int> memo;
        table.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
            CHECK(value ==
                  testutil::oracle_sg(rules, std::vector<int>(cell.begin(), cell.end()), memo));
        });
    }
}

TEST_CASE("n=2 table: published values, xor plane, monotonicity, bounds") {
    SgTable t = sg_table_n2(3, 9, 10);
    CHECK(t.at(Position(1, {2, 3})) == 6);
    CHECK(t.at(Position(0, {9, 10})) == 3);
    CHECK(t.at(Position(1, {5, 6})) == 11);
    CHECK(t.at(Position(2, {5, 5})) == 11);
    CHECK(t.at(Position(3, {1, 1})) == 5);

    for (int x1 = 0; x1 <= 9; ++x1) {
        for (int x2 = x1; x2 <= 10; ++x2) {
            CHECK(t.at(Position(0, {x1, x2})) == (x1 ^ x2));
            long long prev = -1;
            for (int x0 = 0; x0 <= 3; ++x0) {
                long long g = t.at(Position(x0, {x1, x2}));
                CHECK(g > prev);  // strictly monotone in x0
                prev = g;
                CHECK(g >= x0 + (x1 ^ x2));
                CHECK(g <= x0 + x1 + x2);
            }
        }
    }
}

TEST_CASE("queries canonicalize; raw and sorted positions agree") {
    SgTable t = sg_table_n2(2, 4, 6);
    CHECK(t.at(Position(1, {5, 2})) == t.at(Position(1, {2, 5})));
    CHECK(t.has(Position(0, {6, 4})));
    CHECK_FALSE(t.in_box(Position(0, {5, 6})));  // sorted x1 exceeds the x1 bound
    CHECK_THROWS_AS(t.at(Position(3, {0, 0})), std::out_of_range);
}

TEST_CASE("value sits between x0 + G(0,piles) and the token count, n=3") {
    SgTable t = build_table(GameRules::exco_nim(3), {2, 3, 3, 3});
    t.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
        Position zeroed(0, std::vector<int>(cell.begin() + 1, cell.end()));
        long long lo = cell[0] + t.at(zeroed);
        long long hi = cell[0] + cell[1] + cell[2] + cell[3];
        CHECK(value >= lo);
        CHECK(value <= hi);
    });
}

TEST_CASE("exco restricted to x0 = 0 is exactly co-nim") {
    SgTable exco = build_table(GameRules::exco_nim(3), {0, 3, 3, 3});
    SgTable conim = build_table(GameRules::co_nim(3), {0, 3, 3, 3});
    exco.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
        Position pos(0, std::vector<int>(cell.begin() + 1, cell.end()));
        CHECK(value == conim.at(pos));
    });
}

TEST_CASE("Bouton: standard nim table is the xor of the piles") {
    SgTable t = build_table(GameRules::standard_nim(3), {0, 5, 5, 5});
    t.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
        CHECK(value == (cell[1] ^ cell[2] ^ cell[3]));
    });
}

TEST_CASE("repeated builds are identical across builders, runs and thread counts") {
    SgTable a = sg_table_n2_parallel(2, 8, 24);
    SgTable b = sg_table_n2_parallel(2, 8, 24);
    SgTable c = sg_table_n2(2, 8, 24);
    CHECK(a == b);
    CHECK(a == c);

    const int before = omp_get_max_threads();
    omp_set_num_threads(1);
    SgTable serial_run = sg_table_n2_parallel(2, 8, 24);
    omp_set_num_threads(before);
    CHECK(serial_run == a);
}

TEST_CASE("wide random positions respect the bounds and x0 monotonicity") {
    SgTable t = sg_table_n2_parallel(3, 40, 400);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dx1(0, 40), dx2(0, 400);
    for (int trial = 0; trial < 500; ++trial) {
        int x1 = dx1(rng), x2 = dx2(rng);
        if (x1 > x2) std::swap(x1, x2);
        if (x1 > 40) continue;
        long long prev = -1;
        for (int x0 = 0; x0 <= 3; ++x0) {
            long long g = t.at(Position(x0, {x1, x2}));
            CHECK(g >= x0 + (x1 ^ x2));
            CHECK(g <= static_cast<long long>(x0) + x1 + x2);
            CHECK(g > prev);
            prev = g;
        }
    }
}

TEST_CASE("best_move finds the winning move or reports none") {
    GameRules exco2 = GameRules::exco_nim(2);
    SgTable memo(exco2, {1, 2, 2});
    auto mv = best_move(exco2, Position(1, {2, 2}), memo);
    REQUIRE(mv.has_value());
    CHECK(mv->to == Position(0, {2, 2}));
    CHECK(is_p_position_exco(mv->to));

    SgTable memo2(exco2, {0, 5, 5});
    CHECK_FALSE(best_move(exco2, Position(0, {5, 5}), memo2).has_value());

    GameRules nim3 = GameRules::standard_nim(3);
    SgTable memo3(nim3, {0, 3, 5, 6});
    CHECK_FALSE(best_move(nim3, Position(0, {3, 5, 6}), memo3).has_value());

    GameRules moore32 = GameRules::moore_nim(3, 2);
    SgTable memo4(moore32, {0, 3, 5, 6});
    auto mm = best_move(moore32, Position(0, {3, 5, 6}), memo4);
    REQUIRE(mm.has_value());
    CHECK(moore_sum(mm->to, 2).is_zero());  // winning moves land on zeros of M
}

TEST_CASE("move_to_value reaches any value below G and rejects the rest") {
    GameRules exco2 = GameRules::exco_nim(2);
    SgTable memo(exco2, {1, 1, 2});
    Position pos(1, {1, 2});  // G = 4
    Move mv0 = move_to_value(exco2, pos, 0, memo);
    CHECK(sg_bruteforce(exco2, mv0.to, memo) == 0);
    Move mv3 = move_to_value(exco2, pos, 3, memo);
    CHECK(is_legal_move(exco2, pos, mv3.to));
    CHECK(sg_bruteforce(exco2, mv3.to, memo) == 3);
    CHECK_THROWS_WITH_AS(move_to_value(exco2, pos, 4, memo), "value not realizable",
                         std::domain_error);
}

TEST_CASE("axiom suite is clean on small boxes") {
    CHECK(verify_sg_axioms(GameRules::exco_nim(2), {2, 5, 5}).ok());
    CHECK(verify_sg_axioms(GameRules::standard_nim(2), {0, 4, 4}).ok());
    CHECK(verify_sg_axioms(GameRules::moore_nim(3, 2), {0, 3, 3, 3}).ok());
}

TEST_CASE("self-consistency check accepts built tables and rejects corrupted ones") {
    SgTable t = sg_table_n2(1, 3, 3);
    CHECK(check_self_consistency(t));
    std::vector<int> cell{1, 3, 3};
    t.set_components(cell, t.at(Position(1, {3, 3})) + 1);
    CHECK_FALSE(check_self_consistency(t));
}
