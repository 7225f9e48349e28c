#include <map>
#include <set>

#include "doctest.h"
#include "nimlab/closed_form.hpp"
#include "nimlab/sg.hpp"
#include "test_oracle.hpp"

using namespace nimlab;

TEST_CASE("nim sum") {
    CHECK(nim_sum({3, 5}) == 6);
    CHECK(nim_sum({3, 6}) == 5);
    CHECK(nim_sum({5, 6}) == 3);
    CHECK(nim_sum({3, 5, 6}) == 0);
    CHECK(nim_sum({}) == 0);
    for (int a : {0, 1, 7, 12, 255}) CHECK(nim_sum({a, a}) == 0);
}

TEST_CASE("moore sum") {
    CHECK(moore_sum(Position(0, {3, 5, 6}), 1).is_zero());
    CHECK(moore_sum(Position(0, {1, 1, 1}), 2).is_zero());
    CHECK_FALSE(moore_sum(Position(0, {1, 1, 0}), 2).is_zero());
    CHECK(moore_sum(Position(0, {1, 1, 0}), 2).digits[0] == 2);
    CHECK_THROWS_AS(moore_sum(Position(0, {1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("moore P-positions are exactly the zeros of the moore sum") {
    GameRules rules = GameRules::moore_nim(4, 2);
    std::map<std::vector<int>, int> memo;
    testutil::for_each_box({0, 4, 4, 4, 4}, [&](const std::vector<int>& comps) {
        bool sg_zero = testutil::oracle_sg(rules, comps, memo) == 0;
        Position pos = testutil::to_position(comps);
        CHECK(sg_zero == moore_sum(pos, 2).is_zero());
    });
}

TEST_CASE("derived parameters") {
    SgParams a = sg_params(Position(0, {1, 1, 1}));
    CHECK(a.m == 1);
    CHECK(a.u == 3);
    CHECK(a.y == 0);
    CHECK(a.z == 1);
    CHECK(a.kind == PositionKind::TypeII);

    SgParams b = sg_params(Position(1, {2, 3, 4}));
    CHECK(b.m == 2);
    CHECK(b.u == 10);
    CHECK(b.y == 4);
    CHECK(b.z == 11);
    CHECK(b.kind == PositionKind::TypeI);

    SgParams c = sg_params(Position(0, {5, 5, 6}));
    CHECK(c.m == 5);
    CHECK(c.u == 16);
    CHECK(c.y == 1);
    CHECK(c.z == 2);
    CHECK(c.kind == PositionKind::TypeII);
}

TEST_CASE("closed form values") {
    CHECK(g_closed(Position(0, {1, 1, 1})) == 0);
    CHECK(g_closed(Position(0, {5, 5, 6})) == 2);
    CHECK(g_closed(Position(1, {1, 1, 1})) == 4);
    CHECK_THROWS_AS(g_closed(Position(1, {2, 3})), std::domain_error);
}

TEST_CASE("closed form equals the oracle over small boxes") {
    std::map<std::vector<int>, int> memo;
    GameRules exco3 = GameRules::exco_nim(3);
    testutil::for_each_box({2, 3, 3, 3}, [&](const std::vector<int>& comps) {
        CHECK(g_closed(testutil::to_position(comps)) == testutil::oracle_sg(exco3, comps, memo));
    });
}

TEST_CASE("bounds") {
    CHECK(sg_bounds(Position(1, {5, 6}), nim_sum({5, 6})) ==
          std::pair<long long, long long>{4, 12});
    CHECK(sg_bounds(Position(0, {1, 2}), nim_sum({1, 2})) ==
          std::pair<long long, long long>{3, 3});
    CHECK(sg_bounds(Position(5, {0, 0}), 0) == std::pair<long long, long long>{5, 5});
}

TEST_CASE("reachable pair characterization") {
    Position a(0, {1, 1, 1});
    CHECK(reachable_mu(a, 0, 1));
    CHECK(reachable_mu(a, 0, 2));
    CHECK_FALSE(reachable_mu(a, 1, 1));
    CHECK_FALSE(reachable_mu(a, 1, 2));

    Position b(0, {0, 0, 0});
    for (int m = 0; m <= 2; ++m) {
        for (long long u = 0; u <= 3; ++u) CHECK_FALSE(reachable_mu(b, m, u));
    }

    // reducing only x0 from (1,2,2,2) reaches the pair (2,6); (2,7) would
    // need a move that removes nothing
    Position c(1, {2, 2, 2});
    CHECK(reachable_mu(c, 2, 6));
    CHECK_FALSE(reachable_mu(c, 2, 7));

    CHECK_THROWS_AS(reachable_mu(Position(0, {1, 1}), 0, 1), std::domain_error);
}

TEST_CASE("reachable pairs match move enumeration exactly") {
    GameRules exco3 = GameRules::exco_nim(3);
    testutil::for_each_box({2, 3, 3, 3}, [&](const std::vector<int>& comps) {
        Position pos = testutil::to_position(comps);
        std::set<std::pair<int, long long>> seen;
        for (const Position& dest : legal_moves(exco3, pos)) {
            seen.insert({dest.min_pile(), dest.total()});
        }
        for (int m = 0; m <= 4; ++m) {
            for (long long u = 0; u <= 12; ++u) {
                CHECK(reachable_mu(pos, m, u) == (seen.count({m, u}) != 0));
            }
        }
    });
}

TEST_CASE("triangular decomposition") {
    CHECK(eta_rho(0).eta == 0);
    CHECK(eta_rho(0).rho == 0);
    CHECK(eta_rho(4).eta == 2);
    CHECK(eta_rho(4).rho == 1);
    CHECK(eta_rho(9).eta == 3);
    CHECK(eta_rho(9).rho == 3);

    // the intervals [z(y)-1, z(y)+y-1] tile the nonnegative integers
    long long prev_eta = 0;
    for (long long v = 0; v <= 10000; ++v) {
        EtaRho r = eta_rho(v);
        CHECK(r.eta * (r.eta + 1) / 2 + r.rho == v);
        CHECK(r.rho >= 0);
        CHECK(r.rho <= r.eta);
        CHECK(r.eta >= prev_eta);  // nondecreasing in v
        prev_eta = r.eta;
    }
}

TEST_CASE("no move keeps the closed-form value; all lower values are reachable") {
    GameRules exco3 = GameRules::exco_nim(3);
    testutil::for_each_box({2, 3, 3, 3}, [&](const std::vector<int>& comps) {
        Position pos = testutil::to_position(comps);
        long long g = g_closed(pos);
        std::set<long long> reached;
        for (const Position& dest : legal_moves(exco3, pos)) {
            long long gd = g_closed(dest);
            CHECK(gd != g);
            reached.insert(gd);
        }
        for (long long v = 0; v < g; ++v) CHECK(reached.count(v) == 1);
    });
}

TEST_CASE("type II positions satisfy g < m < u") {
    testutil::for_each_box({3, 4, 4, 4}, [&](const std::vector<int>& comps) {
        Position pos = testutil::to_position(comps);
        SgParams p = sg_params(pos);
        if (p.kind != PositionKind::TypeII) return;
        long long g = g_closed(pos);
        CHECK(g < p.m);
        CHECK(p.m < p.u);
    });
}

TEST_CASE("constructed moves: pinned examples") {
    CHECK(construct_move(Position(1, {1, 1, 1}), 3) == Position(1, {0, 1, 1}));
    CHECK(construct_move(Position(1, {1, 1, 1}), 0) == Position(0, {1, 1, 1}));

    Position t2(0, {5, 5, 6});  // type II, value 2
    Position dest = construct_move(t2, 1);
    CHECK(is_legal_move(GameRules::exco_nim(3), t2, dest));
    CHECK(g_closed(dest) == 1);

    CHECK_THROWS_AS(construct_move(Position(1, {1, 1, 1}), 4), std::domain_error);
    CHECK_THROWS_AS(construct_move(Position(1, {1, 1}), 0), std::domain_error);
}

TEST_CASE("constructed moves are legal and exact for every value below g") {
    GameRules exco3 = GameRules::exco_nim(3);
    testutil::for_each_box({3, 3, 3, 3}, [&](const std::vector<int>& comps) {
        Position pos = testutil::to_position(comps);
        long long g = g_closed(pos);
        for (long long v = 0; v < g; ++v) {
            Position dest = construct_move(pos, v);
            CHECK(is_legal_move(exco3, pos, dest));
            CHECK(g_closed(dest) == v);
        }
    });
}

TEST_CASE("constructed moves over an asymmetric box and n=5") {
    // uneven pile spreads push the prefix-sum index cases around
    GameRules exco3 = GameRules::exco_nim(3);
    testutil::for_each_box({6, 4, 6, 9}, [&](const std::vector<int>& comps) {
        Position pos = testutil::to_position(comps);
        for (long long v = 0; v < g_closed(pos); ++v) {
            Position dest = construct_move(pos, v);
            CHECK(is_legal_move(exco3, pos, dest));
            CHECK(g_closed(dest) == v);
        }
    });

    GameRules exco5 = GameRules::exco_nim(5);
    testutil::for_each_box({2, 2, 2, 2, 2, 2}, [&](const std::vector<int>& comps) {
        Position pos = testutil::to_position(comps);
        for (long long v = 0; v < g_closed(pos); ++v) {
            Position dest = construct_move(pos, v);
            CHECK(is_legal_move(exco5, pos, dest));
            CHECK(g_closed(dest) == v);
        }
    });
}

TEST_CASE("constructed moves handle unsorted piles and n=4") {
    GameRules exco3 = GameRules::exco_nim(3);
    Position scrambled(2, {4, 1, 3});
    for (long long v = 0; v < g_closed(scrambled); ++v) {
        Position dest = construct_move(scrambled, v);
        CHECK(is_legal_move(exco3, scrambled, dest));
        CHECK(g_closed(dest) == v);
    }

    GameRules exco4 = GameRules::exco_nim(4);
    testutil::for_each_box({2, 2, 2, 2, 2}, [&](const std::vector<int>& comps) {
        Position pos = testutil::to_position(comps);
        for (long long v = 0; v < g_closed(pos); ++v) {
            Position dest = construct_move(pos, v);
            CHECK(is_legal_move(exco4, pos, dest));
            CHECK(g_closed(dest) == v);
        }
    });
}
