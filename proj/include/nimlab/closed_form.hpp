#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nimlab/game.hpp"

namespace nimlab {

// Bitwise XOR of all values; 0 for an empty sequence.
long long nim_sum(std::span<const int> values);
inline long long nim_sum(std::initializer_list<int> values) {
    return nim_sum(std::span<const int>(values.begin(), values.size()));
}

// Per-bit pile sums modulo k+1. Zero exactly on the P-positions of
// MooreNim(n, k).
struct MooreSum {
    int k = 1;
    std::vector<int> digits;  // digit j = (sum over piles of bit j) mod (k+1)
    bool is_zero() const;
};

MooreSum moore_sum(const Position& pos, int k);  // requires 1 <= k < n

enum class PositionKind { TypeI, TypeII };

// Derived quantities of an ExcoNim position:
//   m = min main pile, u = total tokens, y = u - n*m, z = y(y+1)/2 + 1,
//   TypeI iff m < z.
struct SgParams {
    int m = 0;
    long long u = 0;
    long long y = 0;
    long long z = 1;
    PositionKind kind = PositionKind::TypeI;
};

SgParams sg_params(const Position& pos);

// Closed-form Grundy value of an ExcoNim position, n >= 3:
// u if m < z, else (z-1) + ((m-z) mod (y+1)).
long long g_closed(const Position& pos);

// (x0 + sg0, x0 + x1 + ... + xn) where sg0 = G(0, x1..xn) supplied by the
// caller (nim_sum of the piles for n=2, g_closed at x0=0 for n>=3).
std::pair<long long, long long> sg_bounds(const Position& pos, long long sg0);

// Whether some one-move destination x' of pos has min pile m and total u.
// The pair set depends on pos only through m(pos) and u(pos). n >= 3.
bool reachable_mu(const Position& pos, int m, long long u);

// Unique decomposition v = eta(eta+1)/2 + rho with 0 <= rho <= eta. The
// intervals [y(y+1)/2, y(y+1)/2 + y] tile the nonnegative integers, so every
// v lands in exactly one of them.
struct EtaRho {
    long long v = 0;
    long long eta = 0;
    long long rho = 0;
};

EtaRho eta_rho(long long v);

// Builds, without search, a legal ExcoNim move from pos to a destination of
// Grundy value exactly v (v < g_closed(pos), n >= 3). The construction is a
// case analysis over the target range; the result is re-validated and a
// std::logic_error signals any internal inconsistency.
Position construct_move(const Position& pos, long long v);

}  // namespace nimlab
