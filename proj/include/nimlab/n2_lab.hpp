#pragma once

#include <string>
#include <vector>

#include "nimlab/game.hpp"
#include "nimlab/sg.hpp"

namespace nimlab {

// Unique k with 2^(k-1) <= v < 2^k. Undefined at v = 0; callers must
// special-case it (throws std::domain_error).
int k_of(long long v);

// (x0, x1 + lam*2^k, x2 + lam*2^k); lam may be negative, components must stay
// nonnegative. n = 2 only.
Position shift_pos(const Position& pos, int k, long long lam);

// Result of the bounded query: either the exact Grundy value or a certified
// lower bound strictly above the query threshold.
struct SgAnswer {
    bool exact = true;
    long long value = 0;

    static SgAnswer exact_value(long long w) { return {true, w}; }
    static SgAnswer at_least(long long b) { return {false, b}; }
    bool operator==(const SgAnswer&) const = default;
};

// Decides G(pos) <= v in O(v^3) table cells: reduces pos by multiples of
// (0, 2^k, 2^k), evaluates the small remainder box exactly, and either lifts
// the exact value back or certifies G > v. ExcoNim n=2.
SgAnswer sg_bounded(const Position& pos, long long v, const BuildLimits& limits = {});

// All positions of value v inside the box x0 <= v, x1 < 2^(k(v)-1),
// x2 < 2^k(v). Every value-v position is one of these shifted by a multiple
// of (0, 2^k, 2^k).
struct CoreSet {
    long long v = 0;
    int k = 1;
    std::vector<Position> members;
};

CoreSet core_enumerate(long long v, const SgTable& oracle);

// Gap u(pos) - G(pos) between the token-count upper bound and the true value.
long long delta_u(const Position& pos, const SgTable& table);

// 1 iff (c mod a) >= b; requires a >= 1. Always 0 when b >= a.
int f_indicator(long long a, long long b, long long c);

// Predicted Grundy value when x1 is an exact power of two and x2 >= x1:
// u - 2*x1*f(2*x1, x0+x1, x0+x2), which is the lower bound x0 + (x1 XOR x2)
// inside the predicted window and u outside it.
long long conj1_predict(const Position& pos);

// Periodic tail of the gap u - G along one (x0, x1) row. pattern[j] is the
// gap at x2 = j - 1 (mod 2^k); the invariant is
// gap(x2) == pattern[(x2+1) mod 2^k] for threshold < x2 <= verified_to.
// confirmed requires at least three full matching periods beyond threshold.
struct PeriodicityReport {
    int x0 = 0;
    int x1 = 0;
    int k = 0;
    long long threshold = -1;
    std::vector<long long> pattern;
    long long verified_to = -1;
    bool confirmed = false;
};

PeriodicityReport periodicity_detect(int x0, int x1, int k, const SgTable& table);

enum class ConjectureId { C1, C2, C3, C4, C5, P4, SHIFT, T3 };

std::string conjecture_name(ConjectureId id);

struct SweepRanges {
    int x0_lo = 0, x0_hi = 0;
    int x1_lo = 0, x1_hi = 0;
    std::vector<int> x1_values;  // when nonempty, overrides x1_lo..x1_hi
    int x2_max = 0;
    int k = -1;  // SHIFT only
};

struct Counterexample {
    Position pos;
    long long expected = 0;
    long long actual = 0;
};

struct ThresholdEntry {
    int x0 = 0;
    int x1 = 0;
    long long threshold = -1;  // largest x2 with gap > 0, or periodic-tail start
    long long x2_max = 0;      // sweep ceiling the threshold is relative to
    int period_k = -1;         // set for periodic rows
    std::vector<long long> pattern;
    bool confirmed = true;
};

struct ConjectureReport {
    ConjectureId id = ConjectureId::C1;
    std::string params;
    std::string range;
    long long checked = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<ThresholdEntry> thresholds;
    bool supported() const { return counterexamples.empty(); }
};

// Sweeps the table and compares each in-scope position against the
// prediction of the selected statement. Proven statements (P4, SHIFT, T3)
// must come back with zero counterexamples; a violation there is an engine
// bug, not new mathematics.
ConjectureReport check_conjecture(ConjectureId id, const SweepRanges& ranges,
                                  const SgTable& table);

struct ShiftLemmaReport {
    int k = 0;
    long long positions_checked = 0;
    long long arithmetic_checked = 0;
    std::vector<Counterexample> violations;
    bool ok() const { return violations.empty(); }
};

// Over every position of the box: adding (0, 2^k, 2^k) preserves values
// below 2^k and keeps values >= 2^k at or above 2^k. Also exercises the XOR
// comparison fact for all (a, b) below 2^k.
ShiftLemmaReport verify_shift_lemma(const std::vector<int>& box, int k, const SgTable& table);

}  // namespace nimlab
