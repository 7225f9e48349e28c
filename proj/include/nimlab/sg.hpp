#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "nimlab/errors.hpp"
#include "nimlab/game.hpp"

namespace nimlab {

// Smallest nonnegative integer absent from the set (duplicates allowed).
int mex(const std::vector<int>& values);

struct BuildLimits {
    long long max_visits = 100'000'000;  // positions a brute-force recursion may touch
    long long max_cells = 100'000'000;   // dense table size cap
};

// Dense Grundy-value table over a componentwise box. Entries are keyed on
// canonical positions (main piles sorted ascending); queries on raw positions
// canonicalize first. box[0] bounds x0, box[1..n] bound the sorted piles and
// must be nondecreasing.
class SgTable {
public:
    SgTable(GameRules rules, std::vector<int> box,
            long long max_cells = BuildLimits{}.max_cells);

    const GameRules& rules() const { return rules_; }
    const std::vector<int>& box() const { return box_; }
    int n() const { return rules_.n; }

    bool in_box(const Position& pos) const;
    bool has(const Position& pos) const;  // in box and computed
    // Grundy value; throws std::out_of_range outside the box and
    // std::logic_error on a cell that was never computed.
    int at(const Position& pos) const;
    int at_components(std::span<const int> comps) const;  // comps[0] = x0

    void set_components(std::span<const int> canonical, int value);

    long long cell_count() const { return static_cast<long long>(vals_.size()); }
    long long canonical_cell_count() const;

    // Visits canonical cells in lexicographic order of (x0, x1, .., xn).
    // f(components, value) with value -1 when uncomputed.
    template <class F>
    void for_each_canonical(F&& f) const {
        std::vector<int> c(box_.size(), 0);
        const int n = rules_.n;
        for (;;) {
            f(std::span<const int>(c), vals_[index_of(c)]);
            // successor: bump the last growable component, reset the tail to
            // its smallest nondecreasing continuation
            int i = n;
            while (i >= 0 && c[i] >= box_[i]) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j <= n; ++j) c[j] = (j >= 2) ? c[j - 1] : 0;
        }
    }

    std::int32_t* data() { return vals_.data(); }
    const std::int32_t* data() const { return vals_.data(); }
    long long index_of(std::span<const int> canonical) const;

    bool operator==(const SgTable& other) const;

private:
    GameRules rules_;
    std::vector<int> box_;
    std::vector<long long> strides_;
    std::vector<std::int32_t> vals_;
};

// Exact Grundy value of pos by memoized mex recursion; works for every
// variant. The memo must be an SgTable for the same rules whose box contains
// pos; all visited positions are entered into it, repeated calls are
// idempotent. Throws resource_limit_error past limits.max_visits visits.
int sg_bruteforce(const GameRules& rules, const Position& pos, SgTable& memo,
                  const BuildLimits& limits = {});

// Complete table over the box, serial reference implementation (per-cell
// enumeration of the move set). Any variant.
SgTable build_table(const GameRules& rules, const std::vector<int>& box,
                    const BuildLimits& limits = {});

// Optimized serial ExcoNim n=2 builder: reachable-value presence counters
// are carried across the x0 loop instead of rebuilt per cell.
SgTable sg_table_n2(int x0max, int x1max, int x2max, const BuildLimits& limits = {});

// OpenMP builder: cells of equal total token count form an antichain of the
// componentwise order and are evaluated in parallel, level by level. Output
// is identical to the serial builders for any thread count.
SgTable sg_table_n2_parallel(int x0max, int x1max, int x2max,
                             const BuildLimits& limits = {});

// First legal move (in enumeration order) to a Grundy-0 destination, or
// nullopt when pos itself has value 0.
std::optional<Move> best_move(const GameRules& rules, const Position& pos, SgTable& memo,
                              const BuildLimits& limits = {});

// A legal move whose destination has Grundy value exactly v; requires
// v < G(pos), else throws std::domain_error("value not realizable").
Move move_to_value(const GameRules& rules, const Position& pos, int v, SgTable& memo,
                   const BuildLimits& limits = {});

struct AxiomViolation {
    char axiom;  // 'a': move kept the value, 'b': value below G unreachable, 'c': zero/P mismatch
    Position pos;
    Position dest;  // meaningful for 'a'
    int detail = 0; // the unreachable value for 'b'
};

struct AxiomReport {
    long long positions_checked = 0;
    long long moves_checked = 0;
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks over every position of the box: (a) no move keeps the Grundy value,
// (b) every value below it is reached by some move, (c) zeros coincide with
// the independently computed P-position set.
AxiomReport verify_sg_axioms(const GameRules& rules, const std::vector<int>& box,
                             const BuildLimits& limits = {});

// Recomputes every cell's mex from its destinations and compares.
bool check_self_consistency(const SgTable& table);

// Text cache, one header line then one line per canonical cell in
// lexicographic order: "x0 x1 .. xn g".
void save_cache(const SgTable& table, std::ostream& out);
void save_cache(const SgTable& table, const std::filesystem::path& path);
SgTable load_cache(std::istream& in);
SgTable load_cache(const std::filesystem::path& path);
// As load_cache but throws cache_variant_error unless the stored rules match.
SgTable load_cache_expect(std::istream& in, const GameRules& expected);
SgTable load_cache_expect(const std::filesystem::path& path, const GameRules& expected);

}  // namespace nimlab
