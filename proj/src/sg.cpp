#include "nimlab/sg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nimlab {

namespace {

// mex over a gathered value list; mark array is generation-stamped so it is
// reused without clearing. mex of d values is at most d.
class MexScratch {
public:
    int mex_of(const std::vector<int>& vals) {
        const std::size_t d = vals.size();
        if (stamp_.size() < d + 1) stamp_.resize(d + 1, 0);
        ++gen_;
        for (int v : vals) {
            if (v >= 0 && static_cast<std::size_t>(v) <= d) stamp_[v] = gen_;
        }
        for (std::size_t i = 0; i <= d; ++i) {
            if (stamp_[i] != gen_) return static_cast<int>(i);
        }
        return static_cast<int>(d + 1);  // unreachable
    }

private:
    std::vector<std::uint64_t> stamp_;
    std::uint64_t gen_ = 0;
};

// Iterates every tuple componentwise below hi (inclusive), lexicographically.
template <class F>
void for_each_tuple_below(std::span<const int> hi, F&& f) {
    std::vector<int> t(hi.size(), 0);
    for (;;) {
        f(std::span<const int>(t));
        int i = static_cast<int>(t.size()) - 1;
        while (i >= 0 && t[i] == hi[i]) {
            t[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++t[i];
    }
}

std::vector<int> components_of(const Position& pos) {
    std::vector<int> c(static_cast<std::size_t>(pos.n()) + 1);
    c[0] = pos.x0;
    std::copy(pos.piles.begin(), pos.piles.end(), c.begin() + 1);
    return c;
}

Position position_of(std::span<const int> comps) {
    return Position(comps[0], std::vector<int>(comps.begin() + 1, comps.end()));
}

}  // namespace

int mex(const std::vector<int>& values) {
    MexScratch scratch;
    return scratch.mex_of(values);
}

SgTable::SgTable(GameRules rules, std::vector<int> box, long long max_cells)
    : rules_(std::move(rules)), box_(std::move(box)) {
    if (box_.size() != static_cast<std::size_t>(rules_.n) + 1) {
        throw std::invalid_argument("box must have n+1 components");
    }
    for (int b : box_) {
        if (b < 0) throw std::invalid_argument("negative box bound");
    }
    if (!rules_.has_extra_pile() && box_[0] != 0) {
        throw std::invalid_argument("x0 bound must be 0 for " + rules_.name());
    }
    for (std::size_t i = 2; i < box_.size(); ++i) {
        if (box_[i] < box_[i - 1]) {
            throw std::invalid_argument("pile bounds must be nondecreasing");
        }
    }
    strides_.assign(box_.size(), 1);
    long long cells = 1;
    for (int i = static_cast<int>(box_.size()) - 1; i >= 0; --i) {
        strides_[i] = cells;
        long long dim = static_cast<long long>(box_[i]) + 1;
        if (cells > std::numeric_limits<long long>::max() / dim || cells * dim > max_cells) {
            throw resource_limit_error("table memory limit of " + std::to_string(max_cells) +
                                       " cells exceeded");
        }
        cells *= dim;
    }
    vals_.assign(static_cast<std::size_t>(cells), -1);
}

long long SgTable::index_of(std::span<const int> canonical) const {
    long long idx = 0;
    for (std::size_t i = 0; i < box_.size(); ++i) idx += strides_[i] * canonical[i];
    return idx;
}

bool SgTable::in_box(const Position& pos) const {
    if (pos.n() != rules_.n || pos.x0 < 0 || pos.x0 > box_[0]) return false;
    std::vector<int> sorted = pos.piles;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] > box_[i + 1]) return false;
    }
    return true;
}

bool SgTable::has(const Position& pos) const {
    if (!in_box(pos)) return false;
    return vals_[index_of(components_of(pos.canonical()))] >= 0;
}

int SgTable::at(const Position& pos) const {
    if (!in_box(pos)) {
        throw std::out_of_range("position outside table box");
    }
    std::int32_t v = vals_[index_of(components_of(pos.canonical()))];
    if (v < 0) throw std::logic_error("table cell not computed");
    return v;
}

int SgTable::at_components(std::span<const int> comps) const {
    std::vector<int> c(comps.begin(), comps.end());
    std::sort(c.begin() + 1, c.end());
    std::int32_t v = vals_[index_of(c)];
    if (v < 0) throw std::logic_error("table cell not computed");
    return v;
}

void SgTable::set_components(std::span<const int> canonical, int value) {
    vals_[index_of(canonical)] = value;
}

long long SgTable::canonical_cell_count() const {
    long long count = 0;
    for_each_canonical([&](std::span<const int>, std::int32_t) { ++count; });
    return count;
}

bool SgTable::operator==(const SgTable& other) const {
    return rules_ == other.rules_ && box_ == other.box_ && vals_ == other.vals_;
}

// ---------------------------------------------------------------------------
// brute force with memo

int sg_bruteforce(const GameRules& rules, const Position& pos, SgTable& memo,
                  const BuildLimits& limits) {
    validate(rules, pos);
    if (memo.rules() != rules) throw std::invalid_argument("memo built for different rules");
    if (!memo.in_box(pos)) {
        throw std::invalid_argument("position outside the memo box");
    }

    struct Frame {
        std::vector<int> comps;  // canonical
        bool expanded = false;
    };

    MexScratch scratch;
    std::vector<int> child_vals;
    long long visits = 0;

    auto canonical_comps = [](std::span<const int> t) {
        std::vector<int> c(t.begin(), t.end());
        std::sort(c.begin() + 1, c.end());
        return c;
    };

    std::vector<Frame> stack;
    stack.push_back({components_of(pos.canonical()), false});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        const std::int32_t* cell = memo.data() + memo.index_of(fr.comps);
        if (*cell >= 0) {
            stack.pop_back();
            continue;
        }
        if (!fr.expanded) {
            fr.expanded = true;
            if (++visits > limits.max_visits) {
                throw resource_limit_error("position-visit limit of " +
                                           std::to_string(limits.max_visits) + " exceeded");
            }
            std::vector<int> from = fr.comps;  // fr may be invalidated by push_back
            for_each_tuple_below(from, [&](std::span<const int> t) {
                if (!legal_components(rules, from, t)) return;
                std::vector<int> c = canonical_comps(t);
                if (memo.data()[memo.index_of(c)] < 0) {
                    stack.push_back({std::move(c), false});
                }
            });
        } else {
            child_vals.clear();
            for_each_tuple_below(fr.comps, [&](std::span<const int> t) {
                if (!legal_components(rules, fr.comps, t)) return;
                child_vals.push_back(memo.data()[memo.index_of(canonical_comps(t))]);
            });
            memo.set_components(fr.comps, scratch.mex_of(child_vals));
            stack.pop_back();
        }
    }
    return memo.at(pos);
}

// ---------------------------------------------------------------------------
// dense builders

SgTable build_table(const GameRules& rules, const std::vector<int>& box,
                    const BuildLimits& limits) {
    SgTable table(rules, box, limits.max_cells);
    MexScratch scratch;
    std::vector<int> vals;
    std::vector<int> canon(box.size());
    table.for_each_canonical([&](std::span<const int> cell, std::int32_t) {
        vals.clear();
        for_each_tuple_below(cell, [&](std::span<const int> t) {
            if (!legal_components(rules, cell, t)) return;
            std::copy(t.begin(), t.end(), canon.begin());
            std::sort(canon.begin() + 1, canon.end());
            vals.push_back(table.data()[table.index_of(canon)]);
        });
        table.set_components(cell, scratch.mex_of(vals));
    });
    return table;
}

namespace {

void check_n2_box(int x0max, int x1max, int x2max) {
    if (x0max < 0 || x1max < 0 || x2max < 0) throw std::invalid_argument("negative box bound");
    if (x1max > x2max) throw std::invalid_argument("n=2 box needs x1max <= x2max");
}

}  // namespace

SgTable sg_table_n2(int x0max, int x1max, int x2max, const BuildLimits& limits) {
    check_n2_box(x0max, x1max, x2max);
    SgTable table(GameRules::exco_nim(2), {x0max, x1max, x2max}, limits.max_cells);
    std::int32_t* v = table.data();
    const long long s0 = (x1max + 1LL) * (x2max + 1);
    const long long s1 = x2max + 1;
    auto idx = [&](int a, int b, int c) { return a * s0 + b * s1 + c; };
    auto val = [&](int a, int b, int c) { return b <= c ? v[idx(a, b, c)] : v[idx(a, c, b)]; };

    // reachable-value presence counters survive the whole x0 sweep of a
    // (x1, x2) cell column; the mex pointer only ever moves up
    std::vector<std::uint32_t> cnt(static_cast<std::size_t>(x0max) + x1max + x2max + 3);
    for (int x2 = 0; x2 <= x2max; ++x2) {
        for (int x1 = 0; x1 <= std::min(x1max, x2); ++x1) {
            std::fill(cnt.begin(), cnt.begin() + (x0max + x1 + x2 + 2), 0u);
            int m = 0;
            for (int x0 = 0; x0 <= x0max; ++x0) {
                if (x0 == 0) {
                    for (int b = 0; b < x1; ++b) ++cnt[val(0, b, x2)];
                    for (int c = 0; c < x2; ++c) ++cnt[val(0, x1, c)];
                } else {
                    ++cnt[v[idx(x0 - 1, x1, x2)]];  // the cell just below in x0
                    for (int b = 0; b < x1; ++b) ++cnt[val(x0, b, x2)];
                    for (int c = 0; c < x2; ++c) ++cnt[val(x0, x1, c)];
                }
                while (cnt[m] != 0) ++m;
                v[idx(x0, x1, x2)] = m;
            }
        }
    }
    return table;
}

SgTable sg_table_n2_parallel(int x0max, int x1max, int x2max, const BuildLimits& limits) {
    check_n2_box(x0max, x1max, x2max);
    SgTable table(GameRules::exco_nim(2), {x0max, x1max, x2max}, limits.max_cells);
    std::int32_t* v = table.data();
    const long long s0 = (x1max + 1LL) * (x2max + 1);
    const long long s1 = x2max + 1;
    auto idx = [&](int a, int b, int c) { return a * s0 + b * s1 + c; };
    auto val = [&](int a, int b, int c) { return b <= c ? v[idx(a, b, c)] : v[idx(a, c, b)]; };

    // A column is the full x0 sweep of one (x1, x2) cell. It reads columns
    // (b, x2) with b < x1 and (x1, c) with c < x2 only, so the columns of one
    // antidiagonal x1 + x2 = d are independent and run in parallel; the
    // inner sweep is the same presence-counter recurrence as the serial
    // builder, which keeps total work identical for any thread count.
#pragma omp parallel
    {
        std::vector<std::uint32_t> cnt(static_cast<std::size_t>(x0max) + x1max + x2max + 3);
        for (int d = 0; d <= x1max + x2max; ++d) {
            const int lo = std::max(0, d - x2max);
            const int hi = std::min(x1max, d / 2);
#pragma omp for schedule(dynamic, 1)
            for (int x1 = lo; x1 <= hi; ++x1) {
                const int x2 = d - x1;
                std::fill(cnt.begin(), cnt.begin() + (x0max + x1 + x2 + 2), 0u);
                int m = 0;
                for (int x0 = 0; x0 <= x0max; ++x0) {
                    if (x0 == 0) {
                        for (int b = 0; b < x1; ++b) ++cnt[val(0, b, x2)];
                        for (int c = 0; c < x2; ++c) ++cnt[val(0, x1, c)];
                    } else {
                        ++cnt[v[idx(x0 - 1, x1, x2)]];
                        for (int b = 0; b < x1; ++b) ++cnt[val(x0, b, x2)];
                        for (int c = 0; c < x2; ++c) ++cnt[val(x0, x1, c)];
                    }
                    while (cnt[m] != 0) ++m;
                    v[idx(x0, x1, x2)] = m;
                }
            }  // implicit barrier: next diagonal reads this one
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// move search

std::optional<Move> best_move(const GameRules& rules, const Position& pos, SgTable& memo,
                              const BuildLimits& limits) {
    for (Position& dest : legal_moves(rules, pos)) {
        if (sg_bruteforce(rules, dest, memo, limits) == 0) {
            return Move{pos, std::move(dest)};
        }
    }
    return std::nullopt;
}

Move move_to_value(const GameRules& rules, const Position& pos, int v, SgTable& memo,
                   const BuildLimits& limits) {
    int g = sg_bruteforce(rules, pos, memo, limits);
    if (v >= g) throw std::domain_error("value not realizable");
    for (Position& dest : legal_moves(rules, pos)) {
        if (sg_bruteforce(rules, dest, memo, limits) == v) {
            return Move{pos, std::move(dest)};
        }
    }
    throw std::logic_error("no move reaches the requested value");  // contradicts mex
}

// ---------------------------------------------------------------------------
// axiom suite

AxiomReport verify_sg_axioms(const GameRules& rules, const std::vector<int>& box,
                             const BuildLimits& limits) {
    SgTable table = build_table(rules, box, limits);
    AxiomReport report;

    // independent P-position set: a position is P iff every move leaves it
    std::vector<char> is_p(static_cast<std::size_t>(table.cell_count()), 0);
    std::vector<char> seen;
    table.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
        ++report.positions_checked;
        Position pos = position_of(cell);
        std::vector<Position> dests = legal_moves(rules, pos);
        report.moves_checked += static_cast<long long>(dests.size());

        bool any_p_dest = false;
        seen.assign(static_cast<std::size_t>(value) + 1, 0);
        for (const Position& d : dests) {
            int gd = table.at(d);
            if (gd == value) {
                report.violations.push_back({'a', pos, d, gd});
            }
            if (gd < value) seen[gd] = 1;
            if (is_p[table.index_of(components_of(d.canonical()))]) any_p_dest = true;
        }
        for (int w = 0; w < value; ++w) {
            if (!seen[w]) report.violations.push_back({'b', pos, pos, w});
        }
        bool p = !any_p_dest;  // terminals have no moves, hence P
        is_p[table.index_of(cell)] = p ? 1 : 0;
        if (p != (value == 0)) {
            report.violations.push_back({'c', pos, pos, value});
        }
    });
    return report;
}

bool check_self_consistency(const SgTable& table) {
    const GameRules& rules = table.rules();
    MexScratch scratch;
    std::vector<int> vals;
    std::vector<int> canon(table.box().size());
    bool ok = true;
    table.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
        if (!ok) return;
        vals.clear();
        for_each_tuple_below(cell, [&](std::span<const int> t) {
            if (!legal_components(rules, cell, t)) return;
            std::copy(t.begin(), t.end(), canon.begin());
            std::sort(canon.begin() + 1, canon.end());
            vals.push_back(table.data()[table.index_of(canon)]);
        });
        if (value < 0 || scratch.mex_of(vals) != value) ok = false;
    });
    return ok;
}

}  // namespace nimlab
