// Command-line front end: Grundy queries, winning moves, verification
// sweeps, machine-readable conjecture reports, CSV row dumps, cache
// management and an interactive play mode.
//
// Exit codes: 0 success/supported/pass, 1 refuted/P-position/violation,
// 2 usage error, 3 resource limit.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nimlab/closed_form.hpp"
#include "nimlab/game.hpp"
#include "nimlab/n2_lab.hpp"
#include "nimlab/sg.hpp"

using namespace nimlab;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Range {
    int lo = 0;
    int hi = 0;
};

// "N" or "A..B"; B < A is an empty range.
Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "'; expected N or A..B");
    }
    if (r.lo < 0 || r.hi < -1) {
        throw std::invalid_argument("bad range '" + text + "'; bounds must be nonnegative");
    }
    return r;
}

struct CommonArgs {
    std::string game = "exco";
    int n = -1;
    int k = -1;
    std::string pos;
    std::string format = "human";
    std::string cache;
    long long limit = BuildLimits{}.max_visits;
    std::string config_path_unused;  // handled before parsing; listed for --help

    void attach(CLI::App* cmd, bool with_pos = true) {
        cmd->add_option("--config", config_path_unused,
                        "flat key=value file mirroring these flags; flags win");
        cmd->add_option("--game", game, "game variant")
            ->check(CLI::IsMember({"nim", "moore", "conim", "exco"}))
            ->capture_default_str();
        cmd->add_option("--n", n, "number of main piles (inferred from --pos if omitted)");
        cmd->add_option("--k", k, "moore reduction bound (moore only)");
        if (with_pos) cmd->add_option("--pos", pos, "position, comma separated")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--cache", cache, "table cache file (loaded if present, else written)");
        cmd->add_option("--limit", limit, "position-visit and table-cell limit")
            ->capture_default_str();
    }

    BuildLimits limits() const {
        BuildLimits l;
        l.max_visits = limit;
        l.max_cells = limit;
        return l;
    }

    GameRules rules_for(int components) const {
        int piles = game == "exco" ? components - 1 : components;
        if (n >= 0 && n != piles) {
            throw std::invalid_argument("--n disagrees with the number of components in --pos");
        }
        if (game == "nim") return GameRules::standard_nim(piles);
        if (game == "moore") {
            if (k < 1) throw std::invalid_argument("moore needs --k");
            return GameRules::moore_nim(piles, k);
        }
        if (game == "conim") return GameRules::co_nim(piles);
        return GameRules::exco_nim(piles);
    }

    std::pair<GameRules, Position> rules_and_pos() const {
        int components = 1 + static_cast<int>(std::count(pos.begin(), pos.end(), ','));
        GameRules rules = rules_for(components);
        return {rules, parse_position(rules, pos)};
    }
};

// Loads the cache when it exists and covers the requested box, otherwise
// builds the table and writes the cache back (when a path was given).
SgTable obtain_n2_table(int x0max, int x1max, int x2max, const std::string& cache_path,
                        const BuildLimits& limits) {
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        SgTable cached = load_cache_expect(cache_path, GameRules::exco_nim(2));
        const std::vector<int>& b = cached.box();
        if (b[0] >= x0max && b[1] >= x1max && b[2] >= x2max) return cached;
    }
    SgTable table = sg_table_n2_parallel(x0max, x1max, x2max, limits);
    if (!cache_path.empty()) save_cache(table, cache_path);
    return table;
}

// ---------------------------------------------------------------------- sg

struct SgArgs {
    CommonArgs common;
    long long max_v = -1;
};

int run_sg(const SgArgs& args) {
    auto [rules, pos] = args.common.rules_and_pos();
    validate(rules, pos);

    if (args.max_v >= 0) {
        if (rules.variant != Variant::ExcoNim || rules.n != 2) {
            throw std::invalid_argument("--max applies to the exco game with two main piles");
        }
        SgAnswer ans = sg_bounded(pos, args.max_v, args.common.limits());
        if (ans.exact) {
            std::cout << ans.value << '\n';
        } else {
            std::cout << "> " << args.max_v << '\n';
        }
        return 0;
    }

    long long g = 0;
    switch (rules.variant) {
        case Variant::StandardNim:
            g = nim_sum(pos.piles);
            break;
        case Variant::CoNim:
            g = rules.n == 2 ? nim_sum(pos.piles) : g_closed(Position(0, pos.piles));
            break;
        case Variant::ExcoNim:
            if (rules.n >= 3) {
                g = g_closed(pos);
            } else {
                Position c = pos.canonical();
                SgTable t = obtain_n2_table(c.x0, c.piles[0], c.piles[1], args.common.cache,
                                            args.common.limits());
                g = t.at(pos);
            }
            break;
        case Variant::MooreNim: {
            std::vector<int> box(static_cast<std::size_t>(rules.n) + 1, 0);
            Position c = pos.canonical();
            for (int i = 0; i < rules.n; ++i) box[i + 1] = c.piles[i];
            SgTable memo(rules, box, args.common.limits().max_cells);
            g = sg_bruteforce(rules, pos, memo, args.common.limits());
            break;
        }
    }
    std::cout << g << '\n';
    return 0;
}

// -------------------------------------------------------------------- move

int run_move(const CommonArgs& common) {
    auto [rules, pos] = common.rules_and_pos();
    validate(rules, pos);

    std::optional<Move> mv;
    if (rules.variant == Variant::ExcoNim || rules.variant == Variant::CoNim) {
        mv = p_move(pos);
    } else {
        std::vector<int> box(static_cast<std::size_t>(rules.n) + 1, 0);
        box[0] = pos.x0;
        Position c = pos.canonical();
        for (int i = 0; i < rules.n; ++i) box[i + 1] = c.piles[i];
        SgTable memo(rules, box, common.limits().max_cells);
        mv = best_move(rules, pos, memo, common.limits());
    }
    if (!mv) {
        std::cout << "position is a P-position (no winning move)\n";
        return 1;
    }
    std::cout << format_position(rules, mv->from) << " -> " << format_position(rules, mv->to)
              << '\n';
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    CommonArgs common;
    std::string what;
    int max = -1;  // per-pile bound of the sweep box
    int x0max = -1;
    int x1max = -1;
    int x2max = -1;
    int shift_k = 2;
};

int finish_verify(const std::string& what, long long checked,
                  const std::vector<std::string>& violations) {
    std::printf("%s: %lld checks, %zu violations\n", what.c_str(), checked, violations.size());
    std::size_t shown = 0;
    for (const std::string& v : violations) {
        if (++shown > 10) {
            std::printf("  ... %zu more\n", violations.size() - 10);
            break;
        }
        std::printf("  %s\n", v.c_str());
    }
    std::printf("%s\n", violations.empty() ? "PASS" : "FAIL");
    return violations.empty() ? 0 : 1;
}

int run_verify(const VerifyArgs& args) {
    const BuildLimits limits = args.common.limits();
    GameRules exco2 = GameRules::exco_nim(2);
    std::vector<std::string> violations;
    long long checked = 0;

    if (args.what == "theorem1") {
        const int n = args.common.n < 0 ? 3 : args.common.n;
        const int m = args.max < 0 ? 6 : args.max;
        const int x0m = args.x0max < 0 ? m : args.x0max;
        GameRules rules = GameRules::exco_nim(n);
        std::vector<int> box(static_cast<std::size_t>(n) + 1, m);
        box[0] = x0m;
        SgTable table = build_table(rules, box, limits);
        table.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
            ++checked;
            Position pos(cell[0], std::vector<int>(cell.begin() + 1, cell.end()));
            long long cf = g_closed(pos);
            if (cf != value) {
                violations.push_back(format_position(rules, pos) + ": closed form " +
                                     std::to_string(cf) + ", table " + std::to_string(value));
            }
        });
        return finish_verify("closed form vs mex recursion", checked, violations);
    }

    if (args.what == "ppos") {
        const int n = args.common.n < 0 ? 2 : args.common.n;
        const int m = args.max < 0 ? 8 : args.max;
        GameRules rules = GameRules::exco_nim(n);
        std::vector<int> box(static_cast<std::size_t>(n) + 1, m);
        box[0] = args.x0max < 0 ? m : args.x0max;
        SgTable table = build_table(rules, box, limits);
        table.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
            ++checked;
            Position pos(cell[0], std::vector<int>(cell.begin() + 1, cell.end()));
            if ((value == 0) != is_p_position_exco(pos)) {
                violations.push_back(format_position(rules, pos) + ": value " +
                                     std::to_string(value));
            }
        });
        return finish_verify("zeros vs P-position characterization", checked, violations);
    }

    if (args.what == "moore") {
        const int n = args.common.n < 0 ? 4 : args.common.n;
        const int k = args.common.k < 0 ? 2 : args.common.k;
        const int m = args.max < 0 ? 6 : args.max;
        GameRules rules = GameRules::moore_nim(n, k);
        std::vector<int> box(static_cast<std::size_t>(n) + 1, m);
        box[0] = 0;
        SgTable table = build_table(rules, box, limits);
        table.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
            ++checked;
            Position pos(0, std::vector<int>(cell.begin() + 1, cell.end()));
            if ((value == 0) != moore_sum(pos, k).is_zero()) {
                violations.push_back(format_position(rules, pos) + ": value " +
                                     std::to_string(value));
            }
        });
        return finish_verify("zeros vs moore sum", checked, violations);
    }

    if (args.what == "axioms") {
        const int n = args.common.n < 0 ? 2 : args.common.n;
        GameRules rules = args.common.game == "nim" ? GameRules::standard_nim(n)
                          : args.common.game == "moore"
                              ? GameRules::moore_nim(n, args.common.k < 1 ? n - 1 : args.common.k)
                          : args.common.game == "conim" ? GameRules::co_nim(n)
                                                        : GameRules::exco_nim(n);
        const int m = args.max < 0 ? 6 : args.max;
        std::vector<int> box(static_cast<std::size_t>(n) + 1, m);
        box[0] = rules.has_extra_pile() ? (args.x0max < 0 ? 2 : args.x0max) : 0;
        AxiomReport rep = verify_sg_axioms(rules, box, limits);
        checked = rep.positions_checked;
        for (const AxiomViolation& v : rep.violations) {
            violations.push_back(std::string("axiom ") + v.axiom + " at " +
                                 format_position(rules, v.pos));
        }
        return finish_verify("mex axiom suite (" + rules.name() + ")", checked, violations);
    }

    if (args.what == "shift") {
        const int m = args.max < 0 ? 16 : args.max;
        const int x0m = args.x0max < 0 ? 3 : args.x0max;
        const int step = 1 << args.shift_k;
        SgTable table = sg_table_n2_parallel(x0m, m + step, m + step, limits);
        ShiftLemmaReport rep = verify_shift_lemma({x0m, m, m}, args.shift_k, table);
        checked = rep.positions_checked + rep.arithmetic_checked;
        for (const Counterexample& ce : rep.violations) {
            violations.push_back(format_position(exco2, ce.pos) + ": " +
                                 std::to_string(ce.expected) + " vs " +
                                 std::to_string(ce.actual));
        }
        return finish_verify("shift invariance, k=" + std::to_string(args.shift_k), checked,
                             violations);
    }

    if (args.what == "appendix") {
        const int n = args.common.n < 0 ? 3 : args.common.n;
        const int m = args.max < 0 ? 4 : args.max;
        GameRules rules = GameRules::exco_nim(n);
        std::vector<int> box(static_cast<std::size_t>(n) + 1, m);
        box[0] = args.x0max < 0 ? m : args.x0max;
        SgTable probe(rules, box, limits.max_cells);  // reused for its canonical walk
        probe.for_each_canonical([&](std::span<const int> cell, std::int32_t) {
            Position pos(cell[0], std::vector<int>(cell.begin() + 1, cell.end()));
            long long g = g_closed(pos);
            for (long long v = 0; v < g; ++v) {
                ++checked;
                try {
                    Position dest = construct_move(pos, v);
                    if (!is_legal_move(rules, pos, dest) || g_closed(dest) != v) {
                        violations.push_back(format_position(rules, pos) + " v=" +
                                             std::to_string(v));
                    }
                } catch (const std::logic_error& e) {
                    violations.push_back(format_position(rules, pos) + " v=" +
                                         std::to_string(v) + ": " + e.what());
                }
            }
        });
        return finish_verify("search-free move construction", checked, violations);
    }

    if (args.what == "prop4") {
        const int x0m = args.x0max < 0 ? 3 : args.x0max;
        const int x1m = args.x1max < 0 ? 16 : args.x1max;
        const int x2m = args.x2max < 0 ? 64 : args.x2max;
        SgTable table = obtain_n2_table(x0m, std::min(x1m, x2m), x2m, args.common.cache, limits);
        SweepRanges r;
        r.x0_hi = x0m;
        r.x1_hi = std::min(x1m, x2m);
        r.x2_max = x2m;
        ConjectureReport rep = check_conjecture(ConjectureId::P4, r, table);
        checked = rep.checked;
        for (const Counterexample& ce : rep.counterexamples) {
            violations.push_back(format_position(exco2, ce.pos) + ": expected " +
                                 std::to_string(ce.expected) + ", got " +
                                 std::to_string(ce.actual));
        }
        return finish_verify("proven upper-bound window", checked, violations);
    }

    throw std::invalid_argument("unknown verify target '" + args.what + "'");
}

// -------------------------------------------------------------- conjecture

struct ConjectureArgs {
    CommonArgs common;
    std::string id;
    std::string x0;
    std::string x1;
    std::string x1_pow2;
    int x2max = -1;
    int shift_k = 2;
};

ordered_json report_to_json(const ConjectureReport& rep) {
    GameRules exco2 = GameRules::exco_nim(2);
    ordered_json j;
    j["conjecture"] = conjecture_name(rep.id);
    j["params"] = rep.params;
    j["range"] = rep.range;
    j["checked"] = rep.checked;
    ordered_json ces = ordered_json::array();
    for (const Counterexample& ce : rep.counterexamples) {
        ces.push_back({{"pos", format_position(exco2, ce.pos)},
                       {"expected", ce.expected},
                       {"actual", ce.actual}});
    }
    j["counterexamples"] = ces;
    j["status"] = rep.supported() ? "supported" : "refuted";
    ordered_json ths = ordered_json::array();
    for (const ThresholdEntry& th : rep.thresholds) {
        ordered_json e;
        e["x0"] = th.x0;
        e["x1"] = th.x1;
        e["threshold"] = th.threshold;
        e["x2_max"] = th.x2_max;
        if (th.period_k >= 0) {
            e["period"] = 1LL << th.period_k;
            e["pattern"] = th.pattern;
            e["confirmed"] = th.confirmed;
        }
        ths.push_back(e);
    }
    j["thresholds"] = ths;
    return j;
}

int run_conjecture(const ConjectureArgs& args) {
    ConjectureId id;
    if (args.id == "c1") id = ConjectureId::C1;
    else if (args.id == "c2") id = ConjectureId::C2;
    else if (args.id == "c3") id = ConjectureId::C3;
    else if (args.id == "c4") id = ConjectureId::C4;
    else if (args.id == "c5") id = ConjectureId::C5;
    else if (args.id == "p4") id = ConjectureId::P4;
    else if (args.id == "t3") id = ConjectureId::T3;
    else if (args.id == "shift") id = ConjectureId::SHIFT;
    else throw std::invalid_argument("unknown conjecture id '" + args.id + "'");

    SweepRanges r;
    Range x0 = parse_range(!args.x0.empty() ? args.x0 : (id == ConjectureId::C5 ? "1" : "0..3"));
    r.x0_lo = x0.lo;
    r.x0_hi = x0.hi;
    r.x2_max = args.x2max < 0 ? 64 : args.x2max;
    if (!args.x1_pow2.empty()) {
        Range e = parse_range(args.x1_pow2);
        if (e.hi > 20) throw std::invalid_argument("power exponent too large");
        for (int q = e.lo; q <= e.hi; ++q) r.x1_values.push_back(1 << q);
    } else if (!args.x1.empty()) {
        Range x1 = parse_range(args.x1);
        r.x1_lo = x1.lo;
        r.x1_hi = x1.hi;
    } else if (id == ConjectureId::C1) {
        for (int q = 0; q <= 4; ++q) r.x1_values.push_back(1 << q);
    } else {
        r.x1_lo = 0;
        r.x1_hi = std::min(32, r.x2_max);
    }
    r.k = args.shift_k;

    int x1_needed = r.x1_hi;
    for (int v : r.x1_values) x1_needed = std::max(x1_needed, v);
    const int pad = id == ConjectureId::SHIFT ? (1 << r.k) : 0;
    SgTable table =
        obtain_n2_table(r.x0_hi, std::min(x1_needed + pad, r.x2_max + pad), r.x2_max + pad,
                        args.common.cache, args.common.limits());
    if (r.x1_values.empty()) r.x1_hi = std::min(r.x1_hi, r.x2_max);

    ConjectureReport rep = check_conjecture(id, r, table);

    if (args.common.format == "csv") {
        std::cout << "x0,x1,threshold,x2_max\n";
        for (const ThresholdEntry& th : rep.thresholds) {
            std::cout << th.x0 << ',' << th.x1 << ',' << th.threshold << ',' << th.x2_max
                      << '\n';
        }
    } else {
        std::cout << report_to_json(rep).dump(2) << '\n';
    }
    return rep.supported() ? 0 : 1;
}

// ------------------------------------------------------------------- table

struct TableArgs {
    CommonArgs common;
    int x0 = 0;
    int x1 = 0;
    std::string x2;
};

int run_table(const TableArgs& args) {
    Range x2 = parse_range(args.x2);
    std::cout << "x2,g,u,delta\n";
    if (x2.hi < x2.lo) return 0;
    const int wide = std::max(args.x1, x2.hi);
    SgTable table =
        obtain_n2_table(args.x0, args.x1, wide, args.common.cache, args.common.limits());
    for (int v = x2.lo; v <= x2.hi; ++v) {
        Position pos(args.x0, {args.x1, v});
        long long g = table.at(pos);
        long long u = pos.total();
        std::cout << v << ',' << g << ',' << u << ',' << (u - g) << '\n';
    }
    return 0;
}

// -------------------------------------------------------------------- play

struct PlayArgs {
    CommonArgs common;
    std::string first = "engine";
    unsigned seed = 0;
    bool seeded = false;
};

Position fallback_move(const GameRules& rules, const Position& pos, std::mt19937* rng) {
    // losing side: take one token from a largest pile (lowest index on ties,
    // or a seeded random choice among the largest)
    std::vector<int> comps(static_cast<std::size_t>(pos.n()) + 1);
    comps[0] = rules.has_extra_pile() ? pos.x0 : 0;
    for (int i = 0; i < pos.n(); ++i) comps[i + 1] = pos.piles[i];
    int best = -1;
    std::vector<int> ties;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        if (comps[i] > best) {
            best = comps[i];
            ties.clear();
        }
        if (comps[i] == best) ties.push_back(i);
    }
    int choice = ties.front();
    if (rng && ties.size() > 1) {
        choice = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(*rng)];
    }
    Position to = pos;
    if (choice == 0) {
        --to.x0;
    } else {
        --to.piles[choice - 1];
    }
    return to;
}

int run_play(const PlayArgs& args) {
    auto [rules, start] = args.common.rules_and_pos();
    validate(rules, start);
    std::mt19937 rng(args.seed);
    std::mt19937* rng_ptr = args.seeded ? &rng : nullptr;

    // one memo for the whole session; every later position fits under the start
    std::vector<int> box(static_cast<std::size_t>(rules.n) + 1, 0);
    box[0] = start.x0;
    Position c = start.canonical();
    for (int i = 0; i < rules.n; ++i) box[i + 1] = c.piles[i];
    const bool search_engine =
        rules.variant == Variant::StandardNim || rules.variant == Variant::MooreNim;
    std::optional<SgTable> memo;
    if (search_engine) memo.emplace(rules, box, args.common.limits().max_cells);

    Position pos = start;
    bool engines_turn = args.first == "engine";
    std::cout << "position: " << format_position(rules, pos) << '\n';
    while (true) {
        if (is_terminal(rules, pos)) {
            // whoever just moved took the last token and won
            std::cout << (engines_turn ? "you win\n" : "engine wins\n");
            return 0;
        }
        if (engines_turn) {
            std::optional<Move> mv;
            if (search_engine) {
                mv = best_move(rules, pos, *memo, args.common.limits());
            } else {
                mv = p_move(pos);
            }
            Position to = mv ? mv->to : fallback_move(rules, pos, rng_ptr);
            std::cout << "engine: " << format_position(rules, pos) << " -> "
                      << format_position(rules, to) << '\n';
            pos = to;
        } else {
            std::cout << "your move> " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) {
                std::cout << "\ninput closed; game abandoned\n";
                return 2;
            }
            if (line.empty()) continue;
            Position to;
            try {
                to = parse_position(rules, line);
            } catch (const std::exception& e) {
                std::cout << "cannot read that move: " << e.what() << '\n';
                continue;
            }
            std::string why = move_violation(rules, pos, to);
            if (!why.empty()) {
                std::cout << "illegal move: " << why << '\n';
                continue;
            }
            pos = to;
        }
        engines_turn = !engines_turn;
        std::cout << "position: " << format_position(rules, pos) << '\n';
    }
}

// Strips "--config FILE" from the argument list and splices the file's
// key=value pairs in as flags, skipping any flag already present on the
// command line.
void apply_config_file(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--config") {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
    }
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::vector<std::string> extra;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line is not key=value: '" + line + "'");
        }
        std::string flag = "--" + line.substr(0, eq);
        if (std::find(args.begin(), args.end(), flag) != args.end()) continue;  // flags win
        extra.push_back(flag);
        extra.push_back(line.substr(eq + 1));
    }
    // insert after the subcommand token so the options bind to it
    std::size_t at = args.empty() ? 0 : 1;
    args.insert(args.begin() + static_cast<long>(at), extra.begin(), extra.end());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grundy values, winning moves and verification sweeps for the nim family"};
    app.require_subcommand(1);

    SgArgs sg_args;
    CLI::App* sg_cmd = app.add_subcommand("sg", "print the Grundy value of a position");
    sg_args.common.attach(sg_cmd);
    sg_cmd->add_option("--max", sg_args.max_v,
                       "bounded query: exact value if <= max, otherwise '> max'");

    CommonArgs move_args;
    CLI::App* move_cmd = app.add_subcommand("move", "print a winning move if one exists");
    move_args.attach(move_cmd);

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("what", verify_args.what, "what to verify")
        ->required()
        ->check(CLI::IsMember(
            {"theorem1", "ppos", "moore", "axioms", "shift", "appendix", "prop4"}));
    verify_args.common.attach(verify_cmd, false);
    verify_cmd->add_option("--max", verify_args.max, "per-pile bound of the sweep box");
    verify_cmd->add_option("--x0-max", verify_args.x0max, "extra-pile bound of the sweep box");
    verify_cmd->add_option("--x1-max", verify_args.x1max, "x1 bound (prop4)");
    verify_cmd->add_option("--x2-max", verify_args.x2max, "x2 bound (prop4)");
    verify_cmd->add_option("--shift-k", verify_args.shift_k, "shift exponent (shift)")
        ->capture_default_str();

    ConjectureArgs conj_args;
    conj_args.common.format = "json";
    CLI::App* conj_cmd =
        app.add_subcommand("conjecture", "sweep a conjecture and emit a JSON report");
    conj_cmd->add_option("id", conj_args.id, "c1..c5, p4, t3 or shift")->required();
    conj_args.common.attach(conj_cmd, false);
    conj_cmd->add_option("--x0", conj_args.x0, "x0 range, N or A..B");
    conj_cmd->add_option("--x1", conj_args.x1, "x1 range, N or A..B");
    conj_cmd->add_option("--x1-pow2", conj_args.x1_pow2, "x1 = 2^q for q in this range");
    conj_cmd->add_option("--x2-max", conj_args.x2max, "x2 sweep ceiling");
    conj_cmd->add_option("--shift-k", conj_args.shift_k, "shift exponent (shift)")
        ->capture_default_str();

    TableArgs table_args;
    CLI::App* table_cmd =
        app.add_subcommand("table", "CSV rows x2,g,u,delta for a fixed (x0, x1)");
    table_args.common.attach(table_cmd, false);
    table_cmd->add_option("--x0", table_args.x0, "extra pile")->required();
    table_cmd->add_option("--x1", table_args.x1, "first main pile")->required();
    table_cmd->add_option("--x2", table_args.x2, "x2 range, N or A..B")->required();

    PlayArgs play_args;
    CLI::App* play_cmd = app.add_subcommand("play", "interactive session against the engine");
    play_args.common.attach(play_cmd);
    play_cmd->add_option("--first", play_args.first, "who moves first")
        ->check(CLI::IsMember({"engine", "human"}))
        ->capture_default_str();
    CLI::Option* seed_opt =
        play_cmd->add_option("--seed", play_args.seed, "shuffle the fallback move");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        apply_config_file(args);
        std::vector<const char*> cargs{argv[0]};
        for (const std::string& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
        play_args.seeded = seed_opt->count() > 0;
        if (*sg_cmd) return run_sg(sg_args);
        if (*move_cmd) return run_move(move_args);
        if (*verify_cmd) return run_verify(verify_args);
        if (*conj_cmd) return run_conjecture(conj_args);
        if (*table_cmd) return run_table(table_args);
        if (*play_cmd) return run_play(play_args);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
