#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nimlab {

enum class Variant { StandardNim, MooreNim, CoNim, ExcoNim };

// Which game of the family is being played. StandardNim reduces exactly one
// pile per move, MooreNim(n,k) between 1 and k piles, CoNim(n) up to n-1.
// ExcoNim adds an extra pile x0 that may always be reduced; a move must keep
// at least one of the n main piles intact.
struct GameRules {
    Variant variant = Variant::StandardNim;
    int n = 1;  // number of main piles
    int k = 1;  // Moore parameter; implied n-1 for CoNim/ExcoNim, 1 for StandardNim

    static GameRules standard_nim(int n);
    static GameRules moore_nim(int n, int k);  // requires 1 <= k < n
    static GameRules co_nim(int n);            // requires n >= 2
    static GameRules exco_nim(int n);          // requires n >= 2

    bool has_extra_pile() const { return variant == Variant::ExcoNim; }
    // How many of the n main piles a single move may strictly reduce.
    int max_reducible() const;
    // Short token used in cache headers and CLI output: nim, moore_k<k>, conim, exco.
    std::string name() const;

    bool operator==(const GameRules&) const = default;
};

GameRules rules_from_name(const std::string& token, int n);

// Pile configuration (x0; x1..xn). x0 is fixed to 0 for every variant except
// ExcoNim; it is stored unconditionally so all engines share one position type.
struct Position {
    int x0 = 0;
    std::vector<int> piles;

    Position() = default;
    Position(int extra, std::vector<int> main) : x0(extra), piles(std::move(main)) {}

    int n() const { return static_cast<int>(piles.size()); }
    long long total() const;  // x0 + x1 + ... + xn
    int min_pile() const;
    // Main piles sorted ascending. The games are symmetric in piles 1..n, so
    // this never changes the Grundy value.
    Position canonical() const;
    bool is_canonical() const;

    auto operator<=>(const Position&) const = default;
};

struct Move {
    Position from;
    Position to;
};

// Throws std::invalid_argument if pos does not fit rules (negative component,
// wrong pile count, nonzero x0 in a game without the extra pile).
void validate(const GameRules& rules, const Position& pos);

// True iff `to` is reachable from `from` in exactly one move.
bool is_legal_move(const GameRules& rules, const Position& from, const Position& to);

// Empty string if legal, otherwise the first violated move requirement,
// phrased for interactive use.
std::string move_violation(const GameRules& rules, const Position& from, const Position& to);

// All one-move destinations, each once, lexicographically ordered on the
// destination tuple. Enumerates the componentwise box below `from`, so keep
// components small; terminal positions yield an empty vector.
std::vector<Position> legal_moves(const GameRules& rules, const Position& from);

bool is_terminal(const GameRules& rules, const Position& pos);

// An ExcoNim position is previous-player-winning iff x0 = 0 and all main
// piles are equal.
bool is_p_position_exco(const Position& pos);

// The unique re-entering move (0, m, ..., m) with m the minimum main pile,
// or nullopt if pos is already a P-position. ExcoNim/CoNim only.
std::optional<Move> p_move(const Position& pos);

// Shared legality kernel on raw component spans; from[0]/to[0] are x0.
bool legal_components(const GameRules& rules, std::span<const int> from, std::span<const int> to);

std::string format_position(const GameRules& rules, const Position& pos);
Position parse_position(const GameRules& rules, const std::string& text);

}  // namespace nimlab
