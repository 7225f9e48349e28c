#include "nimlab/game.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nimlab {

GameRules GameRules::standard_nim(int n) {
    if (n < 1) throw std::invalid_argument("standard nim needs n >= 1");
    return {Variant::StandardNim, n, 1};
}

GameRules GameRules::moore_nim(int n, int k) {
    if (n < 2) throw std::invalid_argument("moore nim needs n >= 2");
    if (k < 1 || k >= n) throw std::invalid_argument("moore nim needs 1 <= k < n");
    return {Variant::MooreNim, n, k};
}

GameRules GameRules::co_nim(int n) {
    if (n < 2) throw std::invalid_argument("co-nim needs n >= 2");
    return {Variant::CoNim, n, n - 1};
}

GameRules GameRules::exco_nim(int n) {
    if (n < 2) throw std::invalid_argument("exco-nim needs n >= 2");
    return {Variant::ExcoNim, n, n - 1};
}

int GameRules::max_reducible() const {
    switch (variant) {
        case Variant::StandardNim: return 1;
        case Variant::MooreNim: return k;
        case Variant::CoNim:
        case Variant::ExcoNim: return n - 1;
    }
    return 1;
}

std::string GameRules::name() const {
    switch (variant) {
        case Variant::StandardNim: return "nim";
        case Variant::MooreNim: return "moore_k" + std::to_string(k);
        case Variant::CoNim: return "conim";
        case Variant::ExcoNim: return "exco";
    }
    return "nim";
}

GameRules rules_from_name(const std::string& token, int n) {
    if (token == "nim") return GameRules::standard_nim(n);
    if (token == "conim") return GameRules::co_nim(n);
    if (token == "exco") return GameRules::exco_nim(n);
    if (token.rfind("moore_k", 0) == 0) {
        int k = std::stoi(token.substr(7));
        return GameRules::moore_nim(n, k);
    }
    throw std::invalid_argument("unknown game token: " + token);
}

long long Position::total() const {
    long long t = x0;
    for (int p : piles) t += p;
    return t;
}

int Position::min_pile() const {
    if (piles.empty()) throw std::logic_error("position has no piles");
    return *std::min_element(piles.begin(), piles.end());
}

Position Position::canonical() const {
    Position c = *this;
    std::sort(c.piles.begin(), c.piles.end());
    return c;
}

bool Position::is_canonical() const {
    return std::is_sorted(piles.begin(), piles.end());
}

void validate(const GameRules& rules, const Position& pos) {
    if (pos.n() != rules.n) {
        throw std::invalid_argument("position has " + std::to_string(pos.n()) +
                                    " piles, rules expect " + std::to_string(rules.n));
    }
    if (pos.x0 < 0) throw std::invalid_argument("negative extra pile");
    for (int p : pos.piles) {
        if (p < 0) throw std::invalid_argument("negative pile");
    }
    if (!rules.has_extra_pile() && pos.x0 != 0) {
        throw std::invalid_argument(rules.name() + " has no extra pile; x0 must be 0");
    }
}

bool legal_components(const GameRules& rules, std::span<const int> from, std::span<const int> to) {
    const int n = rules.n;
    if (to[0] > from[0]) return false;
    int reduced = 0;
    long long removed = from[0] - to[0];
    for (int i = 1; i <= n; ++i) {
        if (to[i] > from[i]) return false;
        if (to[i] < from[i]) {
            ++reduced;
            removed += from[i] - to[i];
        }
    }
    switch (rules.variant) {
        case Variant::StandardNim:
            return reduced == 1;
        case Variant::MooreNim:
        case Variant::CoNim:
            return reduced >= 1 && reduced <= rules.max_reducible();
        case Variant::ExcoNim:
            // at least one token removed, at least one main pile intact
            return removed >= 1 && reduced <= n - 1;
    }
    return false;
}

bool is_legal_move(const GameRules& rules, const Position& from, const Position& to) {
    validate(rules, from);
    validate(rules, to);
    std::vector<int> f(static_cast<std::size_t>(rules.n) + 1), t(f.size());
    f[0] = from.x0;
    t[0] = to.x0;
    std::copy(from.piles.begin(), from.piles.end(), f.begin() + 1);
    std::copy(to.piles.begin(), to.piles.end(), t.begin() + 1);
    return legal_components(rules, f, t);
}

std::string move_violation(const GameRules& rules, const Position& from, const Position& to) {
    if (to.n() != from.n()) return "destination has a different number of piles";
    if (to.x0 < 0) return "negative pile size";
    for (int p : to.piles) {
        if (p < 0) return "negative pile size";
    }
    if (to.x0 > from.x0) return "the extra pile was increased";
    int reduced = 0;
    for (int i = 0; i < from.n(); ++i) {
        if (to.piles[i] > from.piles[i]) return "a pile was increased";
        if (to.piles[i] < from.piles[i]) ++reduced;
    }
    long long removed = from.total() - to.total();
    switch (rules.variant) {
        case Variant::StandardNim:
            if (reduced == 0) return "exactly one pile must be reduced";
            if (reduced > 1) return "only one pile may be reduced";
            break;
        case Variant::MooreNim:
        case Variant::CoNim:
            if (reduced == 0) return "at least one pile must be reduced";
            if (reduced > rules.max_reducible()) {
                return "at most " + std::to_string(rules.max_reducible()) +
                       " piles may be reduced";
            }
            break;
        case Variant::ExcoNim:
            if (removed < 1) return "at least one token must be removed";
            if (reduced > rules.n - 1) return "at least one main pile must stay unchanged";
            break;
    }
    return {};
}

std::vector<Position> legal_moves(const GameRules& rules, const Position& from) {
    validate(rules, from);
    const int n = rules.n;
    std::vector<int> f(static_cast<std::size_t>(n) + 1);
    f[0] = from.x0;
    std::copy(from.piles.begin(), from.piles.end(), f.begin() + 1);

    std::vector<Position> out;
    std::vector<int> t(f.size(), 0);
    for (;;) {
        if (legal_components(rules, f, t)) {
            out.push_back(Position(t[0], std::vector<int>(t.begin() + 1, t.end())));
        }
        int i = n;
        while (i >= 0 && t[i] == f[i]) {
            t[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

bool is_terminal(const GameRules& rules, const Position& pos) {
    validate(rules, pos);
    return pos.total() == 0;  // coincides with "no legal move" for every variant
}

bool is_p_position_exco(const Position& pos) {
    if (pos.x0 != 0) return false;
    for (int p : pos.piles) {
        if (p != pos.piles[0]) return false;
    }
    return true;
}

std::optional<Move> p_move(const Position& pos) {
    if (is_p_position_exco(pos)) return std::nullopt;
    int m = pos.min_pile();
    Position to(0, std::vector<int>(pos.piles.size(), m));
    return Move{pos, std::move(to)};
}

std::string format_position(const GameRules& rules, const Position& pos) {
    std::ostringstream os;
    bool first = true;
    if (rules.has_extra_pile()) {
        os << pos.x0;
        first = false;
    }
    for (int p : pos.piles) {
        if (!first) os << ',';
        os << p;
        first = false;
    }
    return os.str();
}

Position parse_position(const GameRules& rules, const std::string& text) {
    std::vector<int> comps;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad position component: '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("bad position component: '" + item + "'");
        }
        if (v < 0) throw std::invalid_argument("pile sizes must be nonnegative");
        if (v > 1'000'000'000LL) throw std::invalid_argument("pile size too large");
        comps.push_back(static_cast<int>(v));
    }
    Position pos;
    if (rules.has_extra_pile()) {
        if (comps.size() < 2) throw std::invalid_argument("expected x0,x1,...,xn");
        pos.x0 = comps[0];
        pos.piles.assign(comps.begin() + 1, comps.end());
    } else {
        if (comps.empty()) throw std::invalid_argument("expected x1,...,xn");
        pos.piles = comps;
    }
    return pos;
}

}  // namespace nimlab
