#include "nimlab/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nimlab {

long long nim_sum(std::span<const int> values) {
    long long s = 0;
    for (int v : values) s ^= v;
    return s;
}

bool MooreSum::is_zero() const {
    return std::all_of(digits.begin(), digits.end(), [](int d) { return d == 0; });
}

MooreSum moore_sum(const Position& pos, int k) {
    const int n = pos.n();
    if (k < 1 || k >= n) throw std::invalid_argument("moore sum needs 1 <= k < n");
    MooreSum ms;
    ms.k = k;
    int bits = 1;
    for (int p : pos.piles) {
        while ((p >> bits) != 0) ++bits;
    }
    ms.digits.assign(bits, 0);
    for (int j = 0; j < bits; ++j) {
        int sum = 0;
        for (int p : pos.piles) sum += (p >> j) & 1;
        ms.digits[j] = sum % (k + 1);
    }
    return ms;
}

namespace {

long long z_of(long long y) {
    if (y > 3'000'000'000LL) throw std::overflow_error("z(y) overflows");
    return y * (y + 1) / 2 + 1;
}

}  // namespace

SgParams sg_params(const Position& pos) {
    SgParams p;
    p.m = pos.min_pile();
    p.u = pos.total();
    p.y = p.u - static_cast<long long>(pos.n()) * p.m;
    p.z = z_of(p.y);
    p.kind = p.m < p.z ? PositionKind::TypeI : PositionKind::TypeII;
    return p;
}

long long g_closed(const Position& pos) {
    if (pos.n() < 3) throw std::domain_error("closed form requires n >= 3");
    SgParams p = sg_params(pos);
    if (p.kind == PositionKind::TypeI) return p.u;
    return (p.z - 1) + ((p.m - p.z) % (p.y + 1));
}

std::pair<long long, long long> sg_bounds(const Position& pos, long long sg0) {
    return {pos.x0 + sg0, pos.total()};
}

bool reachable_mu(const Position& pos, int m, long long u) {
    if (pos.n() < 3) throw std::domain_error("reachable pair test requires n >= 3");
    SgParams p = sg_params(pos);
    if (m < 0 || m > p.m) return false;
    if (p.y == 0 && m >= p.m) return false;
    long long lo = p.m + static_cast<long long>(pos.n() - 1) * m;
    long long hi = p.u - std::max<long long>(1, p.m - m);
    return lo <= u && u <= hi;
}

EtaRho eta_rho(long long v) {
    if (v < 0) throw std::invalid_argument("eta_rho needs v >= 0");
    // integer sqrt seed, then local adjustment
    long long eta = static_cast<long long>((std::sqrt(8.0 * static_cast<double>(v) + 1.0) - 1.0) / 2.0);
    if (eta < 0) eta = 0;
    while (eta * (eta + 1) / 2 > v) --eta;
    while ((eta + 1) * (eta + 2) / 2 <= v) ++eta;
    EtaRho r;
    r.v = v;
    r.eta = eta;
    r.rho = v - eta * (eta + 1) / 2;
    return r;
}

namespace {

// Greedy: parts start at 0 and are raised in order, each up to caps[i],
// until they sum to total. Any split works; this pins one.
std::vector<long long> distribute(long long total, const std::vector<long long>& caps) {
    std::vector<long long> parts(caps.size(), 0);
    long long rem = total;
    for (std::size_t i = 0; i < caps.size(); ++i) {
        long long take = std::min(rem, caps[i]);
        parts[i] = take;
        rem -= take;
    }
    if (rem != 0) throw std::logic_error("move construction: infeasible sum constraint");
    return parts;
}

}  // namespace

Position construct_move(const Position& pos, long long v) {
    const int n = pos.n();
    if (n < 3) throw std::domain_error("move construction requires n >= 3");
    if (v < 0 || v >= g_closed(pos)) {
        throw std::domain_error("requested value is not below the position value");
    }

    // work in sorted pile space, then undo the permutation
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pos.piles[a] < pos.piles[b]; });

    const long long c = pos.x0;
    const long long m = pos.piles[order[0]];
    std::vector<long long> p(n);  // offsets above the minimum, ascending, p[0] = 0
    for (int i = 0; i < n; ++i) p[i] = pos.piles[order[i]] - m;

    SgParams params = sg_params(pos);
    const long long u = params.u;

    long long d0 = 0;
    std::vector<long long> d(n, 0);

    if (params.kind == PositionKind::TypeI) {
        const long long k = u;  // = g_closed(pos)
        if (v >= k - m) {
            // shave pile 1 only
            d0 = c;
            d[0] = m - (k - v);
            for (int i = 1; i < n; ++i) d[i] = m + p[i];
        } else if (v >= m + p[1]) {
            // empty pile 1, keep pile 2, spread the rest
            std::vector<long long> caps{c};
            for (int i = 2; i < n; ++i) caps.push_back(m + p[i]);
            auto parts = distribute(v - m - p[1], caps);
            d0 = parts[0];
            d[0] = 0;
            d[1] = m + p[1];
            for (int i = 2; i < n; ++i) d[i] = parts[i - 1];
        } else if (v >= m) {
            d0 = 0;
            d[0] = m;
            d[1] = v - m;
            // remaining piles already 0
        } else if (v == m - 1) {
            const long long eta = eta_rho(v).eta;
            std::vector<long long> caps{c};
            for (int i = 1; i < n; ++i) caps.push_back(p[i]);
            auto parts = distribute(eta, caps);
            d0 = parts[0];
            d[0] = m;
            for (int i = 1; i < n; ++i) d[i] = m + parts[i];
        } else {
            // v < m - 1
            const long long eta = eta_rho(v).eta;
            const long long alpha = (m - v - 1) % (eta + 1);
            std::vector<long long> caps{c};
            for (int i = 2; i < n; ++i) caps.push_back(p[i] + alpha);
            if (eta >= p[1] + alpha) {
                auto parts = distribute(eta - alpha - p[1], caps);
                d0 = parts[0];
                d[0] = m - alpha;
                d[1] = m + p[1];
                for (int i = 2; i < n; ++i) d[i] = m - alpha + parts[i - 1];
            } else {
                auto parts = distribute(eta - alpha, caps);
                d0 = parts[0];
                d[0] = m;
                d[1] = m - alpha;
                for (int i = 2; i < n; ++i) d[i] = m - alpha + parts[i - 1];
            }
        }
    } else {
        // prefix sums P[i] = p_1 + .. + p_i, with the extra pile appended last
        std::vector<long long> P(n + 2, 0);
        for (int i = 1; i <= n; ++i) P[i] = P[i - 1] + p[i - 1];
        P[n + 1] = P[n] + c;

        EtaRho er = eta_rho(v);
        const long long mu = er.eta;
        const long long alpha = ((m - z_of(mu) - er.rho) % (mu + 1) + (mu + 1)) % (mu + 1);

        if (mu == 0 && alpha == 0) {
            d0 = 0;
            for (int i = 0; i < n; ++i) d[i] = m;
        } else {
            int i = 1;
            for (int j = 1; j <= n; ++j) {
                if (P[j] < mu) i = j;
            }
            if (mu > P[i + 1]) throw std::logic_error("move construction: no pile index fits");
            if (alpha == 0) {
                if (i < n) {
                    d0 = 0;
                    for (int b = 0; b < i; ++b) d[b] = m + p[b];
                    d[i] = m + mu - P[i];
                    for (int b = i + 1; b < n; ++b) d[b] = m;
                } else {
                    d0 = mu - P[n];
                    for (int b = 0; b < n; ++b) d[b] = m + p[b];
                }
            } else if (i < n) {
                int j = 1;
                for (int jj = 1; jj <= i; ++jj) {
                    if (alpha <= mu - P[jj]) j = jj;
                }
                d0 = 0;
                for (int b = 0; b < j - 1; ++b) d[b] = m + p[b] - alpha;
                d[j - 1] = m + p[j - 1];
                d[j] = m + mu - P[j] - 2 * alpha;
                for (int b = j + 1; b < n; ++b) d[b] = m - alpha;
            } else {
                if (alpha > P[n]) {
                    d0 = mu - alpha;
                    d[0] = m;
                    for (int b = 1; b < n; ++b) d[b] = m - alpha;
                } else {
                    int l = 1;
                    for (int ll = 1; ll < n; ++ll) {
                        if (P[ll] <= P[n] - alpha) l = ll;
                    }
                    d0 = mu - P[n];
                    for (int b = 0; b < l - 1; ++b) d[b] = m + p[b] - alpha;
                    d[l - 1] = m + p[l - 1];
                    d[l] = m + P[n] - P[l] - 2 * alpha;
                    for (int b = l + 1; b < n; ++b) d[b] = m - alpha;
                }
            }
        }
    }

    Position dest(static_cast<int>(d0), std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) dest.piles[order[i]] = static_cast<int>(d[i]);

    // the index arithmetic above is intricate; re-check the result instead of
    // trusting it
    if (!is_legal_move(GameRules::exco_nim(n), pos, dest)) {
        throw std::logic_error("move construction produced an illegal move");
    }
    if (g_closed(dest) != v) {
        throw std::logic_error("move construction missed the requested value");
    }
    return dest;
}

}  // namespace nimlab
