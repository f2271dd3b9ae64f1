#include "forb/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "forb/recurrence.hpp"

namespace forb {

namespace {

struct Climber {
    int m;
    long num, den;
    std::vector<std::int64_t> pw;  // pw[j] = num^j den^(m-2-j)
    Tcm g;
    std::int64_t weight = 0;
    std::uint64_t* iters_left;
    LocalSearchResult* stats;

    Climber(const Tcm& start, long n, long d, std::uint64_t* budget, LocalSearchResult* st)
        : m(start.m), num(n), den(d), g(start), iters_left(budget), stats(st) {
        int cap = std::max(0, m - 2);
        double mag = std::pow(static_cast<double>(std::max(num, den)), cap);
        if (mag > 1e15) throw infeasible_size("local_search: alpha too large for exact weights");
        pw.assign(static_cast<size_t>(cap) + 2, 0);
        for (int j = 0; j <= cap + 1; ++j) {
            int jj = std::min(j, cap);
            std::int64_t v = 1;
            for (int i = 0; i < jj; ++i) v *= num;
            for (int i = 0; i < cap - jj; ++i) v *= den;
            pw[static_cast<size_t>(j)] = v;
        }
        weight = recompute();
    }

    std::int64_t recompute() const {
        std::int64_t w = 0;
        for (int mu : g.mult) w += pw[static_cast<size_t>(mu)];
        return w;
    }

    std::int64_t delta_reassign(int t, int to) const {
        int from_pair = g.pair_of_triple(t);
        const auto& tr = g.triples.list[t];
        int to_pair;
        switch (to) {
            case 0: to_pair = pair_index(tr[0], tr[1], m); break;
            case 1: to_pair = pair_index(tr[0], tr[2], m); break;
            default: to_pair = pair_index(tr[1], tr[2], m); break;
        }
        if (to_pair == from_pair) return 0;
        std::int64_t d = pw[static_cast<size_t>(g.mult[from_pair]) - 1] -
                         pw[static_cast<size_t>(g.mult[from_pair])];
        d += pw[static_cast<size_t>(g.mult[to_pair]) + 1] - pw[static_cast<size_t>(g.mult[to_pair])];
        return d;
    }

    void apply(int t, int to) {
        weight += delta_reassign(t, to);
        g.set_choice(t, to);
    }

    bool try_single() {
        for (int t = 0; t < g.triples.size(); ++t)
            for (int c = 0; c < 3; ++c) {
                if (c == g.edge_choice[t]) continue;
                if (delta_reassign(t, c) > 0) {
                    apply(t, c);
                    ++stats->moves_single;
                    return true;
                }
            }
        return false;
    }

    // choice value selecting edge {u,v} inside sorted triple
    static int choice_for(const std::array<int, 3>& tr, int u, int v) {
        if (u > v) std::swap(u, v);
        if (u == tr[0] && v == tr[1]) return 0;
        if (u == tr[0] && v == tr[2]) return 1;
        return 2;
    }

    // paired swap: m_xy = m_xz + 1 = m_xw + 1 with xy chosen in xyz and xyw;
    // reassigning those triangles to xz and xw gains a^(m_xy-2) (a-1)^2
    bool try_pair() {
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                if (y == x) continue;
                int mxy = g.mult[pair_index(x, y, m)];
                if (mxy < 1) continue;
                std::vector<int> zs;
                for (int z = 0; z < m; ++z) {
                    if (z == x || z == y) continue;
                    if (g.mult[pair_index(x, z, m)] != mxy - 1) continue;
                    int lo = std::min({x, y, z}), hi = std::max({x, y, z});
                    int mid = x + y + z - lo - hi;
                    int t = g.triples.index(lo, mid, hi);
                    if (g.pair_of_triple(t) == pair_index(x, y, m)) zs.push_back(z);
                }
                if (zs.size() < 2) continue;
                int z = zs[0], w = zs[1];
                int t1 = g.triples.index(std::min({x, y, z}), x + y + z - std::min({x, y, z}) -
                                                                  std::max({x, y, z}),
                                         std::max({x, y, z}));
                int t2 = g.triples.index(std::min({x, y, w}), x + y + w - std::min({x, y, w}) -
                                                                  std::max({x, y, w}),
                                         std::max({x, y, w}));
                std::int64_t before = weight;
                apply(t1, choice_for(g.triples.list[t1], x, z));
                apply(t2, choice_for(g.triples.list[t2], x, w));
                if (weight > before) {
                    ++stats->moves_pair;
                    return true;
                }
                apply(t1, choice_for(g.triples.list[t1], x, y));
                apply(t2, choice_for(g.triples.list[t2], x, y));
            }
        return false;
    }

    // consecutive-chain swap: x with m_xy_i = m-i for i = 3..t-1, the y_i in
    // distinct closed pairs, x in none; a partner y_t in one of those pairs
    // with m_xy_t = m-t releases a strictly improving series
    bool try_chain() {
        std::vector<std::vector<int>> partition = closed_sets(g);
        std::vector<int> set_of(static_cast<size_t>(m), -1), set_size(partition.size(), 0);
        for (size_t i = 0; i < partition.size(); ++i) {
            set_size[i] = static_cast<int>(partition[i].size());
            for (int v : partition[i]) set_of[static_cast<size_t>(v)] = static_cast<int>(i);
        }
        for (int x = 0; x < m; ++x) {
            bool in_pair = false;
            for (int y = 0; y < m; ++y)
                if (y != x && g.mult[pair_index(x, y, m)] == m - 2) in_pair = true;
            if (in_pair) continue;
            // greedy chain y_3, y_4, ... with m_xy_i = m - i
            std::vector<int> chain;  // chain[i-3] = y_i
            std::vector<char> used_set(partition.size(), 0);
            for (int i = 3; i < m; ++i) {
                int found = -1;
                for (int y = 0; y < m && found < 0; ++y) {
                    if (y == x || g.mult[pair_index(x, y, m)] != m - i) continue;
                    int s = set_of[static_cast<size_t>(y)];
                    if (s == set_of[static_cast<size_t>(x)]) continue;
                    if (set_size[static_cast<size_t>(s)] < 2 || used_set[static_cast<size_t>(s)]) continue;
                    found = y;
                    used_set[static_cast<size_t>(s)] = 1;
                }
                if (found < 0) break;
                chain.push_back(found);
            }
            // try every prefix length; t-1 = 3 + prefix - 1
            for (size_t len = 1; len <= chain.size(); ++len) {
                int t = 3 + static_cast<int>(len);  // next multiplicity to look for is m - t
                if (t > m - 1) break;
                for (size_t i = 0; i < len; ++i) {
                    int yi = chain[i];
                    int si = set_of[static_cast<size_t>(yi)];
                    for (int yt : partition[static_cast<size_t>(si)]) {
                        if (yt == yi || g.mult[pair_index(x, yt, m)] != m - t) continue;
                        if (apply_chain_case1(x, chain, len, yt, t)) return true;
                    }
                }
            }
        }
        return false;
    }

    bool apply_chain_case1(int x, const std::vector<int>& chain, size_t len, int yt, int t) {
        // z outside the chain with x-yt not chosen in triangle x yt z
        std::int64_t before = weight;
        std::vector<std::pair<int, int>> undo;  // (triple, previous choice)
        auto tri = [&](int a, int b, int c) {
            int lo = std::min({a, b, c}), hi = std::max({a, b, c});
            return g.triples.index(lo, a + b + c - lo - hi, hi);
        };
        auto do_apply = [&](int tt, int u, int v) {
            undo.emplace_back(tt, g.edge_choice[tt]);
            apply(tt, choice_for(g.triples.list[tt], u, v));
        };
        int mxyt = g.mult[pair_index(x, yt, m)];
        for (int z = 0; z < m; ++z) {
            if (z == x || z == yt) continue;
            if (std::find(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(len), z) !=
                chain.begin() + static_cast<std::ptrdiff_t>(len))
                continue;
            int tz = tri(x, yt, z);
            if (g.pair_of_triple(tz) == pair_index(x, yt, m)) continue;
            int mult_e = g.mult[g.pair_of_triple(tz)];
            if (mult_e <= mxyt) {
                do_apply(tz, x, yt);  // single improving swap
            } else {
                int k = m - mult_e;
                if (k < 3) continue;
                // raise m_x,yt to m-k by weight-preserving swaps along the chain
                for (int j = t - 1; j >= k; --j) {
                    int yj = chain[static_cast<size_t>(j - 3)];
                    int tj = tri(x, yt, yj);
                    if (g.pair_of_triple(tj) != pair_index(x, yj, m)) break;
                    do_apply(tj, x, yt);
                }
                int tz2 = tri(x, yt, z);
                do_apply(tz2, x, yt);
            }
            if (weight > before) {
                ++stats->moves_chain;
                return true;
            }
            while (!undo.empty()) {
                apply(undo.back().first, undo.back().second);
                undo.pop_back();
            }
        }
        return false;
    }

    void climb() {
        while (*iters_left > 0) {
            if (try_single()) { --*iters_left; continue; }
            if (try_pair()) { --*iters_left; continue; }
            if (try_chain()) { --*iters_left; continue; }
            break;
        }
    }
};

}  // namespace

LocalSearchResult local_search(const Tcm& g, long alpha_num, long alpha_den, std::uint64_t seed,
                               const LocalSearchOptions& opts) {
    if (alpha_den < 1 || alpha_num < alpha_den)
        throw std::invalid_argument("local_search: alpha >= 1 required");
    LocalSearchResult res;
    std::uint64_t budget = opts.iters;

    std::vector<Tcm> starts{g};
    if (opts.seed_with_construction && g.m >= 1) starts.push_back(build_g(g.m).tcm);
    Rng rng(seed);
    for (int i = 0; i < opts.random_restarts; ++i) starts.push_back(random_tcm(g.m, rng));

    bool have = false;
    std::int64_t best_scaled = 0;
    Tcm best = g;
    long best_den_pow = std::max(0, g.m - 2);
    for (const Tcm& s : starts) {
        Climber c(s, alpha_num, alpha_den, &budget, &res);
        c.climb();
        if (c.weight != c.recompute())
            throw std::logic_error("local_search: incremental weight drifted from recompute");
        if (!have || c.weight > best_scaled) {
            have = true;
            best_scaled = c.weight;
            best = c.g;
        }
    }
    res.tcm = best;
    res.weight = BigRat(BigInt(best_scaled),
                        ipow(BigInt(alpha_den), static_cast<unsigned>(best_den_pow)));
    res.weight_fp = static_cast<double>(res.weight);
    return res;
}

}  // namespace forb
