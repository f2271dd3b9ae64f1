#include "forb/h_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "forb/recurrence.hpp"

namespace forb {

unsigned thread_cap() {
    if (const char* env = std::getenv("FORBCFG_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

namespace {

// Scaled pair weights: pw[j] = num^j * den^(cap-j) represents alpha^j * den^cap
// with cap = m-2 the maximum multiplicity. Strictly increasing and convex for
// alpha > 1, so the largest remaining single-step increment of a pair is its
// top-of-ladder step.
struct Kernel {
    int m = 0;
    int T = 0;
    int P = 0;
    TripleTable triples;
    std::vector<std::int64_t> pw;               // size cap+2 (one padding slot)
    std::vector<std::array<int, 3>> tri_pairs;  // pair indices per triple
    std::vector<std::vector<int>> rem;          // rem[d][pair]

    void init(int m_, long num, long den) {
        m = m_;
        triples = TripleTable(m);
        T = triples.size();
        P = m >= 2 ? m * (m - 1) / 2 : 0;
        int cap = std::max(0, m - 2);
        double mag = std::pow(static_cast<double>(std::max(num, den)), cap);
        if (mag > 1e12) throw infeasible_size("h_exact: alpha numerator/denominator too large for exact weights");
        pw.assign(cap + 2, 0);
        for (int j = 0; j <= cap + 1; ++j) {
            int jj = std::min(j, cap);
            std::int64_t v = 1;
            for (int i = 0; i < jj; ++i) v *= num;
            for (int i = 0; i < cap - jj; ++i) v *= den;
            pw[j] = v;
        }
        tri_pairs.resize(T);
        for (int t = 0; t < T; ++t) {
            const auto& tr = triples.list[t];
            tri_pairs[t] = {pair_index(tr[0], tr[1], m), pair_index(tr[0], tr[2], m),
                            pair_index(tr[1], tr[2], m)};
        }
        rem.assign(T + 1, std::vector<int>(std::max(P, 1), 0));
        for (int d = T - 1; d >= 0; --d) {
            rem[d] = rem[d + 1];
            for (int p : tri_pairs[d]) rem[d][p]++;
        }
    }

    std::int64_t ub_increment(int d, const std::vector<int>& mult) const {
        std::int64_t inc = 0;
        const std::vector<int>& r = rem[d];
        for (int i = d; i < T; ++i) {
            std::int64_t step = 0;
            for (int p : tri_pairs[i]) {
                int c = mult[p] + r[p];
                std::int64_t s = pw[c] - pw[c - 1];
                if (s > step) step = s;
            }
            inc += step;
        }
        return inc;
    }
};

struct SearchState {
    const Kernel* k;
    std::vector<int> mult;
    std::vector<std::uint8_t> choice;
    std::int64_t weight = 0;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool exhausted = false;

    void reset() {
        mult.assign(std::max(k->P, 1), 0);
        choice.assign(std::max(k->T, 1), 0);
        weight = static_cast<std::int64_t>(k->P) * k->pw[0];
    }

    // Value search: prune subtrees that cannot strictly beat `best`.
    void dfs_value(int d, std::atomic<std::int64_t>& best, int first_choice_max) {
        ++nodes;
        if (budget && nodes > budget) { exhausted = true; return; }
        if (d == k->T) {
            std::int64_t w = weight, cur = best.load(std::memory_order_relaxed);
            while (w > cur && !best.compare_exchange_weak(cur, w)) {}
            return;
        }
        if (weight + k->ub_increment(d, mult) <= best.load(std::memory_order_relaxed)) return;
        int cmax = d == 0 ? first_choice_max : 2;
        for (int c = 0; c <= cmax && !exhausted; ++c) {
            int p = k->tri_pairs[d][c];
            std::int64_t step = k->pw[mult[p] + 1] - k->pw[mult[p]];
            mult[p]++;
            weight += step;
            choice[d] = static_cast<std::uint8_t>(c);
            dfs_value(d + 1, best, first_choice_max);
            weight -= step;
            mult[p]--;
        }
    }

    // Tie scan: visit every leaf achieving exactly `target`.
    bool dfs_scan(int d, std::int64_t target, int first_choice_max,
                  const std::function<bool(const Tcm&)>& visit) {
        ++nodes;
        if (d == k->T) {
            if (weight == target) {
                Tcm g(k->m, std::vector<std::uint8_t>(choice.begin(), choice.begin() + k->T));
                return visit(g);
            }
            return false;
        }
        if (weight + k->ub_increment(d, mult) < target) return false;
        if (budget && nodes > budget) { exhausted = true; return false; }
        int cmax = d == 0 ? first_choice_max : 2;
        for (int c = 0; c <= cmax; ++c) {
            int p = k->tri_pairs[d][c];
            std::int64_t step = k->pw[mult[p] + 1] - k->pw[mult[p]];
            mult[p]++;
            weight += step;
            choice[d] = static_cast<std::uint8_t>(c);
            bool done = dfs_scan(d + 1, target, first_choice_max, visit);
            weight -= step;
            mult[p]--;
            if (done || exhausted) return done;
        }
        return false;
    }
};

void check_args(int m, long num, long den, const HExactOptions& opts) {
    if (m < 1) throw std::invalid_argument("h_exact: m >= 1 required");
    if (den < 1 || num < den) throw std::invalid_argument("h_exact: alpha >= 1 required");
    if (m > 7 || (m == 7 && !opts.allow_m7))
        throw infeasible_size("h_exact: m > 6 needs the explicit m=7 override");
}

// Seed with the weight of the DP-optimal 2-recursive TCM; a genuine TCM, so
// always a valid lower bound for H.
std::int64_t seed_weight(const Kernel& k, long num, long den, Tcm& seed_tcm) {
    seed_tcm = h2_argmax_tcm(k.m, num, den);
    std::int64_t w = 0;
    for (int mu : seed_tcm.mult) w += k.pw[mu];
    return w;
}

}  // namespace

HExactResult h_exact(int m, long alpha_num, long alpha_den, const HExactOptions& opts) {
    check_args(m, alpha_num, alpha_den, opts);
    Kernel k;
    k.init(m, alpha_num, alpha_den);

    HExactResult res;
    Tcm seed;
    std::atomic<std::int64_t> best{seed_weight(k, alpha_num, alpha_den, seed)};
    const int first_max = (opts.symmetry && k.T > 0) ? 0 : 2;

    unsigned want = opts.threads > 0 ? static_cast<unsigned>(opts.threads) : thread_cap();
    if (opts.node_budget) want = 1;  // deterministic budget accounting

    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::int64_t budget_best = best.load();
    Tcm budget_argmax = seed;

    if (want <= 1 || k.T < 3) {
        SearchState st;
        st.k = &k;
        st.budget = opts.node_budget;
        st.reset();
        if (opts.node_budget) {
            // track a witness while searching so a budget stop still returns one
            std::function<bool(int)> rec = [&](int d) -> bool {
                if (++st.nodes > st.budget) return true;
                if (d == k.T) {
                    if (st.weight > budget_best) {
                        budget_best = st.weight;
                        budget_argmax =
                            Tcm(m, std::vector<std::uint8_t>(st.choice.begin(), st.choice.begin() + k.T));
                    }
                    return false;
                }
                if (st.weight + k.ub_increment(d, st.mult) <= budget_best) return false;
                int cmax = d == 0 ? first_max : 2;
                for (int c = 0; c <= cmax; ++c) {
                    int p = k.tri_pairs[d][c];
                    std::int64_t step = k.pw[st.mult[p] + 1] - k.pw[st.mult[p]];
                    st.mult[p]++;
                    st.weight += step;
                    st.choice[d] = static_cast<std::uint8_t>(c);
                    bool stop = rec(d + 1);
                    st.weight -= step;
                    st.mult[p]--;
                    if (stop) return true;
                }
                return false;
            };
            exhausted = rec(0);
            nodes = st.nodes;
            best.store(budget_best);
        } else {
            st.dfs_value(0, best, first_max);
            nodes = st.nodes;
        }
    } else {
        // expand to a frontier of prefixes, then run tasks across threads
        int split_depth = std::min(k.T, 4);
        std::vector<std::vector<std::uint8_t>> prefixes;
        std::vector<std::uint8_t> cur;
        std::function<void(int)> expand = [&](int d) {
            if (d == split_depth) { prefixes.push_back(cur); return; }
            int cmax = d == 0 ? first_max : 2;
            for (int c = 0; c <= cmax; ++c) {
                cur.push_back(static_cast<std::uint8_t>(c));
                expand(d + 1);
                cur.pop_back();
            }
        };
        expand(0);
        std::atomic<size_t> next{0};
        std::atomic<std::uint64_t> node_sum{0};
        auto worker = [&] {
            SearchState st;
            st.k = &k;
            st.budget = 0;
            while (true) {
                size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size()) break;
                st.reset();
                for (int d = 0; d < split_depth; ++d) {
                    int c = prefixes[idx][static_cast<size_t>(d)];
                    int p = k.tri_pairs[d][c];
                    st.weight += k.pw[st.mult[p] + 1] - k.pw[st.mult[p]];
                    st.mult[p]++;
                    st.choice[d] = static_cast<std::uint8_t>(c);
                }
                st.dfs_value(split_depth, best, first_max);
                node_sum += st.nodes;
                st.nodes = 0;
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < want; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        nodes = node_sum.load();
    }

    const std::int64_t v = best.load();
    const BigInt den_scale = ipow(BigInt(alpha_den), static_cast<unsigned>(std::max(0, m - 2)));
    res.value = BigRat(BigInt(v), den_scale);
    res.value_fp = static_cast<double>(res.value);
    res.nodes = nodes;
    res.exact = !exhausted;

    if (exhausted) {
        res.argmax = budget_argmax;
        return res;
    }
    // deterministic argmax: first leaf in lexicographic DFS order hitting v
    res.argmax = seed;
    SearchState st;
    st.k = &k;
    st.budget = 0;
    st.reset();
    st.dfs_scan(0, v, first_max, [&](const Tcm& g) {
        res.argmax = g;
        return true;
    });
    res.nodes += st.nodes;
    return res;
}

bool h_exact_scan_argmaxes(int m, long alpha_num, long alpha_den,
                           const std::function<bool(const Tcm&)>& visit,
                           const HExactOptions& opts) {
    check_args(m, alpha_num, alpha_den, opts);
    HExactOptions vopts = opts;
    vopts.node_budget = 0;
    HExactResult top = h_exact(m, alpha_num, alpha_den, vopts);

    Kernel k;
    k.init(m, alpha_num, alpha_den);
    std::int64_t target = 0;
    {
        // rescale the exact optimum back onto the integer grid
        BigInt num = boost::multiprecision::numerator(top.value) *
                     ipow(BigInt(alpha_den), static_cast<unsigned>(std::max(0, m - 2)));
        BigInt den = boost::multiprecision::denominator(top.value);
        target = static_cast<std::int64_t>(num / den);
    }
    SearchState st;
    st.k = &k;
    st.budget = opts.node_budget;
    st.reset();
    const int first_max = (opts.symmetry && k.T > 0) ? 0 : 2;
    bool found = st.dfs_scan(0, target, first_max, visit);
    if (st.exhausted && !found)
        throw infeasible_size("h_exact_scan_argmaxes: node budget exhausted before a match");
    return found;
}

}  // namespace forb
