#include "forb/forb_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "forb/containment.hpp"

namespace forb {

namespace {

std::vector<Column> candidate_columns(int m, int r) {
    std::vector<Column> out;
    Column allmax(static_cast<size_t>(m), static_cast<std::uint8_t>(r - 1));
    out.push_back(allmax);
    Column c(static_cast<size_t>(m), 0);
    while (true) {
        if (c != allmax) out.push_back(c);
        int i = m - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == r - 1) c[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        c[static_cast<size_t>(i)]++;
    }
    return out;
}

// For two-column patterns, containment is a pairwise predicate, so conflicts
// can be tabulated once and the incremental check becomes a bitset scan.
struct PairConflicts {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> rows;

    PairConflicts(const std::vector<Column>& cand, const RMatrix& f, int m, int r) {
        n = static_cast<int>(cand.size());
        size_t words = static_cast<size_t>((n + 63) / 64);
        rows.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(words, 0));
        RMatrix two(m, r, {});
        two.cols.resize(2);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                two.cols[0] = cand[static_cast<size_t>(i)];
                two.cols[1] = cand[static_cast<size_t>(j)];
                if (contains_config(two, f)) {
                    rows[static_cast<size_t>(i)][static_cast<size_t>(j) / 64] |= 1ULL << (j % 64);
                    rows[static_cast<size_t>(j)][static_cast<size_t>(i) / 64] |= 1ULL << (i % 64);
                }
            }
        }
    }

    bool clashes(const std::vector<std::uint64_t>& chosen, int c) const {
        const auto& row = rows[static_cast<size_t>(c)];
        for (size_t w = 0; w < row.size(); ++w)
            if (row[w] & chosen[w]) return true;
        return false;
    }
};

}  // namespace

ForbResult forb_exact(int m, int r, const RMatrix& f, const ForbOptions& opts) {
    if (m < 0 || r < 2) throw std::invalid_argument("forb_exact: need m >= 0 and r >= 2");
    double total = std::pow(static_cast<double>(r), m);
    if (total > static_cast<double>(opts.candidate_guard))
        throw infeasible_size("forb_exact: r^m exceeds the candidate guard");

    std::vector<Column> cand = candidate_columns(m, r);
    const int n = static_cast<int>(cand.size());
    ForbResult res;
    res.witness = RMatrix(m, r, {});

    // tabulated pair conflicts pay off only while the table stays small
    const bool pairwise = f.num_cols() == 2 && f.rows >= 1 && n <= 4096;
    PairConflicts conflicts = pairwise ? PairConflicts(cand, f, m, r)
                                       : PairConflicts({}, RMatrix(0, 2, {}), 0, 2);

    RMatrix cur(m, r, {});
    std::vector<int> cur_idx;
    std::vector<std::uint64_t> chosen(static_cast<size_t>((n + 63) / 64), 0);
    std::uint64_t nodes = 0;
    bool stopped = false;
    long long best = -1;
    std::vector<int> best_idx;

    std::function<void(int)> dfs = [&](int i) {
        if (stopped) return;
        if (opts.node_budget && ++nodes > opts.node_budget) { stopped = true; return; }
        if (static_cast<long long>(cur_idx.size()) + (n - i) <= best) return;
        if (i == n) {
            if (static_cast<long long>(cur_idx.size()) > best) {
                best = static_cast<long long>(cur_idx.size());
                best_idx = cur_idx;
            }
            return;
        }
        bool ok;
        if (pairwise) {
            ok = !conflicts.clashes(chosen, i);
        } else {
            cur.cols.push_back(cand[static_cast<size_t>(i)]);
            ok = !contains_config_using(cur, f, static_cast<int>(cur.cols.size()) - 1);
            cur.cols.pop_back();
        }
        if (ok) {
            cur_idx.push_back(i);
            cur.cols.push_back(cand[static_cast<size_t>(i)]);
            chosen[static_cast<size_t>(i) / 64] |= 1ULL << (i % 64);
            dfs(i + 1);
            chosen[static_cast<size_t>(i) / 64] &= ~(1ULL << (i % 64));
            cur.cols.pop_back();
            cur_idx.pop_back();
        }
        dfs(i + 1);
    };
    dfs(0);

    res.value = std::max(best, 0LL);
    res.exact = !stopped;
    res.nodes = nodes;
    for (int i : best_idx) res.witness.cols.push_back(cand[static_cast<size_t>(i)]);
    return res;
}

BigInt sauer_value(int m, int k) {
    BigInt s = 0;
    for (int i = 0; i <= k - 1; ++i) s += BigInt(binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)));
    return s;
}

}  // namespace forb
