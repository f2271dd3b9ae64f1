#include "forb/containment.hpp"

#include <algorithm>
#include <vector>

namespace forb {
namespace {

// Kuhn augmenting path over the f-column -> a-column compatibility relation.
struct Matcher {
    int nf, na;
    const std::vector<std::vector<char>>& compat;
    std::vector<int> match_a;  // a-col -> f-col or -1
    std::vector<char> vis;

    Matcher(int nf_, int na_, const std::vector<std::vector<char>>& c)
        : nf(nf_), na(na_), compat(c), match_a(na_, -1) {}

    bool augment(int u) {
        for (int v = 0; v < na; ++v) {
            if (!compat[u][v] || vis[v]) continue;
            vis[v] = 1;
            if (match_a[v] == -1 || augment(match_a[v])) {
                match_a[v] = u;
                return true;
            }
        }
        return false;
    }

    bool perfect_on_f(int forced_f = -1, int forced_a = -1) {
        if (forced_f >= 0) match_a[forced_a] = forced_f;
        for (int u = 0; u < nf; ++u) {
            if (u == forced_f) continue;
            vis.assign(na, 0);
            if (forced_a >= 0) vis[forced_a] = 1;
            if (!augment(u)) return false;
        }
        return true;
    }
};

bool check_row_order(const RMatrix& a, const RMatrix& f, const std::vector<int>& rows, int forced_col) {
    const int nf = f.num_cols(), na = a.num_cols(), k = f.rows;
    std::vector<std::vector<char>> compat(nf, std::vector<char>(na, 0));
    for (int u = 0; u < nf; ++u) {
        const Column& fc = f.cols[u];
        for (int v = 0; v < na; ++v) {
            const Column& ac = a.cols[v];
            bool ok = true;
            for (int t = 0; t < k; ++t)
                if (fc[t] != ac[rows[t]]) { ok = false; break; }
            compat[u][v] = ok;
        }
    }
    if (forced_col < 0) {
        Matcher m(nf, na, compat);
        return m.perfect_on_f();
    }
    for (int u = 0; u < nf; ++u) {
        if (!compat[u][forced_col]) continue;
        Matcher m(nf, na, compat);
        if (m.perfect_on_f(u, forced_col)) return true;
    }
    return false;
}

bool contains_impl(const RMatrix& a, const RMatrix& f, int forced_col) {
    if (f.rows == 0 || f.num_cols() == 0) return forced_col < 0;  // degenerate f
    if (f.rows > a.rows || f.num_cols() > a.num_cols()) return false;

    // all ordered selections of f.rows distinct rows of a
    std::vector<int> comb(f.rows);
    for (int i = 0; i < f.rows; ++i) comb[i] = i;
    while (true) {
        std::vector<int> perm = comb;
        std::sort(perm.begin(), perm.end());
        do {
            if (check_row_order(a, f, perm, forced_col)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));

        int i = f.rows - 1;
        while (i >= 0 && comb[i] == a.rows - f.rows + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < f.rows; ++j) comb[j] = comb[j - 1] + 1;
    }
    return false;
}

}  // namespace

bool contains_config(const RMatrix& a, const RMatrix& f) { return contains_impl(a, f, -1); }

bool contains_config_using(const RMatrix& a, const RMatrix& f, int forced_col) {
    if (f.rows == 0 || f.num_cols() == 0) return true;
    return contains_impl(a, f, forced_col);
}

}  // namespace forb
