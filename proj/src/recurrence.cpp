#include "forb/recurrence.hpp"

#include <cmath>
#include <stdexcept>

namespace forb {

namespace {

BigRat rat_pow(const BigRat& base, unsigned e) {
    BigRat r = 1;
    BigRat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double rat_to_double(const BigRat& r) {
    // splitting numerator and denominator keeps both inside double range for
    // every m this toolkit handles
    return static_cast<double>(boost::multiprecision::numerator(r)) /
           static_cast<double>(boost::multiprecision::denominator(r));
}

}  // namespace

H2Table h2_table(int m_max, long alpha_num, long alpha_den) {
    if (m_max < 1) throw std::invalid_argument("h2_table: m_max >= 1");
    if (alpha_den < 1 || alpha_num < alpha_den)
        throw std::invalid_argument("h2_table: alpha >= 1 required");
    const BigRat alpha(alpha_num, alpha_den);

    H2Table table;
    table.alpha_num = alpha_num;
    table.alpha_den = alpha_den;
    table.rows.resize(static_cast<size_t>(m_max));

    std::vector<BigRat> h2(static_cast<size_t>(m_max) + 1);
    std::vector<BigRat> apow(static_cast<size_t>(m_max) + 1);
    for (int j = 0; j <= m_max; ++j) apow[j] = rat_pow(alpha, static_cast<unsigned>(j));

    for (int m = 1; m <= m_max; ++m) {
        H2Entry e;
        e.m = m;
        if (m <= 2) {
            h2[m] = m == 2 ? 1 : 0;
            e.value = h2[m];
        } else {
            BigRat best = -1;
            std::vector<std::pair<int, int>> ties;
            for (int a = 1; a <= m / 2; ++a) {
                int b = m - a;
                BigRat v = h2[a] * apow[b] + h2[b] * apow[a] + a * b;
                if (v > best) {
                    best = v;
                    ties.assign(1, {a, b});
                } else if (v == best) {
                    ties.emplace_back(a, b);
                }
            }
            h2[m] = best;
            e.value = best;
            e.argmax_splits = std::move(ties);
            // near-ties within 1e-9 relative, excluding exact ties
            for (int a = 1; a <= m / 2; ++a) {
                int b = m - a;
                BigRat v = h2[a] * apow[b] + h2[b] * apow[a] + a * b;
                if (v == best) continue;
                double gap = rat_to_double(best - v);
                if (gap <= 1e-9 * std::max(1.0, rat_to_double(best)))
                    e.near_ties.emplace_back(a, b);
            }
        }
        e.value_fp = rat_to_double(e.value);
        e.normalized = h2_normalized(e.value, m, alpha_num, alpha_den);
        table.rows[static_cast<size_t>(m - 1)] = std::move(e);
    }
    return table;
}

int k_of_m(int m) {
    if (m < 3) throw std::invalid_argument("k_of_m: m >= 3 required");
    for (int k = 0; k < 31; ++k)
        if ((1 << k) + (1 << k) / 2 <= m && m < (1 << k) + (1 << (k + 1))) return k;
    throw std::logic_error("k_of_m: unreachable");
}

PredictedSplit predicted_split(int m, long alpha_num, long alpha_den) {
    if (m < 3) throw std::invalid_argument("predicted_split: m >= 3 required");
    if (alpha_num < 2 * alpha_den) throw std::domain_error("predicted_split: alpha >= 2 required");
    PredictedSplit out;
    out.m = m;
    if (m != 6) {
        out.k = k_of_m(m);
        int a = 1 << out.k;
        out.split = {std::min(a, m - a), std::max(a, m - a)};
        return out;
    }
    // the text's k(6) values (3, or 4 for alpha >= sqrt(2)+1) do not type-check
    // as 2^k <= 6; let the DP decide between the candidate splits
    out.m6_special = true;
    out.k = -1;
    H2Table t = h2_table(6, alpha_num, alpha_den);
    out.split = t.at(6).argmax_splits.front();
    out.note = "paper text sets k(6)=3 (or 4 for alpha>=sqrt(2)+1) with 2^k > 6; "
               "returning the DP-confirmed split instead";
    return out;
}

namespace {

// overlay `sub` (a TCM on [sub.m]) onto vertices offset..offset+sub.m-1 of g
void overlay(Tcm& g, const Tcm& sub, int offset) {
    for (int t = 0; t < sub.triples.size(); ++t) {
        const auto& tr = sub.triples.list[t];
        int idx = g.triples.index(tr[0] + offset, tr[1] + offset, tr[2] + offset);
        g.set_choice(idx, sub.edge_choice[t]);
    }
}

// cross triples of the bipartition [0,a) | [a,m): two vertices on one side
// choose that side's edge
void add_cross(Tcm& g, int a) {
    const int m = g.m;
    for (int t = 0; t < g.triples.size(); ++t) {
        const auto& tr = g.triples.list[t];
        int left = (tr[0] < a) + (tr[1] < a) + (tr[2] < a);
        if (left == 3 || left == 0) continue;
        // tr is sorted, so the left-side vertices are a prefix
        g.set_choice(t, left == 2 ? 0 : 2);  // {tr0,tr1} if 2 left, else {tr1,tr2}
    }
}

Tcm recursive_tcm(int m, const std::vector<int>& first_part, SplitNode* tree) {
    Tcm g(m);
    if (tree) { tree->m = m; tree->a = 0; tree->b = 0; }
    if (m <= 2) return g;
    int a = first_part[static_cast<size_t>(m)];
    SplitNode* lk = nullptr;
    SplitNode* rk = nullptr;
    if (tree) {
        tree->a = a;
        tree->b = m - a;
        tree->kids.resize(2);
        lk = &tree->kids[0];
        rk = &tree->kids[1];
    }
    Tcm g1 = recursive_tcm(a, first_part, lk);
    Tcm g2 = recursive_tcm(m - a, first_part, rk);
    overlay(g, g1, 0);
    overlay(g, g2, a);
    add_cross(g, a);
    return g;
}

}  // namespace

BuiltTcm build_g(int m) {
    if (m < 1) throw std::invalid_argument("build_g: m >= 1 required");
    std::vector<int> part(static_cast<size_t>(m) + 1, 0);
    for (int n = 3; n <= m; ++n) part[static_cast<size_t>(n)] = n == 6 ? 3 : (1 << k_of_m(n));
    BuiltTcm out{Tcm(1), SplitNode{}};
    out.tcm = recursive_tcm(m, part, &out.tree);
    return out;
}

Tcm h2_argmax_tcm(int m, long alpha_num, long alpha_den) {
    if (m < 1) throw std::invalid_argument("h2_argmax_tcm: m >= 1 required");
    H2Table t = h2_table(std::max(m, 1), alpha_num, alpha_den);
    std::vector<int> part(static_cast<size_t>(m) + 1, 0);
    for (int n = 3; n <= m; ++n) part[static_cast<size_t>(n)] = t.at(n).argmax_splits.front().first;
    return recursive_tcm(m, part, nullptr);
}

double g_partial(int k, double alpha) {
    if (alpha <= 0) throw std::domain_error("g_partial: alpha must be nonzero positive");
    double s = 0;
    for (int j = 1; j <= k; ++j) s += std::ldexp(1.0, j - 1) / std::pow(alpha, std::ldexp(1.0, j));
    return s;
}

LambdaResult lambda_sum(double alpha, double eps) {
    if (alpha <= 1) throw std::domain_error("lambda: series diverges for alpha <= 1");
    if (eps <= 0) throw std::invalid_argument("lambda: eps > 0 required");
    LambdaResult out;
    for (int j = 1; j < 64; ++j) {
        double term = std::ldexp(1.0, j - 1) / std::pow(alpha, std::ldexp(1.0, j));
        out.value += term;
        out.terms = j;
        // terms beyond j+1 shrink by factors 2/alpha^(2^(j+1)) or faster
        double next = std::ldexp(1.0, j) / std::pow(alpha, std::ldexp(1.0, j + 1));
        double q = 2.0 / std::pow(alpha, std::ldexp(1.0, j + 1));
        if (q < 1) {
            double tail = next / (1 - q);
            if (next < eps / 2 && tail < eps / 2) {
                out.tail_bound = tail;
                return out;
            }
        }
    }
    throw std::runtime_error("lambda: did not certify the tail within 64 terms");
}

double h2_normalized(const BigRat& h2_value, int m, long alpha_num, long alpha_den) {
    BigRat denom = BigRat(m) * rat_pow(BigRat(alpha_num, alpha_den), static_cast<unsigned>(m));
    return rat_to_double(BigRat(2) * h2_value / denom);
}

}  // namespace forb
