#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forb/common.hpp"
#include "forb/tcm.hpp"

namespace forb {

// One row of the H2 dynamic program. Values are exact rationals (integers
// when alpha is an integer); value_fp mirrors them for display. Splits are
// reported smallest-a first; near_ties lists splits within 1e-9 relative of
// the optimum that are not exact ties.
struct H2Entry {
    int m = 0;
    BigRat value;
    double value_fp = 0;
    double normalized = 0;                          // h2 = 2 H2 / (m alpha^m)
    std::vector<std::pair<int, int>> argmax_splits; // exact ties, a <= b
    std::vector<std::pair<int, int>> near_ties;
};

struct H2Table {
    long alpha_num = 2, alpha_den = 1;
    std::vector<H2Entry> rows;  // rows[m-1] for m = 1..m_max
    const H2Entry& at(int m) const { return rows.at(static_cast<size_t>(m - 1)); }
};

// Full DP table of H2(m, alpha) for 1 <= m <= m_max, alpha = num/den >= 1.
H2Table h2_table(int m_max, long alpha_num, long alpha_den = 1);

// The split the lower-bound theorems predict. For m != 6 this is
// (2^k, m - 2^k) with 2^k + 2^(k-1) <= m < 2^k + 2^(k+1). The m = 6 rule in
// the paper is ill-typed (2^3 = 8 > 6), so the DP arbitrates; the note
// records the discrepancy with the literal text.
struct PredictedSplit {
    int m = 0;
    int k = 0;            // exponent for m != 6; -1 when the DP arbitrated
    std::pair<int, int> split;
    bool m6_special = false;
    std::string note;
};
PredictedSplit predicted_split(int m, long alpha_num, long alpha_den = 1);

int k_of_m(int m);  // the unique k with 2^k + 2^(k-1) <= m < 2^k + 2^(k+1), m >= 3

// The explicit 2-recursive construction G(m): power-of-2 first part, except
// m = 6 splits 3+3 (the split the optimal-split theorem proves optimal).
struct SplitNode {
    int m = 0, a = 0, b = 0;  // a = 0 on leaves (m <= 2)
    std::vector<SplitNode> kids;
};
struct BuiltTcm {
    Tcm tcm;
    SplitNode tree;
};
BuiltTcm build_g(int m);

// 2-recursive TCM realizing the DP optimum H2(m, alpha) (smallest-a splits).
Tcm h2_argmax_tcm(int m, long alpha_num, long alpha_den = 1);

// Partial sums g(k, alpha) of 2^(j-1)/alpha^(2^j), and the limit lambda.
double g_partial(int k, double alpha);

struct LambdaResult {
    double value = 0;
    int terms = 0;         // summed indices 1..terms
    double tail_bound = 0; // certified remainder
};
// Throws std::domain_error for alpha <= 1 (the series diverges).
LambdaResult lambda_sum(double alpha, double eps);

// 2 H2 / (m alpha^m) as binary64, computed from the exact value.
double h2_normalized(const BigRat& h2_value, int m, long alpha_num, long alpha_den);

}  // namespace forb
