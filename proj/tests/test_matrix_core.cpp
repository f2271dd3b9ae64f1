#include <doctest.h>

#include <algorithm>
#include <random>

#include "forb/containment.hpp"
#include "forb/forb_search.hpp"
#include "forb/rmatrix.hpp"

using namespace forb;

namespace {

RMatrix at_most_one_zero(int m) {
    // all (0,1)-columns with at most one 0; avoids M
    RMatrix a(m, 2, {});
    a.cols.emplace_back(static_cast<size_t>(m), 1);
    for (int i = 0; i < m; ++i) {
        Column c(static_cast<size_t>(m), 1);
        c[static_cast<size_t>(i)] = 0;
        a.cols.push_back(std::move(c));
    }
    return a;
}

}  // namespace

TEST_CASE("pattern builders") {
    CHECK(pattern_M().rows == 3);
    CHECK(pattern_M().num_cols() == 2);
    CHECK(pattern_K(3).num_cols() == 8);
    CHECK(pattern_K(3).is_simple());
    CHECK(pattern_K(2).num_cols() == 4);
    RMatrix f;
    CHECK(pattern_by_name("Ic", f));
    CHECK(f.cols[0] == Column{0, 1, 1});
    CHECK(pattern_by_name("K3", f));
    CHECK(!pattern_by_name("nope", f));
}

TEST_CASE("rmatrix json round trip") {
    RMatrix m = pattern_A2();
    RMatrix back = RMatrix::from_json(m.to_json());
    CHECK(back.rows == m.rows);
    CHECK(back.alphabet == m.alphabet);
    CHECK(back.cols == m.cols);
    CHECK_THROWS_AS(RMatrix(2, 2, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("containment basics") {
    RMatrix m = pattern_M();
    CHECK(contains_config(m, m));                       // identity
    CHECK_FALSE(contains_config(at_most_one_zero(4), m));  // the lower-bound construction
    CHECK(contains_config(pattern_K(3), m));            // K3 contains everything 3x2 over {0,1}
    // degenerate patterns are contained everywhere
    RMatrix empty(0, 2, {});
    CHECK(contains_config(m, empty));
    // taller pattern never fits
    RMatrix two(2, 2, {{0, 1}, {1, 0}});
    CHECK_FALSE(contains_config(two, m));
}

TEST_CASE("containment handles repeated pattern columns") {
    RMatrix f(1, 2, {{1}, {1}});  // needs two distinct columns, both 1
    RMatrix one(1, 2, {{1}});
    RMatrix two(1, 2, {{1}, {1}});  // not simple, but containment only needs distinct indices
    CHECK_FALSE(contains_config(one, f));
    CHECK(contains_config(two, f));
}

TEST_CASE("containment permutation invariance and monotonicity") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        int m = 3 + static_cast<int>(rng() % 2);
        int nc = 1 + static_cast<int>(rng() % 6);
        RMatrix a(m, 3, {});
        for (int j = 0; j < nc; ++j) {
            Column c(static_cast<size_t>(m));
            for (auto& e : c) e = static_cast<std::uint8_t>(rng() % 3);
            a.cols.push_back(std::move(c));
        }
        RMatrix f = it % 2 ? pattern_M() : pattern_A1();
        bool base = contains_config(a, f);

        std::vector<int> rp(static_cast<size_t>(m)), cp(static_cast<size_t>(nc));
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        CHECK(contains_config(a.permuted(rp, cp), f) == base);

        if (base) {
            RMatrix bigger = a;
            Column extra(static_cast<size_t>(m));
            for (auto& e : extra) e = static_cast<std::uint8_t>(rng() % 3);
            bigger.cols.push_back(extra);
            CHECK(contains_config(bigger, f));  // monotone in columns
            RMatrix taller(m + 1, 3, {});
            for (const Column& c : a.cols) {
                Column c2 = c;
                c2.push_back(static_cast<std::uint8_t>(rng() % 3));
                taller.cols.push_back(std::move(c2));
            }
            CHECK(contains_config(taller, f));  // monotone in rows
        }
    }
}

TEST_CASE("forb_exact small instances") {
    CHECK(forb_exact(2, 2, pattern_K(2)).value == 3);   // Sauer: C(2,1)+C(2,0)
    CHECK(forb_exact(2, 2, pattern_M()).value == 4);    // pattern taller than the matrix
    CHECK(forb_exact(2, 3, pattern_M()).value == 9);
    ForbResult r = forb_exact(3, 3, pattern_M());
    CHECK(r.value == 24);
    CHECK(r.exact);
    CHECK(r.witness.num_cols() == 24);
    CHECK(r.witness.is_simple());
    CHECK_FALSE(contains_config(r.witness, pattern_M()));
}

TEST_CASE("forb_exact matches the Sauer formula") {
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 4; ++m) {
            ForbResult r = forb_exact(m, 2, pattern_K(k));
            CHECK(BigInt(r.value) == sauer_value(m, k));
        }
}

TEST_CASE("forb_exact guard and budget") {
    CHECK_THROWS_AS(forb_exact(30, 2, pattern_M()), infeasible_size);
    ForbOptions o;
    o.node_budget = 5;
    ForbResult r = forb_exact(3, 3, pattern_M(), o);
    CHECK_FALSE(r.exact);
    CHECK(r.value <= 24);
    CHECK_FALSE(contains_config(r.witness, pattern_M()));
}

TEST_CASE("forb_exact stays inside the coarse sandwich") {
    // m(r-1)^{m-1} + (r-1)^m <= forb <= 3/2 m(r-1)^{m-1} + (r-1)^m
    struct Case { int m, r; };
    for (Case c : {Case{2, 3}, Case{3, 3}, Case{3, 4}}) {
        long long lo = c.m * static_cast<long long>(std::pow(c.r - 1, c.m - 1)) +
                       static_cast<long long>(std::pow(c.r - 1, c.m));
        long long hi = 3 * c.m * static_cast<long long>(std::pow(c.r - 1, c.m - 1)) / 2 +
                       static_cast<long long>(std::pow(c.r - 1, c.m));
        ForbResult r = forb_exact(c.m, c.r, pattern_M());
        CHECK(r.value >= lo);
        CHECK(r.value <= hi);
    }
}
