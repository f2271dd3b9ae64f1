#include <doctest.h>

#include <random>
#include <set>

#include "forb/choice.hpp"
#include "forb/containment.hpp"
#include "forb/recurrence.hpp"
#include "forb/rmatrix.hpp"

using namespace forb;

namespace {

Choice single_triple_choice(int sel) {
    Choice b(3);
    b.sel[0] = static_cast<std::uint8_t>(sel);
    return b;
}

std::vector<int> good_selectors() {
    std::vector<int> g;
    for (int s = 0; s < 8; ++s)
        if (triple_patterns()[s].good()) g.push_back(s);
    return g;
}

}  // namespace

TEST_CASE("selector table shape") {
    int n_good = 0;
    for (const auto& p : triple_patterns()) {
        if (p.good()) {
            ++n_good;
            CHECK(__builtin_popcount(p.valid_mask) == 5);
        }
        CHECK(__builtin_popcount(p.forbidden_mask) == 3);
    }
    CHECK(n_good == 6);
    CHECK(selector_I() != selector_Ic());
}

TEST_CASE("A1 and A2 arc orientation follows the worked cases") {
    const auto& a1 = triple_patterns()[static_cast<size_t>(selector_A1())];
    REQUIRE(a1.good());
    CHECK(a1.shared_role == 0);
    CHECK(a1.shared_is_tail);  // arcs i->j and i->k
    const auto& a2 = triple_patterns()[static_cast<size_t>(selector_A2())];
    REQUIRE(a2.good());
    CHECK(a2.shared_role == 2);
    CHECK_FALSE(a2.shared_is_tail);  // arcs i->k and j->k
}

TEST_CASE("truth-table semantics: valid iff both implications hold") {
    for (const auto& p : triple_patterns()) {
        if (!p.good()) continue;
        for (int v = 0; v < 8; ++v) {
            bool avoid = !((p.forbidden_mask >> v) & 1);
            bool arcs_ok = true;
            for (const auto& [from, to] : p.arcs) {
                int cf = (v >> (2 - from)) & 1, ct = (v >> (2 - to)) & 1;
                if (cf == 0 && ct != 0) arcs_ok = false;
            }
            CHECK(avoid == arcs_ok);
        }
    }
}

TEST_CASE("valid column counts on a single triple") {
    for (int s = 0; s < 8; ++s) {
        Choice b = single_triple_choice(s);
        CHECK(count_valid_columns(b, {0, 1, 2}) == 5);  // 8 minus 3 forbidden
        CHECK(count_valid_columns(b, {0, 1}) == 4);
        CHECK(count_valid_columns(b, {2}) == 2);
        CHECK(count_valid_columns(b, {}) == 1);
    }
}

TEST_CASE("c_scc on a single good triple and small subsets") {
    Choice b = single_triple_choice(selector_A1());
    CHECK(c_scc(b, {0, 1, 2}) == 5);
    CHECK(c_scc(b, {0, 1}) == 4);
    CHECK(c_scc(b, {1}) == 2);
    Choice bad = single_triple_choice(selector_I());
    CHECK_THROWS_AS(c_scc(bad, {0, 1, 2}), not_good_choice);
    CHECK(c_scc(bad, {0, 1}) == 4);  // no I-triple inside X
}

TEST_CASE("uniformly directed choices have all-singleton components") {
    // built from the recursive construction, every subset realizes n+|X|+1
    for (int m : {4, 5}) {
        ChoiceFromTcm cf = choice_from_tcm(build_g(m).tcm);
        REQUIRE(cf.uniform);
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> x;
            for (int v = 0; v < m; ++v)
                if (mask >> v & 1) x.push_back(v);
            ImplicationGraph d = implication_graph(cf.choice, x);
            std::set<std::pair<int, int>> distinct(d.arcs.begin(), d.arcs.end());
            std::int64_t n = 0;
            for (size_t i = 0; i < x.size(); ++i)
                for (size_t j = i + 1; j < x.size(); ++j)
                    if (!distinct.count({x[i], x[j]}) && !distinct.count({x[j], x[i]})) ++n;
            CHECK(c_scc(cf.choice, x) == n + static_cast<std::int64_t>(x.size()) + 1);
        }
    }
}

TEST_CASE("implication graph arc count for good choices") {
    Choice b(5);
    for (auto& s : b.sel) s = static_cast<std::uint8_t>(selector_A2());
    std::vector<int> x{0, 1, 3, 4};
    ImplicationGraph d = implication_graph(b, x);
    CHECK(d.arcs.size() == 2 * binomial(4, 3));
}

TEST_CASE("block bound on a single A1 triple") {
    // arcs i->j and i->k leave j,k independent: blocks {i}, {j,k}
    Choice good = single_triple_choice(selector_A1());
    BlockDecomposition bd = block_decomposition(good, {0, 1, 2});
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.b == 1);
    CHECK(bd.s == 0);
    CHECK(bd.bound == 5);
    CHECK(count_valid_columns(good, {0, 1, 2}) == 5);
    CHECK(c_scc(good, {0, 1, 2}) == 5);
}

TEST_CASE("block bound dominates brute force on random choices") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 3000; ++it) {
        int m = 4 + static_cast<int>(rng() % 2);
        Choice b(m);
        for (auto& s : b.sel) s = static_cast<std::uint8_t>(rng() % 8);
        std::vector<int> x;
        for (int v = 0; v < m; ++v)
            if (rng() & 1) x.push_back(v);
        BlockDecomposition bd = block_decomposition(b, x);
        std::int64_t c = count_valid_columns(b, x);
        CHECK(c <= bd.bound);
        CHECK(bd.bound <= bd.weak_bound);
    }
}

TEST_CASE("block decomposition of an identity triple") {
    Choice b = single_triple_choice(selector_I());
    BlockDecomposition bd = block_decomposition(b, {0, 1, 2});
    CHECK(bd.blocks.size() == 1);  // no arcs at all: one block of size 3
    CHECK(bd.b == 1);
    CHECK(bd.s == 0);
    CHECK(bd.bound == 5);
    CHECK(count_valid_columns(b, {0, 1, 2}) == 5);
}

TEST_CASE("forb_from_choice worked examples") {
    Choice b = single_triple_choice(selector_A1());
    CHECK(forb_from_choice(3, 3, b) == 24);   // 1 + 3*2 + 3*4 + 5
    CHECK(forb_from_choice(3, 4, b) == 61);   // 8 + 6*4 + 12*2 + 5
    Choice none(2);
    CHECK(forb_from_choice(2, 5, none) == 25);  // no triples: all r^2 columns
    CHECK(forb_from_choice(2, 3, none) == 9);
}

TEST_CASE("witness construction realizes the separate count") {
    Choice b = single_triple_choice(selector_A1());
    ChoiceWitness w = choice_witness(3, 3, b);
    CHECK(w.value == forb_from_choice(3, 3, b));
    RMatrix a(3, 3, {});
    a.cols = w.columns;
    CHECK(a.is_simple());
    CHECK_FALSE(contains_config(a, pattern_M()));
}

TEST_CASE("forb_via_choices") {
    ChoiceSearchResult r33 = forb_via_choices(3, 3, ChoiceSearchMode::All);
    CHECK(r33.value == 24);
    CHECK(r33.evaluated == 8);
    ChoiceSearchResult r34 = forb_via_choices(3, 4, ChoiceSearchMode::All);
    CHECK(r34.value == 61);
    ChoiceSearchResult g33 = forb_via_choices(3, 3, ChoiceSearchMode::GoodOnly);
    CHECK(g33.value == 24);
    CHECK(g33.argmax.is_good());
    REQUIRE(g33.argmax_tcm.has_value());
    CHECK(g33.argmax_tcm->m == 3);
    CHECK_THROWS_AS(forb_via_choices(5, 3, ChoiceSearchMode::All), infeasible_size);
}

TEST_CASE("forb_via_choices sampling is deterministic") {
    ChoiceSearchResult a = forb_via_choices_sample(4, 3, 200, 42);
    ChoiceSearchResult b = forb_via_choices_sample(4, 3, 200, 42);
    CHECK(a.value == b.value);
    CHECK(a.argmax == b.argmax);
    CHECK_FALSE(a.exact);
    CHECK(a.value <= 60);
}

TEST_CASE("choice json round trip") {
    std::mt19937_64 rng(5);
    Choice b(5);
    for (auto& s : b.sel) s = static_cast<std::uint8_t>(rng() % 8);
    Choice back = Choice::from_json(b.to_json());
    CHECK(back == b);
}

TEST_CASE("choice_from_tcm on the 3-vertex TCM choosing edge {1,2}") {
    Tcm g(3);
    g.set_choice(0, 0);  // edge {0,1}: the remaining vertex 2 is the shared head
    ChoiceFromTcm cf = choice_from_tcm(g);
    CHECK(cf.uniform);
    const auto& p = triple_patterns()[cf.choice.sel[0]];
    CHECK(p.shared_role == 2);
    CHECK_FALSE(p.shared_is_tail);  // arcs 0->2 and 1->2
    CHECK(tcm_of_choice(cf.choice) == g);
}

TEST_CASE("choice_from_tcm round trips on the recursive construction") {
    for (int m = 2; m <= 6; ++m) {
        Tcm g = build_g(m).tcm;
        ChoiceFromTcm cf = choice_from_tcm(g);
        CHECK(cf.uniform);
        if (m >= 3) CHECK(tcm_of_choice(cf.choice) == g);
        if (m == 4) {
            // forb equals base + w(G(4),2) through the uniformly directed choice
            CHECK(forb_from_choice(4, 3, cf.choice) == BigInt(16 + 32) + weight_exact(g, 2));
        }
    }
}

TEST_CASE("generalized choice_from_tcm is cross-checked against brute force") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 50; ++it) {
        int m = 4 + static_cast<int>(rng() % 2);
        Rng r2(rng());
        Tcm g = random_tcm(m, r2);
        ChoiceFromTcm cf = choice_from_tcm(g);
        CHECK(tcm_of_choice(cf.choice) == g);  // the TCM is always reproduced
        // equality of c_scc and brute force holds for every good choice, so the
        // unverified part is only whether the uniform-direction shortcut applies
        for (int probe = 0; probe < 8; ++probe) {
            std::vector<int> x;
            for (int v = 0; v < m; ++v)
                if (r2() & 1) x.push_back(v);
            CHECK(c_scc(cf.choice, x) == count_valid_columns(cf.choice, x));
        }
    }
}
