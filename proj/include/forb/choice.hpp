#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forb/common.hpp"
#include "forb/tcm.hpp"
#include "forb/triple_pattern.hpp"

namespace forb {

// A choice on [m]: one selector (0..7) per unordered row triple.
struct Choice {
    int m = 0;
    TripleTable triples;
    std::vector<std::uint8_t> sel;

    Choice() = default;
    explicit Choice(int m_) : m(m_), triples(m_) { sel.assign(triples.size(), 0); }
    Choice(int m_, std::vector<std::uint8_t> sel_);

    bool is_good() const;
    bool operator==(const Choice& o) const { return m == o.m && sel == o.sel; }

    std::string to_json() const;  // {"m":…, "patterns":{"1,2,3":4,…}}, 1-based keys
    static Choice from_json(const std::string& text);
};

// Directed multigraph D_B(X) of 0-implications: arcs from triples fully
// inside X, two per good triple, none for I/I^c.
struct ImplicationGraph {
    std::vector<int> verts;                    // X, ascending
    std::vector<std::pair<int, int>> arcs;     // multiset of (from,to)
    bool closed = false;                       // closure rules 1-3 applied
};

ImplicationGraph implication_graph(const Choice& b, const std::vector<int>& x);

// Valid (0,1)-columns on X: every triple inside X misses all three columns of
// its pattern. Columns are bitmasks over positions of X (ascending order).
// Guard: |X| <= 24.
std::vector<std::uint32_t> valid_columns(const Choice& b, const std::vector<int>& x);
std::int64_t count_valid_columns(const Choice& b, const std::vector<int>& x);

// c(B,X) for good choices by the strongly-connected-component formula
// n_t + t + 1. Throws not_good_choice if a triple inside X is I or I^c.
std::int64_t c_scc(const Choice& b, const std::vector<int>& x);

// Block decomposition of the closure \bar D_B(X) under the independence
// relation, ordered so all arcs go forward; with special-block marking.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // ordered, actual vertex ids
    std::vector<char> special;             // per block
    int b = 0;                             // blocks of size >= 2
    int s = 0;                             // special blocks
    std::int64_t bound = 0;                // |X| + b - s + 1
    std::int64_t weak_bound = 0;           // |X| + b + 1
};

BlockDecomposition block_decomposition(const Choice& b, const std::vector<int>& x);
std::int64_t block_bound(const Choice& b, const std::vector<int>& x);

// forb(m,r,B) = sum over X of c(B,X) (r-2)^(m-|X|); c via the SCC formula
// when B is good, brute force otherwise. Guard: m <= 20 (2^m subsets).
BigInt forb_from_choice(int m, int r, const Choice& b, int subset_guard = 20);

// Assembles the extremal witness of the separate-count lemma: one column per
// valid support/column combination.
struct ChoiceWitness {
    BigInt value;
    std::vector<std::vector<std::uint8_t>> columns;  // entries 0..r-1
};
ChoiceWitness choice_witness(int m, int r, const Choice& b);

enum class ChoiceSearchMode { All, GoodOnly };

struct ChoiceSearchResult {
    BigInt value = 0;
    Choice argmax;
    bool exact = true;          // false when a budget stopped the scan
    std::uint64_t evaluated = 0;
    std::optional<Tcm> argmax_tcm;  // populated in GoodOnly mode
};

// Maximises forb_from_choice over all (or all good) choices on [m]. The All
// scan enumerates 8^C(m,3) selector tuples; GoodOnly prunes with the TCM
// weight bound from the good-choice analysis.
ChoiceSearchResult forb_via_choices(int m, int r, ChoiceSearchMode mode,
                                    std::uint64_t budget = 0);

// Seeded random scan over N choices; deterministic for a fixed seed.
ChoiceSearchResult forb_via_choices_sample(int m, int r, std::uint64_t n, std::uint64_t seed);

// TCM of a good choice: per triple, the edge between the two roles not shared
// by the implied arcs.
Tcm tcm_of_choice(const Choice& b);

// Good choice realizing a given TCM. For each triple the arc pair shares the
// vertex off the chosen edge; arcs point away from it when it precedes both
// others in `order` (identity by default), into it when it follows both.
// `uniform` reports whether every arc respects the order; only then is the
// choice uniformly directed and the SCC-singleton equality case guaranteed.
struct ChoiceFromTcm {
    Choice choice;
    bool uniform = false;
};
ChoiceFromTcm choice_from_tcm(const Tcm& g, const std::vector<int>& order = {});

}  // namespace forb
