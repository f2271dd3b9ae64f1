#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

namespace forb {

// The three complementary column pairs a triple of rows can miss. Picking one
// column from each pair gives the 3x3 matrix B_{i,j,k}; the selector's bit p
// says which member of pair p goes into B.
//
// Columns over a row triple are encoded as 3-bit values (c_i<<2 | c_j<<1 | c_k).
struct TriplePattern {
    enum class Kind : std::uint8_t { Identity, IdentityComplement, Good };

    std::uint8_t selector = 0;
    Kind kind = Kind::Good;
    std::uint8_t forbidden_mask = 0;  // bit v set iff column v is a column of B
    std::uint8_t valid_mask = 0;      // the complementary 5 (or 5) columns

    // For good patterns only: the two 0-implications as (from,to) role pairs,
    // roles 0,1,2 being the triple's sorted positions. They share either a
    // common tail or a common head.
    std::array<std::pair<int, int>, 2> arcs{{{0, 0}, {0, 0}}};
    int shared_role = -1;       // the common endpoint of the two arcs
    bool shared_is_tail = false;
    // Roles of the undirected edge contributed to the TCM (the two roles that
    // are not the shared one), ascending.
    std::array<int, 2> tcm_edge_roles{{-1, -1}};

    bool good() const { return kind == Kind::Good; }
};

// The 8 patterns, indexed by selector. Built once from the truth table: each
// good selector's valid set is matched against the 6 candidate arc pairs and
// must match exactly one; the remaining two selectors must be I and I^c.
const std::array<TriplePattern, 8>& triple_patterns();

// Selector whose forbidden columns equal A1 (arcs role0->role1, role0->role2)
// and A2 (arcs role0->role2, role1->role2).
int selector_A1();
int selector_A2();

// Selectors of I and I^c.
int selector_I();
int selector_Ic();

}  // namespace forb
