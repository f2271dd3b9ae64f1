#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forb/common.hpp"

namespace forb {

// Triangular choice multigraph: one chosen edge per vertex triple of [m].
// The per-triple choice is 0,1,2 for the edge {a,b}, {a,c}, {b,c} of the
// sorted triple (a,b,c). Edge multiplicities are cached and kept consistent.
struct Tcm {
    int m = 0;
    TripleTable triples;
    std::vector<std::uint8_t> edge_choice;  // per triple index
    std::vector<int> mult;                  // per pair index, C(m,2) entries

    Tcm() = default;
    explicit Tcm(int m_);
    Tcm(int m_, std::vector<std::uint8_t> choices);

    int pair_of_triple(int t) const;  // pair index of the chosen edge of triple t
    void set_choice(int t, int choice);
    std::vector<int> recompute_mult() const;
    bool cache_consistent() const { return mult == recompute_mult(); }

    bool operator==(const Tcm& o) const { return m == o.m && edge_choice == o.edge_choice; }

    std::string to_json() const;  // {"m":…, "edges":{"1,2,3":"1,2",…}}, 1-based
    static Tcm from_json(const std::string& text);
};

// w(G,alpha) = sum over pairs of alpha^multiplicity. Exact integer for
// integral alpha >= 0, binary64 otherwise.
BigInt weight_exact(const Tcm& g, long alpha);
double weight_fp(const Tcm& g, double alpha);

// Maximal proper closed subsets; they partition [m] (m >= 2). For m = 1 the
// single vertex is its own class. Each returned set is re-verified against
// the closed-set predicate.
std::vector<std::vector<int>> closed_sets(const Tcm& g);

// d_j(x) = number of pairs through x with multiplicity exactly j, j = 0..m-2.
std::vector<int> degree_profile(const Tcm& g, int x);

// sum_{j>=t} d_j(x) <= m-1-t for all t. Holds for extremal and single-swap
// locally optimal TCMs; not for arbitrary ones.
bool degree_profile_bound_holds(const Tcm& g, int x);

Tcm random_tcm(int m, Rng& rng);
Tcm relabeled(const Tcm& g, const std::vector<int>& perm);  // vertex relabeling

}  // namespace forb
