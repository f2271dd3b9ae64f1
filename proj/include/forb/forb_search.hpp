#pragma once

#include <cstdint>

#include "forb/rmatrix.hpp"

namespace forb {

struct ForbOptions {
    std::uint64_t node_budget = 0;      // 0 = unlimited
    std::uint32_t candidate_guard = 1u << 20;  // refuse r^m above this
};

struct ForbResult {
    long long value = 0;
    RMatrix witness;
    bool exact = true;  // false when the node budget made this a lower bound
    std::uint64_t nodes = 0;
};

// Exact forb(m, r, f): maximum number of columns of a simple m-rowed r-matrix
// avoiding f, by depth-first include/exclude over the r^m candidate columns
// (all-(r-1) column first, then lexicographic) with incremental containment
// pruning and the best-so-far cardinality bound.
ForbResult forb_exact(int m, int r, const RMatrix& f, const ForbOptions& opts = {});

// Sauer bound: sum_{i<k} C(m,i), the exact forb(m, 2, K_k).
BigInt sauer_value(int m, int k);

}  // namespace forb
