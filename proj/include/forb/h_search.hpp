#pragma once

#include <cstdint>
#include <functional>

#include "forb/common.hpp"
#include "forb/tcm.hpp"

namespace forb {

struct HExactOptions {
    std::uint64_t node_budget = 0;  // 0 = unlimited; a finite budget forces one thread
    int threads = 0;                // 0 = FORBCFG_THREADS / hardware
    bool symmetry = true;           // fix the first triple's choice to edge {1,2}
    bool allow_m7 = false;          // 3^35 states; off unless explicitly requested
};

struct HExactResult {
    BigRat value;       // exact H(m, alpha) for rational alpha
    double value_fp = 0;
    Tcm argmax;         // lexicographically first maximiser (within the symmetry class)
    bool exact = true;  // false when the node budget stopped the search
    std::uint64_t nodes = 0;
};

// Exact maximum of w(G, alpha) over all TCMs on [m], alpha = num/den >= 1.
// DFS over triples in lexicographic order with an admissible optimistic bound;
// all weights are scaled integers, so comparisons are exact for any rational
// alpha. m <= 6 unless allow_m7.
HExactResult h_exact(int m, long alpha_num, long alpha_den = 1, const HExactOptions& opts = {});

// Visits maximisers of w(G, alpha) (ties kept, pruning only strictly below the
// optimum) until `visit` returns true; returns whether a visit did. The scan
// runs inside the same symmetry class as h_exact.
bool h_exact_scan_argmaxes(int m, long alpha_num, long alpha_den,
                           const std::function<bool(const Tcm&)>& visit,
                           const HExactOptions& opts = {});

}  // namespace forb
