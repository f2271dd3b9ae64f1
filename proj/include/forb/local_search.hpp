#pragma once

#include <cstdint>

#include "forb/common.hpp"
#include "forb/tcm.hpp"

namespace forb {

struct LocalSearchOptions {
    std::uint64_t iters = 200000;  // total accepted moves across all starts
    int random_restarts = 4;
    bool seed_with_construction = true;  // also climb from the recursive construction
};

struct LocalSearchResult {
    Tcm tcm;
    BigRat weight;
    double weight_fp = 0;
    std::uint64_t moves_single = 0;
    std::uint64_t moves_pair = 0;
    std::uint64_t moves_chain = 0;
};

// Strict hill climbing over {single edge reassignment, the paired swap, the
// consecutive-chain swap}, restarted from the input, the recursive
// construction, and seeded random TCMs. The result never weighs less than the
// input. alpha = num/den >= 1, exact arithmetic throughout.
LocalSearchResult local_search(const Tcm& g, long alpha_num, long alpha_den, std::uint64_t seed,
                               const LocalSearchOptions& opts = {});

}  // namespace forb
