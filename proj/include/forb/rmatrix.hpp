#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forb/common.hpp"

namespace forb {

using Column = std::vector<std::uint8_t>;

// An m-rowed matrix over the alphabet {0,..,r-1}, stored column-major.
// Column order carries no meaning for containment; it is kept only so
// witnesses and file round-trips are stable.
struct RMatrix {
    int rows = 0;
    int alphabet = 2;
    std::vector<Column> cols;

    RMatrix() = default;
    RMatrix(int rows_, int alphabet_, std::vector<Column> cols_ = {});

    int num_cols() const { return static_cast<int>(cols.size()); }
    bool is_simple() const;
    void check_entries() const;  // throws std::invalid_argument on bad entry

    RMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

    std::string to_json() const;
    static RMatrix from_json(const std::string& text);
};

// The paper's named patterns.
RMatrix pattern_M();        // 3x2: columns (0,0,1) and (1,1,0)
RMatrix pattern_A1();       // 3x3
RMatrix pattern_A2();       // 3x3
RMatrix pattern_I();        // 3x3 identity
RMatrix pattern_Ic();       // 3x3 complement of identity
RMatrix pattern_K(int k);   // k x 2^k, every (0,1)-column once

// Resolves one of the builtin names ("M","A1","A2","I","Ic","K2","K3") or
// returns false when the name is unknown.
bool pattern_by_name(const std::string& name, RMatrix& out);

}  // namespace forb
