#pragma once

#include "forb/rmatrix.hpp"

namespace forb {

// F < A configuration containment: some submatrix of `a` is a row and column
// permutation of `f`. Degenerate f (no rows or no columns) is contained in
// everything. Repeated columns of f are handled by a matching, so each
// f-column consumes a distinct a-column.
bool contains_config(const RMatrix& a, const RMatrix& f);

// Same predicate, but the witness embedding must use a.cols[forced_col].
// This is the incremental check used by the forb search: if S avoided f,
// then S+c contains f iff some embedding goes through c.
bool contains_config_using(const RMatrix& a, const RMatrix& f, int forced_col);

}  // namespace forb
