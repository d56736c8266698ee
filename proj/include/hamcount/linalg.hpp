#pragma once

#include "hamcount/bigint.hpp"
#include "hamcount/index_set.hpp"
#include "hamcount/matrix.hpp"

namespace hamcount {

/// Rows and columns of `a` restricted to S, each taken in increasing order.
/// S = {} yields the 0x0 matrix.
SquareMatrix principal_submatrix(const SquareMatrix& a, const IndexSet& s);

/// Square selection of the given rows and columns, each in increasing order.
/// Requires |rows| == |cols|.
SquareMatrix submatrix(const SquareMatrix& a, const IndexSet& rows, const IndexSet& cols);

/// Exact determinant. Direct expansion for n <= 3, fraction-free (Bareiss)
/// integer elimination for n >= 4. det of the 0x0 matrix is 1.
BigInt det(const SquareMatrix& a);

/// Exact permanent via Ryser's inclusion-exclusion, iterating column subsets
/// in Gray-code order so each step updates the row sums by a single column.
/// O(2^n * n) big-integer operations. per of the 0x0 matrix is 1.
BigInt per(const SquareMatrix& a);

}  // namespace hamcount
