#pragma once

// The linear system satisfied by the ansatz coefficients C_[i,j] of
//   A = sum_{0 <= j <= i <= m} C_[i,j] x1^{d-i-j} m_[i,j](x2, x3),
// its square submatrix B_m and the diagonal blocks of B_m.

#include "quasi3/arith.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quasi3 {

/// Row label (k, l).
using RowLabel = std::pair<int, int>;
/// Column label [i, j] with j <= i.
using ColLabel = std::pair<int, int>;

/// Coefficient of C_[i,j] in the (k, l) equation, for degree d.
/// Throws std::invalid_argument when j > i or an index is negative.
Integer coeff_A(int i, int j, int k, int l, int d);

struct CoeffSystem {
    int m = 0;
    int d = 0;
    std::vector<RowLabel> rows;
    std::vector<ColLabel> cols;
    IntegerMatrix entries;

    std::optional<std::size_t> col_index(const ColLabel& c) const;
};

/// Columns [i,j], 0 <= j <= i <= m, lexicographically ascending.
std::vector<ColLabel> ansatz_columns(int m);

/// Full system: rows k = 0..m ascending, and for each k the odd l = 2m-1 .. 1
/// descending. Throws unless d is 3m+1 or 3m+2.
CoeffSystem build_system(int m, int d);

/// Square submatrix B_m: drops column [m,m], keeps for k < m only
/// l in {2m-2k-1, ..., 2m-1}, and keeps every row with k = m.
CoeffSystem restrict_Bm(const CoeffSystem& sys);

struct Block {
    std::string name;
    std::vector<RowLabel> rows;
    std::vector<ColLabel> cols;
    IntegerMatrix entries;
};

/// Diagonal blocks of B_m: blocks f = 1..m (rows k = f-1, columns [f-1, 0..f-1])
/// followed by the final block (rows k = m, columns [m, 0..m-1]).
struct BlockSet {
    int m = 0;
    int d = 0;
    std::vector<Block> blocks;
};

BlockSet extract_blocks(int m, int d);

/// The same blocks from their closed binomial form,
///   B^{f}_{i,j} = binom(d - (j-1) - (f-1), 2m+1-2i) - binom(j-1, 2m+1-2i),
///   final_{i,j} = binom(d - m - (j-1), 2m+1-2i) - binom(j-1, 2m+1-2i).
BlockSet closed_form_blocks(int m, int d);

struct NullSpaceResult {
    std::vector<RationalVector> basis;
    /// False when a one-dimensional generator has a zero [0,0] coordinate and
    /// could not be scaled to C_[0,0] = 1.
    bool normalized = true;
};

/// Right null space. A one-dimensional result is scaled so C_[0,0] = 1.
/// The empty system (m = 0) yields the single generator (1).
NullSpaceResult nullspace(const CoeffSystem& sys);

}  // namespace quasi3
