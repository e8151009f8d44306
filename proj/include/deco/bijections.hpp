#pragma once

#include "deco/permutation.hpp"
#include "deco/polyomino.hpp"

namespace deco {

/// One of the six bijections between S_n and the deco polyominoes of
/// height n.
enum class BijectionId : int {
  phi1 = 1,
  phi2 = 2,
  phi3 = 3,
  phi4 = 4,
  phi5 = 5,
  phi6 = 6,
};

/// Throws value_out_of_range unless 1 <= id <= 6.
BijectionId bijection_from_int(int id);

inline constexpr BijectionId kAllBijections[] = {
    BijectionId::phi1, BijectionId::phi2, BijectionId::phi3,
    BijectionId::phi4, BijectionId::phi5, BijectionId::phi6,
};

/// Recursive head-peeling map: step n is an elevation when the first
/// entry is the maximum, otherwise a pasting of a column as long as the
/// first entry; the tail is reduced and the recursion continues. The last
/// column of the image is as long as the first ascending run of the
/// reversed permutation.
DecoPolyomino phi1(const Permutation& p);

/// Reads the right inversion vector (c_1,...,c_n) as the construction
/// code in display order. Area = inversions + right-to-left minima; the
/// last column level equals the number of right-to-left minima.
DecoPolyomino phi2(const Permutation& p);

/// Cycle-insertion map: an elevation appends j as a new singleton cycle,
/// a pasting of a k-cell column inserts j immediately right of k inside
/// k's cycle. Cycle count equals the last column level.
DecoPolyomino phi3(const Permutation& p);

/// Word-insertion map: an elevation appends j to the one-line word, a
/// pasting of a k-cell column inserts j with exactly k entries after it.
/// Inversions = area - last column level.
DecoPolyomino phi4(const Permutation& p);

/// Standard-cycle-form map: the cycle lengths fix the bottom border rows
/// (lowest first); the right inversion vector of the flattened cycle word
/// is written into the border cells and each nonzero entry k stacks k
/// cells on the column of the cell's left neighbor. Area = n + Carlitz
/// inversions.
DecoPolyomino phi5(const Permutation& p);

/// Border-row greedy map: b_i being the right inversion vector of p, the
/// entry at each row's first border cell is the number of cells right of
/// it in that row, and every other entry stacks that many cells on the
/// column of the cell's left neighbor. The first row is p_1 cells long.
DecoPolyomino phi6(const Permutation& p);

DecoPolyomino apply_bijection(BijectionId id, const Permutation& p);

/// The unique permutation mapping to `d` under the given bijection.
Permutation invert(BijectionId id, const DecoPolyomino& d);

} // namespace deco
