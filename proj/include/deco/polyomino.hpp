#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "deco/error.hpp"

namespace deco {

/// One column of a polyomino: cells at levels bottom, bottom+1, ..., top-1.
struct ColumnSpan {
  int bottom = 0;
  int top = 0;

  int length() const noexcept { return top - bottom; }
  bool operator==(const ColumnSpan&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const noexcept { return violations.empty(); }
};

/// Checks the deco polyomino invariants on a raw column list and names
/// every violated one: source level 0, weakly increasing bottoms,
/// adjacent columns sharing a row, the height being attained only in the
/// last column, and width + level of the last column = height + 1.
ValidationReport validate_columns(const std::vector<ColumnSpan>& cols);

/// A deco polyomino of height n: a directed column-convex polyomino whose
/// height (number of anti-diagonals through cell centers) is attained only
/// in the last column. Stored as left-to-right column spans with the
/// source bottom normalized to level 0; equality is structural on spans.
///
/// The level of a column is its top measured from the source bottom, so
/// width + level of the last column = n + 1.
class DecoPolyomino {
public:
  /// Throws invalid_polyomino naming the first violated invariant.
  explicit DecoPolyomino(std::vector<ColumnSpan> columns);

  const std::vector<ColumnSpan>& columns() const noexcept { return cols_; }
  const ColumnSpan& column(int i) const { return cols_[static_cast<std::size_t>(i - 1)]; }

  int width() const noexcept { return static_cast<int>(cols_.size()); }
  int height() const noexcept { return width() + cols_.back().top - 1; }

  bool operator==(const DecoPolyomino&) const = default;

private:
  std::vector<ColumnSpan> cols_;
};

/// The step-by-step construction code a_1..a_n with 0 <= a_j <= j-1.
/// Step j is an elevation when a_j = 0 (a cell added at the bottom of the
/// leftmost column) and a pasting of a k-cell column to the left when
/// a_j = k. Entries are stored low index first; human-facing output uses
/// the display order (a_n,...,a_1).
class DecoCode {
public:
  /// Throws invalid_code(j) when a_j is outside 0..j-1.
  explicit DecoCode(std::vector<int> entries_low_first);

  static DecoCode from_display(std::vector<int> display_order);

  int size() const noexcept { return static_cast<int>(a_.size()); }
  int entry(int j) const { return a_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& entries() const noexcept { return a_; }
  std::vector<int> display() const;

  bool operator==(const DecoCode&) const = default;

private:
  std::vector<int> a_;
};

struct BorderCell {
  int col = 0;   // 1-based column
  int level = 0; // 0-based row, source bottom = 0
  bool operator==(const BorderCell&) const = default;
};

/// The n cells on the lowest monotone path from the source to the top
/// cell of the last column. A North step ends a row, so row_lengths are
/// the maximal horizontal runs (lowest row first) and the cell reached by
/// a North step starts the next row.
struct BottomBorder {
  std::vector<BorderCell> cells;
  std::vector<int> row_lengths;
  std::vector<int> row_starts; // 1-based positions into cells
};

struct StatRecord {
  int height = 0;
  int width = 0;
  int vertical_height = 0;
  int area = 0;
  int last_column_level = 0;
  int last_column_length = 0;
  int first_column_length = 0;
  int first_row_length = 0;
};

/// Replays the construction steps of a code. Levels run signed while the
/// elevation steps push the bottom down; the result is shifted so the
/// first column's bottom lands on level 0.
DecoPolyomino build_from_code(const DecoCode& code);

/// Exact inverse of build_from_code: peel steps n down to 1, removing the
/// first column when the first two bottoms agree (a pasting) and the
/// bottom cell of the first column otherwise (an elevation).
DecoCode code_of(const DecoPolyomino& p);

StatRecord statistics(const DecoPolyomino& p);

BottomBorder bottom_border(const DecoPolyomino& p);

/// True iff the column tops weakly increase left to right (bottoms
/// already do for any deco polyomino).
bool is_parallelogram(const DecoPolyomino& p);

/// Grid of '#' and '.' characters, highest level first, one line per
/// level; vertical_height x width characters.
std::string render_ascii(const DecoPolyomino& p);

/// Streams all n! codes of height n, odometer order on (a_1,...,a_n)
/// with a_n most significant. Holds no shared state.
class CodeEnumerator {
public:
  explicit CodeEnumerator(int n);
  std::optional<DecoCode> next();

private:
  std::vector<int> a_;
  bool done_ = false;
};

/// Deterministic stream of uniform random codes: mt19937_64 seeded once,
/// each a_j drawn from {0,...,j-1} by rejection sampling so the draw is
/// exactly uniform and reproducible across platforms.
class CodeSampler {
public:
  CodeSampler(int n, std::uint64_t seed);
  DecoCode next();

private:
  int n_;
  std::mt19937_64 rng_;
};

/// First code of the seeded stream; fixed (n, seed) gives a fixed code.
DecoCode random_code(int n, std::uint64_t seed);

} // namespace deco
