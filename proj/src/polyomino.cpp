#include "deco/polyomino.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace deco {

ValidationReport validate_columns(const std::vector<ColumnSpan>& cols) {
  ValidationReport rep;
  if (cols.empty()) {
    rep.violations.push_back("no-columns: a polyomino needs at least one column");
    return rep;
  }
  const int w = static_cast<int>(cols.size());
  for (int i = 0; i < w; ++i) {
    if (cols[static_cast<std::size_t>(i)].top <= cols[static_cast<std::size_t>(i)].bottom) {
      rep.violations.push_back("empty-column: column " + std::to_string(i + 1) +
                               " has top <= bottom");
    }
  }
  if (!rep.violations.empty()) return rep;

  if (cols.front().bottom != 0) {
    rep.violations.push_back("source-level: the first column must start at level 0, not " +
                             std::to_string(cols.front().bottom));
  }
  for (int i = 1; i < w; ++i) {
    const auto& prev = cols[static_cast<std::size_t>(i - 1)];
    const auto& cur = cols[static_cast<std::size_t>(i)];
    if (cur.bottom < prev.bottom) {
      rep.violations.push_back("monotone-bottoms: column " + std::to_string(i + 1) +
                               " drops below column " + std::to_string(i));
    }
    if (cur.bottom > prev.top - 1) {
      rep.violations.push_back("connectivity: columns " + std::to_string(i) + " and " +
                               std::to_string(i + 1) + " share no row");
    }
  }
  const int reach = w + cols.back().top; // n + 1 when the shape is deco
  int max_diagonal = 0;
  for (int i = 0; i < w; ++i) {
    max_diagonal = std::max(max_diagonal, (i + 1) + cols[static_cast<std::size_t>(i)].top - 1);
  }
  for (int i = 0; i < w - 1; ++i) {
    if ((i + 1) + cols[static_cast<std::size_t>(i)].top >= reach) {
      rep.violations.push_back("deco-condition: height attained in column " +
                               std::to_string(i + 1) + ", not only in the last");
    }
  }
  if (w + cols.back().top != max_diagonal + 1) {
    rep.violations.push_back("width-level-identity: width + last column level is " +
                             std::to_string(w + cols.back().top) + ", expected height + 1 = " +
                             std::to_string(max_diagonal + 1));
  }
  return rep;
}

DecoPolyomino::DecoPolyomino(std::vector<ColumnSpan> columns) : cols_(std::move(columns)) {
  const auto rep = validate_columns(cols_);
  if (!rep.valid()) {
    std::string msg = rep.violations.front();
    if (rep.violations.size() > 1) {
      msg += " (+" + std::to_string(rep.violations.size() - 1) + " more)";
    }
    throw error(errc::invalid_polyomino, msg);
  }
}

DecoCode::DecoCode(std::vector<int> entries_low_first) : a_(std::move(entries_low_first)) {
  if (a_.empty()) {
    throw error(errc::empty_input, "a code needs at least one step");
  }
  for (int j = 1; j <= size(); ++j) {
    const int aj = entry(j);
    if (aj < 0 || aj > j - 1) {
      throw error(errc::invalid_code,
                  "step " + std::to_string(j) + " has value " + std::to_string(aj) +
                      ", outside 0.." + std::to_string(j - 1),
                  j);
    }
  }
}

DecoCode DecoCode::from_display(std::vector<int> display_order) {
  std::reverse(display_order.begin(), display_order.end());
  return DecoCode(std::move(display_order));
}

std::vector<int> DecoCode::display() const {
  return std::vector<int>(a_.rbegin(), a_.rend());
}

DecoPolyomino build_from_code(const DecoCode& code) {
  std::vector<ColumnSpan> cols;
  cols.reserve(static_cast<std::size_t>(code.size()));
  for (int j = 1; j <= code.size(); ++j) {
    const int a = code.entry(j);
    if (a == 0) {
      if (cols.empty()) {
        cols.push_back({0, 1});
      } else {
        --cols.front().bottom;
      }
    } else {
      const int base = cols.front().bottom;
      cols.insert(cols.begin(), ColumnSpan{base, base + a});
    }
  }
  const int shift = -cols.front().bottom;
  if (shift != 0) {
    for (auto& c : cols) {
      c.bottom += shift;
      c.top += shift;
    }
  }
  return DecoPolyomino(std::move(cols));
}

DecoCode code_of(const DecoPolyomino& p) {
  std::vector<ColumnSpan> cols = p.columns();
  const int n = p.height();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (int j = n; j >= 1; --j) {
    if (cols.size() > 1 && cols[0].bottom == cols[1].bottom) {
      a[static_cast<std::size_t>(j - 1)] = cols[0].length();
      cols.erase(cols.begin());
    } else {
      a[static_cast<std::size_t>(j - 1)] = 0;
      ++cols[0].bottom;
      if (cols[0].bottom == cols[0].top) cols.erase(cols.begin());
    }
  }
  return DecoCode(std::move(a));
}

StatRecord statistics(const DecoPolyomino& p) {
  const auto& cols = p.columns();
  StatRecord s;
  s.width = p.width();
  s.height = p.height();
  s.last_column_level = cols.back().top;
  s.last_column_length = cols.back().length();
  s.first_column_length = cols.front().length();
  for (const auto& c : cols) {
    s.area += c.length();
    s.vertical_height = std::max(s.vertical_height, c.top);
    if (c.bottom == 0) ++s.first_row_length;
  }
  return s;
}

BottomBorder bottom_border(const DecoPolyomino& p) {
  const auto& cols = p.columns();
  const int w = p.width();
  BottomBorder b;
  b.cells.push_back({1, 0});
  int level = 0;
  for (int i = 1; i <= w - 1; ++i) {
    while (level < p.column(i + 1).bottom) {
      ++level;
      b.cells.push_back({i, level});
    }
    b.cells.push_back({i + 1, level});
  }
  while (level < cols.back().top - 1) {
    ++level;
    b.cells.push_back({w, level});
  }

  int run = 1;
  b.row_starts.push_back(1);
  for (std::size_t k = 1; k < b.cells.size(); ++k) {
    if (b.cells[k].col == b.cells[k - 1].col) { // North step ends the row
      b.row_lengths.push_back(run);
      b.row_starts.push_back(static_cast<int>(k) + 1);
      run = 1;
    } else {
      ++run;
    }
  }
  b.row_lengths.push_back(run);
  return b;
}

bool is_parallelogram(const DecoPolyomino& p) {
  const auto& cols = p.columns();
  for (std::size_t i = 1; i < cols.size(); ++i) {
    if (cols[i].top < cols[i - 1].top) return false;
  }
  return true;
}

std::string render_ascii(const DecoPolyomino& p) {
  const auto& cols = p.columns();
  int top = 0;
  for (const auto& c : cols) top = std::max(top, c.top);
  std::string out;
  out.reserve(static_cast<std::size_t>(top) * (cols.size() + 1));
  for (int level = top - 1; level >= 0; --level) {
    for (const auto& c : cols) {
      out += (c.bottom <= level && level < c.top) ? '#' : '.';
    }
    if (level > 0) out += '\n';
  }
  return out;
}

CodeEnumerator::CodeEnumerator(int n) {
  if (n < 1) throw error(errc::value_out_of_range, "height must be at least 1", n);
  a_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<DecoCode> CodeEnumerator::next() {
  if (done_) return std::nullopt;
  DecoCode out{std::vector<int>(a_)};
  // odometer: digit a_{j} at index j-1 ranges 0..j-1, so index idx maxes at idx
  std::size_t idx = 0;
  while (idx < a_.size() && a_[idx] == static_cast<int>(idx)) {
    a_[idx] = 0;
    ++idx;
  }
  if (idx == a_.size()) {
    done_ = true;
  } else {
    ++a_[idx];
  }
  return out;
}

namespace {

// Exactly uniform draw from {0,...,bound-1}: reject the tail of the 64-bit
// range that does not divide evenly.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t rem =
      (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound; // 2^64 mod bound
  std::uint64_t r = rng();
  if (rem != 0) {
    const std::uint64_t limit = 0 - rem; // 2^64 - rem
    while (r >= limit) r = rng();
  }
  return r % bound;
}

} // namespace

CodeSampler::CodeSampler(int n, std::uint64_t seed) : n_(n), rng_(seed) {
  if (n < 1) throw error(errc::value_out_of_range, "height must be at least 1", n);
}

DecoCode CodeSampler::next() {
  std::vector<int> a(static_cast<std::size_t>(n_));
  for (int j = 1; j <= n_; ++j) {
    a[static_cast<std::size_t>(j - 1)] =
        static_cast<int>(draw_below(rng_, static_cast<std::uint64_t>(j)));
  }
  return DecoCode(std::move(a));
}

DecoCode random_code(int n, std::uint64_t seed) {
  return CodeSampler(n, seed).next();
}

} // namespace deco
