#include "deco/bijections.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace deco {

namespace {

// Relabels distinct values order-preservingly onto 1..k.
std::vector<int> reduced_word(const std::vector<int>& word) {
  const std::size_t k = word.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(k);
  for (std::size_t rank = 0; rank < k; ++rank) {
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return out;
}

DecoCode peel_code_phi1(const Permutation& p) {
  const int n = p.size();
  std::vector<int> a(static_cast<std::size_t>(n));
  std::vector<int> word = p.values();
  for (int j = n; j >= 1; --j) {
    a[static_cast<std::size_t>(j - 1)] = (word.front() == j) ? 0 : word.front();
    word.erase(word.begin());
    if (!word.empty()) word = reduced_word(word);
  }
  return DecoCode(std::move(a));
}

Permutation invert_phi1(const DecoCode& code) {
  std::vector<int> word;
  for (int j = 1; j <= code.size(); ++j) {
    const int k = code.entry(j);
    if (k == 0) {
      word.insert(word.begin(), j);
    } else {
      // un-reduce the tail onto {1..j} \ {k}, then put k in front
      for (int& v : word) {
        if (v >= k) ++v;
      }
      word.insert(word.begin(), k);
    }
  }
  return Permutation(std::move(word));
}

Permutation invert_phi2(const DecoCode& code) {
  const auto& a = code.entries();
  return permutation_from_riv(InversionVector(std::vector<int>(a.rbegin(), a.rend())));
}

DecoCode peel_code_phi3(const Permutation& p) {
  auto cycles = standard_cycle_form(p).cycles();
  const int n = p.size();
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int j = n; j >= 1; --j) {
    // j is the largest remaining value, so it heads a cycle only alone
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      auto& c = cycles[ci];
      const auto it = std::find(c.begin(), c.end(), j);
      if (it == c.end()) continue;
      if (c.size() == 1) {
        a[static_cast<std::size_t>(j - 1)] = 0;
        cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(ci));
      } else {
        a[static_cast<std::size_t>(j - 1)] = *std::prev(it);
        c.erase(it);
      }
      break;
    }
  }
  return DecoCode(std::move(a));
}

Permutation invert_phi3(const DecoCode& code) {
  std::vector<std::vector<int>> cycles;
  for (int j = 1; j <= code.size(); ++j) {
    const int k = code.entry(j);
    if (k == 0) {
      cycles.push_back({j});
      continue;
    }
    for (auto& c : cycles) {
      const auto it = std::find(c.begin(), c.end(), k);
      if (it != c.end()) {
        c.insert(std::next(it), j);
        break;
      }
    }
  }
  return permutation_from_cycles(CycleDecomposition(std::move(cycles)));
}

DecoCode peel_code_phi4(const Permutation& p) {
  const int n = p.size();
  std::vector<int> a(static_cast<std::size_t>(n));
  std::vector<int> word = p.values();
  for (int j = n; j >= 1; --j) {
    const auto it = std::find(word.begin(), word.end(), j);
    a[static_cast<std::size_t>(j - 1)] = static_cast<int>(word.end() - it) - 1;
    word.erase(it);
  }
  return DecoCode(std::move(a));
}

Permutation invert_phi4(const DecoCode& code) {
  std::vector<int> word;
  for (int j = 1; j <= code.size(); ++j) {
    const int k = code.entry(j);
    word.insert(word.end() - k, j); // exactly k entries follow j
  }
  return Permutation(std::move(word));
}

// Lays out the border rows (lowest first, each row starting above the last
// cell of the previous one) and stacks b_q cells on the column of border
// cell q-1 for every entry at a non-row-start position q.
DecoPolyomino build_from_border(const std::vector<int>& row_lengths, const std::vector<int>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<int> cell_col(static_cast<std::size_t>(n));
  std::vector<char> row_start(static_cast<std::size_t>(n), 0);
  {
    int pos = 0;
    int col = 1;
    for (int s : row_lengths) {
      row_start[static_cast<std::size_t>(pos)] = 1;
      for (int t = 0; t < s; ++t) {
        if (t > 0) ++col;
        cell_col[static_cast<std::size_t>(pos)] = col;
        ++pos;
      }
    }
    if (pos != n) throw std::logic_error("border rows do not cover the height");
  }
  const int width = cell_col.back();
  std::vector<ColumnSpan> cols(static_cast<std::size_t>(width),
                               ColumnSpan{std::numeric_limits<int>::max(), 0});
  {
    int level = -1;
    for (int q = 0; q < n; ++q) {
      if (row_start[static_cast<std::size_t>(q)]) ++level;
      auto& c = cols[static_cast<std::size_t>(cell_col[static_cast<std::size_t>(q)] - 1)];
      c.bottom = std::min(c.bottom, level);
      c.top = std::max(c.top, level + 1);
    }
  }
  for (int q = 2; q <= n; ++q) {
    if (row_start[static_cast<std::size_t>(q - 1)]) continue;
    const int k = b[static_cast<std::size_t>(q - 1)];
    if (k > 0) {
      cols[static_cast<std::size_t>(cell_col[static_cast<std::size_t>(q - 2)] - 1)].top += k;
    }
  }
  DecoPolyomino out(std::move(cols));
  if (build_from_code(code_of(out)) != out) {
    throw std::logic_error("border construction disagrees with the step replay");
  }
  return out;
}

// Border entries read off a polyomino: the number of cells above the left
// neighbor at every non-row-start position, and whatever the rule dictates
// at row starts.
enum class FirstCellRule { zero, rest_of_row };

std::vector<int> read_border_entries(const DecoPolyomino& d, const BottomBorder& border,
                                     FirstCellRule rule) {
  const int n = static_cast<int>(border.cells.size());
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  std::size_t row = 0;
  for (int q = 1; q <= n; ++q) {
    const bool starts_row =
        row < border.row_starts.size() && border.row_starts[row] == q;
    if (starts_row) {
      b[static_cast<std::size_t>(q - 1)] =
          rule == FirstCellRule::zero ? 0 : border.row_lengths[row] - 1;
      ++row;
    } else {
      const BorderCell& left = border.cells[static_cast<std::size_t>(q - 2)];
      b[static_cast<std::size_t>(q - 1)] = d.column(left.col).top - 1 - left.level;
    }
  }
  return b;
}

Permutation invert_phi5(const DecoPolyomino& d) {
  const auto border = bottom_border(d);
  const auto b = read_border_entries(d, border, FirstCellRule::zero);
  const Permutation word = permutation_from_riv(InversionVector(b));
  std::vector<std::vector<int>> cycles;
  int pos = 1;
  for (int s : border.row_lengths) {
    std::vector<int> cycle;
    cycle.reserve(static_cast<std::size_t>(s));
    for (int t = 0; t < s; ++t) cycle.push_back(word.value_at(pos++));
    cycles.push_back(std::move(cycle));
  }
  return permutation_from_cycles(CycleDecomposition(std::move(cycles)));
}

Permutation invert_phi6(const DecoPolyomino& d) {
  const auto border = bottom_border(d);
  return permutation_from_riv(
      InversionVector(read_border_entries(d, border, FirstCellRule::rest_of_row)));
}

} // namespace

BijectionId bijection_from_int(int id) {
  if (id < 1 || id > 6) {
    throw error(errc::value_out_of_range, "bijection id must be 1..6, got " + std::to_string(id),
                id);
  }
  return static_cast<BijectionId>(id);
}

DecoPolyomino phi1(const Permutation& p) {
  return build_from_code(peel_code_phi1(p));
}

DecoPolyomino phi2(const Permutation& p) {
  const InversionVector riv = right_inversion_vector(p);
  const auto& c = riv.entries();
  return build_from_code(DecoCode(std::vector<int>(c.rbegin(), c.rend())));
}

DecoPolyomino phi3(const Permutation& p) {
  return build_from_code(peel_code_phi3(p));
}

DecoPolyomino phi4(const Permutation& p) {
  return build_from_code(peel_code_phi4(p));
}

DecoPolyomino phi5(const Permutation& p) {
  const auto cd = standard_cycle_form(p);
  const auto b = right_inversion_vector(flatten_cycles(cd)).entries();
  // each cycle opens with its minimum, so row-start entries are zero
  int pos = 0;
  for (int s : cd.lengths()) {
    if (b[static_cast<std::size_t>(pos)] != 0) {
      throw std::logic_error("flattened cycle word has a nonzero entry at a row start");
    }
    pos += s;
  }
  return build_from_border(cd.lengths(), b);
}

DecoPolyomino phi6(const Permutation& p) {
  const auto b = right_inversion_vector(p).entries();
  const int n = p.size();
  std::vector<int> rows;
  for (int pos = 0; pos < n; pos += b[static_cast<std::size_t>(pos)] + 1) {
    rows.push_back(b[static_cast<std::size_t>(pos)] + 1);
  }
  return build_from_border(rows, b);
}

DecoPolyomino apply_bijection(BijectionId id, const Permutation& p) {
  switch (id) {
    case BijectionId::phi1: return phi1(p);
    case BijectionId::phi2: return phi2(p);
    case BijectionId::phi3: return phi3(p);
    case BijectionId::phi4: return phi4(p);
    case BijectionId::phi5: return phi5(p);
    case BijectionId::phi6: return phi6(p);
  }
  throw error(errc::value_out_of_range, "bad bijection id");
}

Permutation invert(BijectionId id, const DecoPolyomino& d) {
  switch (id) {
    case BijectionId::phi1: return invert_phi1(code_of(d));
    case BijectionId::phi2: return invert_phi2(code_of(d));
    case BijectionId::phi3: return invert_phi3(code_of(d));
    case BijectionId::phi4: return invert_phi4(code_of(d));
    case BijectionId::phi5: return invert_phi5(d);
    case BijectionId::phi6: return invert_phi6(d);
  }
  throw error(errc::value_out_of_range, "bad bijection id");
}

} // namespace deco
