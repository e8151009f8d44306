#include "deco/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace deco {

namespace {

std::string at_position(int i) { return " at position " + std::to_string(i); }

} // namespace

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  if (vals_.empty()) {
    throw error(errc::empty_input, "a permutation needs at least one entry");
  }
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int v = value_at(i);
    if (v < 1 || v > n) {
      throw error(errc::value_out_of_range,
                  "entry " + std::to_string(v) + at_position(i) + " is outside 1.." +
                      std::to_string(n),
                  v);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw error(errc::duplicate_value, "entry " + std::to_string(v) + " appears twice", v);
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw error(errc::value_out_of_range, "size must be at least 1", n);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  if (n < 1) throw error(errc::value_out_of_range, "size must be at least 1", n);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

InversionVector::InversionVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw error(errc::empty_input, "an inversion vector needs at least one entry");
  }
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const int c = entry(i);
    if (c < 0) {
      throw error(errc::value_out_of_range, "negative entry" + at_position(i), i);
    }
    if (c > n - i) {
      throw error(errc::entry_too_large,
                  "entry " + std::to_string(c) + at_position(i) + " exceeds " +
                      std::to_string(n - i),
                  i);
    }
  }
}

CycleDecomposition::CycleDecomposition(std::vector<std::vector<int>> cycles)
    : cycles_(std::move(cycles)) {
  if (cycles_.empty()) {
    throw error(errc::empty_input, "a cycle decomposition needs at least one cycle");
  }
  int n = 0;
  for (const auto& c : cycles_) n += static_cast<int>(c.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int previous_min = 0;
  for (std::size_t ci = 0; ci < cycles_.size(); ++ci) {
    const auto& c = cycles_[ci];
    if (c.empty()) {
      throw error(errc::invalid_cycles, "cycle " + std::to_string(ci + 1) + " is empty");
    }
    for (int v : c) {
      if (v < 1 || v > n) {
        throw error(errc::invalid_cycles,
                    "value " + std::to_string(v) + " is outside 1.." + std::to_string(n), v);
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw error(errc::invalid_cycles, "value " + std::to_string(v) + " appears twice", v);
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
    const int mn = *std::min_element(c.begin(), c.end());
    if (c.front() != mn) {
      throw error(errc::invalid_cycles,
                  "cycle " + std::to_string(ci + 1) + " does not start with its minimum");
    }
    if (mn <= previous_min) {
      throw error(errc::invalid_cycles, "cycle minima must increase left to right");
    }
    previous_min = mn;
  }
}

std::vector<int> CycleDecomposition::lengths() const {
  std::vector<int> out;
  out.reserve(cycles_.size());
  for (const auto& c : cycles_) out.push_back(static_cast<int>(c.size()));
  return out;
}

int CycleDecomposition::element_count() const noexcept {
  int n = 0;
  for (const auto& c : cycles_) n += static_cast<int>(c.size());
  return n;
}

Permutation reduce(const std::vector<int>& sequence) {
  if (sequence.empty()) {
    throw error(errc::empty_input, "cannot reduce an empty sequence");
  }
  const std::size_t n = sequence.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sequence[a] < sequence[b]; });
  for (std::size_t k = 1; k < n; ++k) {
    if (sequence[order[k]] == sequence[order[k - 1]]) {
      throw error(errc::duplicate_value,
                  "entry " + std::to_string(sequence[order[k]]) + " appears twice",
                  sequence[order[k]]);
    }
  }
  std::vector<int> out(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int x : p.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

InversionVector right_inversion_vector(const Permutation& p) {
  const int n = p.size();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  const auto& v = p.values();
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = i + 1; j < n; ++j) {
      if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)]) ++count;
    }
    c[static_cast<std::size_t>(i)] = count;
  }
  return InversionVector(std::move(c));
}

Permutation permutation_from_riv(const InversionVector& v) {
  const int n = v.size();
  std::vector<int> unused(static_cast<std::size_t>(n));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto it = unused.begin() + v.entry(i);
    out.push_back(*it);
    unused.erase(it);
  }
  return Permutation(std::move(out));
}

int inversion_count(const Permutation& p) {
  const auto& v = p.values();
  const int n = p.size();
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(j)]) ++count;
    }
  }
  return count;
}

CycleDecomposition standard_cycle_form(const Permutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      visited[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
      x = p.value_at(x);
    } while (x != start);
    cycles.push_back(std::move(cycle));
  }
  return CycleDecomposition(std::move(cycles));
}

Permutation flatten_cycles(const CycleDecomposition& cd) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(cd.element_count()));
  for (const auto& c : cd.cycles()) word.insert(word.end(), c.begin(), c.end());
  return Permutation(std::move(word));
}

Permutation permutation_from_cycles(const CycleDecomposition& cd) {
  const int n = cd.element_count();
  std::vector<int> vals(static_cast<std::size_t>(n), 0);
  for (const auto& c : cd.cycles()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      vals[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(vals));
}

int carlitz_inversions(const Permutation& p) {
  return inversion_count(flatten_cycles(standard_cycle_form(p)));
}

RunProfile run_profile(const Permutation& p) {
  const auto& v = p.values();
  const int n = p.size();
  RunProfile r;
  std::vector<int> asc_run{v[0]};
  std::vector<int> desc_run{v[0]};
  for (int i = 1; i < n; ++i) {
    const int prev = v[static_cast<std::size_t>(i - 1)];
    const int cur = v[static_cast<std::size_t>(i)];
    if (prev > cur) {
      r.descents.push_back(i);
      r.ascending_runs.push_back(std::move(asc_run));
      asc_run = {cur};
      desc_run.push_back(cur);
    } else {
      r.ascents.push_back(i);
      r.descending_runs.push_back(std::move(desc_run));
      desc_run = {cur};
      asc_run.push_back(cur);
    }
  }
  r.ascending_runs.push_back(std::move(asc_run));
  r.descending_runs.push_back(std::move(desc_run));

  int running_min = n + 1;
  for (int i = n; i >= 1; --i) {
    const int x = p.value_at(i);
    if (x < running_min) {
      running_min = x;
      r.rtl_minima_positions.push_back(i);
      r.rtl_minima_values.push_back(x);
    }
  }
  std::reverse(r.rtl_minima_positions.begin(), r.rtl_minima_positions.end());
  std::reverse(r.rtl_minima_values.begin(), r.rtl_minima_values.end());
  return r;
}

bool avoids_321(const Permutation& p) {
  // best_middle = largest value with a larger entry somewhere left of it;
  // any later value below it completes a 321.
  int max_so_far = 0;
  int best_middle = 0;
  for (int x : p.values()) {
    if (x < best_middle) return false;
    if (x < max_so_far) {
      best_middle = x; // x exceeds every previous middle, else we returned
    } else {
      max_so_far = x;
    }
  }
  return true;
}

} // namespace deco
