#pragma once

#include <vector>

#include "deco/error.hpp"

namespace deco {

/// A permutation of {1,...,n} in one-line form.
///
/// Values and positions are 1-based throughout the library; the word is
/// stored with position i at index i-1. Instances are immutable once
/// constructed and safe to share across threads.
class Permutation {
public:
  /// Validates that `values` is a rearrangement of 1..n. Throws
  /// duplicate_value, value_out_of_range or empty_input otherwise.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  int size() const noexcept { return static_cast<int>(vals_.size()); }

  /// Value at 1-based position `pos`.
  int value_at(int pos) const { return vals_[static_cast<std::size_t>(pos - 1)]; }

  const std::vector<int>& values() const noexcept { return vals_; }

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> vals_;
};

/// Right inversion vector (c_1,...,c_n): c_i counts the entries to the
/// right of position i that are smaller than the entry there. Entries
/// satisfy 0 <= c_i <= n-i and determine the permutation uniquely.
class InversionVector {
public:
  /// Throws entry_too_large(i) when c_i > n-i.
  explicit InversionVector(std::vector<int> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  bool operator==(const InversionVector&) const = default;

private:
  std::vector<int> entries_;
};

/// Cycle decomposition in standard form: every cycle starts with its
/// minimum and cycles are ordered by increasing minima.
class CycleDecomposition {
public:
  explicit CycleDecomposition(std::vector<std::vector<int>> cycles);

  const std::vector<std::vector<int>>& cycles() const noexcept { return cycles_; }
  std::vector<int> lengths() const;
  int element_count() const noexcept;

  bool operator==(const CycleDecomposition&) const = default;

private:
  std::vector<std::vector<int>> cycles_;
};

/// Descent/ascent structure of a permutation, computed in one pass:
/// descent and ascent positions, the maximal ascending and descending
/// runs, and the right-to-left minima (positions increasing, and hence
/// values increasing as well).
struct RunProfile {
  std::vector<int> descents;
  std::vector<int> ascents;
  std::vector<std::vector<int>> ascending_runs;
  std::vector<std::vector<int>> descending_runs;
  std::vector<int> rtl_minima_positions;
  std::vector<int> rtl_minima_values;
};

/// Relabels a sequence of distinct integers order-preservingly onto 1..n.
Permutation reduce(const std::vector<int>& sequence);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

InversionVector right_inversion_vector(const Permutation& p);

/// Inverse of right_inversion_vector: position i receives the
/// (c_i+1)-th smallest value not yet used.
Permutation permutation_from_riv(const InversionVector& v);

/// Number of pairs i < j with p_i > p_j; equals the sum of the right
/// inversion vector.
int inversion_count(const Permutation& p);

CycleDecomposition standard_cycle_form(const Permutation& p);

/// Erases the parentheses of a cycle decomposition, producing the
/// concatenated word as a permutation. For standard cycle form the word
/// always starts with 1.
Permutation flatten_cycles(const CycleDecomposition& cd);

/// The permutation whose cycle decomposition is `cd`.
Permutation permutation_from_cycles(const CycleDecomposition& cd);

/// Carlitz inversions: inversions of the flattened standard cycle form.
int carlitz_inversions(const Permutation& p);

RunProfile run_profile(const Permutation& p);

/// True iff p contains no decreasing subsequence of length three.
/// Single linear scan over the word tracking the smallest value that
/// already has a larger entry somewhere to its left.
bool avoids_321(const Permutation& p);

} // namespace deco
