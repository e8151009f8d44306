#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "deco/numbers.hpp"
#include "deco/permutation.hpp"
#include "deco/text.hpp"

using namespace deco;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

template <typename F>
void for_each_perm(int n, F&& f) {
  std::vector<int> vals(static_cast<std::size_t>(n));
  std::iota(vals.begin(), vals.end(), 1);
  do {
    f(Permutation(std::vector<int>(vals)));
  } while (std::next_permutation(vals.begin(), vals.end()));
}

// cubic oracle, independent of the linear scan it cross-checks
bool contains_321_bruteforce(const Permutation& p) {
  const auto& v = p.values();
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (v[i] > v[j] && v[j] > v[k]) return true;
  return false;
}

} // namespace

TEST_CASE("permutation construction validates") {
  CHECK(perm({3, 5, 1, 2, 6, 4}).size() == 6);
  CHECK(perm({1}).size() == 1);
  CHECK_THROWS_AS(perm({2, 2, 1}), error);
  CHECK_THROWS_AS(perm({}), error);
  CHECK_THROWS_AS(perm({1, 3}), error);
  CHECK_THROWS_AS(perm({0, 1}), error);

  try {
    perm({2, 2, 1});
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.kind() == errc::duplicate_value);
    CHECK(e.where() == 2);
  }
}

TEST_CASE("identity and decreasing constructors") {
  CHECK(Permutation::identity(4) == perm({1, 2, 3, 4}));
  CHECK(Permutation::decreasing(4) == perm({4, 3, 2, 1}));
  CHECK_THROWS_AS(Permutation::identity(0), error);
}

TEST_CASE("reduce relabels order-preservingly") {
  CHECK(reduce({5, 7, 2, 3, 9, 6}) == perm({3, 5, 1, 2, 6, 4}));
  CHECK(reduce({1, 2, 3, 4, 5}) == Permutation::identity(5));
  CHECK(reduce({9, 4}) == perm({2, 1}));
  CHECK_THROWS_AS(reduce({4, 4}), error);
  CHECK_THROWS_AS(reduce({}), error);
}

TEST_CASE("reverse and complement") {
  CHECK(reverse(perm({1, 2, 3})) == perm({3, 2, 1}));
  CHECK(complement(perm({1, 2, 3})) == perm({3, 2, 1}));
  CHECK(reverse(perm({3, 5, 1, 2, 6, 4})) == perm({4, 6, 2, 1, 5, 3}));
  for_each_perm(5, [](const Permutation& p) {
    CHECK(reverse(reverse(p)) == p);
    CHECK(complement(complement(p)) == p);
  });
}

TEST_CASE("right inversion vector") {
  CHECK(right_inversion_vector(perm({5, 3, 7, 2, 8, 1, 4, 6})).entries() ==
        std::vector<int>{4, 2, 4, 1, 3, 0, 0, 0});
  CHECK(right_inversion_vector(Permutation::identity(6)).entries() ==
        std::vector<int>(6, 0));
  CHECK(right_inversion_vector(perm({2, 7, 3, 5, 6, 8, 9, 1, 4})).entries() ==
        std::vector<int>{1, 5, 1, 2, 2, 2, 2, 0, 0});
}

TEST_CASE("inversion vector bounds are enforced") {
  CHECK_THROWS_AS(InversionVector({3, 0, 0}), error);
  CHECK_THROWS_AS(InversionVector({-1, 0}), error);
  try {
    InversionVector({0, 2, 0});
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.kind() == errc::entry_too_large);
    CHECK(e.where() == 2);
  }
}

TEST_CASE("permutation from inversion vector") {
  CHECK(permutation_from_riv(InversionVector({4, 2, 4, 1, 3, 0, 0, 0})) ==
        perm({5, 3, 7, 2, 8, 1, 4, 6}));
  CHECK(permutation_from_riv(InversionVector(std::vector<int>(5, 0))) ==
        Permutation::identity(5));
  CHECK(permutation_from_riv(InversionVector({0, 1, 0, 3, 0, 0, 2, 1, 0})) ==
        perm({1, 3, 2, 7, 4, 5, 9, 8, 6}));
}

TEST_CASE("riv round trip and inversion count, exhaustive") {
  for (int n = 1; n <= 8; ++n) {
    for_each_perm(n, [](const Permutation& p) {
      const auto v = right_inversion_vector(p);
      CHECK(permutation_from_riv(v) == p);
      int sum = 0;
      for (int c : v.entries()) sum += c;
      CHECK(sum == inversion_count(p));
    });
  }
}

TEST_CASE("inversion count") {
  CHECK(inversion_count(perm({5, 3, 7, 2, 8, 1, 4, 6})) == 14);
  CHECK(inversion_count(Permutation::identity(9)) == 0);
  CHECK(inversion_count(Permutation::decreasing(9)) == 9 * 8 / 2);
}

TEST_CASE("standard cycle form") {
  const auto cd = standard_cycle_form(perm({2, 3, 5, 7, 1, 4, 6}));
  CHECK(cd.cycles() == std::vector<std::vector<int>>{{1, 2, 3, 5}, {4, 7, 6}});
  CHECK(format_cycles(cd) == "(1 2 3 5)(4 7 6)");

  const auto cd2 = standard_cycle_form(perm({3, 7, 2, 1, 9, 6, 4, 5, 8}));
  CHECK(cd2.cycles() == std::vector<std::vector<int>>{{1, 3, 2, 7, 4}, {5, 9, 8}, {6}});
  CHECK(cd2.lengths() == std::vector<int>{5, 3, 1});

  CHECK(standard_cycle_form(Permutation::identity(4)).cycles() ==
        std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

  for_each_perm(6, [](const Permutation& p) {
    CHECK(permutation_from_cycles(standard_cycle_form(p)) == p);
  });
}

TEST_CASE("cycle decomposition invariants are enforced") {
  CHECK_THROWS_AS(CycleDecomposition({{2, 1}}), error);          // not minimum-first
  CHECK_THROWS_AS(CycleDecomposition({{2}, {1}}), error);        // minima not increasing
  CHECK_THROWS_AS(CycleDecomposition({{1}, {1, 2}}), error);     // duplicate
  CHECK_THROWS_AS(CycleDecomposition({{1}, {3}}), error);        // gap
}

TEST_CASE("flatten cycles") {
  CHECK(flatten_cycles(CycleDecomposition({{1, 2, 3, 5}, {4, 7, 6}})) ==
        perm({1, 2, 3, 5, 4, 7, 6}));
  CHECK(flatten_cycles(CycleDecomposition({{1, 3, 2, 7, 4}, {5, 9, 8}, {6}})) ==
        perm({1, 3, 2, 7, 4, 5, 9, 8, 6}));
  CHECK(flatten_cycles(standard_cycle_form(Permutation::identity(5))) ==
        Permutation::identity(5));
  for_each_perm(6, [](const Permutation& p) {
    CHECK(flatten_cycles(standard_cycle_form(p)).value_at(1) == 1);
  });
}

TEST_CASE("carlitz inversions") {
  CHECK(carlitz_inversions(perm({2, 3, 5, 7, 1, 4, 6})) == 2);
  CHECK(carlitz_inversions(Permutation::identity(7)) == 0);
  CHECK(carlitz_inversions(perm({3, 7, 2, 1, 9, 6, 4, 5, 8})) == 7);
}

TEST_CASE("run profile of 2371546") {
  const auto r = run_profile(perm({2, 3, 7, 1, 5, 4, 6}));
  CHECK(r.descents == std::vector<int>{3, 5});
  CHECK(r.ascents == std::vector<int>{1, 2, 4, 6});
  CHECK(r.ascending_runs ==
        std::vector<std::vector<int>>{{2, 3, 7}, {1, 5}, {4, 6}});
  CHECK(r.descending_runs ==
        std::vector<std::vector<int>>{{2}, {3}, {7, 1}, {5, 4}, {6}});
  CHECK(r.rtl_minima_positions == std::vector<int>{4, 6, 7});
  CHECK(r.rtl_minima_values == std::vector<int>{1, 4, 6});
}

TEST_CASE("run profile degenerate shapes") {
  const auto id = run_profile(Permutation::identity(5));
  CHECK(id.descents.empty());
  CHECK(id.ascending_runs.size() == 1);
  CHECK(id.descending_runs.size() == 5);
  CHECK(id.rtl_minima_positions == std::vector<int>{1, 2, 3, 4, 5});

  const auto dec = run_profile(perm({3, 2, 1}));
  CHECK(dec.descents == std::vector<int>{1, 2});
  CHECK(dec.rtl_minima_values == std::vector<int>{1});
}

TEST_CASE("run profile structure, exhaustive") {
  for (int n = 1; n <= 6; ++n) {
    for_each_perm(n, [&](const Permutation& p) {
      const auto r = run_profile(p);
      CHECK(r.ascending_runs.size() == r.descents.size() + 1);
      CHECK(r.descending_runs.size() == r.ascents.size() + 1);
      std::vector<int> cat;
      for (const auto& run : r.ascending_runs) cat.insert(cat.end(), run.begin(), run.end());
      CHECK(cat == p.values());
      cat.clear();
      for (const auto& run : r.descending_runs) cat.insert(cat.end(), run.begin(), run.end());
      CHECK(cat == p.values());
      CHECK(std::is_sorted(r.rtl_minima_values.begin(), r.rtl_minima_values.end()));
      CHECK(r.rtl_minima_positions.back() == n);
    });
  }
}

TEST_CASE("avoids_321") {
  CHECK(avoids_321(perm({3, 5, 1, 2, 6, 4})));
  CHECK_FALSE(avoids_321(perm({3, 2, 1})));
  int avoiders = 0;
  for_each_perm(6, [&](const Permutation& p) { avoiders += avoids_321(p) ? 1 : 0; });
  CHECK(avoiders == 132);
  CHECK(static_cast<std::uint64_t>(avoiders) == catalan(6));
}

TEST_CASE("avoids_321 agrees with the cubic oracle, exhaustive") {
  for (int n = 1; n <= 7; ++n) {
    for_each_perm(n, [](const Permutation& p) {
      CHECK(avoids_321(p) == !contains_321_bruteforce(p));
    });
  }
}

TEST_CASE("permutation text forms") {
  CHECK(format_permutation(perm({6, 1, 4, 2, 9, 7, 3, 5, 8})) == "6 1 4 2 9 7 3 5 8");
  CHECK(parse_permutation("6 1 4 2 9 7 3 5 8") == perm({6, 1, 4, 2, 9, 7, 3, 5, 8}));
  CHECK(parse_permutation("614297358") == perm({6, 1, 4, 2, 9, 7, 3, 5, 8}));
  CHECK(parse_permutation("1") == perm({1}));
  CHECK(parse_permutation("10 2 3 4 5 6 7 8 9 1") ==
        perm({10, 2, 3, 4, 5, 6, 7, 8, 9, 1}));
  CHECK_THROWS_AS(parse_permutation(""), error);
  CHECK_THROWS_AS(parse_permutation("1 2 x"), error);
  CHECK_THROWS_AS(parse_permutation("12a"), error);
  CHECK_THROWS_AS(parse_permutation("102"), error); // digit 0 is no value
}

TEST_CASE("riv text form") {
  CHECK(format_riv(right_inversion_vector(perm({5, 3, 7, 2, 8, 1, 4, 6}))) ==
        "(4,2,4,1,3,0,0,0)");
}

TEST_CASE("counting helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(8) == 40320);
  CHECK(binomial(16, 8) == 12870);
  const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) CHECK(catalan(n) == expected[n]);
}
