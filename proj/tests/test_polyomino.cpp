#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "deco/numbers.hpp"
#include "deco/polyomino.hpp"
#include "deco/text.hpp"

using namespace deco;

namespace {

DecoPolyomino poly(std::vector<ColumnSpan> cols) { return DecoPolyomino(std::move(cols)); }

DecoCode display(std::vector<int> d) { return DecoCode::from_display(std::move(d)); }

DecoPolyomino single_column(int n) {
  return poly({ColumnSpan{0, n}});
}

// independent cell count by rasterization
int count_cells(const DecoPolyomino& d) {
  int top = 0;
  for (const auto& c : d.columns()) top = std::max(top, c.top);
  int cells = 0;
  for (int level = 0; level < top; ++level) {
    for (const auto& c : d.columns()) {
      if (c.bottom <= level && level < c.top) ++cells;
    }
  }
  return cells;
}

bool mentions(const ValidationReport& rep, const std::string& needle) {
  for (const auto& v : rep.violations) {
    if (v.find(needle) != std::string::npos) return true;
  }
  return false;
}

} // namespace

TEST_CASE("code entries stay below their step index") {
  CHECK(DecoCode({0, 1, 2}).display() == std::vector<int>{2, 1, 0});
  CHECK(display({2, 1, 0}).entries() == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(DecoCode({1}), error);
  CHECK_THROWS_AS(DecoCode({0, 2}), error);
  CHECK_THROWS_AS(DecoCode({}), error);
  try {
    DecoCode({0, 0, 3});
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.kind() == errc::invalid_code);
    CHECK(e.where() == 3);
  }
}

TEST_CASE("build: all zeros gives the single column") {
  for (int n : {1, 2, 5, 8}) {
    const auto d = build_from_code(DecoCode(std::vector<int>(n, 0)));
    CHECK(d == single_column(n));
  }
}

TEST_CASE("build: hand-checked nine-step code") {
  const auto d = build_from_code(display({5, 0, 2, 0, 4, 2, 0, 0, 0}));
  CHECK(d.columns() == std::vector<ColumnSpan>{{0, 5}, {0, 3}, {1, 6}, {2, 4}, {2, 5}});
  const auto s = statistics(d);
  CHECK(s.area == 18);
  CHECK(s.area == count_cells(d));
  CHECK(s.last_column_level == 5);
  CHECK(s.height == 9);
}

TEST_CASE("build: horizontal bar") {
  const auto d = build_from_code(display({1, 1, 0}));
  CHECK(d.columns() == std::vector<ColumnSpan>{{0, 1}, {0, 1}, {0, 1}});
  const auto s = statistics(d);
  CHECK(s.height == 3);
  CHECK(s.width == 3);
  CHECK(s.last_column_level == 1);
}

TEST_CASE("code_of inverts the construction") {
  CHECK(code_of(single_column(6)) == DecoCode(std::vector<int>(6, 0)));

  const auto seven = display({5, 5, 3, 0, 1, 0, 0});
  const auto d = build_from_code(seven);
  CHECK(d.columns() == std::vector<ColumnSpan>{{0, 5}, {0, 5}, {0, 3}, {0, 2}, {1, 3}});
  CHECK(code_of(d) == seven);

  CHECK(code_of(build_from_code(display({1, 1, 0}))) == display({1, 1, 0}));
}

TEST_CASE("code round trip, exhaustive") {
  for (int n = 1; n <= 8; ++n) {
    CodeEnumerator codes(n);
    while (const auto c = codes.next()) {
      const auto d = build_from_code(*c);
      CHECK(code_of(d) == *c);
      CHECK(build_from_code(code_of(d)) == d);
    }
  }
}

TEST_CASE("validation names each violated invariant") {
  CHECK(validate_columns({{0, 2}, {0, 2}}).valid());
  CHECK(mentions(validate_columns({{0, 3}, {0, 2}}), "deco-condition"));
  CHECK(mentions(validate_columns({{0, 1}, {2, 3}}), "connectivity"));
  CHECK(mentions(validate_columns({{1, 2}}), "source-level"));
  CHECK(mentions(validate_columns({{0, 2}, {-1, 1}}), "monotone-bottoms"));
  CHECK(mentions(validate_columns({{0, 0}}), "empty-column"));
  CHECK(mentions(validate_columns({}), "no-columns"));

  CHECK_THROWS_AS(poly({{0, 3}, {0, 2}}), error);
  try {
    poly({{0, 1}, {2, 3}});
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.kind() == errc::invalid_polyomino);
  }
}

TEST_CASE("statistics of simple shapes") {
  const auto s = statistics(single_column(5));
  CHECK(s.width == 1);
  CHECK(s.area == 5);
  CHECK(s.last_column_level == 5);
  CHECK(s.vertical_height == 5);
  CHECK(s.first_row_length == 1);
  CHECK(s.first_column_length == 5);
}

TEST_CASE("statistics of a wide tall shape") {
  // height 16, width 8, area 34, last column level 9
  const auto d =
      poly({{0, 15}, {0, 6}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 9}});
  const auto s = statistics(d);
  CHECK(s.height == 16);
  CHECK(s.width == 8);
  CHECK(s.area == 34);
  CHECK(s.area == count_cells(d));
  CHECK(s.last_column_level == 9);
  CHECK(s.width + s.last_column_level == s.height + 1);
}

TEST_CASE("bottom border of simple shapes") {
  const auto col = bottom_border(single_column(4));
  CHECK(col.cells.size() == 4);
  CHECK(col.row_lengths == std::vector<int>{1, 1, 1, 1});
  CHECK(col.row_starts == std::vector<int>{1, 2, 3, 4});

  const auto bar = bottom_border(build_from_code(display({1, 1, 0})));
  CHECK(bar.row_lengths == std::vector<int>{3});
}

TEST_CASE("bottom border rows of the nine-step shape") {
  const auto d = build_from_code(display({5, 0, 2, 0, 4, 2, 0, 0, 0}));
  const auto b = bottom_border(d);
  CHECK(b.row_lengths == std::vector<int>{2, 2, 3, 1, 1});
  CHECK(b.cells.front() == BorderCell{1, 0});
  CHECK(b.cells.back() == BorderCell{5, 4});
}

TEST_CASE("border structure, exhaustive") {
  for (int n = 1; n <= 7; ++n) {
    CodeEnumerator codes(n);
    while (const auto c = codes.next()) {
      const auto d = build_from_code(*c);
      const auto b = bottom_border(d);
      const auto s = statistics(d);
      CHECK(static_cast<int>(b.cells.size()) == n);
      int total = 0;
      for (int len : b.row_lengths) total += len;
      CHECK(total == n);
      CHECK(static_cast<int>(b.row_lengths.size()) == s.last_column_level);
      CHECK(s.width + s.last_column_level == n + 1);
    }
  }
}

TEST_CASE("parallelogram detection") {
  CHECK(is_parallelogram(single_column(3)));
  CHECK_FALSE(is_parallelogram(poly({{0, 3}, {0, 2}, {1, 4}})));
  int count = 0;
  CodeEnumerator codes(5);
  while (const auto c = codes.next()) {
    if (is_parallelogram(build_from_code(*c))) ++count;
  }
  CHECK(count == 42);
  CHECK(static_cast<std::uint64_t>(count) == catalan(5));
}

TEST_CASE("enumeration yields n! distinct polyominoes") {
  CodeEnumerator one(1);
  CHECK(one.next() == DecoCode({0}));
  CHECK_FALSE(one.next().has_value());

  for (int n = 1; n <= 6; ++n) {
    CodeEnumerator codes(n);
    std::set<std::string> shapes;
    std::uint64_t total = 0;
    while (const auto c = codes.next()) {
      ++total;
      shapes.insert(format_columns(build_from_code(*c)));
    }
    CHECK(total == factorial(n));
    CHECK(shapes.size() == factorial(n));
  }
}

TEST_CASE("enumeration order is the display odometer") {
  CodeEnumerator codes(3);
  std::vector<std::string> seen;
  while (const auto c = codes.next()) seen.push_back(format_code_display(*c));
  CHECK(seen == std::vector<std::string>{"(0,0,0)", "(0,1,0)", "(1,0,0)", "(1,1,0)",
                                         "(2,0,0)", "(2,1,0)"});
}

TEST_CASE("random codes are valid and deterministic") {
  CHECK(random_code(1, 123) == DecoCode({0}));
  CHECK(random_code(10, 42) == random_code(10, 42));

  CodeSampler a(6, 7);
  CodeSampler b(6, 7);
  for (int i = 0; i < 200; ++i) {
    const auto ca = a.next();
    CHECK(ca == b.next());
    CHECK_NOTHROW(build_from_code(ca));
  }
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(single_column(1)) == "#");
  CHECK(render_ascii(build_from_code(display({1, 1, 0}))) == "###");
  CHECK(render_ascii(poly({{0, 2}, {0, 2}})) == "##\n##");

  const auto d = build_from_code(display({5, 0, 2, 0, 4, 2, 0, 0, 0}));
  const std::string art = render_ascii(d);
  CHECK(std::count(art.begin(), art.end(), '#') == statistics(d).area);
  CHECK(std::count(art.begin(), art.end(), '\n') == statistics(d).vertical_height - 1);
}

TEST_CASE("polyomino text forms") {
  const auto d = poly({{0, 2}, {0, 2}});
  CHECK(format_columns(d) == "0:2,0:2");
  CHECK(parse_columns("0:2,0:2") == d);
  CHECK(parse_columns("cols=0:2,0:2") == d);
  CHECK(format_code_display(code_of(d)) == "(2,0,0)");
  CHECK(format_code_low(code_of(d)) == "(0,0,2)");
  CHECK(parse_code_display("(2,0,0)") == code_of(d));
  CHECK(parse_code_display("2,0,0") == code_of(d));
  CHECK_THROWS_AS(parse_columns("0:2,whoops"), error);
  CHECK_THROWS_AS(parse_columns("0:2,(0:2"), error);
  CHECK_THROWS_AS(parse_code_display("(2,0"), error);
  CHECK_THROWS_AS(parse_columns("0:1,3:4"), error); // disconnected
}
