#include "deco/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <boost/math/distributions/chi_squared.hpp>

#include "deco/numbers.hpp"
#include "deco/text.hpp"

namespace deco {

namespace {

void require_cap(int n, int cap) {
  if (n < 1) throw error(errc::value_out_of_range, "size must be at least 1", n);
  if (n > cap) {
    throw error(errc::cap_exceeded,
                "n = " + std::to_string(n) + " exceeds the exhaustive cap " + std::to_string(cap),
                n);
  }
}

std::string bij_note(BijectionId id) {
  return "bij=" + std::to_string(static_cast<int>(id));
}

// Visits all of S_n in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& visit) {
  std::vector<int> vals(static_cast<std::size_t>(n));
  std::iota(vals.begin(), vals.end(), 1);
  do {
    visit(Permutation(std::vector<int>(vals)));
  } while (std::next_permutation(vals.begin(), vals.end()));
}

// Independent area oracle: rasterize and count cells. Used only by the
// harness, on purpose not sharing code with statistics().
int count_cells(const DecoPolyomino& d) {
  int top = 0;
  for (const auto& c : d.columns()) top = std::max(top, c.top);
  int count = 0;
  for (int level = 0; level < top; ++level) {
    for (const auto& c : d.columns()) {
      if (c.bottom <= level && level < c.top) ++count;
    }
  }
  return count;
}

// Independent cubic pattern oracle, also harness-only.
bool contains_321_cubic(const Permutation& p) {
  const auto& v = p.values();
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(j)] &&
            v[static_cast<std::size_t>(j)] > v[static_cast<std::size_t>(k)])
          return true;
  return false;
}

std::uint64_t lehmer_rank(const Permutation& p) {
  const int n = p.size();
  const auto c = right_inversion_vector(p).entries();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    rank += static_cast<std::uint64_t>(c[static_cast<std::size_t>(i - 1)]) * factorial(n - i);
  }
  return rank;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

} // namespace

void Report::add_failure(std::string input, std::string expected, std::string actual) {
  ++failure_count;
  if (failures.size() < kKeptFailures) {
    failures.push_back({std::move(input), std::move(expected), std::move(actual)});
  }
}

std::string Report::line() const {
  std::ostringstream out;
  out << (passed() ? "PASS" : "FAIL") << " check=" << check_name << " n=" << n
      << " cases=" << total_cases << " failures=" << failure_count;
  if (!notes.empty()) out << " " << notes;
  return out.str();
}

std::string Report::text() const {
  std::string out = line();
  for (const auto& f : failures) {
    out += "\n  failure: input=" + f.input + " expected=" + f.expected + " actual=" + f.actual;
  }
  if (failure_count > failures.size()) {
    out += "\n  (showing " + std::to_string(failures.size()) + " of " +
           std::to_string(failure_count) + " failures)";
  }
  return out;
}

Report check_bijection(int n, BijectionId id, int cap) {
  require_cap(n, cap);
  Report r;
  r.check_name = "bijection";
  r.n = n;
  r.notes = bij_note(id);
  std::unordered_set<std::string> images;
  images.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(factorial(n), 1u << 22)));
  for_each_permutation(n, [&](const Permutation& p) {
    ++r.total_cases;
    const std::string input = format_permutation(p);
    const DecoPolyomino image = apply_bijection(id, p);
    const auto validity = validate_columns(image.columns());
    if (!validity.valid()) {
      r.add_failure(input, "valid image", validity.violations.front());
      return;
    }
    if (!images.insert(format_columns(image)).second) {
      r.add_failure(input, "distinct image", "cols=" + format_columns(image) + " seen before");
      return;
    }
    const Permutation back = invert(id, image);
    if (back != p) {
      r.add_failure(input, input, format_permutation(back));
    }
  });
  return r;
}

Report check_statistics(int n, BijectionId id, int cap) {
  require_cap(n, cap);
  Report r;
  r.check_name = "statistics";
  r.n = n;
  int identities = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    ++r.total_cases;
    const std::string input = format_permutation(p);
    const DecoPolyomino image = apply_bijection(id, p);
    const StatRecord s = statistics(image);
    int evaluated = 0;
    const auto expect = [&](const char* name, int want, int got) {
      ++evaluated;
      if (want != got) {
        r.add_failure(input, std::string(name) + "=" + std::to_string(want),
                      std::string(name) + "=" + std::to_string(got));
      }
    };
    const auto expect_seq = [&](const char* name, const std::vector<int>& want,
                                const std::vector<int>& got) {
      ++evaluated;
      if (want != got) {
        r.add_failure(input, std::string(name) + "=" + join(want),
                      std::string(name) + "=" + join(got));
      }
    };
    switch (id) {
      case BijectionId::phi1: {
        const auto first_run_of_reverse =
            static_cast<int>(run_profile(reverse(p)).ascending_runs.front().size());
        expect("last-column-length", first_run_of_reverse, s.last_column_length);
        break;
      }
      case BijectionId::phi2: {
        const auto prof = run_profile(p);
        const int inv = inversion_count(p);
        const int rtl = static_cast<int>(prof.rtl_minima_positions.size());
        expect("last-column-level", rtl, s.last_column_level);
        expect("last-column-length", static_cast<int>(prof.ascending_runs.back().size()),
               s.last_column_length);
        expect("area", inv + rtl, s.area);
        std::vector<int> diffs;
        int prev = 0;
        for (int m : prof.rtl_minima_positions) {
          diffs.push_back(m - prev);
          prev = m;
        }
        expect_seq("border-rows", diffs, bottom_border(image).row_lengths);
        const DecoCode code = code_of(image);
        int pasted = 0;
        for (int a : code.entries()) pasted += a;
        expect("pasted-cells", inv, pasted);
        break;
      }
      case BijectionId::phi3: {
        const int cycles = static_cast<int>(standard_cycle_form(p).cycles().size());
        expect("last-column-level", cycles, s.last_column_level);
        expect("width", n + 1 - cycles, s.width);
        break;
      }
      case BijectionId::phi4: {
        const int inv = inversion_count(p);
        expect("area-minus-level", inv, s.area - s.last_column_level);
        expect("area-plus-width", inv, s.area + s.width - (n + 1));
        if (is_parallelogram(image)) {
          expect("first-column-length",
                 static_cast<int>(run_profile(p).ascending_runs.back().size()),
                 s.first_column_length);
        }
        break;
      }
      case BijectionId::phi5: {
        const auto cd = standard_cycle_form(p);
        expect("area", n + carlitz_inversions(p), s.area);
        expect("last-column-level", static_cast<int>(cd.cycles().size()), s.last_column_level);
        expect_seq("border-rows", cd.lengths(), bottom_border(image).row_lengths);
        break;
      }
      case BijectionId::phi6: {
        expect("first-row-length", p.value_at(1), s.first_row_length);
        expect("area-minus-level", inversion_count(p), s.area - s.last_column_level);
        break;
      }
    }
    identities = std::max(identities, evaluated);
  });
  r.notes = bij_note(id) + " identities=" + std::to_string(identities);
  return r;
}

Report check_theorems(int n, int cap) {
  require_cap(n, cap);
  Report r;
  r.check_name = "theorems";
  r.n = n;
  std::uint64_t avoiders = 0;
  std::uint64_t para2 = 0;
  std::uint64_t para4 = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    ++r.total_cases;
    const std::string input = format_permutation(p);
    const bool avoids = avoids_321(p);
    const bool p2 = is_parallelogram(phi2(p));
    const bool p4 = is_parallelogram(phi4(p));
    avoiders += avoids;
    para2 += p2;
    para4 += p4;
    if (p2 != avoids) {
      r.add_failure(input, std::string("phi2 parallelogram=") + (avoids ? "1" : "0"),
                    p2 ? "1" : "0");
    }
    if (p4 != avoids) {
      r.add_failure(input, std::string("phi4 parallelogram=") + (avoids ? "1" : "0"),
                    p4 ? "1" : "0");
    }
  });
  const std::uint64_t expected = catalan(n);
  if (avoiders != expected || para2 != expected || para4 != expected) {
    r.add_failure("count", "catalan=" + std::to_string(expected),
                  "avoiders=" + std::to_string(avoiders) + " phi2=" + std::to_string(para2) +
                      " phi4=" + std::to_string(para4));
  }
  r.notes = "catalan=" + std::to_string(expected);
  return r;
}

Report check_oracles(int n, int cap) {
  require_cap(n, cap);
  Report r;
  r.check_name = "oracles";
  r.n = n;
  for_each_permutation(n, [&](const Permutation& p) {
    ++r.total_cases;
    const bool linear = avoids_321(p);
    const bool cubic = !contains_321_cubic(p);
    if (linear != cubic) {
      r.add_failure(format_permutation(p), std::string("avoids_321=") + (cubic ? "1" : "0"),
                    linear ? "1" : "0");
    }
  });
  CodeEnumerator codes(n);
  while (const auto c = codes.next()) {
    ++r.total_cases;
    const DecoPolyomino d = build_from_code(*c);
    const int claimed = statistics(d).area;
    const int counted = count_cells(d);
    if (claimed != counted) {
      r.add_failure("cols=" + format_columns(d), "area=" + std::to_string(counted),
                    "area=" + std::to_string(claimed));
    }
  }
  return r;
}

Report check_uniformity(int n, std::uint64_t samples, std::uint64_t seed) {
  require_cap(n, 6); // n! bins must stay tractable
  Report r;
  r.check_name = "uniformity";
  r.n = n;
  r.total_cases = samples;
  const std::uint64_t bins = factorial(n);
  std::vector<std::uint64_t> tally(bins, 0);
  CodeSampler sampler(n, seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Permutation p = invert(BijectionId::phi2, build_from_code(sampler.next()));
    ++tally[lehmer_rank(p)];
  }
  const double expected = static_cast<double>(samples) / static_cast<double>(bins);
  double chi2 = 0.0;
  for (std::uint64_t count : tally) {
    const double d = static_cast<double>(count) - expected;
    chi2 += d * d / expected;
  }
  const double dof = static_cast<double>(bins - 1);
  const double threshold =
      n == 1 ? 0.0 : boost::math::quantile(boost::math::chi_squared(dof), 0.999);
  if (chi2 > threshold) {
    r.add_failure("seed=" + std::to_string(seed), "chi2<=" + std::to_string(threshold),
                  "chi2=" + std::to_string(chi2));
  }
  std::ostringstream notes;
  notes << "seed=" << seed << " dof=" << static_cast<std::uint64_t>(dof) << " chi2=" << chi2
        << " threshold=" << threshold;
  r.notes = notes.str();
  return r;
}

} // namespace deco
