#include "deco/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deco/bijections.hpp"
#include "deco/text.hpp"
#include "deco/verify.hpp"

namespace deco::cli {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string stat_line(const StatRecord& s) {
  return "height=" + std::to_string(s.height) + " width=" + std::to_string(s.width) +
         " vheight=" + std::to_string(s.vertical_height) + " area=" + std::to_string(s.area) +
         " level=" + std::to_string(s.last_column_level) +
         " last_col=" + std::to_string(s.last_column_length) +
         " first_col=" + std::to_string(s.first_column_length) +
         " first_row=" + std::to_string(s.first_row_length);
}

std::string code_text(const DecoCode& code, bool low_order) {
  return low_order ? format_code_low(code) : format_code_display(code);
}

void print_polyomino(std::ostream& out, const DecoPolyomino& d, bool low_order, bool art) {
  out << "code=" << code_text(code_of(d), low_order) << "\n";
  out << "cols=" << format_columns(d) << "\n";
  out << stat_line(statistics(d)) << "\n";
  if (art) out << render_ascii(d) << "\n";
}

void print_permutation_stats(std::ostream& out, const Permutation& p) {
  const auto prof = run_profile(p);
  const auto cd = standard_cycle_form(p);
  out << "perm=" << format_permutation(p) << "\n";
  out << "n=" << p.size() << "\n";
  out << "inv=" << inversion_count(p) << "\n";
  out << "inv_c=" << carlitz_inversions(p) << "\n";
  out << "riv=" << format_riv(right_inversion_vector(p)) << "\n";
  out << "cycles=" << format_cycles(cd) << "\n";
  out << "flat=" << format_permutation(flatten_cycles(cd)) << "\n";
  out << "descents=" << join(prof.descents, " ") << "\n";
  out << "ascents=" << join(prof.ascents, " ") << "\n";
  const auto runs = [&](const std::vector<std::vector<int>>& rs) {
    std::string text;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (i > 0) text += " | ";
      text += join(rs[i], " ");
    }
    return text;
  };
  out << "asc_runs=" << runs(prof.ascending_runs) << "\n";
  out << "desc_runs=" << runs(prof.descending_runs) << "\n";
  out << "rtl_min_pos=" << join(prof.rtl_minima_positions, " ") << "\n";
  out << "rtl_min_val=" << join(prof.rtl_minima_values, " ") << "\n";
  out << "avoids_321=" << (avoids_321(p) ? 1 : 0) << "\n";
}

void print_polyomino_stats(std::ostream& out, const DecoPolyomino& d, bool low_order) {
  out << "code=" << code_text(code_of(d), low_order) << "\n";
  out << "cols=" << format_columns(d) << "\n";
  out << stat_line(statistics(d)) << "\n";
  out << "border_rows=" << join(bottom_border(d).row_lengths, ",") << "\n";
  out << "para=" << (is_parallelogram(d) ? 1 : 0) << "\n";
}

int exhaustive_cap() {
  const char* env = std::getenv("DECO_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || cap < 1 || cap > 20) {
    throw error(errc::parse_error,
                std::string("DECO_MAX_N: bad value \"") + env + "\", expected an integer 1..20");
  }
  return static_cast<int>(cap);
}

DecoPolyomino polyomino_from_flags(const std::string& code_flag, const std::string& cols_flag) {
  if (!code_flag.empty() && !cols_flag.empty()) {
    throw error(errc::parse_error, "give either --code or --cols, not both");
  }
  if (!code_flag.empty()) return build_from_code(parse_code_display(code_flag));
  if (!cols_flag.empty()) return parse_columns(cols_flag);
  throw error(errc::parse_error, "one of --code or --cols is required");
}

struct Options {
  int bij = 0;
  std::string perm;
  std::string code;
  std::string cols;
  std::string code_order = "display";
  bool art = false;
  int n = 0;
  std::uint64_t seed = 42;
  std::uint64_t count = 1;
  std::uint64_t samples = 100000;
  bool theorems = false;
  bool uniformity = false;

  bool low_order() const { return code_order == "low"; }
};

int run_map(const Options& o, std::ostream& out) {
  const Permutation p = parse_permutation(o.perm);
  const DecoPolyomino image = apply_bijection(bijection_from_int(o.bij), p);
  print_polyomino(out, image, o.low_order(), o.art);
  return 0;
}

int run_unmap(const Options& o, std::ostream& out) {
  const DecoPolyomino d = polyomino_from_flags(o.code, o.cols);
  out << format_permutation(invert(bijection_from_int(o.bij), d)) << "\n";
  return 0;
}

int run_stats(const Options& o, std::ostream& out) {
  const int given = (o.perm.empty() ? 0 : 1) + (o.code.empty() ? 0 : 1) + (o.cols.empty() ? 0 : 1);
  if (given != 1) {
    throw error(errc::parse_error, "give exactly one of --perm, --code or --cols");
  }
  if (!o.perm.empty()) {
    print_permutation_stats(out, parse_permutation(o.perm));
  } else {
    print_polyomino_stats(out, polyomino_from_flags(o.code, o.cols), o.low_order());
  }
  return 0;
}

int run_enumerate(const Options& o, std::ostream& out) {
  const bool with_perm = o.bij != 0;
  const BijectionId id = with_perm ? bijection_from_int(o.bij) : BijectionId::phi1;
  CodeEnumerator codes(o.n);
  while (const auto code = codes.next()) {
    const DecoPolyomino d = build_from_code(*code);
    const StatRecord s = statistics(d);
    out << "code=" << code_text(*code, o.low_order()) << " cols=" << format_columns(d)
        << " height=" << s.height << " width=" << s.width << " area=" << s.area
        << " level=" << s.last_column_level << " para=" << (is_parallelogram(d) ? 1 : 0);
    if (with_perm) out << " perm=" << format_permutation(invert(id, d));
    out << "\n";
  }
  return 0;
}

int run_render(const Options& o, std::ostream& out) {
  out << render_ascii(polyomino_from_flags(o.code, o.cols)) << "\n";
  return 0;
}

int run_random(const Options& o, std::ostream& out) {
  CodeSampler sampler(o.n, o.seed);
  for (std::uint64_t i = 0; i < o.count; ++i) {
    const DecoCode code = sampler.next();
    out << "code=" << code_text(code, o.low_order());
    if (o.bij != 0) {
      out << " perm="
          << format_permutation(invert(bijection_from_int(o.bij), build_from_code(code)));
    }
    out << "\n";
  }
  return 0;
}

int run_verify(const Options& o, std::ostream& out) {
  const int cap = exhaustive_cap();
  std::vector<BijectionId> ids;
  if (o.bij != 0) {
    ids.push_back(bijection_from_int(o.bij));
  } else {
    ids.assign(std::begin(kAllBijections), std::end(kAllBijections));
  }
  std::vector<Report> reports;
  for (int n = 1; n <= o.n; ++n) {
    for (const BijectionId id : ids) {
      reports.push_back(check_bijection(n, id, cap));
      reports.push_back(check_statistics(n, id, cap));
    }
    reports.push_back(check_oracles(n, cap));
    if (o.theorems) reports.push_back(check_theorems(n, cap));
  }
  if (o.uniformity) {
    reports.push_back(check_uniformity(std::min(o.n, 6), o.samples, o.seed));
  }
  std::size_t passed = 0;
  for (const Report& r : reports) {
    out << r.text() << "\n";
    if (r.passed()) ++passed;
  }
  out << "summary: " << passed << "/" << reports.size() << " checks passed\n";
  return passed == reports.size() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deco polyominoes, their statistics and the six bijections with permutations"};
  app.require_subcommand(1);
  Options o;

  const auto add_code_order = [&](CLI::App* cmd) {
    cmd->add_option("--code-order", o.code_order, "print codes in display or low order")
        ->check(CLI::IsMember({"display", "low"}))
        ->capture_default_str();
  };

  CLI::App* map = app.add_subcommand("map", "map a permutation to its deco polyomino");
  map->add_option("--bij", o.bij, "bijection 1..6")->required()->check(CLI::Range(1, 6));
  map->add_option("--perm", o.perm, "permutation, spaced or compact")->required();
  map->add_flag("--art", o.art, "also print ASCII art");
  add_code_order(map);

  CLI::App* unmap = app.add_subcommand("unmap", "map a deco polyomino back to its permutation");
  unmap->add_option("--bij", o.bij, "bijection 1..6")->required()->check(CLI::Range(1, 6));
  unmap->add_option("--code", o.code, "construction code in display order, e.g. (1,1,0)");
  unmap->add_option("--cols", o.cols, "column spans, e.g. 0:2,0:2");

  CLI::App* stats = app.add_subcommand("stats", "statistics of a permutation or polyomino");
  stats->add_option("--perm", o.perm, "permutation, spaced or compact");
  stats->add_option("--code", o.code, "construction code in display order");
  stats->add_option("--cols", o.cols, "column spans");
  add_code_order(stats);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all deco polyominoes of height n");
  enumerate->add_option("-n", o.n, "height")->required()->check(CLI::Range(1, 20));
  enumerate->add_option("--bij", o.bij, "also print the preimage under this bijection")
      ->check(CLI::Range(1, 6));
  add_code_order(enumerate);

  CLI::App* render = app.add_subcommand("render", "ASCII art of a deco polyomino");
  render->add_option("--code", o.code, "construction code in display order");
  render->add_option("--cols", o.cols, "column spans");

  CLI::App* random = app.add_subcommand("random", "sample deco polyominoes uniformly");
  random->add_option("-n", o.n, "height")->required()->check(CLI::Range(1, 64));
  random->add_option("--seed", o.seed, "64-bit generator seed")->required();
  random->add_option("--count", o.count, "number of samples")->capture_default_str();
  random->add_option("--bij", o.bij, "also print the preimage under this bijection")
      ->check(CLI::Range(1, 6));
  add_code_order(random);

  CLI::App* verify = app.add_subcommand("verify", "run the exhaustive verification harness");
  verify->add_option("-n", o.n, "run checks for sizes 1..n")->required()->check(CLI::Range(1, 20));
  verify->add_option("--bij", o.bij, "restrict to one bijection")->check(CLI::Range(1, 6));
  verify->add_flag("--theorems", o.theorems, "also check the two pattern theorems");
  verify->add_flag("--uniformity", o.uniformity,
                   "also chi-square-test seeded sampling at size min(n,6)");
  verify->add_option("--samples", o.samples, "samples for --uniformity")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed for --uniformity")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(map)) return run_map(o, out);
    if (app.got_subcommand(unmap)) return run_unmap(o, out);
    if (app.got_subcommand(stats)) return run_stats(o, out);
    if (app.got_subcommand(enumerate)) return run_enumerate(o, out);
    if (app.got_subcommand(render)) return run_render(o, out);
    if (app.got_subcommand(random)) return run_random(o, out);
    if (app.got_subcommand(verify)) return run_verify(o, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace deco::cli
