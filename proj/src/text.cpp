#include "deco/text.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace deco {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, const char* what) {
  const std::string t(trimmed(token));
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw error(errc::parse_error, std::string(what) + ": bad token \"" + t + "\"");
  }
  if (used != t.size()) {
    throw error(errc::parse_error, std::string(what) + ": bad token \"" + t + "\"");
  }
  return value;
}

std::vector<int> split_ints(std::string_view text, char sep, const char* what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    const std::string_view token =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(parse_int(token, what));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string_view strip_parens(std::string_view s, const char* what) {
  s = trimmed(s);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') {
      throw error(errc::parse_error, std::string(what) + ": unbalanced parentheses");
    }
    s.remove_prefix(1);
    s.remove_suffix(1);
  }
  return trimmed(s);
}

} // namespace

std::string format_permutation(const Permutation& p) {
  return join_ints(p.values(), " ");
}

Permutation parse_permutation(std::string_view text) {
  const std::string_view s = trimmed(text);
  if (s.empty()) throw error(errc::empty_input, "no permutation given");
  const bool spaced = s.find_first_of(" \t") != std::string_view::npos;
  std::vector<int> vals;
  if (spaced) {
    std::istringstream in{std::string(s)};
    std::string token;
    while (in >> token) vals.push_back(parse_int(token, "permutation"));
  } else {
    // compact digit string, one value per character (n <= 9)
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw error(errc::parse_error,
                    std::string("permutation: bad character '") + ch + "' in \"" +
                        std::string(s) + "\"");
      }
      vals.push_back(ch - '0');
    }
  }
  return Permutation(std::move(vals));
}

std::string format_code_display(const DecoCode& c) {
  return "(" + join_ints(c.display(), ",") + ")";
}

std::string format_code_low(const DecoCode& c) {
  return "(" + join_ints(c.entries(), ",") + ")";
}

DecoCode parse_code_display(std::string_view text) {
  const std::string_view s = strip_parens(text, "code");
  if (s.empty()) throw error(errc::empty_input, "no code given");
  return DecoCode::from_display(split_ints(s, ',', "code"));
}

std::string format_columns(const DecoPolyomino& p) {
  std::string out;
  for (std::size_t i = 0; i < p.columns().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.columns()[i].bottom) + ":" + std::to_string(p.columns()[i].top);
  }
  return out;
}

DecoPolyomino parse_columns(std::string_view text) {
  std::string_view s = trimmed(text);
  if (s.starts_with("cols=")) s.remove_prefix(5);
  if (s.empty()) throw error(errc::empty_input, "no columns given");
  std::vector<ColumnSpan> cols;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(',', start);
    const std::string_view token =
        s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    const std::size_t colon = token.find(':');
    if (colon == std::string_view::npos) {
      throw error(errc::parse_error,
                  "columns: token \"" + std::string(token) + "\" is not of the form b:t");
    }
    cols.push_back(ColumnSpan{parse_int(token.substr(0, colon), "columns"),
                              parse_int(token.substr(colon + 1), "columns")});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return DecoPolyomino(std::move(cols));
}

std::string format_cycles(const CycleDecomposition& cd) {
  std::string out;
  for (const auto& c : cd.cycles()) {
    out += "(" + join_ints(c, " ") + ")";
  }
  return out;
}

std::string format_riv(const InversionVector& v) {
  return "(" + join_ints(v.entries(), ",") + ")";
}

} // namespace deco
