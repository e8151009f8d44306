#pragma once

#include <string>
#include <string_view>

#include "deco/permutation.hpp"
#include "deco/polyomino.hpp"

namespace deco {

/// Space-separated one-line form, e.g. "6 1 4 2 9 7 3 5 8".
std::string format_permutation(const Permutation& p);

/// Accepts the spaced form for any n and the compact digit string
/// ("614297358") for n <= 9.
Permutation parse_permutation(std::string_view text);

/// Display order with parentheses, e.g. "(5,0,2,0,4,2,0,0,0)".
std::string format_code_display(const DecoCode& c);

/// Internal low-index-first order, e.g. "(0,0,0,2,4,0,2,0,5)".
std::string format_code_low(const DecoCode& c);

/// Parses the parenthesized display form; parentheses are optional.
DecoCode parse_code_display(std::string_view text);

/// Machine column form without the "cols=" key, e.g. "0:2,0:2".
std::string format_columns(const DecoPolyomino& p);

/// Accepts "b:t,b:t,..." with an optional leading "cols=".
DecoPolyomino parse_columns(std::string_view text);

/// Standard cycle form, e.g. "(1 3 2 7 4)(5 9 8)(6)".
std::string format_cycles(const CycleDecomposition& cd);

/// Parenthesized comma-separated entries, e.g. "(4,2,4,1,3,0,0,0)".
std::string format_riv(const InversionVector& v);

} // namespace deco
