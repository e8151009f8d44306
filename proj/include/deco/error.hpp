#pragma once

#include <stdexcept>
#include <string>

namespace deco {

enum class errc {
  duplicate_value,
  value_out_of_range,
  empty_input,
  entry_too_large,
  invalid_code,
  invalid_cycles,
  invalid_polyomino,
  cap_exceeded,
  parse_error,
};

const char* to_string(errc kind);

/// Library error carrying a kind and, when meaningful, the offending
/// 1-based index or value.
class error : public std::runtime_error {
public:
  error(errc kind, const std::string& message, long where = 0)
      : std::runtime_error(to_string(kind) + (": " + message)), kind_(kind), where_(where) {}

  errc kind() const noexcept { return kind_; }

  /// Offending index or value, 0 when not applicable.
  long where() const noexcept { return where_; }

private:
  errc kind_;
  long where_;
};

} // namespace deco
