#include "deco/error.hpp"

namespace deco {

const char* to_string(errc kind) {
  switch (kind) {
    case errc::duplicate_value: return "duplicate value";
    case errc::value_out_of_range: return "value out of range";
    case errc::empty_input: return "empty input";
    case errc::entry_too_large: return "entry too large";
    case errc::invalid_code: return "invalid code";
    case errc::invalid_cycles: return "invalid cycles";
    case errc::invalid_polyomino: return "invalid polyomino";
    case errc::cap_exceeded: return "cap exceeded";
    case errc::parse_error: return "parse error";
  }
  return "unknown error";
}

} // namespace deco
