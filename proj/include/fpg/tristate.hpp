#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpg {

// User-supplied structural assertions; never silently defaults to yes.
enum class TriState { yes, no, unknown };

inline std::string to_string(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    case TriState::unknown:
      return "unknown";
  }
  throw std::logic_error("unreachable");
}

inline TriState tristate_from_string(std::string_view s) {
  if (s == "yes") return TriState::yes;
  if (s == "no") return TriState::no;
  if (s == "unknown") return TriState::unknown;
  throw std::invalid_argument("expected yes, no or unknown");
}

}  // namespace fpg
