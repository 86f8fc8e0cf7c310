#include "lattisym/scalar.hpp"

#include <array>
#include <charconv>

namespace lattisym {

std::string_view to_string(Mode mode) { return mode == Mode::kExact ? "exact" : "numeric"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::kExact;
  if (text == "numeric") return Mode::kNumeric;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected exact|numeric)");
}

std::string ScalarTraits<double>::to_string(double x) {
  if (x == 0.0) return "0";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

}  // namespace lattisym
