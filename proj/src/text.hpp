// Small text helpers shared by the renderers.
#pragma once

#include <string>

namespace metice::text {

inline std::string digits_with(int value, const char* const table[10], const char* minus) {
  std::string digits = std::to_string(value < 0 ? -value : value);
  std::string out = value < 0 ? minus : "";
  for (char d : digits) out += table[d - '0'];
  return out;
}

inline std::string subscript(int value) {
  static const char* const t[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  return digits_with(value, t, "₋");
}

inline std::string superscript(int value) {
  static const char* const t[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  return digits_with(value, t, "⁻");
}

}  // namespace metice::text
