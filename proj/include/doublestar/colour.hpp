#pragma once

namespace doublestar {

enum class Colour : unsigned char { Red = 0, Blue = 1 };

inline constexpr Colour kColours[2] = {Colour::Red, Colour::Blue};

constexpr Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }

constexpr int colour_index(Colour c) { return static_cast<int>(c); }

constexpr char colour_char(Colour c) { return c == Colour::Red ? 'R' : 'B'; }

} // namespace doublestar
