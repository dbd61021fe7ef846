#pragma once

// JSON and SVG renderings of a VarietyDescription.

#include <string>
#include <string_view>

#include "knotchar/variety.hpp"

namespace knotchar {

/// Fixed key order; every double printed with 17 significant digits.
std::string emit_json(const VarietyDescription& v);

/// Inverse of emit_json. Throws Error(InvalidInput) on schema mismatch.
VarietyDescription parse_variety_json(std::string_view text);

struct FigureSpec {
  int width = 800;
  int height = 420;
  double s_min = -2.2;
  double s_max = 2.2;
};

/// The reducible line drawn horizontally over [s_min, s_max], each
/// irreducible line as an arc above it between its two intersection
/// abscissas, and the intersection points as labeled dots.
/// Throws Error(WindowTooSmall) if an intersection falls outside the window.
std::string emit_svg(const VarietyDescription& v, const FigureSpec& f = {});

}  // namespace knotchar
