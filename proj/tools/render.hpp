#pragma once

// Grid pictures of layouts of rank <= 2: cell (i, j) holds the value of the
// layout at the coordinate whose first mode is i and second mode is j.

#include <string>
#include <vector>

#include "layoutalg/layout.hpp"

namespace layoutalg::render {

using Grid = std::vector<std::vector<Int>>;

/// Throws `Error{Unrenderable}` when rank(l) > 2.
Grid grid_of(const Layout& l);
/// Regroups modes 2..k into a single mode so that rank <= 2 (same function).
Layout flatten_to_two(const Layout& l);

/// Right-aligned, space-separated rows.
std::string format_text(const Grid& g);
/// A TikZ picture with one labelled cell per grid entry.
std::string format_tikz(const Grid& g);

}  // namespace layoutalg::render
