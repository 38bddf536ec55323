#pragma once

#include <ostream>
#include <set>
#include <string>
#include <string_view>

#include "gapsym/semigroup.h"

namespace gapsym_cli {

enum class Layer { Sg, Ssg, Fg, Rectangle, Triangles };

/// "sg", "ssg", "fg", "rectangle", "triangles".
std::string_view layer_name(Layer layer);
std::set<Layer> all_layers();
/// Comma separated layer names, or "all"/"none". Throws gapsym::Error
/// (InvalidArgument) on unknown names.
std::set<Layer> parse_layers(std::string_view text);

/// Draws the gap triangle of <alpha, beta>: one square per lattice gap with its
/// value and Wilf number, plus the requested region layers. Integer
/// coordinates only, so the output is byte-stable.
void write_lattice_svg(const gapsym::TwoGenView &t, const std::set<Layer> &layers, std::ostream &out);

}  // namespace gapsym_cli
