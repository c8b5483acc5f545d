#pragma once

#include <string>

#include "convexa/geometry/realization.hpp"

namespace convexa {

// Static SVG drawing of a bounded planar realization, one colored shape per
// body.  Throws InvalidArgument unless dim == 2.
std::string render_svg(const Realization& r);

}  // namespace convexa
