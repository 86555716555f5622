#pragma once

#include <optional>
#include <string>

#include "qlozenge/lattice.hpp"
#include "qlozenge/weights.hpp"

namespace qlozenge::cli {

/// Static SVG picture of a region, optionally filled with a tiling.
/// Left, right and vertical lozenges get three grey shades; the outer
/// boundary is drawn solid and the removed shamrock of a Q-family region dashed.
/// Coordinates are printed with fixed precision so equal inputs give equal bytes.
std::string render_svg(const Region& region, const std::optional<Tiling>& tiling = std::nullopt);

}  // namespace qlozenge::cli
