#pragma once

#include <string>

#include "qlozenge/enumerate.hpp"
#include "qlozenge/lattice.hpp"
#include "qlozenge/verify.hpp"
#include "qlozenge/weights.hpp"

namespace qlozenge {

// Compact single-line JSON with sorted keys, so equal values give equal bytes.

/// {"params": {...} | null, "triangles": [[row, pos, "U" | "D"], ...]}
std::string region_to_json(const Region& region);
/// Restores triangles, provenance and the reference frame of Q-family regions.
Region region_from_json(const std::string& text);

/// [[[row, pos, "U"], [row, pos, "D"], "L" | "R" | "V"], ...]
std::string tiling_to_json(const Tiling& tiling);
Tiling tiling_from_json(const std::string& text);

std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

std::string genfun_to_json(const GenFunction& g);

}  // namespace qlozenge
