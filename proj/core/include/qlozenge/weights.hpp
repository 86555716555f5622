#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlozenge/lattice.hpp"

namespace qlozenge {

enum class Weight : std::uint8_t { Uniform, Wt0, Wt1, Wt2, Wt3 };

std::string weight_name(Weight w);
/// Accepts uniform|wt0|wt1|wt2|wt3 in any letter case.
Weight parse_weight(const std::string& name);

struct Tiling {
  std::vector<Lozenge> lozenges;  // sorted

  bool operator==(const Tiling&) const = default;
};

Tiling make_tiling(std::vector<Lozenge> lozenges);
/// True when the lozenges cover every triangle of the region exactly once.
bool tiles(const Region& region, const Tiling& tiling);

/// Per-lozenge exponent for Uniform, Wt1, Wt2 and Wt3.
/// Wt0 depends on the whole tiling and is rejected here with std::invalid_argument.
std::int64_t lozenge_exponent(Weight w, const Region& region, const Lozenge& loz);
/// Sum of lozenge exponents; for Wt0 the height of the cube pile above the empty pile.
std::int64_t tiling_exponent(Weight w, const Region& region, const Tiling& tiling);
/// Throws MissingFrame when the region cannot carry the assignment.
void require_weight_support(Weight w, const Region& region);

std::int64_t f_exponent(const RegionParams& p);
std::int64_t g_exponent(const RegionParams& p);

/// Number of cubes of the pile encoded by a tiling of a Q-family region.
std::int64_t tiling_volume(const Region& region, const Tiling& tiling);

struct ForcedResult {
  Region region;
  std::int64_t exponent = 0;
  std::vector<Lozenge> removed;
};

/// Strips lozenges that are the only cover of some triangle until none remain.
/// Throws Untileable when a triangle is left with no possible partner.
ForcedResult remove_forced(const Region& region, Weight w);

/// Any one tiling, or nullopt when the region has none.
std::optional<Tiling> some_tiling(const Region& region);

/// Unit-hexagon rotations around lattice vertices that are fully tiled by
/// three lozenges. +1 raises the pile by one cube, -1 lowers it.
struct Flip {
  std::pair<int, int> vertex;
  int direction = 0;
};
std::vector<Flip> available_flips(const Tiling& tiling);
Tiling apply_flip(const Tiling& tiling, const Flip& flip);

/// The tiling with no cubes: the unique tiling admitting no lowering flip.
/// Throws Untileable when the region has no tiling.
Tiling empty_pile_tiling(const Region& region);

/// Cubes stacked above the empty pile: right lozenges on each sliding line are
/// matched by rank and their row differences summed. This is the wt0 exponent.
std::int64_t pile_height(const Tiling& tiling, const Tiling& empty_pile);

}  // namespace qlozenge
