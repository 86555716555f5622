#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qlozenge/lattice.hpp"
#include "qlozenge/qpoly.hpp"
#include "qlozenge/weights.hpp"

namespace qlozenge {

struct Budget {
  std::size_t max_triangles = 120;
  std::size_t max_states = std::size_t{1} << 22;
};

struct GenFunction {
  QPoly poly;
  Weight assignment = Weight::Uniform;
  std::string region_digest;
};

/// Stable 64-bit FNV-1a digest of the sorted triangle list, as 16 hex digits.
std::string region_digest(const Region& region);

/// Number of tilings by frontier dynamic programming. 0 when untileable.
BigInt count_tilings(const Region& region, const Budget& budget = {});

/// Generating function by frontier dynamic programming over the triangle order.
GenFunction gen_function(const Region& region, Weight w, const Budget& budget = {});

/// Same contract as gen_function, by plain backtracking without memoization.
GenFunction gen_function_oracle(const Region& region, Weight w, const Budget& budget = {});

/// Calls visit on every tiling in a fixed order; stops early when visit returns false.
/// Throws BudgetExceeded when the region has more than budget.max_triangles triangles.
void iter_tilings(const Region& region, const std::function<bool(const Tiling&)>& visit,
                  const Budget& budget = {});

/// Collects up to limit tilings (0 means all).
std::vector<Tiling> list_tilings(const Region& region, std::size_t limit = 0, const Budget& budget = {});

/// Condensation regions for marks [u, v, w, s]:
/// [R-{u,v,w,s}, R-{u,v}, R-{w,s}, R-{u,s}, R-{v,w}].
/// Throws BadMarks unless u, w share an orientation, v, s have the other one,
/// and the four lie in this cyclic order along one outer boundary walk.
std::array<Region, 5> kuo_remove(const Region& region, const std::array<Triangle, 4>& marks);

}  // namespace qlozenge
