#pragma once

#include <cstdint>
#include <vector>

#include "qlozenge/lattice.hpp"
#include "qlozenge/qfactor.hpp"
#include "qlozenge/qpoly.hpp"

namespace qlozenge {

struct FormulaResult {
  QPoly poly;                          // full value, prefactor included
  std::int64_t prefactor_exponent = 0;  // the displayed leading q-power
  QFactorExponents factors;            // the product before resolution
};

FormulaResult macmahon_q(int a, int b, int c);

/// Tiling count of the Q-region from the hyperfactorial product.
BigInt theorem_main(const RegionParams& p);
/// Volume generating function of the piles in the compound box.
FormulaResult theorem_qmain(const RegionParams& p);

FormulaResult hex_m1(int a, int b, int c);
FormulaResult hex_m2(int a, int b, int c);

FormulaResult semihex_dents_m2(int a, int b, const std::vector<int>& dents);
FormulaResult k_region_m2(int a, int x, int y, int z, int t);
FormulaResult magnet_m2(int m, int a, int x, int y, int z, int t);
FormulaResult magnet_m3(int m, int a, int x, int y, int z, int t);

}  // namespace qlozenge
