#include "qlozenge/formulas.hpp"

#include <initializer_list>
#include <stdexcept>

#include "qlozenge/errors.hpp"

namespace qlozenge {

namespace {

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

void require_nonnegative(std::initializer_list<int> values) {
  for (int v : values) {
    if (v < 0) throw std::invalid_argument("formula parameters must be nonnegative");
  }
}

QFactorExponents hyper_ratio(std::initializer_list<std::int64_t> num, std::initializer_list<std::int64_t> den) {
  QFactorExponents acc;
  for (auto n : num) acc.push_hyperfactorial(n, +1);
  for (auto n : den) acc.push_hyperfactorial(n, -1);
  return acc;
}

FormulaResult finish(QFactorExponents acc, std::int64_t prefactor) {
  acc.push_q_power(prefactor);
  FormulaResult r;
  r.poly = acc.resolve();
  r.prefactor_exponent = prefactor;
  r.factors = std::move(acc);
  return r;
}

QFactorExponents qmain_factors(const RegionParams& p) {
  const std::int64_t x = p.x, y = p.y, z = p.z, t = p.t, m = p.m, a = p.a, b = p.b, c = p.c;
  const std::int64_t s = m + a + b + c;
  return hyper_ratio(
      {s + x + y + z + t, s + x + t, s + x + y, s + y + z, x, y, z, t, m, m, m, a, a, b, c, s,
       m + b + c + z + t, m + a + c + x, m + a + b + y, c + x + t, b + y + z},
      {s + x + y + t, s + x + y + z, s + z + t, s + x, s + y, x + t, y + z, m + a, m + a, m + b, m + c,
       m + b + y + z, m + c + x + t, a + c + x, a + b + y, b + c + z + t});
}

QFactorExponents magnet_factors(std::int64_t m, std::int64_t a, std::int64_t x, std::int64_t y, std::int64_t z,
                                std::int64_t t) {
  const std::int64_t s = m + a;
  return hyper_ratio({s + x + y + z + t, s + x + t, s + x + y, s + y + z, x, y, z, t, m, a, a, m + z + t, s + x, s + y},
                     {s + x + y + t, s + x + y + z, s + z + t, s + x, s + y, a + x, a + y, z + t, s, m + y + z,
                      m + x + t});
}

}  // namespace

FormulaResult macmahon_q(int a, int b, int c) {
  require_nonnegative({a, b, c});
  return finish(hyper_ratio({a, b, c, a + b + c}, {a + b, b + c, c + a}), 0);
}

BigInt theorem_main(const RegionParams& p) {
  if (!p.nonnegative()) throw std::invalid_argument("formula parameters must be nonnegative");
  return qmain_factors(p).resolve_at_one();
}

FormulaResult theorem_qmain(const RegionParams& p) {
  if (!p.nonnegative()) throw std::invalid_argument("formula parameters must be nonnegative");
  return finish(qmain_factors(p), 0);
}

FormulaResult hex_m1(int a, int b, int c) {
  FormulaResult r = macmahon_q(a, b, c);
  return finish(std::move(r.factors), std::int64_t{a} * binom2(b + 1));
}

FormulaResult hex_m2(int a, int b, int c) {
  FormulaResult r = macmahon_q(a, b, c);
  return finish(std::move(r.factors), std::int64_t{b} * binom2(a + 1));
}

FormulaResult semihex_dents_m2(int a, int b, const std::vector<int>& dents) {
  require_nonnegative({a, b});
  if (static_cast<int>(dents.size()) != a) throw BadDents("semihexagon formula: expected a dents");
  for (std::size_t k = 0; k < dents.size(); ++k) {
    if (dents[k] < 1 || dents[k] > a + b) throw BadDents("semihexagon formula: dent out of range 1..a+b");
    if (k > 0 && dents[k] <= dents[k - 1]) throw BadDents("semihexagon formula: dents must be increasing");
  }
  // (q^{s_j} - q^{s_i}) / (q^j - q^i) = q^{s_i - i} [s_j - s_i]_q / [j - i]_q
  QFactorExponents acc;
  std::int64_t prefactor = 0;
  for (std::size_t i = 0; i < dents.size(); ++i) {
    const std::int64_t si = dents[i], ii = static_cast<std::int64_t>(i) + 1;
    prefactor += si - ii;
    for (std::size_t j = i + 1; j < dents.size(); ++j) {
      const std::int64_t sj = dents[j], jj = static_cast<std::int64_t>(j) + 1;
      prefactor += si - ii;
      acc.push_q_int(sj - si, +1);
      acc.push_q_int(jj - ii, -1);
    }
  }
  return finish(std::move(acc), prefactor);
}

FormulaResult k_region_m2(int a, int x, int y, int z, int t) {
  require_nonnegative({a, x, y, z, t});
  const std::int64_t A = a, X = x, Y = y, Z = z, T = t;
  auto acc = hyper_ratio({A, X, Y, Z, T, A + X + T, A + X + Y, A + Y + Z, A + X + Y + Z + T},
                         {X + T, A + X, A + Y, Y + Z, A + X + Y + T, A + X + Y + Z, A + T + Z});
  return finish(std::move(acc), Y * binom2(Z + 1) + X * binom2(A + Z + 1));
}

FormulaResult magnet_m2(int m, int a, int x, int y, int z, int t) {
  require_nonnegative({m, a, x, y, z, t});
  const std::int64_t M = m, A = a, X = x, Y = y, Z = z, T = t;
  const std::int64_t e = Y * binom2(M + 1) + (M + X + Y) * binom2(Z + 1) + M * Y * Z + (M + A) * (X + M) * Z +
                         X * binom2(A + 1);
  return finish(magnet_factors(M, A, X, Y, Z, T), e);
}

FormulaResult magnet_m3(int m, int a, int x, int y, int z, int t) {
  require_nonnegative({m, a, x, y, z, t});
  const std::int64_t M = m, A = a, X = x, Y = y, Z = z, T = t;
  const std::int64_t e = M * binom2(A + 1) + T * binom2(Z + A + 1) + A * (Z + M) * (X + A) + A * binom2(Z + M + 1);
  return finish(magnet_factors(M, A, X, Y, Z, T), e);
}

}  // namespace qlozenge
