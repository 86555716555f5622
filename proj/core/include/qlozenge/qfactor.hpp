#pragma once

#include <cstdint>
#include <map>

#include "qlozenge/qpoly.hpp"

namespace qlozenge {

/// Formal product q^E * prod_j [j]_q^{e_j}. Zero exponents are never stored.
class QFactorExponents {
 public:
  QFactorExponents() = default;

  const std::map<std::int64_t, std::int64_t>& exponents() const noexcept { return exps_; }
  std::int64_t prefactor_exponent() const noexcept { return prefactor_; }

  /// Multiplies by [j]_q^{power}; j = 0 with positive power makes the product zero.
  QFactorExponents& push_q_int(std::int64_t j, std::int64_t power = 1);
  QFactorExponents& push_factorial(std::int64_t n, int sign);
  QFactorExponents& push_hyperfactorial(std::int64_t n, int sign);
  QFactorExponents& push_q_power(std::int64_t e);
  QFactorExponents& merge(const QFactorExponents& other, int sign = 1);

  bool is_zero() const noexcept { return zero_; }

  QPoly numerator() const;
  QPoly denominator() const;
  /// Exact polynomial value. Throws NonExactDivision when the quotient is not a polynomial.
  QPoly resolve() const;
  /// Value at q = 1, computed with integers only. Throws NonExactDivision when not integral.
  BigInt resolve_at_one() const;

  bool operator==(const QFactorExponents&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> exps_;
  std::int64_t prefactor_ = 0;
  bool zero_ = false;
};

/// Free-function form used by the formula code.
QFactorExponents push_hyperfactorial(QFactorExponents acc, std::int64_t n, int sign);
QPoly resolve(const QFactorExponents& acc);

/// [n]_q! as a polynomial.
QPoly q_factorial(std::int64_t n);
/// H_q(n) = [0]_q! [1]_q! ... [n-1]_q! as a polynomial.
QPoly q_hyperfactorial(std::int64_t n);

}  // namespace qlozenge
