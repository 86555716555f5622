#include "qlozenge/qfactor.hpp"

#include <stdexcept>

#include "qlozenge/errors.hpp"

namespace qlozenge {

QFactorExponents& QFactorExponents::push_q_int(std::int64_t j, std::int64_t power) {
  if (j < 0) throw std::invalid_argument("push_q_int: negative argument");
  if (power == 0) return *this;
  if (j == 0) {
    if (power < 0) throw DivisionByZero("push_q_int: division by [0]_q");
    zero_ = true;
    return *this;
  }
  auto [it, inserted] = exps_.try_emplace(j, power);
  if (!inserted) {
    it->second += power;
    if (it->second == 0) exps_.erase(it);
  }
  return *this;
}

QFactorExponents& QFactorExponents::push_factorial(std::int64_t n, int sign) {
  if (n < 0) throw std::invalid_argument("push_factorial: negative argument");
  for (std::int64_t j = 1; j <= n; ++j) push_q_int(j, sign);
  return *this;
}

QFactorExponents& QFactorExponents::push_hyperfactorial(std::int64_t n, int sign) {
  if (n < 0) throw std::invalid_argument("push_hyperfactorial: negative argument");
  // H_q(n) = prod_{j=1}^{n-1} [j]_q^{n-j}
  for (std::int64_t j = 1; j < n; ++j) push_q_int(j, sign * (n - j));
  return *this;
}

QFactorExponents& QFactorExponents::push_q_power(std::int64_t e) {
  if (prefactor_ + e < 0) throw NonExactDivision("push_q_power: negative total q-power");
  prefactor_ += e;
  return *this;
}

QFactorExponents& QFactorExponents::merge(const QFactorExponents& other, int sign) {
  if (other.zero_) {
    if (sign < 0) throw DivisionByZero("merge: division by a zero product");
    zero_ = true;
  }
  for (const auto& [j, e] : other.exps_) push_q_int(j, sign * e);
  push_q_power(sign * other.prefactor_);
  return *this;
}

namespace {

QPoly product_of(const std::map<std::int64_t, std::int64_t>& exps, int want_sign) {
  QPoly acc = 1;
  for (const auto& [j, e] : exps) {
    if ((e > 0) != (want_sign > 0)) continue;
    const QPoly factor = q_int(j);
    for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k) acc *= factor;
  }
  return acc;
}

}  // namespace

QPoly QFactorExponents::numerator() const {
  if (zero_) return {};
  return product_of(exps_, +1).shifted(prefactor_);
}

QPoly QFactorExponents::denominator() const { return product_of(exps_, -1); }

QPoly QFactorExponents::resolve() const { return poly_exact_div(numerator(), denominator()); }

BigInt QFactorExponents::resolve_at_one() const {
  if (zero_) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& [j, e] : exps_) {
    for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k) (e > 0 ? num : den) *= j;
  }
  BigInt quot;
  BigInt rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (!rem.is_zero()) throw NonExactDivision("resolve_at_one: value is not an integer");
  return quot;
}

QFactorExponents push_hyperfactorial(QFactorExponents acc, std::int64_t n, int sign) {
  acc.push_hyperfactorial(n, sign);
  return acc;
}

QPoly resolve(const QFactorExponents& acc) { return acc.resolve(); }

QPoly q_factorial(std::int64_t n) {
  QPoly acc = 1;
  for (std::int64_t j = 2; j <= n; ++j) acc *= q_int(j);
  return acc;
}

QPoly q_hyperfactorial(std::int64_t n) {
  QPoly acc = 1;
  for (std::int64_t j = 1; j < n; ++j) acc *= q_factorial(j);
  return acc;
}

}  // namespace qlozenge
