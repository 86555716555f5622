#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlozenge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Exact sparse univariate polynomial in q with arbitrary-precision integer
 * coefficients.
 *
 * Terms are kept sorted by ascending exponent with no zero coefficients, so
 * two values compare equal iff they are the same polynomial. All exponents
 * are nonnegative.
 */
class QPoly {
 public:
  struct Term {
    std::int64_t exp;
    BigInt coeff;
    bool operator==(const Term&) const = default;
  };

  QPoly() = default;
  QPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(BigInt constant);

  static QPoly monomial(std::int64_t exp, BigInt coeff = 1);
  /// Builds from arbitrary (exp, coeff) pairs; duplicates are summed.
  static QPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Highest exponent; -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  std::int64_t low_degree() const noexcept;
  BigInt coeff(std::int64_t exp) const;

  /// Multiplication by q^e, e >= 0.
  QPoly shifted(std::int64_t e) const;
  /// Division by q^e; requires every exponent to be >= e.
  QPoly unshifted(std::int64_t e) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  /// Adds coeff * q^exp * rhs in place; the DP hot path.
  void add_shifted(const QPoly& rhs, std::int64_t exp);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  bool operator==(const QPoly&) const = default;

  Rational eval(const Rational& at) const;
  /// Sum of coefficients, i.e. the value at q = 1.
  BigInt at_one() const;
  bool has_nonnegative_coefficients() const;
  /// True when coefficient k equals coefficient (low+high-k) for all k.
  bool is_palindromic() const;

  /// Ascending text form, e.g. "1 + q + 2*q^3"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument on malformed text.
  static QPoly parse(std::string_view text);

 private:
  explicit QPoly(std::vector<Term> sorted_terms, bool /*tag*/)
      : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q is the zero polynomial.
QPoly q_int(std::int64_t n);

/// Returns p with p * den == num. Throws DivisionByZero or NonExactDivision.
QPoly poly_exact_div(const QPoly& num, const QPoly& den);

Rational poly_eval(const QPoly& p, const Rational& at);

}  // namespace qlozenge
