#include "qlozenge/qpoly.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "qlozenge/errors.hpp"

namespace qlozenge {

namespace {

// Dense accumulation is used whenever the exponent span is at most this
// multiple of the number of partial products.
constexpr std::int64_t kDenseSpanFactor = 8;

std::vector<QPoly::Term> compact_dense(std::vector<BigInt>& dense, std::int64_t base) {
  std::vector<QPoly::Term> out;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!dense[k].is_zero()) out.push_back({base + static_cast<std::int64_t>(k), std::move(dense[k])});
  }
  return out;
}

}  // namespace

QPoly::QPoly(long long constant) {
  if (constant != 0) terms_.push_back({0, BigInt(constant)});
}

QPoly::QPoly(BigInt constant) {
  if (!constant.is_zero()) terms_.push_back({0, std::move(constant)});
}

QPoly QPoly::monomial(std::int64_t exp, BigInt coeff) {
  if (exp < 0) throw std::invalid_argument("QPoly: negative exponent");
  std::vector<Term> t;
  if (!coeff.is_zero()) t.push_back({exp, std::move(coeff)});
  return QPoly(std::move(t), true);
}

QPoly QPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (t.exp < 0) throw std::invalid_argument("QPoly: negative exponent");
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return QPoly(std::move(out), true);
}

std::int64_t QPoly::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.back().exp;
}

std::int64_t QPoly::low_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.front().exp;
}

BigInt QPoly::coeff(std::int64_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::int64_t e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

QPoly QPoly::shifted(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
  QPoly out = *this;
  for (auto& t : out.terms_) t.exp += e;
  return out;
}

QPoly QPoly::unshifted(std::int64_t e) const {
  if (!terms_.empty() && terms_.front().exp < e) {
    throw NonExactDivision("QPoly::unshifted: q-power does not divide the polynomial");
  }
  QPoly out = *this;
  for (auto& t : out.terms_) t.exp -= e;
  return out;
}

void QPoly::add_shifted(const QPoly& rhs, std::int64_t exp) {
  if (rhs.terms_.empty()) return;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    for (auto& t : terms_) t.exp += exp;
    return;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exp < b->exp + exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp + exp < a->exp) {
      merged.push_back({b->exp + exp, b->coeff});
      ++b;
    } else {
      BigInt c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  add_shifted(rhs, 0);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  add_shifted(-rhs, 0);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::int64_t lo = a.low_degree() + b.low_degree();
  const std::int64_t hi = a.degree() + b.degree();
  const auto products = static_cast<std::int64_t>(a.term_count() * b.term_count());
  if (hi - lo + 1 <= kDenseSpanFactor * products + 64) {
    std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& ta : a.terms()) {
      for (const auto& tb : b.terms()) {
        dense[static_cast<std::size_t>(ta.exp + tb.exp - lo)] += ta.coeff * tb.coeff;
      }
    }
    return QPoly(compact_dense(dense, lo), true);
  }
  std::vector<QPoly::Term> raw;
  raw.reserve(static_cast<std::size_t>(products));
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) raw.push_back({ta.exp + tb.exp, ta.coeff * tb.coeff});
  }
  return QPoly::from_terms(std::move(raw));
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

Rational QPoly::eval(const Rational& at) const {
  // Horner over the sparse terms, highest exponent first.
  Rational acc = 0;
  std::int64_t prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (std::int64_t k = it->exp; k < prev; ++k) acc *= at;
    acc += Rational(it->coeff);
    prev = it->exp;
  }
  for (std::int64_t k = 0; k < prev; ++k) acc *= at;
  return acc;
}

BigInt QPoly::at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

bool QPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff.sign() > 0; });
}

bool QPoly::is_palindromic() const {
  if (terms_.empty()) return true;
  const std::int64_t total = low_degree() + degree();
  const std::size_t n = terms_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& lo = terms_[k];
    const auto& hi = terms_[n - 1 - k];
    if (lo.exp + hi.exp != total || lo.coeff != hi.coeff) return false;
  }
  return true;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exp == 0) {
      out += t.coeff.str();
      continue;
    }
    if (t.coeff == 1) {
      // coefficient elided
    } else if (t.coeff == -1) {
      out += '-';
    } else {
      out += t.coeff.str();
      out += '*';
    }
    out += 'q';
    if (t.exp != 1) {
      out += '^';
      out += std::to_string(t.exp);
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("QPoly::parse: bad coefficient '" + std::string(s) + "'");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

QPoly::Term parse_term(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("QPoly::parse: empty term");
  const auto qpos = s.find('q');
  if (qpos == std::string_view::npos) return {0, parse_int(s)};

  BigInt coeff = 1;
  std::string_view head = s.substr(0, qpos);
  if (head == "-") {
    coeff = -1;
  } else if (!head.empty()) {
    if (head.back() != '*') throw std::invalid_argument("QPoly::parse: expected '*' before q");
    coeff = parse_int(head.substr(0, head.size() - 1));
  }
  std::string_view tail = s.substr(qpos + 1);
  std::int64_t exp = 1;
  if (!tail.empty()) {
    if (tail.front() != '^' || !all_digits(tail.substr(1))) {
      throw std::invalid_argument("QPoly::parse: bad exponent in '" + std::string(s) + "'");
    }
    tail.remove_prefix(1);
    std::from_chars(tail.data(), tail.data() + tail.size(), exp);
  }
  return {exp, std::move(coeff)};
}

}  // namespace

QPoly QPoly::parse(std::string_view text) {
  text = trim(text);
  if (text == "0") return {};
  std::vector<Term> terms;
  std::size_t start = 0;
  while (true) {
    const auto sep = text.find(" + ", start);
    terms.push_back(parse_term(text.substr(start, sep == std::string_view::npos ? sep : sep - start)));
    if (sep == std::string_view::npos) break;
    start = sep + 3;
  }
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) throw std::invalid_argument("QPoly::parse: explicit zero term");
  }
  return from_terms(std::move(terms));
}

QPoly q_int(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  std::vector<QPoly::Term> t;
  t.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) t.push_back({k, 1});
  return QPoly::from_terms(std::move(t));
}

QPoly poly_exact_div(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw DivisionByZero("poly_exact_div: zero divisor");
  if (num.is_zero()) return {};
  const std::int64_t dlow = den.low_degree();
  const std::int64_t qlow = num.low_degree() - dlow;
  const std::int64_t qhigh = num.degree() - den.degree();
  if (qlow < 0 || qhigh < qlow) throw NonExactDivision("poly_exact_div: degree mismatch");

  // Ascending long division on a dense remainder window.
  const std::int64_t base = num.low_degree();
  std::vector<BigInt> rem(static_cast<std::size_t>(num.degree() - base + 1));
  for (const auto& t : num.terms()) rem[static_cast<std::size_t>(t.exp - base)] = t.coeff;
  const BigInt& lead = den.terms().front().coeff;

  std::vector<QPoly::Term> quot;
  for (std::int64_t k = qlow; k <= qhigh; ++k) {
    BigInt& c = rem[static_cast<std::size_t>(k + dlow - base)];
    if (c.is_zero()) continue;
    BigInt r;
    BigInt qc;
    boost::multiprecision::divide_qr(c, lead, qc, r);
    if (!r.is_zero()) throw NonExactDivision("poly_exact_div: coefficient not divisible");
    for (const auto& t : den.terms()) {
      rem[static_cast<std::size_t>(k + t.exp - base)] -= qc * t.coeff;
    }
    quot.push_back({k, std::move(qc)});
  }
  for (const auto& c : rem) {
    if (!c.is_zero()) throw NonExactDivision("poly_exact_div: nonzero remainder");
  }
  return QPoly::from_terms(std::move(quot));
}

Rational poly_eval(const QPoly& p, const Rational& at) { return p.eval(at); }

}  // namespace qlozenge
