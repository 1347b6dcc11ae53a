#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "morsegrass/errors.hpp"

namespace morsegrass {

/// Integer polynomial in t, stored by ascending degree with no trailing zeros.
/// Arithmetic is overflow-checked; exact division asserts a zero remainder.
class IntPolynomial {
 public:
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { normalize(); }
  explicit IntPolynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static IntPolynomial constant(Coeff v) { return IntPolynomial(std::vector<Coeff>{v}); }

  /// c * t^d
  static IntPolynomial monomial(Coeff c, int d) {
    std::vector<Coeff> v(static_cast<std::size_t>(d) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Coeff operator[](int d) const {
    return (d >= 0 && d < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(d)] : 0;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    normalize();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    normalize();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
      }
    }
    return IntPolynomial(std::move(r));
  }

  /// Multiply by t^d.
  IntPolynomial shifted(int d) const {
    if (is_zero()) return {};
    std::vector<Coeff> r(static_cast<std::size_t>(d), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(r));
  }

  /// p(t) -> p(t^factor).
  IntPolynomial stretched(int factor) const {
    if (is_zero()) return {};
    std::vector<Coeff> r(static_cast<std::size_t>(degree() * factor) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(factor)] = c_[i];
    return IntPolynomial(std::move(r));
  }

  Coeff evaluate(Coeff t) const {
    Coeff acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = checked_add(checked_mul(acc, t), c_[i]);
    return acc;
  }

  /// Long division; the divisor's leading coefficient must divide every
  /// intermediate leading term (always true for monic or -1-led divisors).
  /// Returns {quotient, remainder}.
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Coeff> rem = c_;
    const int dd = divisor.degree();
    const Coeff lead = divisor.c_.back();
    if (degree() < dd) return {IntPolynomial{}, *this};
    std::vector<Coeff> q(static_cast<std::size_t>(degree() - dd) + 1, 0);
    for (int i = degree(); i >= dd; --i) {
      const Coeff top = rem[static_cast<std::size_t>(i)];
      if (top == 0) continue;
      if (top % lead != 0) throw DomainError("inexact integer polynomial division");
      const Coeff f = top / lead;
      q[static_cast<std::size_t>(i - dd)] = f;
      for (int j = 0; j <= dd; ++j) {
        auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
        slot = checked_sub(slot, checked_mul(f, divisor.c_[static_cast<std::size_t>(j)]));
      }
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(rem))};
  }

  /// Exact quotient; throws if the remainder is nonzero.
  IntPolynomial exact_div(const IntPolynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw ConsistencyError("nonzero remainder " + r.to_string() + " in exact division");
    return q;
  }

  /// "1 + t^2 + 2t^4"; zero prints as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      Coeff v = c_[i];
      if (v == 0) continue;
      if (first) {
        if (v < 0) os << '-';
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      const Coeff mag = v < 0 ? -v : v;
      if (i == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag;
        os << 't';
        if (i > 1) os << '^' << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  static Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("polynomial coefficient overflow");
    return r;
  }
  static Coeff checked_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r)) throw DomainError("polynomial coefficient overflow");
    return r;
  }
  static Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("polynomial coefficient overflow");
    return r;
  }

  std::vector<Coeff> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace morsegrass
