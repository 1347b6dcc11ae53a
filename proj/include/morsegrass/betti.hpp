#pragma once

// Morse, Poincare and Morse-Bott polynomials of Gr_k(C^n), plus the Morse
// inequality and Euler characteristic checks.  Polynomials are graded by real
// degree throughout; complex cell dimensions are doubled before they get here.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "morsegrass/polynomial.hpp"
#include "morsegrass/schubert.hpp"

namespace morsegrass {

/// Sum over Schubert symbols of t^(2 dim_C S_u).
inline IntPolynomial morse_polynomial_by_cells(int k, int n) {
  check_ambient(k, n);
  IntPolynomial m;
  for (const auto& u : enumerate_symbols(k, n)) m += IntPolynomial::monomial(1, 2 * cell_dimension(u));
  return m;
}

/// Number of partitions of d into at most k parts, each at most cap.
inline std::int64_t partition_count(int d, int k, int cap) {
  if (d < 0 || k < 0 || cap < 0) throw DomainError("partition_count needs nonnegative arguments");
  if (d > k * cap) return 0;
  // Peel off the largest part; later parts are bounded by it.
  auto count = [&](auto&& self, int total, int parts, int max_part,
                   std::map<std::tuple<int, int, int>, std::int64_t>& memo) -> std::int64_t {
    if (total == 0) return 1;
    if (parts == 0 || max_part == 0) return 0;
    auto key = std::make_tuple(total, parts, max_part);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t acc = 0;
    for (int largest = std::min(max_part, total); largest >= 1; --largest) {
      acc += self(self, total - largest, parts - 1, largest, memo);
    }
    memo.emplace(key, acc);
    return acc;
  };
  std::map<std::tuple<int, int, int>, std::int64_t> memo;
  return count(count, d, k, cap, memo);
}

namespace detail {
/// prod_{i in [lo, hi]} (1 - t^(step*i))
inline IntPolynomial cyclotomic_run(int lo, int hi, int step) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int i = lo; i <= hi; ++i) p = p * (IntPolynomial::constant(1) - IntPolynomial::monomial(1, step * i));
  return p;
}
}  // namespace detail

/// G(t) = prod_{i=1..k}(1 - t^(n-k+i)) / prod_{i=1..k}(1 - t^i), by exact long division.
inline IntPolynomial gaussian_generating(int k, int n) {
  check_ambient(k, n);
  const IntPolynomial num = detail::cyclotomic_run(n - k + 1, n, 1);
  const IntPolynomial den = detail::cyclotomic_run(1, k, 1);
  return num.exact_div(den);
}

/// P_{k,n} = P_{k,n-1} + t^(2(n-k)) P_{k-1,n-1}, with P_{0,m} = P_{m,m} = 1.
inline IntPolynomial poincare_recurrence(int k, int n) {
  check_ambient(k, n);
  std::map<std::pair<int, int>, IntPolynomial> memo;
  auto rec = [&](auto&& self, int kk, int nn) -> IntPolynomial {
    if (kk == 0 || kk == nn) return IntPolynomial::constant(1);
    auto key = std::make_pair(kk, nn);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IntPolynomial p = self(self, kk, nn - 1) + self(self, kk - 1, nn - 1).shifted(2 * (nn - kk));
    memo.emplace(key, p);
    return p;
  };
  return rec(rec, k, n);
}

/// prod_{i=1..n}(1 - t^(2i)) / (prod_{i=1..k}(1 - t^(2i)) prod_{i=1..n-k}(1 - t^(2i))).
inline IntPolynomial poincare_closed(int k, int n) {
  check_ambient(k, n);
  const IntPolynomial num = detail::cyclotomic_run(1, n, 2);
  return num.exact_div(detail::cyclotomic_run(1, k, 2)).exact_div(detail::cyclotomic_run(1, n - k, 2));
}

/// MB(t) = sum_c t^index(c) * prod_j P_{c_j, m_j}(t).
inline IntPolynomial mb_polynomial(const std::vector<GeneralizedSchubertSymbol>& cs) {
  IntPolynomial total;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].blocks() != cs.front().blocks() || cs[i].k() != cs.front().k()) {
      throw DomainError("generalized symbols must share blocks and k");
    }
    IntPolynomial term = IntPolynomial::constant(1);
    for (auto [c, m] : ndcm_shape(cs[i])) term = term * poincare_closed(c, m);
    total += term.shifted(generalized_index(cs[i]));
  }
  return total;
}

/// Outcome of M(t) - P(t) = (1 + t) Q(t) with Q >= 0.
struct MorseInequalityResult {
  bool holds = false;
  IntPolynomial q;              // meaningful when holds
  int bad_degree = -1;          // first offending coefficient of the quotient or remainder
  std::string violation;        // empty when holds

  explicit operator bool() const noexcept { return holds; }
};

/// Synthetic division of M - P by (1 + t); reports the first failure.
inline MorseInequalityResult morse_inequalities(const IntPolynomial& m_poly, const IntPolynomial& p_poly) {
  MorseInequalityResult out;
  const IntPolynomial diff = m_poly - p_poly;
  if (diff.is_zero()) {
    out.holds = true;
    return out;
  }
  // Ascending synthetic division: q_i = d_i - q_{i-1}; remainder is the last step.
  const auto& d = diff.coeffs();
  std::vector<IntPolynomial::Coeff> q(d.size(), 0);
  IntPolynomial::Coeff prev = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    q[i] = d[i] - prev;
    prev = q[i];
  }
  // Division is exact iff the coefficient that would sit at degree deg(diff) is
  // zero, i.e. q[last] == 0.
  if (q.back() != 0) {
    out.bad_degree = diff.degree();
    out.violation = "M(t) - P(t) = " + diff.to_string() + " is not divisible by (1 + t)";
    return out;
  }
  q.pop_back();
  IntPolynomial qp(q);
  for (int i = 0; i <= qp.degree(); ++i) {
    if (qp[i] < 0) {
      out.bad_degree = i;
      out.violation = "Q(t) = " + qp.to_string() + " has negative coefficient in degree " + std::to_string(i);
      return out;
    }
  }
  out.holds = true;
  out.q = qp;
  return out;
}

/// Value at t = -1.
inline std::int64_t euler_characteristic(const IntPolynomial& m_poly) { return m_poly.evaluate(-1); }

/// True iff every odd-degree coefficient vanishes (then M(t) = P(t) is forced).
inline bool is_lacunary_perfect(const IntPolynomial& m_poly) {
  for (int i = 1; i <= m_poly.degree(); i += 2) {
    if (m_poly[i] != 0) return false;
  }
  return true;
}

}  // namespace morsegrass
