#pragma once

// Schubert calculus on H*(Gr_k(C^n); Z).  Classes z_u are indexed by Schubert
// symbols; products go through partitions in the k x (n-k) box and the
// Littlewood-Richardson rule.  A second, independent product built from the
// Pieri rule and the dual Jacobi-Trudi determinant serves as a cross-check.

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "morsegrass/bigint.hpp"
#include "morsegrass/errors.hpp"
#include "morsegrass/schubert.hpp"

namespace morsegrass {

/// lambda_1 >= ... >= lambda_k >= 0, each at most n - k.
class PartitionShape {
 public:
  PartitionShape(int k, int n, std::vector<int> parts) : k_(k), n_(n), parts_(std::move(parts)) {
    check_ambient(k, n);
    if (static_cast<int>(parts_.size()) != k) throw DomainError("partition needs exactly k parts");
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (parts_[j] < 0 || parts_[j] > n - k) throw DomainError("partition does not fit in the k x (n-k) box");
      if (j > 0 && parts_[j] > parts_[j - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Column lengths.
  std::vector<int> conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(n_ - k_), 0);
    for (int p : parts_)
      for (int i = 0; i < p; ++i) ++c[static_cast<std::size_t>(i)];
    return c;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < parts_.size(); ++j) s += (j ? "," : "") + std::to_string(parts_[j]);
    return s + ")";
  }

  friend bool operator==(const PartitionShape&, const PartitionShape&) = default;

 private:
  int k_;
  int n_;
  std::vector<int> parts_;
};

/// Real degree of z_u: 2 k (n-k) - 2 dim S_u.
inline int degree(const SchubertSymbol& u) { return 2 * u.k() * (u.n() - u.k()) - 2 * cell_dimension(u); }

/// lambda_j = (n-k) + j - u_j, so degree(u) = 2 |lambda|.
inline PartitionShape symbol_to_partition(const SchubertSymbol& u) {
  std::vector<int> parts;
  for (int j = 1; j <= u.k(); ++j) parts.push_back(u.n() - u.k() + j - u[static_cast<std::size_t>(j - 1)]);
  return PartitionShape(u.k(), u.n(), parts);
}

inline SchubertSymbol partition_to_symbol(const PartitionShape& p) {
  std::vector<int> e;
  for (int j = 1; j <= p.k(); ++j) e.push_back(p.n() - p.k() + j - p.parts()[static_cast<std::size_t>(j - 1)]);
  return SchubertSymbol(p.k(), p.n(), e);
}

/// Integer combination of Schubert classes in a fixed Gr_k(C^n).
class CohomologyClass {
 public:
  using Terms = std::map<SchubertSymbol, BigInt>;

  CohomologyClass(int k, int n) : k_(k), n_(n) { check_ambient(k, n); }
  CohomologyClass(int k, int n, const Terms& terms) : CohomologyClass(k, n) {
    for (const auto& [u, c] : terms) add(u, c);
  }

  static CohomologyClass basis(const SchubertSymbol& u) {
    CohomologyClass z(u.k(), u.n());
    z.add(u, 1);
    return z;
  }
  /// z_{(n-k+1, ..., n)}
  static CohomologyClass unit(int k, int n) { return basis(SchubertSymbol::maximal(k, n)); }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const SchubertSymbol& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add(const SchubertSymbol& u, const BigInt& c) {
    if (u.k() != k_ || u.n() != n_) throw DomainError("symbol " + u.to_string() + " outside Gr(" + std::to_string(k_) + "," + std::to_string(n_) + ")");
    if (c == 0) return;
    auto& slot = terms_[u];
    slot += c;
    if (slot == 0) terms_.erase(u);
  }

  /// True when every supported symbol has the same degree (zero counts).
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return degree(t.first) == d; });
  }

  CohomologyClass& operator+=(const CohomologyClass& o) {
    check_same(o);
    for (const auto& [u, c] : o.terms_) add(u, c);
    return *this;
  }
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator*(const BigInt& s, const CohomologyClass& z) {
    CohomologyClass r(z.k_, z.n_);
    for (const auto& [u, c] : z.terms_) r.add(u, s * c);
    return r;
  }
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

  void check_same(const CohomologyClass& o) const {
    if (k_ != o.k_ || n_ != o.n_) throw DomainError("classes live in different Grassmannians");
  }

  /// "z(2,3) + z(1,4)", larger symbols first; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const BigInt& c = it->second;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (mag != 1) s += mag.str() + " ";
      s += "z" + it->first.to_string();
      first = false;
    }
    return s;
  }

 private:
  int k_;
  int n_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Littlewood-Richardson engine

namespace detail {

using Shape = std::vector<int>;  // k rows, weakly decreasing

/// All ways to add `count` boxes labelled `label` to `shape` as a horizontal
/// strip inside the k x width box, keeping the reverse reading word a lattice
/// word.  labels[r][l] counts boxes labelled l in row r.
inline void add_strip(const Shape& shape, std::vector<std::vector<int>>& labels, int label, int count, int width,
                      std::size_t row, Shape& next, std::vector<std::pair<Shape, std::vector<std::vector<int>>>>& out) {
  const std::size_t k = shape.size();
  if (row == k) {
    if (count == 0) out.emplace_back(next, labels);
    return;
  }
  // Horizontal strip: row r may grow up to the old length of row r-1.
  const int cap = row == 0 ? width : shape[row - 1];
  const int room = cap - shape[row];
  for (int take = std::min(room, count); take >= 0; --take) {
    labels[row][static_cast<std::size_t>(label)] = take;
    // Lattice condition: label l in rows <= r never outnumbers label l-1 in rows < r.
    bool ok = true;
    if (label > 1) {
      int have = 0;
      int prev = 0;
      for (std::size_t r = 0; r <= row; ++r) {
        have += labels[r][static_cast<std::size_t>(label)];
        if (have > prev) {
          ok = false;
          break;
        }
        prev += labels[r][static_cast<std::size_t>(label - 1)];
      }
    }
    if (ok) {
      next[row] = shape[row] + take;
      add_strip(shape, labels, label, count - take, width, row + 1, next, out);
    }
  }
  labels[row][static_cast<std::size_t>(label)] = 0;
}

/// c^nu_{lambda mu} for every nu inside the k x width box.
inline std::map<Shape, BigInt> lr_product(const Shape& lambda, const Shape& mu, int width) {
  const std::size_t k = lambda.size();
  int labels_needed = 0;
  for (int m : mu)
    if (m > 0) ++labels_needed;
  std::vector<std::pair<Shape, std::vector<std::vector<int>>>> layer;
  layer.emplace_back(lambda, std::vector<std::vector<int>>(k, std::vector<int>(static_cast<std::size_t>(labels_needed) + 1, 0)));
  for (int l = 1; l <= labels_needed; ++l) {
    std::vector<std::pair<Shape, std::vector<std::vector<int>>>> grown;
    for (auto& [shape, labels] : layer) {
      Shape next = shape;
      add_strip(shape, labels, l, mu[static_cast<std::size_t>(l - 1)], width, 0, next, grown);
    }
    layer = std::move(grown);
  }
  std::map<Shape, BigInt> out;
  for (const auto& entry : layer) out[entry.first] += 1;
  return out;
}

class ProductCache {
 public:
  using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;

  static ProductCache& instance() {
    static ProductCache cache;
    return cache;
  }

  template <class F>
  CohomologyClass get(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    CohomologyClass value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, CohomologyClass> table_;
};

}  // namespace detail

/// z_u * z_v in the Schubert basis.
inline CohomologyClass basis_product(const SchubertSymbol& u, const SchubertSymbol& v) {
  if (!u.same_ambient(v)) throw DomainError("symbols live in different Grassmannians");
  const int k = u.k();
  const int n = u.n();
  const auto lam = symbol_to_partition(u).parts();
  const auto mu = symbol_to_partition(v).parts();
  auto key = std::make_tuple(k, n, std::min(lam, mu), std::max(lam, mu));
  return detail::ProductCache::instance().get(key, [&] {
    CohomologyClass z(k, n);
    for (const auto& [nu, c] : detail::lr_product(lam, mu, n - k)) {
      if (c < 0) throw ConsistencyError("negative structure constant");
      z.add(partition_to_symbol(PartitionShape(k, n, nu)), c);
    }
    return z;
  });
}

inline CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b) {
  a.check_same(b);
  CohomologyClass r(a.k(), a.n());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r += (cu * cv) * basis_product(u, v);
  return r;
}

/// 1 iff v is the complement of u; degrees must be complementary.
inline int duality_pairing(const SchubertSymbol& u, const SchubertSymbol& v) {
  if (!u.same_ambient(v)) throw DomainError("symbols live in different Grassmannians");
  if (degree(u) + degree(v) != 2 * u.k() * (u.n() - u.k())) {
    throw DomainError("degrees " + std::to_string(degree(u)) + " + " + std::to_string(degree(v)) + " are not complementary");
  }
  return complement(u) == v ? 1 : 0;
}

/// Intersection number of z_u z_v z_w; degrees must add to the top degree.
inline BigInt triple_product(const SchubertSymbol& u, const SchubertSymbol& v, const SchubertSymbol& w) {
  if (!u.same_ambient(v) || !u.same_ambient(w)) throw DomainError("symbols live in different Grassmannians");
  const int top = 2 * u.k() * (u.n() - u.k());
  if (degree(u) + degree(v) + degree(w) != top) {
    throw DomainError("degrees add to " + std::to_string(degree(u) + degree(v) + degree(w)) + ", need " + std::to_string(top));
  }
  return basis_product(u, v).coefficient(complement(w));
}

/// Symbol of the special class d_i: (n-k, ..., n-k+i-1, n-k+i+1, ..., n).
inline SchubertSymbol special_symbol(int k, int n, int i) {
  check_ambient(k, n);
  if (i < 1 || i > k) throw DomainError("special class index must lie in [1, k]");
  if (n == k) throw DomainError("special classes vanish when n = k");
  std::vector<int> e;
  for (int j = 0; j < i; ++j) e.push_back(n - k + j);
  for (int x = n - k + i + 1; x <= n; ++x) e.push_back(x);
  return SchubertSymbol(k, n, e);
}

inline CohomologyClass special_class(int k, int n, int i) { return CohomologyClass::basis(special_symbol(k, n, i)); }

/// z * d_i by the Pieri rule: add a vertical strip of i boxes inside the box.
inline CohomologyClass pieri_product(const CohomologyClass& z, int i) {
  const int k = z.k();
  const int n = z.n();
  if (i < 1 || i > k) throw DomainError("Pieri index must lie in [1, k]");
  CohomologyClass r(k, n);
  for (const auto& [u, c] : z.terms()) {
    const auto lam = symbol_to_partition(u).parts();
    // Choose i distinct rows to extend by one box each; the result must stay
    // a partition inside the box.
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    std::fill(pick.end() - i, pick.end(), 1);
    do {
      std::vector<int> nu = lam;
      bool ok = true;
      for (std::size_t r0 = 0; r0 < nu.size(); ++r0) {
        nu[r0] += pick[r0];
        if (nu[r0] > n - k) ok = false;
      }
      for (std::size_t r0 = 1; ok && r0 < nu.size(); ++r0)
        if (nu[r0] > nu[r0 - 1]) ok = false;
      if (ok) r.add(partition_to_symbol(PartitionShape(k, n, nu)), c);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return r;
}

/// e_m applied to z: z for m = 0, d_m for 1 <= m <= k, zero otherwise.
inline CohomologyClass elementary_action(const CohomologyClass& z, int m) {
  if (m == 0) return z;
  if (m < 0 || m > z.k() || z.n() == z.k()) return CohomologyClass(z.k(), z.n());
  return pieri_product(z, m);
}

/// z * z_u computed as det(e_{lambda'_i - i + j}) acting on z, with lambda
/// the partition of u.  Uses only the Pieri rule.
inline CohomologyClass apply_schur_by_pieri(const CohomologyClass& z, const SchubertSymbol& u) {
  const auto conj = symbol_to_partition(u).conjugate();
  std::vector<int> cols;
  for (int c : conj)
    if (c > 0) cols.push_back(c);
  const int m = static_cast<int>(cols.size());
  if (m == 0) return z;
  // Laplace expansion along rows; used[] marks consumed columns.
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  auto expand = [&](auto&& self, int row, const CohomologyClass& acc) -> CohomologyClass {
    if (row == m) return acc;
    CohomologyClass total(z.k(), z.n());
    int sign_pos = 0;
    for (int j = 0; j < m; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const int sign = (sign_pos % 2 == 0) ? 1 : -1;
      ++sign_pos;
      const int e = cols[static_cast<std::size_t>(row)] - row + j;
      if (e < 0 || e > z.k()) continue;
      CohomologyClass next = elementary_action(acc, e);
      if (next.is_zero()) continue;
      used[static_cast<std::size_t>(j)] = true;
      total += BigInt(sign) * self(self, row + 1, next);
      used[static_cast<std::size_t>(j)] = false;
    }
    return total;
  };
  return expand(expand, 0, z);
}

/// Product through the Pieri rule alone; independent of the LR engine.
inline CohomologyClass cup_product_by_pieri(const CohomologyClass& a, const CohomologyClass& b) {
  a.check_same(b);
  CohomologyClass r(a.k(), a.n());
  for (const auto& [u, c] : b.terms()) r += c * apply_schur_by_pieri(a, u);
  return r;
}

/// Solve (1 + c_1 + ... + c_{n-k})(1 + d_1 + ... + d_k) = 1 degree by degree
/// for the c_j, then confirm that the relation closes in degrees above n-k
/// and that c_j = (-1)^j times the class of the one-row partition (j).
inline bool chern_presentation_check(int k, int n) {
  check_ambient(k, n);
  if (k * (n - k) > 12) throw CapacityError("Chern presentation check limited to k(n-k) <= 12");
  const int q = n - k;
  std::vector<CohomologyClass> d(static_cast<std::size_t>(k) + 1, CohomologyClass(k, n));
  d[0] = CohomologyClass::unit(k, n);
  for (int i = 1; i <= k && q > 0; ++i) d[static_cast<std::size_t>(i)] = special_class(k, n, i);
  std::vector<CohomologyClass> c(static_cast<std::size_t>(q) + 1, CohomologyClass(k, n));
  c[0] = CohomologyClass::unit(k, n);
  for (int j = 1; j <= q; ++j) {
    CohomologyClass s(k, n);
    for (int i = 1; i <= std::min(j, k); ++i) s += cup_product(d[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j - i)]);
    c[static_cast<std::size_t>(j)] = BigInt(-1) * s;
  }
  for (int j = q + 1; j <= n; ++j) {
    CohomologyClass s(k, n);
    for (int i = std::max(0, j - q); i <= std::min(j, k); ++i)
      s += cup_product(c[static_cast<std::size_t>(j - i)], d[static_cast<std::size_t>(i)]);
    if (!s.is_zero()) return false;
  }
  for (int j = 1; j <= q && k > 0; ++j) {
    std::vector<int> row(static_cast<std::size_t>(k), 0);
    row[0] = j;
    const auto sigma = CohomologyClass::basis(partition_to_symbol(PartitionShape(k, n, row)));
    if (!(c[static_cast<std::size_t>(j)] == BigInt(j % 2 == 0 ? 1 : -1) * sigma)) return false;
  }
  return true;
}

}  // namespace morsegrass
