#pragma once

// Schubert symbols, cells and the closure order on Gr_k(C^n).
//
// Conventions: the height function is built from a_1 > ... > a_n >= 0, so
// V_u with u = (n-k+1, ..., n) is the minimum of f and the top cell.  All
// symbols are 1-based.

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "morsegrass/errors.hpp"

namespace morsegrass {

/// Which Morse function an index refers to: f itself or -f.
enum class IndexConvention { for_f, for_minus_f };

/// Strictly increasing k-tuple 1 <= u_1 < ... < u_k <= n.
class SchubertSymbol {
 public:
  SchubertSymbol(int k, int n, std::vector<int> entries) : k_(k), n_(n), entries_(std::move(entries)) {
    if (k < 0 || n < 0 || k > n) {
      throw DomainError("invalid ambient Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
    }
    if (static_cast<int>(entries_.size()) != k) {
      throw DomainError("symbol must have exactly k entries");
    }
    for (int i = 0; i < k; ++i) {
      if (entries_[i] < 1 || entries_[i] > n || (i > 0 && entries_[i] <= entries_[i - 1])) {
        throw DomainError("symbol entries must be strictly increasing in 1.." + std::to_string(n));
      }
    }
  }

  /// V_u for u = (1, ..., k).
  static SchubertSymbol minimal(int k, int n) {
    std::vector<int> e(static_cast<std::size_t>(std::max(k, 0)));
    std::iota(e.begin(), e.end(), 1);
    return SchubertSymbol(k, n, e);
  }

  /// V_u for u = (n-k+1, ..., n).
  static SchubertSymbol maximal(int k, int n) {
    std::vector<int> e(static_cast<std::size_t>(std::max(k, 0)));
    std::iota(e.begin(), e.end(), n - k + 1);
    return SchubertSymbol(k, n, e);
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }

  bool contains(int row) const { return std::binary_search(entries_.begin(), entries_.end(), row); }

  bool same_ambient(const SchubertSymbol& other) const { return k_ == other.k_ && n_ == other.n_; }

  /// "(2,4)"; the empty symbol prints as "()".
  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) os << ',';
      os << entries_[i];
    }
    os << ')';
    return os.str();
  }

  friend bool operator==(const SchubertSymbol&, const SchubertSymbol&) = default;
  friend auto operator<=>(const SchubertSymbol& a, const SchubertSymbol& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int k_;
  int n_;
  std::vector<int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const SchubertSymbol& u) { return os << u.to_string(); }

/// Parses "(2,4)", "2,4" or "()" against the ambient Gr(k,n).
inline SchubertSymbol parse_symbol(int k, int n, const std::string& text) {
  std::vector<int> entries;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) {
      entries.push_back(std::stoi(digits));
      digits.clear();
    }
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      throw DomainError("unexpected character '" + std::string(1, c) + "' in symbol " + text);
    }
  }
  flush();
  return SchubertSymbol(k, n, entries);
}

/// A critical manifold of the Morse-Bott height function: c_j = dim V cap E_j
/// for the block decomposition C^n = E_1 + ... + E_l with dim E_j = m_j.
class GeneralizedSchubertSymbol {
 public:
  GeneralizedSchubertSymbol(std::vector<int> blocks, std::vector<int> counts)
      : blocks_(std::move(blocks)), counts_(std::move(counts)) {
    if (blocks_.empty() || blocks_.size() != counts_.size()) {
      throw DomainError("blocks and counts must be nonempty and of equal length");
    }
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      if (blocks_[j] <= 0) throw DomainError("block dimensions must be positive");
      if (counts_[j] < 0 || counts_[j] > blocks_[j]) {
        throw DomainError("count c_j must satisfy 0 <= c_j <= m_j");
      }
    }
  }

  const std::vector<int>& blocks() const noexcept { return blocks_; }
  const std::vector<int>& counts() const noexcept { return counts_; }
  int n() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }
  int k() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
    os << ")/[";
    for (std::size_t i = 0; i < blocks_.size(); ++i) os << (i ? "," : "") << blocks_[i];
    os << ']';
    return os.str();
  }

  friend bool operator==(const GeneralizedSchubertSymbol&, const GeneralizedSchubertSymbol&) = default;

 private:
  std::vector<int> blocks_;
  std::vector<int> counts_;
};

/// Distinct eigenvalues b_1 > ... > b_l >= 0 of D with their multiplicities.
class PartialFlagSpectrum {
 public:
  PartialFlagSpectrum(std::vector<double> eigenvalues, std::vector<int> multiplicities)
      : eigenvalues_(std::move(eigenvalues)), multiplicities_(std::move(multiplicities)) {
    if (eigenvalues_.empty() || eigenvalues_.size() != multiplicities_.size()) {
      throw DomainError("eigenvalues and multiplicities must be nonempty and of equal length");
    }
    for (std::size_t j = 0; j < eigenvalues_.size(); ++j) {
      if (multiplicities_[j] <= 0) throw DomainError("multiplicities must be positive");
      if (j > 0 && !(eigenvalues_[j] < eigenvalues_[j - 1])) {
        throw DomainError("eigenvalues must be strictly decreasing");
      }
    }
    if (eigenvalues_.back() < 0) throw DomainError("eigenvalues must be nonnegative");
  }

  /// Groups a nonincreasing sequence a_1 >= ... >= a_n into eigenspaces.
  static PartialFlagSpectrum from_diagonal(const std::vector<double>& a) {
    std::vector<double> b;
    std::vector<int> m;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0 && a[i] > a[i - 1]) throw DomainError("diagonal must be nonincreasing");
      if (!b.empty() && a[i] == b.back()) {
        ++m.back();
      } else {
        b.push_back(a[i]);
        m.push_back(1);
      }
    }
    return PartialFlagSpectrum(b, m);
  }

  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  const std::vector<int>& multiplicities() const noexcept { return multiplicities_; }
  int n() const { return std::accumulate(multiplicities_.begin(), multiplicities_.end(), 0); }

 private:
  std::vector<double> eigenvalues_;
  std::vector<int> multiplicities_;
};

// ---------------------------------------------------------------------------
// Operations on Schubert symbols

inline void check_ambient(int k, int n) {
  if (k < 0 || n < 0 || k > n) {
    throw DomainError("need 0 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
}

/// All C(n,k) symbols in lexicographic order.
inline std::vector<SchubertSymbol> enumerate_symbols(int k, int n) {
  check_ambient(k, n);
  std::vector<SchubertSymbol> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(k, n, cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Complex dimension of the stable cell S_u: sum of (u_i - i).
inline int cell_dimension(const SchubertSymbol& u) {
  int d = 0;
  for (int i = 0; i < u.k(); ++i) d += u[i] - (i + 1);
  return d;
}

inline int critical_index(const SchubertSymbol& u, IndexConvention convention) {
  const int d = cell_dimension(u);
  if (convention == IndexConvention::for_minus_f) return 2 * d;
  return 2 * (u.k() * (u.n() - u.k()) - d);
}

/// v_i = dim(V_u cap C^i) for i = 1..n.
inline std::vector<int> schubert_conditions(const SchubertSymbol& u) {
  std::vector<int> v(static_cast<std::size_t>(u.n()), 0);
  int count = 0;
  std::size_t next = 0;
  for (int i = 1; i <= u.n(); ++i) {
    if (next < u.entries().size() && u.entries()[next] == i) {
      ++count;
      ++next;
    }
    v[static_cast<std::size_t>(i - 1)] = count;
  }
  return v;
}

/// u^c = (n - u_k + 1, ..., n - u_1 + 1).
inline SchubertSymbol complement(const SchubertSymbol& u) {
  std::vector<int> c(u.entries().rbegin(), u.entries().rend());
  for (int& x : c) x = u.n() - x + 1;
  return SchubertSymbol(u.k(), u.n(), c);
}

/// u1 <= u2 in the closure order, i.e. S_{u2} lies in the closure of S_{u1}.
/// Encoded componentwise: (u2)_j <= (u1)_j for every j.
inline bool bruhat_leq(const SchubertSymbol& u1, const SchubertSymbol& u2) {
  if (!u1.same_ambient(u2)) throw DomainError("symbols live in different Grassmannians");
  for (int j = 0; j < u1.k(); ++j) {
    if (u2[j] > u1[j]) return false;
  }
  return true;
}

/// Closure test straight from the Schubert-variety definition
/// X_u = {V : dim V cap C^i >= v_i(u)}: the cell S_w lies in X_u exactly when
/// its centre V_w satisfies those inequalities.  Kept separate from
/// bruhat_leq so the two characterisations can be checked against each other.
inline bool in_schubert_variety(const SchubertSymbol& w, const SchubertSymbol& u) {
  if (!u.same_ambient(w)) throw DomainError("symbols live in different Grassmannians");
  const auto vu = schubert_conditions(u);
  const auto vw = schubert_conditions(w);
  for (std::size_t i = 0; i < vu.size(); ++i) {
    if (vw[i] < vu[i]) return false;
  }
  return true;
}

/// A flow line of -f (equivalently, of f in reversed time) runs from V_{u_from}
/// to V_{u_to} iff u_to is strictly below u_from in the closure order.
inline bool flow_line_exists(const SchubertSymbol& u_from, const SchubertSymbol& u_to) {
  return bruhat_leq(u_from, u_to) && !(u_from == u_to);
}

// ---------------------------------------------------------------------------
// Generalized (Morse-Bott) symbols

inline void check_blocks(const std::vector<int>& blocks) {
  if (blocks.empty()) throw DomainError("blocks must be nonempty");
  for (int m : blocks) {
    if (m <= 0) throw DomainError("block dimensions must be positive");
  }
}

/// All (c_1..c_l) with 0 <= c_j <= m_j and sum k, with c_1 varying slowest
/// from its largest value (so the maximum-height manifold comes first).
inline std::vector<GeneralizedSchubertSymbol> enumerate_generalized_symbols(const std::vector<int>& blocks,
                                                                            int k) {
  check_blocks(blocks);
  const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  check_ambient(k, n);
  std::vector<GeneralizedSchubertSymbol> out;
  std::vector<int> c(blocks.size(), 0);
  std::vector<int> tail_cap(blocks.size() + 1, 0);
  for (std::size_t j = blocks.size(); j-- > 0;) tail_cap[j] = tail_cap[j + 1] + blocks[j];

  auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j == blocks.size()) {
      if (remaining == 0) out.emplace_back(blocks, c);
      return;
    }
    const int hi = std::min(blocks[j], remaining);
    const int lo = std::max(0, remaining - tail_cap[j + 1]);
    for (int x = hi; x >= lo; --x) {
      c[j] = x;
      self(self, j + 1, remaining - x);
    }
    c[j] = 0;
  };
  rec(rec, 0, k);
  return out;
}

/// Index for -f of the critical manifold: 2 * sum_{i<j} c_j (m_i - c_i).
inline int generalized_index(const GeneralizedSchubertSymbol& c) {
  const auto& m = c.blocks();
  const auto& cnt = c.counts();
  int free_before = 0;
  int total = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    total += cnt[j] * free_before;
    free_before += m[j] - cnt[j];
  }
  return 2 * total;
}

/// Factors (c_j, m_j) of the critical manifold Gr_{c_1}(E_1) x ... x Gr_{c_l}(E_l).
inline std::vector<std::pair<int, int>> ndcm_shape(const GeneralizedSchubertSymbol& c) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t j = 0; j < c.blocks().size(); ++j) out.emplace_back(c.counts()[j], c.blocks()[j]);
  return out;
}

/// Complex dimension of the critical manifold.
inline int ndcm_dimension(const GeneralizedSchubertSymbol& c) {
  int d = 0;
  for (auto [cj, mj] : ndcm_shape(c)) d += cj * (mj - cj);
  return d;
}

/// The generalized symbol of a Morse critical point V_u for the block structure.
inline GeneralizedSchubertSymbol coarsen(const SchubertSymbol& u, const std::vector<int>& blocks) {
  check_blocks(blocks);
  if (std::accumulate(blocks.begin(), blocks.end(), 0) != u.n()) {
    throw DomainError("blocks must sum to n");
  }
  std::vector<int> c(blocks.size(), 0);
  int start = 1;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (int r = start; r < start + blocks[j]; ++r) c[j] += u.contains(r) ? 1 : 0;
    start += blocks[j];
  }
  return GeneralizedSchubertSymbol(blocks, c);
}

}  // namespace morsegrass
