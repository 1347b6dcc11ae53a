#pragma once

// Witten chain complexes: generators are critical points graded by index, the
// boundary counts signed flow lines between adjacent indices.  Homology is
// computed exactly, over Z by Smith normal form or over Z/2 by elimination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "morsegrass/betti.hpp"
#include "morsegrass/errors.hpp"
#include "morsegrass/polynomial.hpp"
#include "morsegrass/schubert.hpp"
#include "morsegrass/smith.hpp"

namespace morsegrass {

enum class Coefficients { integers, mod2 };

inline const char* coefficients_name(Coefficients c) { return c == Coefficients::integers ? "int" : "mod2"; }

class WittenComplex {
 public:
  WittenComplex() = default;

  /// Degrees d_min..d_max, no generators, zero boundaries.
  WittenComplex(int d_min, int d_max) : d_min_(d_min), d_max_(d_max) {
    if (d_max < d_min) throw DomainError("degree range is empty");
    gens_.resize(static_cast<std::size_t>(d_max - d_min + 1));
  }

  int min_degree() const noexcept { return d_min_; }
  int max_degree() const noexcept { return d_max_; }
  bool in_range(int i) const noexcept { return i >= d_min_ && i <= d_max_; }

  const std::vector<std::string>& generators(int i) const {
    static const std::vector<std::string> none;
    return in_range(i) ? gens_[slot(i)] : none;
  }
  std::size_t rank(int i) const { return generators(i).size(); }

  void set_generators(int i, std::vector<std::string> names) {
    if (!in_range(i)) throw DomainError("degree " + std::to_string(i) + " outside complex");
    gens_[slot(i)] = std::move(names);
  }

  /// boundary(i): C_i -> C_{i-1}, shape rank(i-1) x rank(i); zero unless set.
  IntMatrix boundary(int i) const {
    if (auto it = d_.find(i); it != d_.end()) return it->second;
    return IntMatrix(rank(i - 1), rank(i));
  }
  bool has_boundary(int i) const { return d_.count(i) != 0; }

  void set_boundary(int i, IntMatrix m) {
    if (!in_range(i) || !in_range(i - 1)) throw DomainError("boundary d " + std::to_string(i) + " outside complex");
    if (m.rows() != rank(i - 1) || m.cols() != rank(i)) {
      throw DomainError("boundary d " + std::to_string(i) + " has shape " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected " + std::to_string(rank(i - 1)) + "x" +
                        std::to_string(rank(i)));
    }
    d_[i] = std::move(m);
  }

  friend bool operator==(const WittenComplex& a, const WittenComplex& b) {
    if (a.d_min_ != b.d_min_ || a.d_max_ != b.d_max_ || a.gens_ != b.gens_) return false;
    for (int i = a.d_min_ + 1; i <= a.d_max_; ++i)
      if (!(a.boundary(i) == b.boundary(i))) return false;
    return true;
  }

 private:
  std::size_t slot(int i) const { return static_cast<std::size_t>(i - d_min_); }

  int d_min_ = 0;
  int d_max_ = 0;
  std::vector<std::vector<std::string>> gens_{1};
  std::map<int, IntMatrix> d_;
};

/// True iff every composite d_{i-1} d_i vanishes; on failure *offending gets i.
inline bool validate_complex(const WittenComplex& c, int* offending = nullptr) {
  for (int i = c.min_degree() + 1; i <= c.max_degree(); ++i) {
    const IntMatrix di = c.boundary(i);
    if (di.rows() != c.rank(i - 1) || di.cols() != c.rank(i)) throw DomainError("boundary shape mismatch in degree " + std::to_string(i));
  }
  for (int i = c.min_degree() + 2; i <= c.max_degree(); ++i) {
    if (!(c.boundary(i - 1) * c.boundary(i)).is_zero()) {
      if (offending) *offending = i;
      return false;
    }
  }
  return true;
}

struct HomologyGroup {
  std::int64_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, divisibility order

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

  /// "Z^2 + Z/2", "0".
  std::string to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.emplace_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& t : torsion) parts.push_back("Z/" + t.str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
  }
};

struct HomologyResult {
  Coefficients mode = Coefficients::integers;
  int min_degree = 0;
  std::vector<HomologyGroup> groups;  // index i - min_degree

  const HomologyGroup& at(int i) const { return groups.at(static_cast<std::size_t>(i - min_degree)); }
  int max_degree() const noexcept { return min_degree + static_cast<int>(groups.size()) - 1; }

  /// Sum of free ranks t^i; requires min_degree >= 0.
  IntPolynomial poincare() const {
    if (min_degree < 0) throw DomainError("Poincare polynomial needs nonnegative degrees");
    IntPolynomial p;
    for (std::size_t j = 0; j < groups.size(); ++j)
      p += IntPolynomial::monomial(groups[j].free_rank, min_degree + static_cast<int>(j));
    return p;
  }
};

inline HomologyResult homology(const WittenComplex& c, Coefficients mode) {
  int bad = 0;
  if (!validate_complex(c, &bad)) throw ValidationError("boundary composition nonzero at d " + std::to_string(bad - 1) + " d " + std::to_string(bad));
  HomologyResult r;
  r.mode = mode;
  r.min_degree = c.min_degree();
  const int lo = c.min_degree();
  const int hi = c.max_degree();
  std::map<int, SmithResult> snf;
  std::map<int, std::int64_t> rk;
  for (int i = lo + 1; i <= hi; ++i) {
    const IntMatrix d = c.boundary(i);
    if (mode == Coefficients::integers) {
      auto s = smith_normal_form(d);
      rk[i] = static_cast<std::int64_t>(s.rank());
      snf.emplace(i, std::move(s));
    } else {
      rk[i] = static_cast<std::int64_t>(rank_mod2(d));
    }
  }
  for (int i = lo; i <= hi; ++i) {
    HomologyGroup g;
    const std::int64_t out = rk.count(i) ? rk[i] : 0;
    const std::int64_t in = rk.count(i + 1) ? rk[i + 1] : 0;
    g.free_rank = static_cast<std::int64_t>(c.rank(i)) - out - in;
    if (mode == Coefficients::integers && snf.count(i + 1)) {
      for (const auto& x : snf.at(i + 1).diagonal)
        if (x > 1) g.torsion.push_back(x);
    }
    r.groups.push_back(std::move(g));
  }
  return r;
}

/// Generator counts as a polynomial sum rank_i t^i.
inline IntPolynomial morse_polynomial(const WittenComplex& c) {
  if (c.min_degree() < 0) throw DomainError("Morse polynomial needs nonnegative degrees");
  IntPolynomial p;
  for (int i = c.min_degree(); i <= c.max_degree(); ++i)
    p += IntPolynomial::monomial(static_cast<IntPolynomial::Coeff>(c.rank(i)), i);
  return p;
}

// ---------------------------------------------------------------------------
// Built-in complexes

/// Height function on a circle with m minima and m maxima alternating; the
/// maximum between minima j and j+1 bounds p_j - p_{j+1}.
inline WittenComplex circle_complex(int m) {
  if (m < 1) throw DomainError("circle_complex needs m >= 1");
  std::vector<std::string> mins, maxs;
  for (int j = 0; j < m; ++j) {
    if (m <= 13) {
      mins.emplace_back(1, static_cast<char>('A' + j));
      maxs.emplace_back(1, static_cast<char>('A' + m + j));
    } else {
      mins.push_back("p" + std::to_string(j + 1));
      maxs.push_back("q" + std::to_string(j + 1));
    }
  }
  WittenComplex c(0, 1);
  c.set_generators(0, mins);
  c.set_generators(1, maxs);
  IntMatrix d(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const auto col = static_cast<std::size_t>(j);
    d(col, col) += 1;
    d(static_cast<std::size_t>((j + 1) % m), col) -= 1;
  }
  c.set_boundary(1, d);
  return c;
}

/// Height function on RP^n; C_i is spanned by the axis V_{n-i} and
/// d_i = 2 for even i, 0 for odd i.
inline WittenComplex rp_complex(int n) {
  if (n < 1) throw DomainError("rp_complex needs n >= 1");
  WittenComplex c(0, n);
  for (int i = 0; i <= n; ++i) c.set_generators(i, {"V" + std::to_string(n - i)});
  for (int i = 1; i <= n; ++i) {
    IntMatrix d(1, 1);
    d(0, 0) = (i % 2 == 0) ? 2 : 0;
    c.set_boundary(i, d);
  }
  return c;
}

/// Schubert cells in degree 2 dim S_u; every boundary vanishes.
inline WittenComplex grassmannian_complex(int k, int n) {
  check_ambient(k, n);
  const int top = 2 * k * (n - k);
  WittenComplex c(0, top);
  std::map<int, std::vector<std::string>> by_degree;
  for (const auto& u : enumerate_symbols(k, n)) by_degree[2 * cell_dimension(u)].push_back(u.to_string());
  for (auto& [deg, names] : by_degree) c.set_generators(deg, names);
  return c;
}

/// Tilted torus: one minimum, two saddles, one maximum, zero boundaries.
inline WittenComplex torus_complex() {
  WittenComplex c(0, 2);
  c.set_generators(0, {"min"});
  c.set_generators(1, {"saddle_a", "saddle_b"});
  c.set_generators(2, {"max"});
  return c;
}

// ---------------------------------------------------------------------------
// Text format
//
//   degrees: 0 1
//   gens 0: A B C
//   gens 1: D E F
//   d 1:
//   1 0 -1
//   -1 1 0
//   0 -1 1
//
// '#' starts a comment.  A missing gens line means no generators; a missing
// d block means the zero map.

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline long long parse_int(const std::string& w, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(w, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + w + "'");
  }
  if (used != w.size()) throw ParseError(line, "expected integer, got '" + w + "'");
  return v;
}

inline int parse_header_degree(const std::string& rest, int line) {
  const auto colon = rest.find(':');
  if (colon == std::string::npos) throw ParseError(line, "missing ':'");
  const auto words = split_ws(rest.substr(0, colon));
  if (words.size() != 1) throw ParseError(line, "expected a single degree before ':'");
  return static_cast<int>(parse_int(words[0], line));
}

}  // namespace detail

inline WittenComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_range = false;
  int lo = 0, hi = 0;
  std::map<int, std::vector<std::string>> gens;
  std::map<int, int> gens_line;
  struct Block {
    int header_line;
    std::vector<std::vector<long long>> rows;
  };
  std::map<int, Block> blocks;
  Block* current = nullptr;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    const auto words = detail::split_ws(line);
    if (words.empty()) continue;
    const std::string& head = words[0];
    if (head == "degrees:") {
      if (have_range) throw ParseError(line_no, "duplicate degrees line");
      if (words.size() != 3) throw ParseError(line_no, "expected 'degrees: d_min d_max'");
      lo = static_cast<int>(detail::parse_int(words[1], line_no));
      hi = static_cast<int>(detail::parse_int(words[2], line_no));
      if (hi < lo) throw ParseError(line_no, "d_max below d_min");
      have_range = true;
      current = nullptr;
    } else if (head == "gens") {
      if (!have_range) throw ParseError(line_no, "gens before degrees line");
      const auto colon = line.find(':');
      const int deg = detail::parse_header_degree(line.substr(line.find("gens") + 4), line_no);
      if (deg < lo || deg > hi) throw ParseError(line_no, "degree " + std::to_string(deg) + " outside declared range");
      if (gens.count(deg)) throw ParseError(line_no, "duplicate gens line for degree " + std::to_string(deg));
      gens[deg] = detail::split_ws(line.substr(colon + 1));
      gens_line[deg] = line_no;
      current = nullptr;
    } else if (head == "d") {
      if (!have_range) throw ParseError(line_no, "boundary before degrees line");
      const auto colon = line.find(':');
      const int deg = detail::parse_header_degree(line.substr(line.find('d') + 1), line_no);
      if (deg <= lo || deg > hi) throw ParseError(line_no, "boundary degree " + std::to_string(deg) + " outside declared range");
      if (blocks.count(deg)) throw ParseError(line_no, "duplicate boundary for degree " + std::to_string(deg));
      if (!detail::split_ws(line.substr(colon + 1)).empty()) throw ParseError(line_no, "matrix rows must start on the next line");
      current = &blocks[deg];
      current->header_line = line_no;
    } else {
      if (!current) throw ParseError(line_no, "unexpected line '" + detail::split_ws(line)[0] + "'");
      std::vector<long long> row;
      for (const auto& w : words) row.push_back(detail::parse_int(w, line_no));
      if (!current->rows.empty() && row.size() != current->rows.front().size()) {
        throw ParseError(line_no, "row has " + std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(current->rows.front().size()));
      }
      current->rows.push_back(std::move(row));
    }
  }
  if (!have_range) throw ParseError(line_no, "missing degrees line");

  WittenComplex c(lo, hi);
  std::set<std::string> seen;
  for (auto& [deg, names] : gens) {
    for (const auto& nm : names)
      if (!seen.insert(nm).second) throw ParseError(gens_line[deg], "duplicate generator name '" + nm + "'");
    c.set_generators(deg, names);
  }
  for (auto& [deg, b] : blocks) {
    const std::size_t rows = c.rank(deg - 1);
    const std::size_t cols = c.rank(deg);
    const std::size_t got_cols = b.rows.empty() ? 0 : b.rows.front().size();
    if (b.rows.size() != rows || (rows != 0 && got_cols != cols)) {
      throw ParseError(b.header_line, "d " + std::to_string(deg) + " is " + std::to_string(b.rows.size()) + "x" +
                                          std::to_string(got_cols) + ", expected " + std::to_string(rows) + "x" +
                                          std::to_string(cols));
    }
    c.set_boundary(deg, IntMatrix(rows, cols, b.rows));
  }
  return c;
}

/// Parse and reject complexes whose boundary does not square to zero.
inline WittenComplex load_complex(const std::string& text) {
  WittenComplex c = parse_complex(text);
  int bad = 0;
  if (!validate_complex(c, &bad)) {
    throw ValidationError("d " + std::to_string(bad - 1) + " * d " + std::to_string(bad) + " is nonzero");
  }
  return c;
}

inline std::string serialize_complex(const WittenComplex& c) {
  std::ostringstream os;
  os << "degrees: " << c.min_degree() << ' ' << c.max_degree() << '\n';
  for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
    if (c.rank(i) == 0) continue;
    os << "gens " << i << ':';
    for (const auto& g : c.generators(i)) os << ' ' << g;
    os << '\n';
  }
  for (int i = c.min_degree() + 1; i <= c.max_degree(); ++i) {
    if (c.rank(i) == 0 || c.rank(i - 1) == 0) continue;
    const IntMatrix d = c.boundary(i);
    os << "d " << i << ":\n";
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t col = 0; col < d.cols(); ++col) os << (col ? " " : "") << d(r, col);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace morsegrass
