#pragma once

// Moment map mu(V) = diag(pi_V) on Gr_k(C^n), its image polytope (the
// hypersimplex), Schubert sub-polytopes, membership by linear programming and
// brute-force face counting for small vertex sets.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <future>
#include <set>
#include <string>
#include <vector>

#include "morsegrass/bigint.hpp"
#include "morsegrass/errors.hpp"
#include "morsegrass/flow.hpp"
#include "morsegrass/schubert.hpp"

namespace morsegrass {

/// A point of R^n; when produced by moment_map, 0 <= x_i <= 1 and sum x_i = k.
struct MomentPoint {
  std::vector<double> coords;

  double operator[](std::size_t i) const { return coords[i]; }
  std::size_t size() const noexcept { return coords.size(); }
};

/// Convex hull of a set of vertices e_u, u ranging over some Schubert symbols.
class VertexPolytope {
 public:
  VertexPolytope(int k, int n, std::vector<SchubertSymbol> symbols) : k_(k), n_(n), symbols_(std::move(symbols)) {
    check_ambient(k, n);
    std::sort(symbols_.begin(), symbols_.end());
    if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
      throw DomainError("polytope vertices must be pairwise distinct");
    }
    for (const auto& u : symbols_) {
      if (u.k() != k || u.n() != n) throw DomainError("vertex symbol outside Gr(k,n)");
    }
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<SchubertSymbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }

  /// Vertex coordinates e_u = e_{u_1} + ... + e_{u_k}.
  std::vector<std::vector<int>> vertices() const {
    std::vector<std::vector<int>> out;
    for (const auto& u : symbols_) out.push_back(indicator(u));
    return out;
  }

  static std::vector<int> indicator(const SchubertSymbol& u) {
    std::vector<int> e(static_cast<std::size_t>(u.n()), 0);
    for (int x : u.entries()) e[static_cast<std::size_t>(x - 1)] = 1;
    return e;
  }

 private:
  int k_;
  int n_;
  std::vector<SchubertSymbol> symbols_;
};

/// Diagonal of the projector onto V.
inline MomentPoint moment_map(const GrassmannPoint& v) {
  MomentPoint x;
  const auto& q = v.frame();
  for (int i = 0; i < v.n(); ++i) x.coords.push_back(q.row(i).squaredNorm());
  return x;
}

/// The hypersimplex: all C(n,k) vertices e_u.
inline VertexPolytope grassmannian_polytope(int k, int n) { return VertexPolytope(k, n, enumerate_symbols(k, n)); }

/// Image of the Schubert variety X_u: vertices e_v with v in the closure of S_u.
inline VertexPolytope schubert_polytope(const SchubertSymbol& u) {
  std::vector<SchubertSymbol> vs;
  for (const auto& v : enumerate_symbols(u.k(), u.n())) {
    if (bruhat_leq(u, v)) vs.push_back(v);
  }
  return VertexPolytope(u.k(), u.n(), vs);
}

namespace detail {

template <class T>
struct ScalarTraits {
  static bool positive(const T& x, const T&) { return x > 0; }
  static bool is_zero(const T& x, const T&) { return x == 0; }
};

template <>
struct ScalarTraits<double> {
  static bool positive(double x, double eps) { return x > eps; }
  static bool is_zero(double x, double eps) { return std::abs(x) <= eps; }
};

/// Phase-one simplex for { lambda >= 0 : A lambda = b }, Bland's rule.
/// Returns the minimal total infeasibility (0 iff feasible, up to eps).
template <class T>
T phase_one_infeasibility(std::vector<std::vector<T>> a, std::vector<T> b, const T& eps) {
  using Tr = ScalarTraits<T>;
  const std::size_t m = a.size();
  const std::size_t nv = m ? a[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  // Columns: nv structural, m artificial, then rhs.
  const std::size_t cols = nv + m;
  std::vector<std::vector<T>> tab(m, std::vector<T>(cols + 1, T(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) tab[i][j] = a[i][j];
    tab[i][nv + i] = T(1);
    tab[i][cols] = b[i];
    basis[i] = nv + i;
  }
  // Reduced costs for minimising sum of artificials.
  std::vector<T> cost(cols + 1, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= cols; ++j) {
      if (j < nv || j == cols) cost[j] -= tab[i][j];
    }
  }
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (Tr::positive(-cost[j], eps)) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    T best(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (Tr::positive(tab[i][enter], eps)) {
        T ratio = tab[i][cols] / tab[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur for phase one
    const T piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || Tr::is_zero(tab[i][enter], T(0))) continue;
      const T f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (!Tr::is_zero(cost[enter], T(0))) {
      const T f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  return -cost[cols];
}

template <class T>
bool hull_contains(const VertexPolytope& p, const std::vector<T>& x, const T& eps) {
  if (static_cast<int>(x.size()) != p.n()) throw DomainError("point dimension does not match polytope");
  if (p.size() == 0) return false;
  const auto verts = p.vertices();
  std::vector<std::vector<T>> a(static_cast<std::size_t>(p.n()) + 1, std::vector<T>(verts.size(), T(0)));
  std::vector<T> b(static_cast<std::size_t>(p.n()) + 1, T(0));
  for (std::size_t j = 0; j < verts.size(); ++j) {
    for (int i = 0; i < p.n(); ++i) a[static_cast<std::size_t>(i)][j] = T(verts[j][static_cast<std::size_t>(i)]);
    a.back()[j] = T(1);
  }
  for (int i = 0; i < p.n(); ++i) b[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
  b.back() = T(1);
  const T infeas = phase_one_infeasibility<T>(a, b, eps);
  return !ScalarTraits<T>::positive(infeas, eps);
}

}  // namespace detail

/// Floating-point membership: feasible convex combination up to tol slack.
inline bool membership(const MomentPoint& x, const VertexPolytope& p, double tol = 1e-9) {
  if (static_cast<int>(x.size()) != p.n()) throw DomainError("point dimension does not match polytope");
  for (double c : x.coords) {
    if (!std::isfinite(c) || c < -tol || c > 1.0 + tol) return false;
  }
  return detail::hull_contains<double>(p, x.coords, tol);
}

/// Exact membership for rational points.
inline bool membership(const std::vector<Rational>& x, const VertexPolytope& p) {
  return detail::hull_contains<Rational>(p, x, Rational(0));
}

/// Closed-form test for the full hypersimplex: 0 <= x_i <= 1 and sum x_i = k.
inline bool in_hypersimplex(const MomentPoint& x, int k, double tol = 1e-9) {
  double s = 0.0;
  for (double c : x.coords) {
    if (c < -tol || c > 1.0 + tol) return false;
    s += c;
  }
  return std::abs(s - k) <= tol;
}

// ---------------------------------------------------------------------------
// Face enumeration

namespace detail {

using IntRow = std::vector<std::int64_t>;

/// Rank of an integer matrix by fraction-free elimination.
inline int integer_rank(std::vector<IntRow> m) {
  using boost::multiprecision::cpp_int;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::vector<std::vector<cpp_int>> a(m.size(), std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const cpp_int f = a[i][c];
      const cpp_int g = a[row][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[row][j] * f;
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Affine dimension of the points selected by mask.
inline int affine_dimension(const std::vector<IntRow>& pts, std::uint64_t mask) {
  std::vector<IntRow> diffs;
  int first = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (first < 0) {
      first = static_cast<int>(i);
      continue;
    }
    IntRow d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[static_cast<std::size_t>(first)][j];
    diffs.push_back(d);
  }
  if (first < 0) return -1;
  return integer_rank(diffs);
}

/// Determinant of a small integer matrix (Bareiss).
inline std::int64_t integer_det(std::vector<IntRow> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

struct FaceOptions {
  std::size_t max_vertices = 64;
  /// Split the facet search across threads; the result is merged deterministically.
  bool parallel = false;
};

/// f-vector (f_0, ..., f_d) of the polytope, f_d = 1 for the polytope itself.
///
/// The vertex set is first projected onto d coordinates on which its affine
/// hull projects isomorphically, so everything below is full-dimensional
/// integer geometry.  Facets come from every d-subset of vertices whose
/// hyperplane supports the polytope; lower faces are the nonempty
/// intersections of facets.
inline std::vector<std::int64_t> face_counts(const VertexPolytope& p, const FaceOptions& opts = {}) {
  using detail::IntRow;
  const std::size_t m = p.size();
  if (m == 0) return {};
  if (m > opts.max_vertices || m > 64) {
    throw CapacityError("face enumeration limited to " + std::to_string(std::min<std::size_t>(opts.max_vertices, 64)) +
                        " vertices, got " + std::to_string(m));
  }
  std::vector<IntRow> pts;
  for (const auto& v : p.vertices()) pts.emplace_back(v.begin(), v.end());
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  const int d = detail::affine_dimension(pts, all);
  if (d == 0) return {1};

  // Coordinates on which the difference vectors keep full rank d.
  std::vector<IntRow> diffs;
  for (std::size_t i = 1; i < m; ++i) {
    IntRow r(pts[i].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
    diffs.push_back(r);
  }
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < pts[0].size() && static_cast<int>(chosen.size()) < d; ++c) {
    auto trial = chosen;
    trial.push_back(c);
    std::vector<IntRow> proj;
    for (const auto& r : diffs) {
      IntRow q;
      for (auto t : trial) q.push_back(r[t]);
      proj.push_back(q);
    }
    if (detail::integer_rank(proj) == static_cast<int>(trial.size())) chosen = trial;
  }
  std::vector<IntRow> q;
  for (const auto& v : pts) {
    IntRow r;
    for (auto c : chosen) r.push_back(v[c]);
    q.push_back(r);
  }

  if (d == 1) return {2, 1};

  // Normal of the hyperplane through d points: cofactor vector of the (d-1) x d
  // matrix of differences.
  auto facet_from = [&](const std::vector<std::size_t>& idx) -> std::uint64_t {
    std::vector<IntRow> rows;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      IntRow r(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] = q[idx[i]][static_cast<std::size_t>(j)] - q[idx[0]][static_cast<std::size_t>(j)];
      rows.push_back(r);
    }
    IntRow normal(static_cast<std::size_t>(d));
    bool nonzero = false;
    for (int j = 0; j < d; ++j) {
      std::vector<IntRow> minor;
      for (const auto& r : rows) {
        IntRow mr;
        for (int c = 0; c < d; ++c)
          if (c != j) mr.push_back(r[static_cast<std::size_t>(c)]);
        minor.push_back(mr);
      }
      const std::int64_t det = detail::integer_det(minor);
      normal[static_cast<std::size_t>(j)] = (j % 2 == 0) ? det : -det;
      nonzero = nonzero || det != 0;
    }
    if (!nonzero) return 0;
    auto level = [&](const IntRow& x) {
      std::int64_t s = 0;
      for (int j = 0; j < d; ++j) s += normal[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      return s;
    };
    const std::int64_t h = level(q[idx[0]]);
    bool above = false;
    bool below = false;
    std::uint64_t on = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::int64_t l = level(q[i]);
      if (l > h) above = true;
      if (l < h) below = true;
      if (l == h) on |= std::uint64_t{1} << i;
    }
    if (above && below) return 0;
    return on;
  };

  // Enumerate d-subsets, optionally split by their smallest element.
  auto search = [&](std::size_t first) {
    std::set<std::uint64_t> found;
    std::vector<std::size_t> idx{first};
    auto rec = [&](auto&& self, std::size_t next) -> void {
      if (static_cast<int>(idx.size()) == d) {
        if (auto f = facet_from(idx)) found.insert(f);
        return;
      }
      for (std::size_t i = next; i < m; ++i) {
        idx.push_back(i);
        self(self, i + 1);
        idx.pop_back();
      }
    };
    rec(rec, first + 1);
    return found;
  };
  std::set<std::uint64_t> facets;
  if (opts.parallel) {
    std::vector<std::future<std::set<std::uint64_t>>> jobs;
    for (std::size_t first = 0; first < m; ++first) jobs.push_back(std::async(std::launch::async, search, first));
    for (auto& j : jobs) {
      auto part = j.get();
      facets.insert(part.begin(), part.end());
    }
  } else {
    for (std::size_t first = 0; first < m; ++first) {
      auto part = search(first);
      facets.insert(part.begin(), part.end());
    }
  }

  std::set<std::uint64_t> faces(facets.begin(), facets.end());
  std::vector<std::uint64_t> frontier(facets.begin(), facets.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto f : frontier) {
      for (auto g : facets) {
        const std::uint64_t h = f & g;
        if (h != 0 && faces.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::int64_t> fvec(static_cast<std::size_t>(d) + 1, 0);
  for (auto f : faces) {
    const int dim = detail::affine_dimension(q, f);
    if (dim >= 0 && dim < d) ++fvec[static_cast<std::size_t>(dim)];
  }
  fvec[static_cast<std::size_t>(d)] = 1;
  return fvec;
}

/// mu(flow(V, a, t)) for each sample time.
inline std::vector<MomentPoint> flow_moment_trace(const GrassmannPoint& v, const HeightSpectrum& a,
                                                  const std::vector<double>& ts) {
  std::vector<MomentPoint> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(moment_map(flow(v, a, t)));
  return out;
}

/// Orthonormal (Helmert) coordinates of the hyperplane sum x_i = const,
/// centred at (k/n, ..., k/n).  For Gr(2,4) this lays the octahedron out in R^3.
inline std::vector<std::vector<double>> project_to_hyperplane(const VertexPolytope& p) {
  const int n = p.n();
  std::vector<std::vector<double>> out;
  for (const auto& v : p.vertices()) {
    std::vector<double> c(static_cast<std::size_t>(n - 1), 0.0);
    for (int j = 1; j < n; ++j) {
      double s = 0.0;
      for (int i = 0; i < j; ++i) s += v[static_cast<std::size_t>(i)];
      s -= j * v[static_cast<std::size_t>(j)];
      c[static_cast<std::size_t>(j - 1)] = s / std::sqrt(static_cast<double>(j) * (j + 1));
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace morsegrass
