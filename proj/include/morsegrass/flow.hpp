#pragma once

// Points of Gr_k(C^n) as n x k complex frames, the height function
// f(V) = trace(pi_V D), its gradient, the closed-form flow V -> e^{-tD} V and an
// RK4 integrator used as an independent check of that formula.
//
// This is the only floating-point module; everything else is exact.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "morsegrass/errors.hpp"
#include "morsegrass/schubert.hpp"

namespace morsegrass {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Diagonal a_1 >= ... >= a_n >= 0 of D.
class HeightSpectrum {
 public:
  explicit HeightSpectrum(std::vector<double> a) : a_(std::move(a)) {
    if (a_.empty()) throw DomainError("spectrum must be nonempty");
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!std::isfinite(a_[i])) throw DomainError("spectrum entries must be finite");
      if (i > 0 && a_[i] > a_[i - 1]) throw DomainError("spectrum must be nonincreasing");
    }
    if (a_.back() < 0) throw DomainError("spectrum entries must be nonnegative");
  }

  const std::vector<double>& values() const noexcept { return a_; }
  int n() const noexcept { return static_cast<int>(a_.size()); }
  double operator[](std::size_t i) const { return a_[i]; }

  /// Strictly decreasing, i.e. f is Morse rather than Morse-Bott.
  bool is_strict() const {
    for (std::size_t i = 1; i < a_.size(); ++i) {
      if (!(a_[i] < a_[i - 1])) return false;
    }
    return true;
  }

  PartialFlagSpectrum partial_flag() const { return PartialFlagSpectrum::from_diagonal(a_); }

  Eigen::VectorXd as_vector() const { return Eigen::Map<const Eigen::VectorXd>(a_.data(), n()); }

 private:
  std::vector<double> a_;
};

struct FrameOptions {
  /// Smallest admissible ratio sigma_min / sigma_max of the frame.
  double rank_floor = 1e-12;
};

namespace detail {

/// Modified Gram-Schmidt with one reorthogonalisation pass.  Columns that are
/// already orthonormal (e.g. coordinate frames) come back bit-for-bit.
inline ComplexMatrix orthonormalize(const ComplexMatrix& m) {
  ComplexMatrix q = m;
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const Complex proj = q.col(i).dot(q.col(j));
        if (proj != Complex(0.0)) q.col(j) -= proj * q.col(i);
      }
    }
    const double nrm = q.col(j).norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) throw DegenerateInputError("frame columns are linearly dependent");
    if (nrm != 1.0) q.col(j) /= nrm;
  }
  return q;
}

}  // namespace detail

/// A k-plane in C^n, represented by a full-rank n x k frame.  The frame as
/// given is kept alongside an orthonormal frame spanning the same plane.
class GrassmannPoint {
 public:
  explicit GrassmannPoint(ComplexMatrix matrix, const FrameOptions& opts = {}) : matrix_(std::move(matrix)) {
    if (matrix_.cols() > matrix_.rows()) throw DomainError("frame has more columns than rows");
    if (!matrix_.allFinite()) throw DomainError("frame has non-finite entries");
    if (matrix_.cols() > 0) {
      Eigen::JacobiSVD<ComplexMatrix> svd(matrix_);
      const auto& s = svd.singularValues();
      const double smax = s(0);
      const double smin = s(s.size() - 1);
      if (!(smax > 0.0) || smin < opts.rank_floor * smax) {
        throw DegenerateInputError("frame is rank deficient (sigma_min/sigma_max = " +
                                   std::to_string(smax > 0 ? smin / smax : 0.0) + ")");
      }
    }
    frame_ = detail::orthonormalize(matrix_);
  }

  /// Coordinate plane V_u.
  static GrassmannPoint coordinate(const SchubertSymbol& u) {
    ComplexMatrix m = ComplexMatrix::Zero(u.n(), u.k());
    for (int j = 0; j < u.k(); ++j) m(u[static_cast<std::size_t>(j)] - 1, j) = 1.0;
    return GrassmannPoint(m);
  }

  int n() const noexcept { return static_cast<int>(matrix_.rows()); }
  int k() const noexcept { return static_cast<int>(matrix_.cols()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const ComplexMatrix& frame() const noexcept { return frame_; }

 private:
  ComplexMatrix matrix_;
  ComplexMatrix frame_;
};

/// Skew-Hermitian n x n matrix of the form T - T* with T : V -> V^perp.
class TangentVector {
 public:
  explicit TangentVector(ComplexMatrix skew) : skew_(std::move(skew)) {}
  const ComplexMatrix& matrix() const noexcept { return skew_; }
  /// Norm for <A, B> = Re trace(A B*).
  double norm() const { return skew_.norm(); }
  /// <this, other> = Re trace(A B*).
  double pair(const ComplexMatrix& other) const { return (skew_.array() * other.conjugate().array()).sum().real(); }

 private:
  ComplexMatrix skew_;
};

/// Orthogonal projector onto V.
inline ComplexMatrix projector(const GrassmannPoint& v) { return v.frame() * v.frame().adjoint(); }

/// Frobenius distance between the projectors of two planes.
inline double projector_distance(const GrassmannPoint& a, const GrassmannPoint& b) {
  return (projector(a) - projector(b)).norm();
}

inline void check_sizes(const GrassmannPoint& v, const HeightSpectrum& a) {
  if (v.n() != a.n()) throw DomainError("spectrum length does not match ambient dimension");
}

/// f(V) = trace(pi_V D) = sum_i a_i (pi_V)_{ii}.
inline double height_value(const GrassmannPoint& v, const HeightSpectrum& a) {
  check_sizes(v, a);
  double f = 0.0;
  const auto& q = v.frame();
  for (int i = 0; i < v.n(); ++i) f += a[static_cast<std::size_t>(i)] * q.row(i).squaredNorm();
  return f;
}

/// grad f_V = i (pi D pi_perp + pi_perp D pi); the flow direction is its negative.
inline TangentVector gradient(const GrassmannPoint& v, const HeightSpectrum& a) {
  check_sizes(v, a);
  const ComplexMatrix pi = projector(v);
  const ComplexMatrix perp = ComplexMatrix::Identity(v.n(), v.n()) - pi;
  const ComplexMatrix d = a.as_vector().cast<Complex>().asDiagonal();
  const ComplexMatrix h = pi * d * perp + perp * d * pi;
  return TangentVector(Complex(0.0, 1.0) * h);
}

struct FlowOptions {
  /// Largest exponent spread (a_max - a_min)|dt| applied before re-orthonormalising.
  double max_exponent_per_stage = 30.0;
  /// Exponents are clamped to [-700, 0] after shifting.
  double exponent_clamp = 700.0;
};

/// Closed-form flow of -grad f: span of e^{-tD} V.  Long times are applied in
/// stages with re-orthonormalisation in between; the span is unaffected.
inline GrassmannPoint flow(const GrassmannPoint& v, const HeightSpectrum& a, double t, const FlowOptions& opts = {}) {
  check_sizes(v, a);
  if (!std::isfinite(t)) throw DomainError("flow time must be finite");
  const double spread = a[0] - a[static_cast<std::size_t>(a.n() - 1)];
  int stages = 1;
  if (spread * std::abs(t) > opts.max_exponent_per_stage) {
    stages = static_cast<int>(std::ceil(spread * std::abs(t) / opts.max_exponent_per_stage));
  }
  const double dt = t / stages;
  ComplexMatrix q = v.frame();
  for (int s = 0; s < stages; ++s) {
    std::vector<double> ex(static_cast<std::size_t>(a.n()));
    double top = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < a.n(); ++i) {
      ex[static_cast<std::size_t>(i)] = -a[static_cast<std::size_t>(i)] * dt;
      top = std::max(top, ex[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < a.n(); ++i) {
      const double e = std::max(ex[static_cast<std::size_t>(i)] - top, -opts.exponent_clamp);
      q.row(i) *= std::exp(e);
    }
    q = detail::orthonormalize(q);
  }
  return GrassmannPoint(q);
}

struct IntegrateOptions {
  /// Allowed departure of Y*Y from the identity within one step.
  double drift_tolerance = 1e-3;
};

/// Horizontal frame ODE Y' = -(I - Y (Y*Y)^{-1} Y*) D Y, whose projector obeys
/// pi' = -grad f.  Integrated with classical RK4, re-orthonormalised after
/// every step; the vector field commutes with right multiplication by GL(k),
/// so re-orthonormalising does not alter the computed span.
inline GrassmannPoint integrate_flow(const GrassmannPoint& v, const HeightSpectrum& a, double t, int steps,
                                     const IntegrateOptions& opts = {}) {
  check_sizes(v, a);
  if (steps < 1) throw DomainError("integrate_flow needs steps >= 1");
  const ComplexMatrix d = a.as_vector().cast<Complex>().asDiagonal();
  auto field = [&](const ComplexMatrix& y) -> ComplexMatrix {
    const ComplexMatrix gram = y.adjoint() * y;
    const ComplexMatrix dy = d * y;
    return -(dy - y * gram.ldlt().solve(y.adjoint() * dy));
  };
  const double h = t / steps;
  ComplexMatrix y = v.frame();
  for (int s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = field(y);
    const ComplexMatrix k2 = field(y + 0.5 * h * k1);
    const ComplexMatrix k3 = field(y + 0.5 * h * k2);
    const ComplexMatrix k4 = field(y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double drift = (y.adjoint() * y - ComplexMatrix::Identity(y.cols(), y.cols())).norm();
    if (!std::isfinite(drift) || drift > opts.drift_tolerance) {
      throw DivergenceError("RK4 step " + std::to_string(s) + " drifted off the Grassmannian (|Y*Y - I| = " +
                            std::to_string(drift) + "); reduce the step size");
    }
    y = detail::orthonormalize(y);
  }
  return GrassmannPoint(y);
}

enum class LimitDirection { down, up };

struct LimitOptions {
  /// Singular values above this count as rank; the band (zero_floor, tol] is ambiguous.
  double tol = 1e-9;
  double zero_floor = 1e-12;
};

namespace detail {

/// Numerical rank of the rows [r0, r1) of an orthonormal frame.  Singular
/// values of such a block lie in [0, 1], so thresholds are relative.
inline int block_rank(const ComplexMatrix& q, Eigen::Index r0, Eigen::Index r1, const LimitOptions& opts) {
  if (r1 <= r0 || q.cols() == 0) return 0;
  const ComplexMatrix block = q.middleRows(r0, r1 - r0);
  Eigen::JacobiSVD<ComplexMatrix> svd(block);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    if (s > opts.tol) {
      ++rank;
    } else if (s > opts.zero_floor) {
      throw AmbiguousCellError("pivot magnitude " + std::to_string(s) + " in rows " + std::to_string(r0 + 1) +
                                   ".." + std::to_string(r1) + " is below tolerance " + std::to_string(opts.tol) +
                                   "; the point is numerically on a cell boundary",
                               s);
    }
  }
  return rank;
}

}  // namespace detail

/// Schubert symbol of the cell containing V.
///
/// down: V in S_u, u = lim_{t->+inf} of the flow.  The symbol is the set of
///   jumps of i -> dim(V cap C^i) = k - rank(rows i+1..n), i.e. the lowest
///   pivot rows of the reduced column echelon form.
/// up: V in U_u, u = lim_{t->-inf}.  Jumps of i -> rank(rows 1..i), i.e. the
///   topmost pivot rows of the mirrored echelon form.
///
/// Requires a strict spectrum: with ties the limits are critical manifolds,
/// see limit_generalized_symbol.
inline SchubertSymbol limit_symbol(const GrassmannPoint& v, const HeightSpectrum& a, LimitDirection direction,
                                   const LimitOptions& opts = {}) {
  check_sizes(v, a);
  if (!a.is_strict()) {
    throw DomainError(
        "limit_symbol needs a strictly decreasing spectrum; with repeated eigenvalues the flow limits are "
        "critical manifolds (Morse-Bott mode), use the generalized-symbol limit instead");
  }
  const auto& q = v.frame();
  const int n = v.n();
  std::vector<int> u;
  if (direction == LimitDirection::down) {
    int prev = 0;  // dim V cap C^0
    for (int i = 1; i <= n; ++i) {
      const int dim = v.k() - detail::block_rank(q, i, n, opts);
      if (dim == prev + 1) {
        u.push_back(i);
      } else if (dim != prev) {
        throw AmbiguousCellError("inconsistent flag dimensions at row " + std::to_string(i), 0.0);
      }
      prev = dim;
    }
  } else {
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
      const int r = detail::block_rank(q, 0, i, opts);
      if (r == prev + 1) {
        u.push_back(i);
      } else if (r != prev) {
        throw AmbiguousCellError("inconsistent flag dimensions at row " + std::to_string(i), 0.0);
      }
      prev = r;
    }
  }
  if (static_cast<int>(u.size()) != v.k()) throw AmbiguousCellError("pivot count does not match k", 0.0);
  return SchubertSymbol(v.k(), n, u);
}

/// Morse-Bott mode: the critical manifold reached by the flow, as counts
/// c_j of the block decomposition given by the ties in a.  For down,
/// w_j = dim V cap (E_1 + ... + E_j) and c_j = w_j - w_{j-1}; for up, c_j is
/// the rank gained by the rows of block j on top of the rows above it.
inline GeneralizedSchubertSymbol limit_generalized_symbol(const GrassmannPoint& v, const HeightSpectrum& a,
                                                          LimitDirection direction, const LimitOptions& opts = {}) {
  check_sizes(v, a);
  const auto blocks = a.partial_flag().multiplicities();
  const auto& q = v.frame();
  const int n = v.n();
  std::vector<int> counts(blocks.size(), 0);
  int end = 0;
  int prev = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    end += blocks[j];
    // down: w_j = dim V cap (E_1 + ... + E_j); up: rank of the rows through block j
    const int w = direction == LimitDirection::down ? v.k() - detail::block_rank(q, end, n, opts)
                                                    : detail::block_rank(q, 0, end, opts);
    if (w < prev) throw AmbiguousCellError("inconsistent partial-flag dimensions", 0.0);
    counts[j] = w - prev;
    prev = w;
  }
  return GeneralizedSchubertSymbol(blocks, counts);
}

namespace detail {
/// Determinant of the k x k submatrix on the given 1-based rows.
inline Complex minor(const ComplexMatrix& m, const std::vector<int>& rows) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  if (k == 0) return Complex(1.0);
  ComplexMatrix sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r) sub.row(r) = m.row(rows[static_cast<std::size_t>(r)] - 1);
  return sub.determinant();
}
}  // namespace detail

/// Maximal minors of a frame, ordered like enumerate_symbols(k, n).
inline ComplexVector plucker_embed(const ComplexMatrix& m) {
  const auto symbols = enumerate_symbols(static_cast<int>(m.cols()), static_cast<int>(m.rows()));
  ComplexVector p(static_cast<Eigen::Index>(symbols.size()));
  for (std::size_t i = 0; i < symbols.size(); ++i) p(static_cast<Eigen::Index>(i)) = detail::minor(m, symbols[i].entries());
  return p;
}

/// Plucker coordinates of the frame as given (not the orthonormalised one).
inline ComplexVector plucker_embed(const GrassmannPoint& v) { return plucker_embed(v.matrix()); }

/// a_{u_1} + ... + a_{u_k} for each symbol, lexicographic order.  These are
/// the weights of the induced height function on CP^N.
inline std::vector<double> plucker_weights(const HeightSpectrum& a, int k) {
  std::vector<double> w;
  for (const auto& u : enumerate_symbols(k, a.n())) {
    double s = 0.0;
    for (int x : u.entries()) s += a[static_cast<std::size_t>(x - 1)];
    w.push_back(s);
  }
  return w;
}

/// Distance between the lines C p and C q: || p/|p| - e^{i theta} q/|q| ||
/// minimised over the phase.
inline double projective_distance(const ComplexVector& p, const ComplexVector& q) {
  const double np = p.norm();
  const double nq = q.norm();
  if (!(np > 0.0) || !(nq > 0.0)) throw DomainError("projective distance of a zero vector");
  const ComplexVector ph = p / np;
  const ComplexVector qh = q / nq;
  const Complex inner = qh.dot(ph);  // conj(qh) . ph
  const Complex phase = std::abs(inner) > 0.0 ? inner / std::abs(inner) : Complex(1.0);
  return (ph - phase * qh).norm();
}

}  // namespace morsegrass
