// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "morsegrass/morsegrass.hpp"

using namespace morsegrass;

namespace {

constexpr double kFlowTolerance = 1e-6;
constexpr double kRk4RatioLow = 12.0;
constexpr double kRk4RatioHigh = 20.0;
constexpr double kPluckerTolerance = 1e-9;
constexpr double kHeightTolerance = 1e-12;
constexpr double kPoincareSeconds = 5.0;
constexpr double kMorseBottSeconds = 10.0;
constexpr double kCohomologySeconds = 30.0;
constexpr int kSamples = 100;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

SchubertSymbol sym(int k, int n, std::vector<int> e) { return SchubertSymbol(k, n, std::move(e)); }
CohomologyClass zz(int k, int n, std::vector<int> e) { return CohomologyClass::basis(sym(k, n, std::move(e))); }

HeightSpectrum descending(int n) {
  std::vector<double> a;
  for (int i = n - 1; i >= 0; --i) a.push_back(i);
  return HeightSpectrum(a);
}

GrassmannPoint random_point(int k, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = Complex(g(rng), g(rng));
  return GrassmannPoint(m);
}

GrassmannPoint echelon_point(const SchubertSymbol& u, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(u.n(), u.k());
  for (int j = 0; j < u.k(); ++j) {
    const int pivot = u[static_cast<std::size_t>(j)];
    m(pivot - 1, j) = 1.0;
    for (int r = 1; r < pivot; ++r)
      if (!u.contains(r)) m(r - 1, j) = Complex(g(rng), g(rng));
  }
  return GrassmannPoint(m);
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

Outcome poincare_agreement() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto c = morse_polynomial_by_cells(k, n);
      o.require(c == poincare_recurrence(k, n) && c == poincare_closed(k, n),
                "methods disagree on Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
    }
  o.require(poincare_closed(2, 4) == IntPolynomial{1, 0, 1, 0, 2, 0, 1, 0, 1}, "Gr(2,4) polynomial");
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(elapsed < kPoincareSeconds, "took " + seconds(elapsed));
  if (o.pass) o.detail = "k <= n <= 9 in " + seconds(elapsed);
  return o;
}

Outcome cell_table() {
  Outcome o;
  const std::vector<std::string> names{"(3,4)", "(2,4)", "(2,3)", "(1,4)", "(1,3)", "(1,2)"};
  const std::vector<int> dims{4, 3, 2, 2, 1, 0};
  const std::vector<std::vector<int>> conditions{{0, 0, 1, 2}, {0, 1, 1, 2}, {0, 1, 2, 2}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2}};
  auto symbols = enumerate_symbols(2, 4);
  o.require(symbols.size() == 6, "symbol count");
  std::reverse(symbols.begin(), symbols.end());
  for (std::size_t i = 0; i < symbols.size() && i < 6; ++i) {
    o.require(symbols[i].to_string() == names[i], "order at " + names[i]);
    o.require(cell_dimension(symbols[i]) == dims[i], "dimension of " + names[i]);
    o.require(schubert_conditions(symbols[i]) == conditions[i], "conditions of " + names[i]);
  }
  if (o.pass) o.detail = "6 cells, dimensions 4,3,2,2,1,0";
  return o;
}

Outcome morse_bott_fixtures() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto cs = enumerate_generalized_symbols({2, 3, 2}, 1);
  std::vector<int> idx;
  for (const auto& c : cs) idx.push_back(generalized_index(c));
  o.require(idx == std::vector<int>{0, 4, 10}, "indices of the three critical manifolds");
  const IntPolynomial expected = IntPolynomial{1, 0, 1} + IntPolynomial{1, 0, 1, 0, 1}.shifted(4) + IntPolynomial{1, 0, 1}.shifted(10);
  o.require(mb_polynomial(cs) == expected, "MB(t) for blocks (2,3,2)");
  o.require(mb_polynomial(cs) == poincare_closed(1, 7), "MB(t) != P(t) for CP^6");
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
      if (left == 0) {
        comps.push_back(cur);
        return;
      }
      for (int p = 1; p <= left; ++p) {
        cur.push_back(p);
        rec(left - p);
        cur.pop_back();
      }
    };
    rec(n);
    for (const auto& blocks : comps)
      for (int k = 0; k <= n; ++k)
        for (const auto& c : enumerate_generalized_symbols(blocks, k)) {
          int best = -1;
          for (const auto& u : enumerate_symbols(k, n))
            if (coarsen(u, blocks) == c) {
              const int i = critical_index(u, IndexConvention::for_minus_f);
              if (best < 0 || i < best) best = i;
            }
          o.require(generalized_index(c) == best, "index of " + c.to_string());
        }
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(elapsed < kMorseBottSeconds, "took " + seconds(elapsed));
  if (o.pass) o.detail = "indices 0,4,10; refinement oracle n <= 7 in " + seconds(elapsed);
  return o;
}

Outcome flow_validation() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> time(0.0, 3.0);
  double worst = 0.0;
  for (int n : {4, 5}) {
    const auto a = descending(n);
    for (int s = 0; s < kSamples; ++s) {
      const auto v = random_point(2, n, rng);
      const double t = time(rng);
      worst = std::max(worst, projector_distance(flow(v, a, t), integrate_flow(v, a, t, 400)));
    }
  }
  o.require(worst < kFlowTolerance, "closed form vs RK4 gap " + std::to_string(worst));
  const auto a = descending(4);
  const auto v = random_point(2, 4, rng);
  const auto exact = flow(v, a, 1.0);
  const double e1 = projector_distance(integrate_flow(v, a, 1.0, 10), exact);
  const double e2 = projector_distance(integrate_flow(v, a, 1.0, 20), exact);
  const double ratio = e1 / e2;
  o.require(ratio > kRk4RatioLow && ratio < kRk4RatioHigh, "step-halving ratio " + std::to_string(ratio));
  if (o.pass) {
    std::ostringstream os;
    os << "max gap " << worst << ", ratio " << ratio;
    o.detail = os.str();
  }
  return o;
}

Outcome plucker_equivariance() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(2, 5);
  std::uniform_real_distribution<double> time(-2.0, 2.0), gap(0.5, 1.5);
  double worst = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    const int n = size(rng);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    std::vector<double> vals(static_cast<std::size_t>(n));
    double x = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      vals[static_cast<std::size_t>(i)] = x;
      x += gap(rng);
    }
    const HeightSpectrum a(vals);
    const auto w = plucker_weights(a, k);
    const auto v = random_point(k, n, rng);
    const double t = time(rng);
    ComplexVector acted = plucker_embed(v);
    for (Eigen::Index i = 0; i < acted.size(); ++i) acted(i) *= std::exp(-t * w[static_cast<std::size_t>(i)]);
    worst = std::max(worst, projective_distance(plucker_embed(flow(v, a, t)), acted));
  }
  o.require(worst < kPluckerTolerance, "projective distance " + std::to_string(worst));
  if (o.pass) {
    std::ostringstream os;
    os << "max distance " << worst;
    o.detail = os.str();
  }
  return o;
}

Outcome limit_classification() {
  Outcome o;
  std::mt19937_64 rng(99);
  const auto a = descending(4);
  for (int s = 0; s < kSamples; ++s) {
    const auto v = random_point(2, 4, rng);
    o.require(limit_symbol(v, a, LimitDirection::down) == sym(2, 4, {3, 4}), "generic down limit");
    o.require(limit_symbol(v, a, LimitDirection::up) == sym(2, 4, {1, 2}), "generic up limit");
  }
  for (const auto& u : enumerate_symbols(2, 4))
    for (int s = 0; s < 10; ++s) o.require(limit_symbol(echelon_point(u, rng), a, LimitDirection::down) == u, "cell " + u.to_string());
  if (o.pass) o.detail = "100 generic points, 6 echelon cells";
  return o;
}

Outcome moment_polytope() {
  Outcome o;
  o.require(face_counts(grassmannian_polytope(2, 4)) == std::vector<std::int64_t>{6, 12, 8, 1}, "octahedron f-vector");
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& u : enumerate_symbols(k, n)) {
        const auto x = moment_map(GrassmannPoint::coordinate(u));
        const auto e = VertexPolytope::indicator(u);
        for (int i = 0; i < n; ++i) o.require(x[static_cast<std::size_t>(i)] == e[static_cast<std::size_t>(i)], "mu(V_u) for " + u.to_string());
      }
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    const int n = 2 + s % 5;
    const int k = 1 + s % (n - 1);
    const auto a = descending(n);
    const auto v = random_point(k, n, rng);
    const auto mu = moment_map(v);
    double pairing = 0.0;
    for (int i = 0; i < n; ++i) pairing += a[static_cast<std::size_t>(i)] * mu[static_cast<std::size_t>(i)];
    worst = std::max(worst, std::abs(pairing - height_value(v, a)));
    const auto p = grassmannian_polytope(k, n);
    for (const auto& x : flow_moment_trace(v, a, {0.0, 0.5, 1.0, 2.0, 5.0, 10.0})) o.require(membership(x, p), "trace left the polytope");
  }
  o.require(worst < kHeightTolerance, "<a, mu> vs f gap " + std::to_string(worst));
  if (o.pass) o.detail = "f = (6,12,8,1); traces inside";
  return o;
}

Outcome witten_homology() {
  Outcome o;
  auto check_builtin = [&](const WittenComplex& c, const std::string& name) {
    o.require(validate_complex(c), name + " fails dd = 0");
    const auto h = homology(c, Coefficients::integers);
    o.require(morse_inequalities(morse_polynomial(c), h.poincare()).holds, name + " Morse inequalities");
    return h;
  };
  for (int m = 1; m <= 6; ++m) {
    const auto h = check_builtin(circle_complex(m), "circle " + std::to_string(m));
    o.require(h.groups.size() == 2 && h.at(0).to_string() == "Z" && h.at(1).to_string() == "Z", "circle homology");
  }
  for (int n = 1; n <= 8; ++n) {
    const auto h = check_builtin(rp_complex(n), "rp " + std::to_string(n));
    o.require(h.at(0).to_string() == "Z", "H_0 of RP^" + std::to_string(n));
    for (int i = 1; i < n; ++i) o.require(h.at(i).to_string() == (i % 2 ? "Z/2" : "0"), "H_" + std::to_string(i) + " of RP^" + std::to_string(n));
    o.require(h.at(n).to_string() == (n % 2 ? "Z" : "0"), "top homology of RP^" + std::to_string(n));
    const auto h2 = homology(rp_complex(n), Coefficients::mod2);
    for (int i = 0; i <= n; ++i) o.require(h2.at(i).free_rank == 1, "mod 2 rank of RP^" + std::to_string(n));
  }
  check_builtin(torus_complex(), "torus");
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) check_builtin(grassmannian_complex(k, n), "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
  if (o.pass) o.detail = "circle m=1..6, RP^1..RP^8, torus, Grassmannians";
  return o;
}

Outcome cohomology_ring() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  o.require(cup_product(zz(2, 4, {2, 4}), zz(2, 4, {2, 4})) == zz(2, 4, {2, 3}) + zz(2, 4, {1, 4}), "z(2,4)^2");
  o.require(cup_product(zz(2, 4, {1, 4}), zz(2, 4, {2, 4})) == zz(2, 4, {1, 3}), "z(1,4)z(2,4)");
  o.require(cup_product(zz(2, 4, {2, 3}), zz(2, 4, {2, 4})) == zz(2, 4, {1, 3}), "z(2,3)z(2,4)");
  const std::vector<int> duality{duality_pairing(sym(2, 4, {2, 4}), sym(2, 4, {1, 3})),
                                 duality_pairing(sym(2, 4, {1, 4}), sym(2, 4, {1, 4})),
                                 duality_pairing(sym(2, 4, {2, 3}), sym(2, 4, {2, 3})),
                                 duality_pairing(sym(2, 4, {1, 4}), sym(2, 4, {2, 3}))};
  o.require(duality == std::vector<int>{1, 1, 1, 0}, "duality values");
  o.require(triple_product(sym(2, 4, {1, 4}), sym(2, 4, {2, 4}), sym(2, 4, {2, 4})) == 1, "triple z(1,4)z(2,4)z(2,4)");
  o.require(triple_product(sym(2, 4, {2, 3}), sym(2, 4, {2, 4}), sym(2, 4, {2, 4})) == 1, "triple z(2,3)z(2,4)z(2,4)");
  int pairs = 0;
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k < n; ++k) {
      if (k * (n - k) > 9) continue;
      for (const auto& u : enumerate_symbols(k, n))
        for (const auto& v : enumerate_symbols(k, n)) {
          ++pairs;
          o.require(basis_product(u, v) == cup_product_by_pieri(CohomologyClass::basis(u), CohomologyClass::basis(v)),
                    "LR vs Pieri at " + u.to_string() + " * " + v.to_string());
        }
    }
  o.require(chern_presentation_check(1, 2) && chern_presentation_check(2, 4) && chern_presentation_check(2, 5), "Chern presentation");
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(elapsed < kCohomologySeconds, "took " + seconds(elapsed));
  if (o.pass) o.detail = std::to_string(pairs) + " basis pairs in " + seconds(elapsed);
  return o;
}

Outcome moduli_dimensions() {
  Outcome o;
  for (int dim_m = 0; dim_m <= 8; ++dim_m)
    for (int a = 0; a <= dim_m; ++a)
      for (int b = 0; b <= dim_m; ++b) {
        o.require(moduli_dimension(interval_graph(), {dim_m, {a}, {b}}) == a - b, "interval");
        for (int c = 0; c <= dim_m; ++c) {
          o.require(moduli_dimension(star_graph(2, 1), {dim_m, {a, b}, {c}}) == a + b - c - dim_m, "two in, one out");
          const bool zero = moduli_dimension(y_graph(), {dim_m, {a, b, c}, {}}) == 0;
          o.require(zero == ((dim_m - a) + (dim_m - b) + (dim_m - c) == dim_m), "Y-graph zero condition");
        }
      }
  int admissible = 0;
  const auto basis = enumerate_symbols(2, 4);
  for (const auto& u : basis)
    for (const auto& v : basis)
      for (const auto& w : basis) {
        if (degree(u) + degree(v) + degree(w) != 8) continue;
        ++admissible;
        o.require(cup_product_instance(u, v, w) == triple_product(u, v, w), "Y-graph count at " + u.to_string());
      }
  if (o.pass) o.detail = std::to_string(admissible) + " admissible Gr(2,4) triples";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"poincare three-way agreement", poincare_agreement},
      {"Gr(2,4) cell table", cell_table},
      {"Morse-Bott fixtures", morse_bott_fixtures},
      {"flow vs RK4", flow_validation},
      {"Plucker equivariance", plucker_equivariance},
      {"limit classification", limit_classification},
      {"moment polytope", moment_polytope},
      {"Witten homology", witten_homology},
      {"cohomology ring", cohomology_ring},
      {"moduli dimensions", moduli_dimensions},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  (" << o.detail << ")\n";
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << '\n';
  return failures ? 1 : 0;
}
