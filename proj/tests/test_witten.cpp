#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace morsegrass;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(MORSEGRASS_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HomologyGroup z(int rank, std::vector<long long> torsion = {}) {
  HomologyGroup g;
  g.free_rank = rank;
  for (auto t : torsion) g.torsion.push_back(BigInt(t));
  return g;
}

std::vector<HomologyGroup> groups(const HomologyResult& h) { return h.groups; }

std::vector<WittenComplex> builtins() {
  std::vector<WittenComplex> out;
  for (int m = 1; m <= 6; ++m) out.push_back(circle_complex(m));
  for (int n = 1; n <= 8; ++n) out.push_back(rp_complex(n));
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) out.push_back(grassmannian_complex(k, n));
  out.push_back(torus_complex());
  return out;
}

int two_torsion(const HomologyResult& h, int i) {
  if (i < h.min_degree || i > h.max_degree()) return 0;
  int c = 0;
  for (const auto& t : h.at(i).torsion) c += (t % 2 == 0);
  return c;
}

}  // namespace

TEST(Smith, SmallExamples) {
  const IntMatrix two(1, 1, {{2}});
  EXPECT_EQ(smith_normal_form(two).d, two);
  const auto id = IntMatrix::identity(3);
  EXPECT_EQ(smith_normal_form(id).d, id);
  const auto d1 = circle_complex(3).boundary(1);
  const auto r = smith_normal_form(d1);
  EXPECT_EQ(r.diagonal, (std::vector<BigInt>{1, 1}));
  EXPECT_EQ(r.d, IntMatrix(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
}

TEST(Smith, CircleBoundaryColumns) {
  // columns D, E, F: A - B, B - C, -A + C
  EXPECT_EQ(circle_complex(3).boundary(1), IntMatrix(3, 3, {{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}}));
  EXPECT_TRUE(circle_complex(1).boundary(1).is_zero());
}

TEST(Smith, FactorizationOnRandomMatrices) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> size(1, 8), entry(-10, 10);
  for (int s = 0; s < 200; ++s) {
    const std::size_t rows = static_cast<std::size_t>(size(rng)), cols = static_cast<std::size_t>(size(rng));
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    const auto r = smith_normal_form(m);
    ASSERT_EQ(r.u * m * r.v, r.d);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) ASSERT_EQ(r.d(i, j), 0);
    for (std::size_t i = 0; i < r.diagonal.size(); ++i) {
      ASSERT_GT(r.diagonal[i], 0);
      if (i > 0) ASSERT_EQ(r.diagonal[i] % r.diagonal[i - 1], 0);
    }
    // unimodularity: U and V are invertible over Z, checked through their own SNF
    for (const auto* w : {&r.u, &r.v}) {
      const auto s2 = smith_normal_form(*w);
      ASSERT_EQ(s2.rank(), w->rows());
      for (const auto& d : s2.diagonal) ASSERT_EQ(d, 1);
    }
  }
}

TEST(Smith, RankModTwo) {
  EXPECT_EQ(rank_mod2(IntMatrix(1, 1, {{2}})), 0u);
  EXPECT_EQ(rank_mod2(IntMatrix(2, 2, {{1, 1}, {1, 1}})), 1u);
  EXPECT_EQ(rank_mod2(circle_complex(3).boundary(1)), 2u);
}

TEST(Witten, ValidateComplex) {
  EXPECT_TRUE(validate_complex(circle_complex(3)));
  EXPECT_TRUE(validate_complex(rp_complex(5)));
  WittenComplex c(0, 2);
  c.set_generators(0, {"a"});
  c.set_generators(1, {"b"});
  c.set_generators(2, {"c"});
  c.set_boundary(1, IntMatrix(1, 1, {{1}}));
  c.set_boundary(2, IntMatrix(1, 1, {{1}}));
  int bad = 0;
  EXPECT_FALSE(validate_complex(c, &bad));
  EXPECT_EQ(bad, 2);
  EXPECT_THROW(homology(c, Coefficients::integers), ValidationError);
  EXPECT_THROW(c.set_boundary(1, IntMatrix(2, 1)), DomainError);
}

TEST(Witten, CircleHomologyIsIndependentOfTheNumberOfPoints) {
  for (int m = 1; m <= 6; ++m) {
    const auto h = homology(circle_complex(m), Coefficients::integers);
    EXPECT_EQ(groups(h), (std::vector<HomologyGroup>{z(1), z(1)})) << m;
  }
  EXPECT_THROW(circle_complex(0), DomainError);
}

TEST(Witten, ProjectiveSpaceHomology) {
  EXPECT_EQ(groups(homology(rp_complex(2), Coefficients::integers)), (std::vector<HomologyGroup>{z(1), z(0, {2}), z(0)}));
  EXPECT_EQ(groups(homology(rp_complex(3), Coefficients::integers)),
            (std::vector<HomologyGroup>{z(1), z(0, {2}), z(0), z(1)}));
  for (int n = 1; n <= 8; ++n) {
    const auto h = homology(rp_complex(n), Coefficients::integers);
    EXPECT_EQ(h.at(0), z(1));
    for (int i = 1; i < n; ++i) EXPECT_EQ(h.at(i), i % 2 ? z(0, {2}) : z(0)) << n << " " << i;
    EXPECT_EQ(h.at(n), n % 2 ? z(1) : z(0));
    const auto h2 = homology(rp_complex(n), Coefficients::mod2);
    for (int i = 0; i <= n; ++i) EXPECT_EQ(h2.at(i).free_rank, 1);
  }
}

TEST(Witten, TorusAndGrassmannians) {
  const auto t = torus_complex();
  EXPECT_TRUE(validate_complex(t));
  EXPECT_EQ(homology(t, Coefficients::integers).poincare(), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(morse_polynomial(t), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(homology(grassmannian_complex(2, 4), Coefficients::integers).poincare(), (IntPolynomial{1, 0, 1, 0, 2, 0, 1, 0, 1}));
  const auto s2 = grassmannian_complex(1, 2);
  EXPECT_EQ(homology(s2, Coefficients::integers).poincare(), (IntPolynomial{1, 0, 1}));
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(euler_characteristic(homology(grassmannian_complex(k, n), Coefficients::integers).poincare()),
                euler_characteristic(poincare_closed(k, n)));
}

TEST(Witten, PropertiesOfEveryBuiltin) {
  for (const auto& c : builtins()) {
    ASSERT_TRUE(validate_complex(c));
    const auto hz = homology(c, Coefficients::integers);
    const auto h2 = homology(c, Coefficients::mod2);
    for (int i = c.min_degree(); i <= c.max_degree(); ++i)
      EXPECT_EQ(h2.at(i).free_rank, hz.at(i).free_rank + two_torsion(hz, i) + two_torsion(hz, i - 1));
    const auto m = morse_polynomial(c);
    EXPECT_EQ(euler_characteristic(m), euler_characteristic(hz.poincare()));
    EXPECT_TRUE(morse_inequalities(m, hz.poincare()).holds);
    EXPECT_TRUE(morse_inequalities(m, h2.poincare()).holds);
  }
}

TEST(Witten, ZeroBoundariesGiveGeneratorCounts) {
  WittenComplex c(0, 3);
  c.set_generators(0, {"a"});
  c.set_generators(1, {"b", "c"});
  c.set_generators(3, {"d", "e", "f"});
  const auto h = homology(c, Coefficients::integers);
  EXPECT_EQ(h.poincare(), (IntPolynomial{1, 2, 0, 3}));
}

TEST(Witten, HomologyGroupText) {
  EXPECT_EQ(z(2, {2}).to_string(), "Z^2 + Z/2");
  EXPECT_EQ(z(0).to_string(), "0");
  EXPECT_EQ(z(1).to_string(), "Z");
}

TEST(ChainFiles, RoundTrip) {
  for (const auto& c : builtins()) EXPECT_EQ(load_complex(serialize_complex(c)), c);
}

TEST(ChainFiles, SampleFiles) {
  EXPECT_EQ(load_complex(read_data("circle3.chain")), circle_complex(3));
  const auto h = homology(load_complex(read_data("rp4.chain")), Coefficients::integers);
  EXPECT_EQ(groups(h), (std::vector<HomologyGroup>{z(1), z(0, {2}), z(0), z(0, {2}), z(0)}));
  try {
    load_complex(read_data("bad_width.chain"));
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 0);
  }
}

TEST(ChainFiles, Diagnostics) {
  EXPECT_THROW(parse_complex("gens 0: a\n"), ParseError);
  EXPECT_THROW(parse_complex("degrees: 0 1\ngens 0: a\ngens 0: b\n"), ParseError);
  EXPECT_THROW(parse_complex("degrees: 0 1\ngens 5: a\n"), ParseError);
  EXPECT_THROW(parse_complex("degrees: 0 1\ngens 0: a\ngens 1: b\nd 1:\nx\n"), ParseError);
  EXPECT_THROW(parse_complex("degrees: 0 1\ngens 0: a\ngens 1: b a\n"), ParseError);
  EXPECT_THROW(parse_complex("degrees: 0 1\ngens 0: a\ngens 1: b c\nd 1:\n1\n"), ParseError);
  try {
    parse_complex("degrees: 0 1\ngens 0: a\n\ngens 1: b\nd 1:\n1 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
  EXPECT_THROW(load_complex("degrees: 0 2\ngens 0: a\ngens 1: b\ngens 2: c\nd 1:\n1\nd 2:\n1\n"), ValidationError);
  const auto lenient = load_complex("# comment\ndegrees: 0 1\ngens 0: a b  # two minima\ngens 1: c\n");
  EXPECT_TRUE(lenient.boundary(1).is_zero());
}
