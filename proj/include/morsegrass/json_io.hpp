#pragma once

// JSON encodings shared by the command line tool and tests.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "morsegrass/betti.hpp"
#include "morsegrass/bigint.hpp"
#include "morsegrass/cohomology.hpp"
#include "morsegrass/errors.hpp"
#include "morsegrass/field_theory.hpp"
#include "morsegrass/flow.hpp"
#include "morsegrass/moment_polytope.hpp"
#include "morsegrass/polynomial.hpp"
#include "morsegrass/schubert.hpp"
#include "morsegrass/witten.hpp"

namespace morsegrass::json_io {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits stay numbers; larger ones become decimal strings.
inline Json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

inline BigInt parse_big(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

inline Json polynomial(const IntPolynomial& p) { return Json{{"coeffs", p.coeffs()}, {"text", p.to_string()}}; }

inline IntPolynomial parse_polynomial(const Json& j) {
  try {
    return IntPolynomial(j.at("coeffs").get<std::vector<IntPolynomial::Coeff>>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Symbols: {"k": 2, "n": 4, "symbol": [2, 4]}; generalized symbols as
// {"blocks": [...], "counts": [...]}.

inline Json symbol(const SchubertSymbol& u) { return Json{{"k", u.k()}, {"n", u.n()}, {"symbol", u.entries()}}; }

inline SchubertSymbol parse_symbol_json(const Json& j) {
  try {
    return SchubertSymbol(j.at("k").get<int>(), j.at("n").get<int>(), j.at("symbol").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed symbol JSON: ") + e.what());
  }
}

inline Json generalized_symbol(const GeneralizedSchubertSymbol& c) { return Json{{"blocks", c.blocks()}, {"counts", c.counts()}}; }

inline GeneralizedSchubertSymbol parse_generalized_symbol(const Json& j) {
  try {
    return GeneralizedSchubertSymbol(j.at("blocks").get<std::vector<int>>(), j.at("counts").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed generalized symbol JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Complex matrices: nested rows of [re, im] pairs; bare numbers are real.

inline Json matrix(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

inline ComplexMatrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("matrix must be a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ValidationError("matrix rows must be nonempty arrays");
  ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ValidationError("row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& x = j[r][c];
      Complex z;
      if (x.is_number()) {
        z = Complex(x.get<double>(), 0.0);
      } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
        z = Complex(x[0].get<double>(), x[1].get<double>());
      } else {
        throw ValidationError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not a number or [re,im] pair");
      }
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError("matrix entries must be finite");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Witten complexes

inline Json integer_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(big(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json complex(const WittenComplex& c) {
  Json gens = Json::object();
  Json bounds = Json::object();
  for (int i = c.min_degree(); i <= c.max_degree(); ++i) gens[std::to_string(i)] = c.generators(i);
  for (int i = c.min_degree() + 1; i <= c.max_degree(); ++i) bounds[std::to_string(i)] = integer_matrix(c.boundary(i));
  return Json{{"degrees", {c.min_degree(), c.max_degree()}}, {"generators", gens}, {"boundaries", bounds}};
}

inline WittenComplex parse_complex_json(const Json& j) {
  try {
    const int lo = j.at("degrees").at(0).get<int>();
    const int hi = j.at("degrees").at(1).get<int>();
    WittenComplex c(lo, hi);
    if (j.contains("generators"))
      for (const auto& [key, names] : j.at("generators").items()) c.set_generators(std::stoi(key), names.get<std::vector<std::string>>());
    if (j.contains("boundaries")) {
      for (const auto& [key, rows] : j.at("boundaries").items()) {
        const int deg = std::stoi(key);
        IntMatrix m(c.rank(deg - 1), c.rank(deg));
        if (rows.size() != m.rows()) throw ValidationError("boundary " + key + " has the wrong row count");
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (rows[r].size() != m.cols()) throw ValidationError("boundary " + key + " has the wrong column count");
          for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = parse_big(rows[r][col]);
        }
        c.set_boundary(deg, std::move(m));
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed complex JSON: ") + e.what());
  }
}

inline Json homology(const HomologyResult& h) {
  Json groups = Json::array();
  for (int i = h.min_degree; i <= h.max_degree(); ++i) {
    const auto& g = h.at(i);
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(big(t));
    groups.push_back(Json{{"degree", i}, {"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}});
  }
  return Json{{"mode", coefficients_name(h.mode)}, {"groups", groups}};
}

// ---------------------------------------------------------------------------
// Cohomology classes: {"(1,3)": 1, ...}

inline Json cohomology_class(const CohomologyClass& z) {
  Json j = Json::object();
  for (auto it = z.terms().rbegin(); it != z.terms().rend(); ++it) j[it->first.to_string()] = big(it->second);
  return j;
}

inline CohomologyClass parse_cohomology_class(int k, int n, const Json& j) {
  if (!j.is_object()) throw ValidationError("cohomology class must be a JSON object");
  CohomologyClass z(k, n);
  for (const auto& [key, value] : j.items()) z.add(parse_symbol(k, n, key), parse_big(value));
  return z;
}

// ---------------------------------------------------------------------------
// Flow graphs
//
// {"vertices": 1,
//  "edges": [{"kind": "incoming", "to": 0}, {"kind": "internal", "from": 0, "to": 1},
//            {"kind": "outgoing", "from": 0}],
//  "labels": {"dimM": 8, "incoming": [4], "outgoing": [2]}}

inline Json graph(const FlowGraph& g, const LabeledEnds* ends = nullptr) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json x{{"kind", edge_kind_name(e.kind)}};
    if (e.kind != EdgeKind::incoming) x["from"] = e.from;
    if (e.kind != EdgeKind::outgoing) x["to"] = e.to;
    edges.push_back(x);
  }
  Json j{{"vertices", g.vertices()}, {"edges", edges}};
  if (ends) j["labels"] = Json{{"dimM", ends->dim_m}, {"incoming", ends->incoming}, {"outgoing", ends->outgoing}};
  return j;
}

inline EdgeKind parse_edge_kind(const std::string& s) {
  if (s == "incoming") return EdgeKind::incoming;
  if (s == "internal") return EdgeKind::internal;
  if (s == "outgoing") return EdgeKind::outgoing;
  throw ValidationError("unknown edge kind '" + s + "'");
}

inline FlowGraph parse_graph(const Json& j) {
  try {
    std::vector<GraphEdge> edges;
    for (const auto& e : j.at("edges")) {
      GraphEdge g;
      g.kind = parse_edge_kind(e.at("kind").get<std::string>());
      if (g.kind != EdgeKind::incoming) g.from = e.at("from").get<int>();
      if (g.kind != EdgeKind::outgoing) g.to = e.at("to").get<int>();
      edges.push_back(g);
    }
    return FlowGraph(j.at("vertices").get<int>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed graph JSON: ") + e.what());
  }
}

inline LabeledEnds parse_labels(const Json& j) {
  try {
    return LabeledEnds{j.at("dimM").get<int>(), j.value("incoming", std::vector<int>{}), j.value("outgoing", std::vector<int>{})};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed labels JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Polytopes

inline Json polytope(const VertexPolytope& p) {
  Json symbols = Json::array();
  for (const auto& u : p.symbols()) symbols.push_back(u.to_string());
  return Json{{"k", p.k()}, {"n", p.n()}, {"vertices", p.vertices()}, {"symbols", symbols}};
}

inline Json moment_point(const MomentPoint& x) { return x.coords; }

}  // namespace morsegrass::json_io
