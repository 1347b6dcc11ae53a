#pragma once

// Commands behind the morsegrass tool.  Each returns a CommandResult holding a
// JSON payload and a human-readable rendering; errors become results with a
// stable code instead of escaping as exceptions.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "morsegrass/betti.hpp"
#include "morsegrass/cohomology.hpp"
#include "morsegrass/errors.hpp"
#include "morsegrass/field_theory.hpp"
#include "morsegrass/flow.hpp"
#include "morsegrass/json_io.hpp"
#include "morsegrass/moment_polytope.hpp"
#include "morsegrass/schubert.hpp"
#include "morsegrass/witten.hpp"

namespace morsegrass::cli {

using json_io::Json;

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::usage, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

/// 0 ok; 2 bad input of any kind; 3 internal inconsistency; 4 numerical trouble.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::consistency: return 3;
    case ErrorCode::ambiguous_cell:
    case ErrorCode::divergence:
    case ErrorCode::degenerate_input: return 4;
    default: return 2;
  }
}

struct CommandResult {
  bool ok = true;
  Json payload = Json::object();
  std::string text;
  std::string diagnostics;
  ErrorCode code = ErrorCode::usage;

  int exit_code() const { return ok ? 0 : exit_code_for(code); }

  static CommandResult success(Json payload, std::string text) {
    CommandResult r;
    r.payload = std::move(payload);
    r.text = std::move(text);
    return r;
  }
  static CommandResult failure(ErrorCode code, std::string message) {
    CommandResult r;
    r.ok = false;
    r.code = code;
    r.diagnostics = std::move(message);
    r.payload = Json{{"status", "error"}, {"error", error_code_name(code)}, {"message", r.diagnostics}};
    return r;
  }

  /// What the tool prints on stdout.
  std::string render(bool as_json) const {
    if (!ok) return as_json ? payload.dump(2) + "\n" : "";
    if (as_json) return payload.dump(2) + "\n";
    return text;
  }
};

struct GlobalOptions {
  bool json = false;
  double tol = 1e-9;
  bool parallel = false;
};

/// Default tolerance, overridden by MORSEGRASS_TOL when it parses as a positive number.
inline double default_tolerance() {
  if (const char* env = std::getenv("MORSEGRASS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return 1e-9;
}

/// Runs body, turning any exception into a failed result.
inline CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return CommandResult::failure(e.code(), e.what());
  } catch (const std::exception& e) {
    return CommandResult::failure(ErrorCode::usage, e.what());
  }
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Json read_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, "'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse '" + item + "' as a number");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw UsageError("cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_number_list(text)) {
    if (v != static_cast<int>(v)) throw UsageError("expected integers in '" + text + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

inline void require_ambient(int k, int n) {
  if (k < 0 || n < 0 || k > n) {
    throw UsageError("need 0 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
}

/// Echelon pattern of the cell S_u: rows of '1', '*' and '0'.
inline std::vector<std::string> echelon_pattern(const SchubertSymbol& u) {
  std::vector<std::string> rows;
  for (int r = 1; r <= u.n(); ++r) {
    std::string row;
    for (int j = 0; j < u.k(); ++j) {
      if (r == u[static_cast<std::size_t>(j)]) row += '1';
      else if (r < u[static_cast<std::size_t>(j)] && !u.contains(r)) row += '*';
      else row += '0';
    }
    rows.push_back(row);
  }
  return rows;
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string fixed(double x, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

inline GrassmannPoint load_point(const std::string& path) {
  Json j = read_json(path);
  if (j.is_object()) {
    if (!j.contains("matrix")) throw ValidationError("matrix file object needs a \"matrix\" field");
    j = j.at("matrix");
  }
  const ComplexMatrix m = json_io::parse_matrix(j);
  try {
    return GrassmannPoint(m);
  } catch (const DomainError& e) {
    throw DegenerateInputError(std::string("input frame is not of full rank: ") + e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Symbols of Gr(k,n) from the top cell down, with cell data.
inline CommandResult cmd_cells(int k, int n) {
  return guarded([&] {
    detail::require_ambient(k, n);
    auto symbols = enumerate_symbols(k, n);
    Json rows = Json::array();
    std::ostringstream os;
    os << std::left << std::setw(14) << "symbol" << std::setw(7) << "dim_C" << std::setw(10) << "index(f)"
       << std::setw(11) << "index(-f)" << std::setw(2 * n + 4) << "conditions" << "cell" << '\n';
    for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) {
      const auto& u = *it;
      const auto cond = schubert_conditions(u);
      const auto pattern = detail::echelon_pattern(u);
      rows.push_back(Json{{"symbol", u.to_string()},
                          {"dimension", cell_dimension(u)},
                          {"index_f", critical_index(u, IndexConvention::for_f)},
                          {"index_minus_f", critical_index(u, IndexConvention::for_minus_f)},
                          {"conditions", cond},
                          {"pattern", pattern}});
      std::string pat;
      for (std::size_t r = 0; r < pattern.size(); ++r) pat += (r ? " " : "") + pattern[r];
      os << std::left << std::setw(14) << u.to_string() << std::setw(7) << cell_dimension(u) << std::setw(10)
         << critical_index(u, IndexConvention::for_f) << std::setw(11) << critical_index(u, IndexConvention::for_minus_f)
         << std::setw(2 * n + 4) << detail::join(cond) << pat << '\n';
    }
    return CommandResult::success(Json{{"k", k}, {"n", n}, {"cells", rows}}, os.str());
  });
}

inline CommandResult cmd_poincare(int k, int n, const std::string& method) {
  return guarded([&] {
    detail::require_ambient(k, n);
    if (method != "cells" && method != "recurrence" && method != "closed" && method != "all") {
      throw UsageError("method must be cells, recurrence, closed or all");
    }
    Json payload{{"k", k}, {"n", n}, {"method", method}};
    std::ostringstream os;
    if (method == "all") {
      const auto a = morse_polynomial_by_cells(k, n);
      const auto b = poincare_recurrence(k, n);
      const auto c = poincare_closed(k, n);
      if (!(a == b) || !(b == c)) {
        throw ConsistencyError("Poincare polynomials disagree: cells " + a.to_string() + ", recurrence " + b.to_string() +
                               ", closed " + c.to_string());
      }
      payload["polynomial"] = json_io::polynomial(a);
      payload["agreement"] = true;
      os << "P(t) = " << a << "\nagreement=true (cells, recurrence, closed)\n";
    } else {
      const auto p = method == "cells" ? morse_polynomial_by_cells(k, n)
                     : method == "recurrence" ? poincare_recurrence(k, n)
                                              : poincare_closed(k, n);
      payload["polynomial"] = json_io::polynomial(p);
      os << "P(t) = " << p << '\n';
    }
    return CommandResult::success(payload, os.str());
  });
}

/// Evolve the plane spanned by the matrix columns for time t.
inline CommandResult cmd_flow(const std::string& matrix_path, const std::string& spectrum, double t,
                              const GlobalOptions& opts = {}) {
  return guarded([&] {
    const GrassmannPoint v = detail::load_point(matrix_path);
    const HeightSpectrum a(detail::parse_number_list(spectrum));
    check_sizes(v, a);
    if (!std::isfinite(t)) throw UsageError("time must be finite");
    const GrassmannPoint w = flow(v, a, t);
    constexpr int samples = 5;
    std::vector<double> ts;
    for (int s = 0; s < samples; ++s) ts.push_back(t * s / (samples - 1));
    const auto trace = flow_moment_trace(v, a, ts);
    Json trace_json = Json::array();
    bool inside = true;
    for (std::size_t s = 0; s < ts.size(); ++s) {
      const bool in = in_hypersimplex(trace[s], v.k(), std::max(opts.tol, 1e-12) * v.n());
      inside = inside && in;
      trace_json.push_back(Json{{"t", ts[s]}, {"moment", json_io::moment_point(trace[s])}, {"in_polytope", in}});
    }
    Json payload{{"t", t},
                 {"matrix", json_io::matrix(w.frame())},
                 {"height_start", height_value(v, a)},
                 {"height_end", height_value(w, a)},
                 {"moment_trace", trace_json},
                 {"trace_in_polytope", inside}};
    std::ostringstream os;
    os << "flow for t = " << t << "\nframe:\n";
    for (Eigen::Index i = 0; i < w.frame().rows(); ++i) {
      os << " ";
      for (Eigen::Index j = 0; j < w.frame().cols(); ++j) {
        const Complex z = w.frame()(i, j);
        os << "  " << detail::fixed(z.real()) << (z.imag() < 0 ? "-" : "+") << detail::fixed(std::abs(z.imag())) << "i";
      }
      os << '\n';
    }
    os << "height " << detail::fixed(height_value(v, a), 9) << " -> " << detail::fixed(height_value(w, a), 9) << '\n';
    os << "moment trace (" << samples << " samples) " << (inside ? "inside" : "outside") << " the polytope\n";
    return CommandResult::success(payload, os.str());
  });
}

/// Limit of the flow in the given direction; morse_bott switches to block symbols.
inline CommandResult cmd_limit(const std::string& matrix_path, const std::string& spectrum, const std::string& direction,
                               bool morse_bott = false, const GlobalOptions& opts = {}) {
  return guarded([&] {
    if (direction != "down" && direction != "up") throw UsageError("direction must be down or up");
    const GrassmannPoint v = detail::load_point(matrix_path);
    const HeightSpectrum a(detail::parse_number_list(spectrum));
    check_sizes(v, a);
    const LimitDirection dir = direction == "down" ? LimitDirection::down : LimitDirection::up;
    LimitOptions lo;
    lo.tol = opts.tol;
    lo.zero_floor = std::min(lo.zero_floor, opts.tol / 10);
    Json payload{{"direction", direction}};
    std::ostringstream os;
    if (morse_bott) {
      const auto c = limit_generalized_symbol(v, a, dir, lo);
      payload["generalized_symbol"] = c.to_string();
      payload["blocks"] = c.blocks();
      payload["index"] = generalized_index(c);
      os << "limit (" << direction << "): " << c.to_string() << "  index " << generalized_index(c) << '\n';
    } else {
      const auto u = limit_symbol(v, a, dir, lo);
      payload["symbol"] = u.to_string();
      payload["index_f"] = critical_index(u, IndexConvention::for_f);
      payload["moment"] = VertexPolytope::indicator(u);
      os << "limit (" << direction << "): " << u << "  index(f) " << critical_index(u, IndexConvention::for_f) << '\n';
    }
    return CommandResult::success(payload, os.str());
  });
}

namespace detail {

inline WittenComplex resolve_complex(const std::string& source, const std::vector<std::string>& params) {
  auto int_param = [&](std::size_t i, const char* what) {
    if (params.size() <= i) throw UsageError(source + " needs " + what);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(params[i], &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse '" + params[i] + "' as an integer");
    }
    if (used != params[i].size()) throw UsageError("cannot parse '" + params[i] + "' as an integer");
    return v;
  };
  auto expect = [&](std::size_t count) {
    if (params.size() != count) throw UsageError(source + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (source == "builtin:rp") {
    expect(1);
    return rp_complex(int_param(0, "n"));
  }
  if (source == "builtin:circle") {
    expect(1);
    return circle_complex(int_param(0, "m"));
  }
  if (source == "builtin:torus") {
    expect(0);
    return torus_complex();
  }
  if (source == "builtin:grassmannian") {
    expect(2);
    return grassmannian_complex(int_param(0, "k"), int_param(1, "n"));
  }
  if (source.rfind("builtin:", 0) == 0) throw UsageError("unknown builtin '" + source + "'");
  expect(0);
  return load_complex(read_file(source));
}

}  // namespace detail

inline CommandResult cmd_witten(const std::string& source, const std::vector<std::string>& params, const std::string& mode) {
  return guarded([&] {
    if (mode != "int" && mode != "mod2") throw UsageError("mode must be int or mod2");
    const WittenComplex c = detail::resolve_complex(source, params);
    const Coefficients coeff = mode == "int" ? Coefficients::integers : Coefficients::mod2;
    const HomologyResult h = homology(c, coeff);
    Json payload{{"source", source}, {"complex", json_io::complex(c)}, {"valid", true}, {"homology", json_io::homology(h)}};
    std::ostringstream os;
    os << "boundary squares to zero\n";
    for (int i = h.min_degree; i <= h.max_degree(); ++i) {
      const auto& g = h.at(i);
      std::string text = g.to_string();
      if (coeff == Coefficients::mod2) text = g.free_rank == 0 ? "0" : g.free_rank == 1 ? "Z/2" : "(Z/2)^" + std::to_string(g.free_rank);
      os << "H_" << i << " = " << text << "  (" << c.rank(i) << " generator" << (c.rank(i) == 1 ? "" : "s") << ")\n";
    }
    if (c.min_degree() >= 0) {
      const auto m = morse_polynomial(c);
      const auto p = h.poincare();
      const auto mi = morse_inequalities(m, p);
      payload["morse_polynomial"] = json_io::polynomial(m);
      payload["poincare_polynomial"] = json_io::polynomial(p);
      payload["morse_inequalities"] = mi.holds;
      if (mi.holds) payload["quotient"] = json_io::polynomial(mi.q);
      payload["euler_characteristic"] = euler_characteristic(m);
      os << "M(t) = " << m << "\nP(t) = " << p << '\n';
      os << "Morse inequalities " << (mi.holds ? "hold, Q(t) = " + mi.q.to_string() : "fail: " + mi.violation) << '\n';
      os << "Euler characteristic " << euler_characteristic(m) << '\n';
    }
    return CommandResult::success(payload, os.str());
  });
}

namespace detail {

/// "z(2,4)^2", "z(1,4)z(2,4)".
inline std::string product_text(const std::vector<SchubertSymbol>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    s += "z" + factors[i].to_string();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace detail

/// Cup product of two or more Schubert classes.
inline CommandResult cmd_cup(int k, int n, const std::vector<std::string>& symbols) {
  return guarded([&] {
    detail::require_ambient(k, n);
    if (symbols.size() < 2) throw UsageError("cup needs at least two symbols");
    std::vector<SchubertSymbol> factors;
    for (const auto& s : symbols) factors.push_back(parse_symbol(k, n, s));
    CohomologyClass z = CohomologyClass::basis(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) z = cup_product(z, CohomologyClass::basis(factors[i]));
    const std::string lhs = detail::product_text(factors);
    Json payload{{"k", k}, {"n", n}, {"factors", symbols}, {"product", json_io::cohomology_class(z)}, {"text", lhs + " = " + z.to_string()}};
    int total = 0;
    for (const auto& f : factors) total += degree(f);
    payload["degree"] = total;
    if (total == 2 * k * (n - k)) payload["intersection_number"] = json_io::big(z.coefficient(SchubertSymbol::minimal(k, n)));
    return CommandResult::success(payload, lhs + " = " + z.to_string() + "\n");
  });
}

/// Hypersimplex, or the Schubert polytope of a symbol, with its f-vector.
/// With plot_path set and n = 4, also writes the vertices projected to R^3.
inline CommandResult cmd_polytope(int k, int n, const std::optional<std::string>& symbol, const GlobalOptions& opts = {},
                                  const std::optional<std::string>& plot_path = std::nullopt) {
  return guarded([&] {
    detail::require_ambient(k, n);
    const VertexPolytope p = symbol ? schubert_polytope(parse_symbol(k, n, *symbol)) : grassmannian_polytope(k, n);
    FaceOptions fo;
    fo.parallel = opts.parallel;
    const auto f = face_counts(p, fo);
    Json payload = json_io::polytope(p);
    payload["f_vector"] = f;
    if (symbol) payload["symbol"] = *symbol;
    std::ostringstream os;
    os << (symbol ? "Schubert polytope of " + *symbol : std::string("moment polytope")) << " in Gr(" << k << "," << n
       << "): " << p.size() << " vertices\n";
    os << "f-vector (";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ")\n";
    if (n == 4) {
      Json plot = Json::array();
      const auto coords = project_to_hyperplane(p);
      for (std::size_t i = 0; i < coords.size(); ++i) plot.push_back(Json{{"symbol", p.symbols()[i].to_string()}, {"xyz", coords[i]}});
      payload["plot"] = plot;
      if (plot_path) {
        std::ofstream out(*plot_path);
        if (!out) throw IoError("cannot write '" + *plot_path + "'");
        out << "# symbol x y z\n";
        for (std::size_t i = 0; i < coords.size(); ++i)
          out << p.symbols()[i].to_string() << ' ' << coords[i][0] << ' ' << coords[i][1] << ' ' << coords[i][2] << '\n';
        os << "plot data written to " << *plot_path << '\n';
      }
    } else if (plot_path) {
      throw UsageError("plot data is only available for n = 4");
    }
    return CommandResult::success(payload, os.str());
  });
}

/// Expected moduli dimension of a labelled graph read from JSON.
inline CommandResult cmd_moduli_dim(const std::string& graph_path, const std::optional<std::string>& labels_path = std::nullopt) {
  return guarded([&] {
    const Json j = detail::read_json(graph_path);
    const FlowGraph g = json_io::parse_graph(j);
    LabeledEnds ends;
    if (labels_path) {
      ends = json_io::parse_labels(detail::read_json(*labels_path));
    } else if (j.contains("labels")) {
      ends = json_io::parse_labels(j.at("labels"));
    } else {
      throw UsageError("graph file has no labels; pass --labels");
    }
    const auto b1 = graph_first_betti(g);
    const auto dim = moduli_dimension(g, ends);
    Json payload{{"vertices", g.vertices()},
                 {"incoming", g.incoming()},
                 {"internal", g.internal()},
                 {"outgoing", g.outgoing()},
                 {"first_betti", b1},
                 {"dimension", dim}};
    std::ostringstream os;
    os << "n1=" << g.incoming() << " n2=" << g.internal() << " n3=" << g.outgoing() << " b1=" << b1 << '\n';
    os << "expected dimension " << dim << (dim < 0 ? " (empty moduli space expected)" : "") << '\n';
    return CommandResult::success(payload, os.str());
  });
}

/// Critical manifolds of the height function with repeated eigenvalues.
inline CommandResult cmd_mb(int k, const std::string& blocks_text) {
  return guarded([&] {
    const auto blocks = detail::parse_int_list(blocks_text);
    check_blocks(blocks);
    int n = 0;
    for (int m : blocks) n += m;
    detail::require_ambient(k, n);
    const auto cs = enumerate_generalized_symbols(blocks, k);
    Json rows = Json::array();
    std::ostringstream os;
    for (const auto& c : cs) {
      rows.push_back(Json{{"symbol", c.to_string()}, {"index", generalized_index(c)}, {"dimension", ndcm_dimension(c)}});
      os << c.to_string() << "  index " << generalized_index(c) << "  dim_C " << ndcm_dimension(c) << '\n';
    }
    const auto mb = mb_polynomial(cs);
    const auto p = poincare_closed(k, n);
    os << "MB(t) = " << mb << "\nP(t)  = " << p << "\nperfect=" << (mb == p ? "true" : "false") << '\n';
    return CommandResult::success(Json{{"k", k}, {"blocks", blocks}, {"manifolds", rows}, {"mb_polynomial", json_io::polynomial(mb)},
                                       {"poincare_polynomial", json_io::polynomial(p)}, {"perfect", mb == p}},
                                  os.str());
  });
}

}  // namespace morsegrass::cli
