#pragma once

// Dimension bookkeeping for moduli of gradient flow graphs.  A graph has
// vertices, internal edges between them and free ends: incoming ends carry
// flow in from a critical point, outgoing ends carry it out to one.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "morsegrass/bigint.hpp"
#include "morsegrass/cohomology.hpp"
#include "morsegrass/errors.hpp"
#include "morsegrass/schubert.hpp"

namespace morsegrass {

enum class EdgeKind { incoming, internal, outgoing };

inline const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::incoming: return "incoming";
    case EdgeKind::internal: return "internal";
    case EdgeKind::outgoing: return "outgoing";
  }
  return "unknown";
}

/// Incoming edges use only `to`, outgoing edges only `from`.
struct GraphEdge {
  EdgeKind kind = EdgeKind::internal;
  int from = -1;
  int to = -1;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

class FlowGraph {
 public:
  FlowGraph(int vertices, std::vector<GraphEdge> edges) : vertices_(vertices), edges_(std::move(edges)) {
    if (vertices < 1) throw DomainError("a flow graph needs at least one vertex");
    auto check = [&](int v) {
      if (v < 0 || v >= vertices_) throw DomainError("edge endpoint " + std::to_string(v) + " is not a vertex");
    };
    for (const auto& e : edges_) {
      if (e.kind != EdgeKind::outgoing) check(e.to);
      if (e.kind != EdgeKind::incoming) check(e.from);
    }
  }

  int vertices() const noexcept { return vertices_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }

  int count(EdgeKind kind) const {
    int c = 0;
    for (const auto& e : edges_) c += e.kind == kind;
    return c;
  }
  int incoming() const { return count(EdgeKind::incoming); }
  int internal() const { return count(EdgeKind::internal); }
  int outgoing() const { return count(EdgeKind::outgoing); }

  /// Connectivity of the internal skeleton.
  bool connected() const {
    std::vector<int> parent(static_cast<std::size_t>(vertices_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    int components = vertices_;
    for (const auto& e : edges_) {
      if (e.kind != EdgeKind::internal) continue;
      const int a = find(e.from);
      const int b = find(e.to);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
    return components == 1;
  }

  friend bool operator==(const FlowGraph&, const FlowGraph&) = default;

 private:
  int vertices_;
  std::vector<GraphEdge> edges_;
};

/// Morse indices on the free ends, listed in edge order, and dim M.
struct LabeledEnds {
  int dim_m = 0;
  std::vector<int> incoming;
  std::vector<int> outgoing;

  friend bool operator==(const LabeledEnds&, const LabeledEnds&) = default;
};

/// Internal edges minus vertices plus one.
inline int graph_first_betti(const FlowGraph& g) {
  if (!g.connected()) throw DomainError("flow graph is disconnected");
  return g.internal() - g.vertices() + 1;
}

inline void check_labels(const FlowGraph& g, const LabeledEnds& ends) {
  if (ends.dim_m < 0) throw DomainError("manifold dimension must be nonnegative");
  if (static_cast<int>(ends.incoming.size()) != g.incoming() || static_cast<int>(ends.outgoing.size()) != g.outgoing()) {
    throw DomainError("labels cover " + std::to_string(ends.incoming.size()) + " incoming and " +
                      std::to_string(ends.outgoing.size()) + " outgoing ends, graph has " + std::to_string(g.incoming()) +
                      " and " + std::to_string(g.outgoing()));
  }
  for (const auto* side : {&ends.incoming, &ends.outgoing})
    for (int x : *side)
      if (x < 0 || x > ends.dim_m) throw DomainError("index " + std::to_string(x) + " outside [0, dim M]");
}

/// sum incoming - sum outgoing - dim M (b_1 + n_incoming - 1); may be negative.
inline std::int64_t moduli_dimension(const FlowGraph& g, const LabeledEnds& ends) {
  check_labels(g, ends);
  const std::int64_t in = std::accumulate(ends.incoming.begin(), ends.incoming.end(), std::int64_t{0});
  const std::int64_t out = std::accumulate(ends.outgoing.begin(), ends.outgoing.end(), std::int64_t{0});
  return in - out - static_cast<std::int64_t>(ends.dim_m) * (graph_first_betti(g) + g.incoming() - 1);
}

// ---------------------------------------------------------------------------
// Standard graphs

/// One vertex carrying the given numbers of free ends.
inline FlowGraph star_graph(int incoming, int outgoing) {
  std::vector<GraphEdge> e;
  for (int i = 0; i < incoming; ++i) e.push_back({EdgeKind::incoming, -1, 0});
  for (int i = 0; i < outgoing; ++i) e.push_back({EdgeKind::outgoing, 0, -1});
  return FlowGraph(1, e);
}

/// A single flow line from one critical point to another.
inline FlowGraph interval_graph() { return star_graph(1, 1); }

/// Three incoming ends meeting at a vertex.
inline FlowGraph y_graph() { return star_graph(3, 0); }

/// Two vertices joined by an internal edge, two ends in on the first and three out of the second.
inline FlowGraph two_in_three_out_tree() {
  return FlowGraph(2, {{EdgeKind::incoming, -1, 0},
                       {EdgeKind::incoming, -1, 0},
                       {EdgeKind::internal, 0, 1},
                       {EdgeKind::outgoing, 1, -1},
                       {EdgeKind::outgoing, 1, -1},
                       {EdgeKind::outgoing, 1, -1}});
}

/// Join outgoing end `out_end` of g1 to incoming end `in_end` of g2; the two
/// labels must agree and disappear into the new internal edge.
inline std::pair<FlowGraph, LabeledEnds> graft(const FlowGraph& g1, const LabeledEnds& l1, int out_end, const FlowGraph& g2,
                                               const LabeledEnds& l2, int in_end) {
  check_labels(g1, l1);
  check_labels(g2, l2);
  if (l1.dim_m != l2.dim_m) throw DomainError("grafted graphs must share dim M");
  if (out_end < 0 || out_end >= g1.outgoing()) throw DomainError("no such outgoing end");
  if (in_end < 0 || in_end >= g2.incoming()) throw DomainError("no such incoming end");
  if (l1.outgoing[static_cast<std::size_t>(out_end)] != l2.incoming[static_cast<std::size_t>(in_end)]) {
    throw DomainError("grafted ends carry different indices");
  }
  const int shift = g1.vertices();
  std::vector<GraphEdge> edges;
  LabeledEnds labels{l1.dim_m, {}, {}};
  int joined_from = -1;
  int seen_in = 0, seen_out = 0;
  for (const auto& e : g1.edges()) {
    if (e.kind == EdgeKind::outgoing && seen_out++ == out_end) {
      joined_from = e.from;
      continue;
    }
    edges.push_back(e);
  }
  int joined_to = -1;
  for (auto e : g2.edges()) {
    if (e.kind == EdgeKind::incoming && seen_in++ == in_end) {
      joined_to = e.to + shift;
      continue;
    }
    if (e.kind != EdgeKind::incoming) e.from += shift;
    if (e.kind != EdgeKind::outgoing) e.to += shift;
    edges.push_back(e);
  }
  edges.push_back({EdgeKind::internal, joined_from, joined_to});
  for (int x : l1.incoming) labels.incoming.push_back(x);
  for (std::size_t i = 0; i < l2.incoming.size(); ++i)
    if (static_cast<int>(i) != in_end) labels.incoming.push_back(l2.incoming[i]);
  for (std::size_t i = 0; i < l1.outgoing.size(); ++i)
    if (static_cast<int>(i) != out_end) labels.outgoing.push_back(l1.outgoing[i]);
  for (int x : l2.outgoing) labels.outgoing.push_back(x);

  return {FlowGraph(g1.vertices() + g2.vertices(), std::move(edges)), std::move(labels)};
}

/// Y-graph with ends labelled by the Morse indices 2 dim S of u, v, w in
/// Gr_k(C^n); the count of such graphs is the triple intersection number.
inline BigInt cup_product_instance(const SchubertSymbol& u, const SchubertSymbol& v, const SchubertSymbol& w) {
  if (!u.same_ambient(v) || !u.same_ambient(w)) throw DomainError("symbols live in different Grassmannians");
  const int dim_m = 2 * u.k() * (u.n() - u.k());
  LabeledEnds ends{dim_m,
                   {critical_index(u, IndexConvention::for_minus_f), critical_index(v, IndexConvention::for_minus_f),
                    critical_index(w, IndexConvention::for_minus_f)},
                   {}};
  const auto dim = moduli_dimension(y_graph(), ends);
  if (dim != 0) throw DomainError("expected moduli dimension is " + std::to_string(dim) + ", not 0");
  return triple_product(u, v, w);
}

}  // namespace morsegrass
