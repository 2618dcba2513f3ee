#pragma once

// Stable vertex-weighted marked graphs: invariants, weighted contraction,
// isomorphisms on half-edges, canonical forms and enumeration.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace extrop {

/// Graph with vertex weights h(v), edges as endpoint pairs (loops allowed)
/// and legs; legs[i] is the vertex carrying marking i+1.  Edge e has the
/// half-edges 2e (at edges[e].first) and 2e+1 (at edges[e].second).
struct StableGraph {
  std::vector<int> weights;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> legs;

  std::size_t num_vertices() const { return weights.size(); }
  std::size_t num_edges() const { return edges.size(); }
  std::size_t num_markings() const { return legs.size(); }

  /// Throws InvalidArgument on out-of-range endpoints.
  void check() const;
  bool connected() const;
  /// b1 + sum of weights; throws InvalidArgument if disconnected.
  int genus() const;
  /// Incident half-edges plus legs.
  int valence(int v) const;
  bool is_stable() const;

  bool operator==(const StableGraph&) const = default;
};

/// Vertex bijection plus edge bijection; flip[e] says whether half-edge 2e
/// goes to the second half-edge of edge[e].
struct GraphIsomorphism {
  std::vector<int> vertex;
  std::vector<int> edge;
  std::vector<bool> flip;
  bool operator==(const GraphIsomorphism&) const = default;
};

/// All isomorphisms G -> H fixing markings.  Optional edge colours must be
/// preserved.
std::vector<GraphIsomorphism> isomorphisms(const StableGraph& g, const StableGraph& h,
                                           const std::vector<int>* colours_g = nullptr,
                                           const std::vector<int>* colours_h = nullptr);
std::optional<GraphIsomorphism> find_isomorphism(const StableGraph& g, const StableGraph& h,
                                                 const std::vector<int>* colours_g = nullptr,
                                                 const std::vector<int>* colours_h = nullptr);
std::vector<GraphIsomorphism> automorphisms(const StableGraph& g);
/// Checks that iso maps incidences, weights, markings (and colours) of g onto h.
bool is_isomorphism(const StableGraph& g, const StableGraph& h, const GraphIsomorphism& iso,
                    const std::vector<int>* colours_g = nullptr, const std::vector<int>* colours_h = nullptr);

/// Canonical representative: isomorphic graphs give identical results.
StableGraph canonical_form(const StableGraph& g);
std::string canonical_key(const StableGraph& g);

struct Contraction {
  std::vector<int> edges;        ///< contracted edges of the source, sorted
  std::vector<int> vertex_map;   ///< source vertex -> target vertex
  std::vector<int> edge_map;     ///< source edge -> target edge, -1 if contracted
};

/// Weighted contraction of an edge set.
std::pair<StableGraph, Contraction> contract(const StableGraph& g, const std::vector<int>& edges);

/// One representative per isomorphism class of stable graphs of type (g, n),
/// in canonical form, sorted by canonical key.
std::vector<StableGraph> enumerate_stable_graphs(int genus, int markings);
/// Strategy A: grow from the one-vertex graph by loop insertion and splitting.
std::vector<StableGraph> enumerate_by_splitting(int genus, int markings);
/// Strategy B: build leg-free cores, then distribute legs.
std::vector<StableGraph> enumerate_by_partition(int genus, int markings);

std::string to_dot(const StableGraph& g, const std::string& name = "G",
                   const std::vector<std::string>* edge_labels = nullptr);

}  // namespace extrop
