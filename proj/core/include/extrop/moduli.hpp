#pragma once

// Extended tropical curves over a pointed monoid base, the atlas of stable
// graph types, clutching, self-gluing and base change.

#include "extrop/graphs.hpp"
#include "extrop/monoids.hpp"

#include <optional>
#include <string>
#include <vector>

namespace extrop {

/// Stable graph with edge lengths in P∞ - {0}, P the base monoid.
struct ExtendedTropicalCurve {
  StableGraph graph;
  PointedMonoid base;
  std::vector<MonoidElement> lengths;  ///< one per edge

  /// Throws InvalidArgument on a zero or out-of-base length, a length count
  /// mismatch, or a disconnected or unstable graph.
  void check() const;
  int genus() const { return graph.genus(); }
  std::size_t num_markings() const { return graph.num_markings(); }
};

/// The orthant with one coordinate per edge.
Cone cone_of_graph(const StableGraph& g);

struct CurveFromHom {
  ExtendedTropicalCurve curve;
  Contraction contraction;  ///< the zero-length edges of the input graph
};

/// Curve over `base` with d(e) = values[e]; edges with value 0 are
/// contracted.
CurveFromHom curve_from_hom(const StableGraph& g, const PointedMonoid& base, const std::vector<MonoidElement>& values);
/// Same, with the values given by a morphism (N^E)∞ -> base applied to the
/// edge generators.
CurveFromHom curve_from_hom(const StableGraph& g, const PointedMorphism& f);

/// Isomorphism of the graphs matching edge lengths exactly.
std::optional<GraphIsomorphism> find_curve_isomorphism(const ExtendedTropicalCurve& a, const ExtendedTropicalCurve& b);

// ---- atlas ------------------------------------------------------------------

/// contract(graphs[source], edges) is carried to graphs[target] by iso.
struct AtlasArrow {
  std::size_t source = 0;
  std::vector<int> edges;
  std::size_t target = 0;
  GraphIsomorphism iso;
};

struct ModuliAtlas {
  int genus = 0;
  int markings = 0;
  std::vector<StableGraph> graphs;  ///< canonical forms, sorted by canonical key
  std::vector<std::string> keys;
  std::vector<Cone> cones;
  std::vector<AtlasArrow> contractions;  ///< every nonempty edge subset of every graph
  std::vector<std::vector<GraphIsomorphism>> automorphisms;

  /// Index of the class of g; throws InvalidArgument if it is not listed.
  std::size_t index_of(const StableGraph& g) const;
};

/// `with_arrows` = false skips contraction arrows and automorphisms.
ModuliAtlas moduli_atlas(int genus, int markings, bool with_arrows = true);

// ---- gluing -----------------------------------------------------------------

/// Shared: both curves live over the same base.  Product: the base becomes
/// the product of the two bases, lengths embedded in the factors.
enum class BaseMode { Shared, Product };

/// Joins the last marking of a to the last marking of b by an edge of length
/// ∞.  Markings of a come first, then those of b.
ExtendedTropicalCurve clutch(const ExtendedTropicalCurve& a, const ExtendedTropicalCurve& b,
                             BaseMode mode = BaseMode::Shared);

/// Joins markings i and j (0-based, default the last two) by an edge of
/// length ∞; the other markings keep their order.
ExtendedTropicalCurve self_glue(const ExtendedTropicalCurve& c);
ExtendedTropicalCurve self_glue(const ExtendedTropicalCurve& c, std::size_t i, std::size_t j);

/// Pushes lengths along f and contracts the edges sent to 0.
ExtendedTropicalCurve tropical_base_change(const ExtendedTropicalCurve& c, const PointedMorphism& f);

std::string to_dot(const ExtendedTropicalCurve& c, const std::string& name = "C");

}  // namespace extrop
