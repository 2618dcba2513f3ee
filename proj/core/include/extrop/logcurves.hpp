#pragma once

// Combinatorial shadow of a log curve over a pointed log point: component
// genera, nodes with their smoothing parameters δ, and markings.

#include "extrop/moduli.hpp"

#include <optional>
#include <string>
#include <vector>

namespace extrop {

struct LogNode {
  int a = 0;
  int b = 0;            ///< a == b for a self-node
  MonoidElement delta;  ///< nonzero element of the base P∞
  bool operator==(const LogNode&) const = default;
};

struct CombLogCurve {
  PointedMonoid base;
  std::vector<int> genera;     ///< per component
  std::vector<LogNode> nodes;
  std::vector<int> markings;   ///< markings[i] is the component of marking i+1

  /// Throws InvalidArgument on bad indices, zero or out-of-base δ, a
  /// disconnected dual graph, or (when `stable`) an unstable component.
  void check(bool stable = true) const;
  /// Arithmetic genus: sum of genera plus first Betti number of the dual graph.
  int genus() const;
};

/// Vertices are components, edges are nodes with d(e) = δ_e, legs are markings.
ExtendedTropicalCurve dual_tropical_curve(const CombLogCurve& x);
/// Inverse reading of a tropical curve as a log curve.
CombLogCurve log_curve_of(const ExtendedTropicalCurve& c);

/// New node with δ = ∞ between the components of the last markings.
CombLogCurve log_clutch(const CombLogCurve& x, const CombLogCurve& y, BaseMode mode = BaseMode::Shared);
CombLogCurve log_self_glue(const CombLogCurve& x);
CombLogCurve log_self_glue(const CombLogCurve& x, std::size_t i, std::size_t j);

/// δ -> f(δ); nodes with δ sent to 0 are smoothed, merging their branches.
CombLogCurve base_change(const CombLogCurve& x, const PointedMorphism& f);

/// Outcome of comparing the two paths around a square.
struct SquareReport {
  bool pass = false;
  ExtendedTropicalCurve left;    ///< trop after the log operation
  ExtendedTropicalCurve right;   ///< the tropical operation after trop
  std::optional<GraphIsomorphism> witness;
  std::string certificate;       ///< why the comparison failed
};

SquareReport compare_curves(const ExtendedTropicalCurve& left, const ExtendedTropicalCurve& right);
SquareReport verify_clutch(const CombLogCurve& x, const CombLogCurve& y, BaseMode mode = BaseMode::Shared);
SquareReport verify_glue(const CombLogCurve& x);
SquareReport verify_base_change(const CombLogCurve& x, const PointedMorphism& f);

}  // namespace extrop
