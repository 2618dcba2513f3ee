#pragma once

// Extended cones σ̄ = Hom(S_σ, R∞≥0), their strata, morphisms stored as
// pairs (τ', f: σ -> σ'/τ'), and the duality with pointed toric monoids.

#include "extrop/monoids.hpp"

#include <vector>

namespace extrop {

/// The compactification is canonical, so an extended cone is its base cone.
using ExtendedCone = Cone;

/// Point of σ̄ in the stratum of τ, with coordinates in N(τ)_Q (the canonical
/// projection of cone_quotient).
struct ExtendedPoint {
  Face face;
  RatVec coords;
  bool operator==(const ExtendedPoint&) const = default;
};

/// Validates that coords lie in σ/τ.
ExtendedPoint make_point(const Cone& sigma, Face face, RatVec coords);
/// Finite point of σ (stratum 0).
ExtendedPoint finite_point(const Cone& sigma, const RatVec& x);
/// Value of the point on u ∈ S_σ: ∞ when u is not in τ^⊥.
std::optional<Rat> pair(const Cone& sigma, const ExtendedPoint& p, const IntVec& u);

struct Stratum {
  Face face;
  ConeQuotient quotient;
};

/// One stratum per face of σ, in face-lattice order.
std::vector<Stratum> strata(const Cone& sigma);

class ExtConeMorphism {
 public:
  /// Throws InvalidArgument unless map sends σ into σ'/τ'.
  ExtConeMorphism(Cone source, Cone target, Face target_face, LatticeMap map);

  static ExtConeMorphism identity(const Cone& c);
  static ExtConeMorphism toric(const ConeMorphism& m);
  /// i_τ: (σ/τ)‾ -> σ̄.
  static ExtConeMorphism inclusion(const Cone& sigma, const Face& tau);

  const Cone& source() const { return source_; }
  const Cone& target() const { return target_; }
  const Face& target_face() const { return target_face_; }
  /// N -> N'(τ').
  const LatticeMap& map() const { return map_; }
  const ConeQuotient& target_quotient() const { return quotient_; }

  bool is_toric() const { return target_face_.rays.empty(); }

  bool operator==(const ExtConeMorphism& other) const;
  bool operator!=(const ExtConeMorphism& other) const { return !(*this == other); }

 private:
  Cone source_;
  Cone target_;
  Face target_face_;
  LatticeMap map_;
  ConeQuotient quotient_;
};

/// g after f.
ExtConeMorphism compose_ext(const ExtConeMorphism& f, const ExtConeMorphism& g);

/// Image of a point, computed through the dual monoid map.
ExtendedPoint evaluate(const ExtConeMorphism& f, const ExtendedPoint& p);
/// Same image computed geometrically, as the limit of f along the stratum.
ExtendedPoint evaluate_geometric(const ExtConeMorphism& f, const ExtendedPoint& p);

ExtConeMorphism dualize(const PointedMorphism& m);
PointedMorphism undualize(const ExtConeMorphism& e);

/// f = inclusion ∘ toric, toric landing in (σ'/τ')‾ with trivial target face.
struct ExtFactorization {
  ExtConeMorphism toric;
  ExtConeMorphism inclusion;
};

ExtFactorization factorize_ext(const ExtConeMorphism& f);

struct FiberProduct {
  Cone object;
  ExtConeMorphism left;   ///< object -> source(f)
  ExtConeMorphism right;  ///< object -> source(g)
  Pushout dual;
};

FiberProduct fiber_product_ext(const ExtConeMorphism& f, const ExtConeMorphism& g);

}  // namespace extrop
