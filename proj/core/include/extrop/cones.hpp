#pragma once

// Rational polyhedral cones in Z^n given by rays and an optional lineality
// space, with their dual (facet) description, faces, quotients and lattice
// points.

#include "extrop/arith.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace extrop {

/// A face of a cone, stored as the sorted indices of the parent's rays that
/// lie on it.  Faces of cones with lineality contain the lineality space.
struct Face {
  std::vector<std::size_t> rays;

  bool contains(std::size_t ray) const;
  bool subset_of(const Face& other) const;
  auto operator<=>(const Face&) const = default;
};

class Cone;

/// All faces of a cone ordered by (dimension, ray indices), with the Hasse
/// diagram of the containment order.
struct FaceLattice {
  std::vector<Face> faces;
  /// covers[i] = indices j such that faces[j] covers faces[i].
  std::vector<std::vector<std::size_t>> covers;
  std::vector<std::size_t> dims;

  std::size_t index_of(const Face& f) const;  ///< throws if absent
  std::size_t size() const { return faces.size(); }
};

/// Immutable cone { sum a_i r_i + sum b_j l_j : a_i >= 0 } in Z^rank.
///
/// Rays are primitive, orthogonal to the lineality space and sorted;
/// the lineality basis is in HNF.  Facet normals are primitive, lie in the
/// rational span of the cone, and satisfy <m, x> >= 0 on the cone; the
/// equations are an HNF basis of the lattice orthogonal to the span.
class Cone {
 public:
  Cone();  ///< zero cone in Z^0

  /// Cone generated by `generators`.  Throws InvalidArgument if the result
  /// contains a line and `allow_lineality` is false.
  static Cone from_generators(std::size_t rank, const std::vector<IntVec>& generators,
                              bool allow_lineality = false);
  /// { x : <a, x> >= 0 for a in inequalities, <b, x> = 0 for b in equations }.
  static Cone from_inequalities(std::size_t rank, const std::vector<IntVec>& inequalities,
                                const std::vector<IntVec>& equations = {});
  static Cone orthant(std::size_t rank);
  static Cone zero(std::size_t rank);

  std::size_t rank() const;
  std::size_t dim() const;  ///< dimension of the linear span
  const std::vector<IntVec>& rays() const;
  const std::vector<IntVec>& lineality() const;
  const std::vector<IntVec>& facets() const;
  const std::vector<IntVec>& equations() const;

  bool is_pointed() const { return lineality().empty(); }
  bool is_full_dimensional() const { return dim() == rank(); }

  bool contains(const IntVec& x) const;
  bool contains(const RatVec& x) const;
  /// x lies in the relative interior.
  bool in_relative_interior(const IntVec& x) const;

  /// Zero sets of the facets: bit i of entry j is set when ray i lies on facet j.
  const std::vector<std::vector<bool>>& facet_incidence() const;

  const FaceLattice& face_lattice() const;
  /// Minimal generators of the monoid cone ∩ Z^rank (including a lineality
  /// basis and its negatives when the cone is not pointed), sorted.
  const std::vector<IntVec>& hilbert_basis() const;

  /// Canonical text encoding; equal cones have equal keys.
  std::string key() const;

  bool operator==(const Cone& other) const;
  bool operator!=(const Cone& other) const { return !(*this == other); }

 private:
  struct Data;
  struct Cache;
  explicit Cone(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
};

/// Dual cone in the dual lattice; recomputed from the facet description.
Cone dual_cone(const Cone& c);

// ---- faces ----------------------------------------------------------------

Face zero_face(const Cone& c);
Face full_face(const Cone& c);
/// Smallest face containing the given rays (intersection of the facets that
/// vanish on all of them).
Face closure(const Cone& c, const std::vector<std::size_t>& rays);
bool is_face(const Cone& c, const Face& f);
/// Indices of facets vanishing on the face.
std::vector<std::size_t> facets_vanishing_on(const Cone& c, const Face& f);
/// Throws InvalidArgument if a point lies outside the cone.
Face smallest_face_containing(const Cone& c, const std::vector<IntVec>& points);
Face smallest_face_containing(const Cone& c, const std::vector<RatVec>& points);
Face face_join(const Cone& c, const Face& a, const Face& b);
Face face_meet(const Cone& c, const Face& a, const Face& b);
std::size_t face_dim(const Cone& c, const Face& f);
std::vector<IntVec> face_rays(const Cone& c, const Face& f);
/// The face as a cone in the same lattice.
Cone face_cone(const Cone& c, const Face& f);
/// x lies in the face (in the cone and on every facet vanishing on it).
bool face_contains(const Cone& c, const Face& f, const IntVec& x);
bool face_contains(const Cone& c, const Face& f, const RatVec& x);
/// Generators of the linear span of the face (rays plus lineality).
std::vector<IntVec> face_span(const Cone& c, const Face& f);
/// HNF basis of the lattice tau^perp in the dual lattice.
std::vector<IntVec> face_perp(const Cone& c, const Face& f);

std::string to_string(const Face& f);

// ---- quotients and morphisms ----------------------------------------------

/// sigma/tau in N(tau) = N / N_tau, N_tau the saturated span of tau.
struct ConeQuotient {
  Cone cone;
  LatticeMap projection;  ///< N -> N(tau), canonical (row HNF)
  LatticeMap section;     ///< N(tau) -> N, projection after section = 1
};

ConeQuotient cone_quotient(const Cone& c, const Face& t);

/// Image in sigma/tau of a face containing tau.
Face quotient_face(const Cone& c, const Face& t, const ConeQuotient& q, const Face& f);
/// Preimage in sigma of a face of sigma/tau.
Face lift_face(const Cone& c, const Face& t, const ConeQuotient& q, const Face& g);

/// Lattice map carrying the source cone into the target cone.
class ConeMorphism {
 public:
  /// Throws InvalidArgument unless the map sends the source into the target.
  ConeMorphism(Cone source, Cone target, LatticeMap map);

  static ConeMorphism identity(const Cone& c);

  const Cone& source() const { return source_; }
  const Cone& target() const { return target_; }
  const LatticeMap& map() const { return map_; }

  /// (*this) after `first`.
  ConeMorphism after(const ConeMorphism& first) const;

  bool operator==(const ConeMorphism& other) const = default;

 private:
  Cone source_;
  Cone target_;
  LatticeMap map_;
};

bool maps_into(const LatticeMap& m, const Cone& source, const Cone& target);

}  // namespace extrop
