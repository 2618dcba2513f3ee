#pragma once

// Cone complexes in diagram form (cells plus face maps), their extensions,
// stars, and the toroidal factorization of extended complex morphisms.

#include "extrop/extended.hpp"

#include <map>
#include <utility>
#include <vector>

namespace extrop {

/// Identifies cell `src` with a face of cell `dst`.
struct FaceMap {
  std::size_t src = 0;
  std::size_t dst = 0;
  LatticeMap map;
  bool operator==(const FaceMap&) const = default;
};

/// Every cell is a full-dimensional strictly convex cone in its own lattice.
/// Face maps are closed under composition and every face of a cell is the
/// image of exactly one face map.
class ConeComplex {
 public:
  ConeComplex() = default;
  /// Throws InvalidArgument when the invariants fail.
  ConeComplex(std::vector<Cone> cells, std::vector<FaceMap> face_maps);

  /// All faces of the given cones of Z^rank, each cell in lattice coordinates
  /// of its span.  Cones must meet along common faces.
  static ConeComplex from_fan(std::size_t rank, const std::vector<Cone>& cones);
  static ConeComplex single_cone(const Cone& c);

  const std::vector<Cone>& cells() const { return cells_; }
  const std::vector<FaceMap>& face_maps() const { return face_maps_; }
  std::size_t size() const { return cells_.size(); }

  /// Face map src -> dst if src is a proper face of dst.
  const FaceMap* face_map(std::size_t src, std::size_t dst) const;
  /// src equals dst or is a face of it.
  bool is_face_of(std::size_t src, std::size_t dst) const;
  /// The face of dst that src is identified with.
  Face image_face(std::size_t src, std::size_t dst) const;
  /// Cell identified with a face of `cell`.
  std::size_t cell_of_face(std::size_t cell, const Face& f) const;

 private:
  std::vector<Cone> cells_;
  std::vector<FaceMap> face_maps_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

struct CellImage {
  std::size_t cell = 0;
  ExtConeMorphism map;
};

/// Morphism of extended complexes: each source cell goes to a target cell
/// through an extended cone morphism, compatibly with face maps.
class ComplexMorphism {
 public:
  ComplexMorphism(ConeComplex source, ConeComplex target, std::vector<CellImage> images);

  static ComplexMorphism identity(const ConeComplex& c);

  const ConeComplex& source() const { return source_; }
  const ConeComplex& target() const { return target_; }
  const std::vector<CellImage>& images() const { return images_; }

  bool is_toroidal() const;
  bool operator==(const ComplexMorphism& other) const;

 private:
  ConeComplex source_;
  ConeComplex target_;
  std::vector<CellImage> images_;
};

/// g after f.
ComplexMorphism compose_complex(const ComplexMorphism& f, const ComplexMorphism& g);

/// Star(σ, Σ): one cell δ/σ for each δ containing σ.
struct Star {
  ConeComplex complex;
  std::vector<std::size_t> cells;  ///< the δ, in star-cell order
  std::vector<Face> faces;         ///< σ as a face of each δ
};

Star star(std::size_t sigma, const ConeComplex& complex);
/// Glued stratum inclusions of the extended star into the extended complex.
ComplexMorphism extended_star_inclusion(std::size_t sigma, const ConeComplex& complex);

bool is_strict(const ComplexMorphism& f);

/// f = extended_star_inclusion(γ') ∘ toroidal.
struct ComplexFactorization {
  std::size_t gamma = 0;
  ComplexMorphism toroidal;
  ComplexMorphism inclusion;
};

/// Throws Error if the cells land in strata of different cells.
ComplexFactorization factorize_complex(const ComplexMorphism& f);

/// First leg of f through the stratum of a face γ contained in f's target
/// face: a morphism into (σ'/γ)‾, toric only when γ is the target face.
ExtConeMorphism descend_to_stratum(const ExtConeMorphism& f, const Face& gamma);

}  // namespace extrop
