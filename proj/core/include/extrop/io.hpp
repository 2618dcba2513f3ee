#pragma once

// JSON interchange for every object of the library, and DOT export.
// Objects are written with sorted keys; integers that do not fit in 64 bits
// and all rationals are written as strings ("p" or "p/q").

#include "extrop/complexes.hpp"
#include "extrop/logcurves.hpp"

#include "json.hpp"

#include <string>

namespace extrop {

using Json = nlohmann::json;

/// Input does not match the expected document shape.
class SchemaError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Canonical text: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);
/// Throws SchemaError on malformed text.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// The "kind" tag of a document, inferred from its fields when absent.
std::string kind_of(const Json& j);

Json int_to_json(const Int& x);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);
Json to_json(const IntVec& v);
IntVec int_vec_from_json(const Json& j);
Json to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j);
/// Row lists; the expected shape is checked.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json to_json(const Face& f);
Face face_from_json(const Json& j, const Cone& parent);

Json to_json(const Cone& c);
/// Accepts {"rank", "rays", "lineality"?} or {"rank", "inequalities", "equations"?}.
Cone cone_from_json(const Json& j);
Json to_json(const PointedMonoid& m);
/// Accepts {"cone": σ} or {"generators": [...]} (P = cone(generators) ∩ M).
PointedMonoid monoid_from_json(const Json& j);
Json to_json(const MonoidElement& e);
MonoidElement element_from_json(const Json& j, std::size_t rank);
Json to_json(const MonomialIdeal& i);

Json to_json(const PointedMorphism& f);
PointedMorphism morphism_from_json(const Json& j);
Json to_json(const ExtendedPoint& p);
ExtendedPoint point_from_json(const Json& j, const Cone& sigma);
Json to_json(const ExtConeMorphism& f);
ExtConeMorphism ext_morphism_from_json(const Json& j);

Json to_json(const ConeComplex& c);
/// Accepts {"cells", "face_maps"} or a fan {"rank", "cones"}.
ConeComplex complex_from_json(const Json& j);
Json to_json(const ComplexMorphism& f);
ComplexMorphism complex_morphism_from_json(const Json& j);

Json to_json(const StableGraph& g);
StableGraph graph_from_json(const Json& j);
Json to_json(const GraphIsomorphism& iso);
Json to_json(const ExtendedTropicalCurve& c);
ExtendedTropicalCurve tropical_curve_from_json(const Json& j);
Json to_json(const CombLogCurve& x);
CombLogCurve log_curve_from_json(const Json& j);
Json to_json(const SquareReport& r);
Json to_json(const ModuliAtlas& a);

}  // namespace extrop
