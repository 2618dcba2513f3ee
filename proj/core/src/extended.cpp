#include "extrop/extended.hpp"

namespace extrop {

namespace {

Face orthogonal_face(const Cone& sigma, const std::vector<IntVec>& us) {
  Face f;
  for (std::size_t r = 0; r < sigma.rays().size(); ++r) {
    bool orth = true;
    for (const auto& u : us)
      if (dot(u, sigma.rays()[r]) != 0) {
        orth = false;
        break;
      }
    if (orth) f.rays.push_back(r);
  }
  return f;
}

RatVec apply(const IntMatrix& m, const RatVec& x) { return LatticeMap(m)(x); }

}  // namespace

ExtendedPoint make_point(const Cone& sigma, Face face, RatVec coords) {
  const ConeQuotient q = cone_quotient(sigma, face);
  if (coords.size() != q.cone.rank() || !q.cone.contains(coords))
    throw InvalidArgument("make_point: coordinates outside the stratum");
  return {std::move(face), std::move(coords)};
}

ExtendedPoint finite_point(const Cone& sigma, const RatVec& x) { return make_point(sigma, zero_face(sigma), x); }

std::optional<Rat> pair(const Cone& sigma, const ExtendedPoint& p, const IntVec& u) {
  if (!in_perp(sigma, p.face, u)) return std::nullopt;
  const ConeQuotient q = cone_quotient(sigma, p.face);
  return dot(p.coords, q.section.transpose()(u));
}

std::vector<Stratum> strata(const Cone& sigma) {
  std::vector<Stratum> out;
  for (const auto& f : sigma.face_lattice().faces) out.push_back({f, cone_quotient(sigma, f)});
  return out;
}

// ---- morphisms --------------------------------------------------------------

ExtConeMorphism::ExtConeMorphism(Cone source, Cone target, Face target_face, LatticeMap map)
    : source_(std::move(source)), target_(std::move(target)), target_face_(std::move(target_face)), map_(std::move(map)) {
  if (!source_.is_pointed() || !target_.is_pointed())
    throw InvalidArgument("ExtConeMorphism: cones must be strictly convex");
  quotient_ = cone_quotient(target_, target_face_);
  if (!maps_into(map_, source_, quotient_.cone))
    throw InvalidArgument("ExtConeMorphism: map does not send the source into the target stratum");
}

ExtConeMorphism ExtConeMorphism::identity(const Cone& c) {
  return ExtConeMorphism(c, c, zero_face(c), LatticeMap::identity(c.rank()));
}

ExtConeMorphism ExtConeMorphism::toric(const ConeMorphism& m) {
  return ExtConeMorphism(m.source(), m.target(), zero_face(m.target()), m.map());
}

ExtConeMorphism ExtConeMorphism::inclusion(const Cone& sigma, const Face& tau) {
  const ConeQuotient q = cone_quotient(sigma, tau);
  return ExtConeMorphism(q.cone, sigma, tau, LatticeMap::identity(q.cone.rank()));
}

bool ExtConeMorphism::operator==(const ExtConeMorphism& other) const {
  return source_ == other.source_ && target_ == other.target_ && target_face_ == other.target_face_ &&
         map_ == other.map_;
}

ExtConeMorphism compose_ext(const ExtConeMorphism& f, const ExtConeMorphism& g) {
  if (f.target() != g.source()) throw InvalidArgument("compose_ext: morphisms are not composable");
  const Cone& s2 = f.target();
  const Cone& s3 = g.target();
  const ConeQuotient& qu = g.target_quotient();
  // ω: smallest face of σ3 containing υ and g(τ).
  std::vector<IntVec> images;
  for (auto r : f.target_face().rays) images.push_back(g.map()(s2.rays()[r]));
  const Face in_quotient = smallest_face_containing(qu.cone, images);
  const Face omega = lift_face(s3, g.target_face(), qu, in_quotient);
  const ConeQuotient qo = cone_quotient(s3, omega);
  const ConeQuotient& qt = f.target_quotient();
  // h = P_ω S_υ G S_τ, the descent of g to σ2/τ -> σ3/ω.
  const LatticeMap h = qo.projection.after(qu.section).after(g.map()).after(qt.section);
  return ExtConeMorphism(f.source(), s3, omega, h.after(f.map()));
}

ExtendedPoint evaluate(const ExtConeMorphism& f, const ExtendedPoint& p) {
  const PointedMorphism dual = undualize(f);
  const Cone& s1 = f.source();
  const Cone& s2 = f.target();
  std::vector<IntVec> finite;
  std::vector<Rat> values;
  for (const auto& u : dual.source().hilbert_basis()) {
    const MonoidElement v = dual(u);
    if (v.is_inf()) continue;
    const auto val = pair(s1, p, *v.value);
    if (!val) continue;
    finite.push_back(u);
    values.push_back(*val);
  }
  const Face kappa = orthogonal_face(s2, finite);
  const ConeQuotient q = cone_quotient(s2, kappa);
  const LatticeMap st = q.section.transpose();
  std::vector<IntVec> rows;
  for (const auto& u : finite) rows.push_back(st(u));
  const std::size_t k = q.cone.rank();
  const auto y = solve_rational(IntMatrix::from_rows(k, rows), values);
  if (!y) throw Error("evaluate: inconsistent dual pairing");
  return make_point(s2, kappa, *y);
}

ExtendedPoint evaluate_geometric(const ExtConeMorphism& f, const ExtendedPoint& p) {
  const Cone& s1 = f.source();
  const Cone& s2 = f.target();
  const ConeQuotient qt = cone_quotient(s1, p.face);
  const ConeQuotient& qu = f.target_quotient();
  std::vector<IntVec> images;
  for (auto r : p.face.rays) images.push_back(f.map()(s1.rays()[r]));
  const Face g = smallest_face_containing(qu.cone, images);
  const Face kappa = lift_face(s2, f.target_face(), qu, g);
  const ConeQuotient qk = cone_quotient(s2, kappa);
  const LatticeMap chain = qk.projection.after(qu.section).after(f.map()).after(qt.section);
  return make_point(s2, kappa, apply(chain.matrix(), p.coords));
}

ExtConeMorphism dualize(const PointedMorphism& m) {
  return ExtConeMorphism(m.target().cone(), m.source().cone(), m.kernel_face(), m.toric_part().transpose());
}

PointedMorphism undualize(const ExtConeMorphism& e) {
  return PointedMorphism(PointedMonoid(e.target()), PointedMonoid(e.source()), e.target_face(), e.map().transpose());
}

ExtFactorization factorize_ext(const ExtConeMorphism& f) {
  const ConeQuotient& q = f.target_quotient();
  ExtConeMorphism toric(f.source(), q.cone, zero_face(q.cone), f.map());
  return {std::move(toric), ExtConeMorphism::inclusion(f.target(), f.target_face())};
}

FiberProduct fiber_product_ext(const ExtConeMorphism& f, const ExtConeMorphism& g) {
  if (f.target() != g.target()) throw InvalidArgument("fiber_product_ext: morphisms do not share a target");
  Pushout po = pushout(undualize(f), undualize(g));
  ExtConeMorphism left = dualize(po.left_leg);
  ExtConeMorphism right = dualize(po.right_leg);
  Cone obj = po.object.cone();
  return {std::move(obj), std::move(left), std::move(right), std::move(po)};
}

}  // namespace extrop
