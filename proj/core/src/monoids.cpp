#include "extrop/monoids.hpp"

#include <algorithm>
#include <set>

namespace extrop {

const IntVec& MonoidElement::vec() const {
  if (!value) throw InvalidArgument("MonoidElement: the absorbing element has no coordinates");
  return *value;
}

std::string to_string(const MonoidElement& e) { return e.is_inf() ? std::string("inf") : to_string(*e.value); }

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
  if (a.is_inf() || b.is_inf()) return MonoidElement::inf();
  return MonoidElement::of(add(*a.value, *b.value));
}

// ---- PointedMonoid ----------------------------------------------------------

PointedMonoid::PointedMonoid() : sigma_(), dual_(dual_cone(sigma_)) {}

PointedMonoid::PointedMonoid(Cone sigma) : sigma_(std::move(sigma)) {
  if (!sigma_.is_pointed()) throw InvalidArgument("PointedMonoid: cone must be strictly convex");
  dual_ = dual_cone(sigma_);
}

PointedMonoid PointedMonoid::free(std::size_t rank) { return PointedMonoid(Cone::orthant(rank)); }

PointedMonoid PointedMonoid::trivial() { return PointedMonoid(); }

bool PointedMonoid::is_unit(const IntVec& u) const { return contains(u) && contains(negate(u)); }

bool PointedMonoid::divides(const IntVec& v, const IntVec& u) const { return contains(sub(u, v)); }

// ---- ideals -----------------------------------------------------------------

namespace {

Int degree(const PointedMonoid& m, const IntVec& u) {
  Int d = 0;
  for (const auto& r : m.cone().rays()) d += dot(u, r);
  return d;
}

// Representative of u + (units) with the pivot entries of the unit lattice
// basis reduced into [0, pivot).  Generators differing by a unit generate the
// same ideal, so this keeps the ideal representation canonical.
IntVec reduce_mod_units(const PointedMonoid& m, IntVec u) {
  for (const auto& row : m.dual().lineality()) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    Int q = u[c] / row[c];
    if (u[c] - q * row[c] < 0) q -= 1;
    if (q != 0) u = sub(u, scale(q, row));
  }
  return u;
}

std::vector<IntVec> outside(const PointedMonoid& m, const MonomialIdeal& i) {
  std::vector<IntVec> out;
  for (const auto& h : m.hilbert_basis())
    if (!ideal_contains(m, i, h)) out.push_back(h);
  return out;
}

// Rays of σ orthogonal to every vector in `us`.
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

}  // namespace

MonomialIdeal make_ideal(const PointedMonoid& m, const std::vector<IntVec>& gens) {
  std::vector<std::pair<Int, IntVec>> sorted;
  for (const auto& g : gens) {
    if (!m.contains(g)) throw InvalidArgument("make_ideal: generator outside the monoid");
    if (m.is_unit(g)) throw InvalidArgument("make_ideal: generator is a unit");
    const IntVec r = reduce_mod_units(m, g);
    sorted.emplace_back(degree(m, r), r);
  }
  std::sort(sorted.begin(), sorted.end());
  MonomialIdeal out;
  for (const auto& [d, g] : sorted) {
    bool redundant = false;
    for (const auto& k : out.gens)
      if (m.divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.gens.push_back(g);
  }
  std::sort(out.gens.begin(), out.gens.end());
  return out;
}

bool ideal_contains(const PointedMonoid& m, const MonomialIdeal& i, const IntVec& x) {
  if (!m.contains(x)) throw InvalidArgument("ideal_contains: element outside the monoid");
  for (const auto& g : i.gens)
    if (m.divides(g, x)) return true;
  return false;
}

bool ideal_contains(const PointedMonoid& m, const MonomialIdeal& i, const MonoidElement& x) {
  return x.is_inf() || ideal_contains(m, i, *x.value);
}

bool ideal_subset(const PointedMonoid& m, const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const auto& g : a.gens)
    if (!ideal_contains(m, b, g)) return false;
  return true;
}

bool in_perp(const Cone& sigma, const Face& tau, const IntVec& u) {
  for (auto r : tau.rays)
    if (dot(u, sigma.rays()[r]) != 0) return false;
  return true;
}

MonomialIdeal prime_of_face(const PointedMonoid& m, const Face& tau) {
  if (!is_face(m.cone(), tau)) throw InvalidArgument("prime_of_face: not a face");
  std::vector<IntVec> gens;
  for (const auto& h : m.hilbert_basis())
    if (!in_perp(m.cone(), tau, h)) gens.push_back(h);
  return make_ideal(m, gens);
}

bool is_prime(const PointedMonoid& m, const MonomialIdeal& i) {
  const Face tau = orthogonal_face(m.cone(), outside(m, i));
  return prime_of_face(m, tau) == i;
}

Face face_of_prime(const PointedMonoid& m, const MonomialIdeal& p) {
  const Face tau = orthogonal_face(m.cone(), outside(m, p));
  if (prime_of_face(m, tau) != p) throw InvalidArgument("face_of_prime: ideal is not prime");
  return tau;
}

std::optional<std::pair<IntVec, IntVec>> primality_witness(const PointedMonoid& m, const MonomialIdeal& i) {
  if (is_prime(m, i)) return std::nullopt;
  const std::vector<IntVec> steps = outside(m, i);
  std::set<IntVec> level(steps.begin(), steps.end());
  for (int depth = 0; depth < 64 && !level.empty(); ++depth) {
    std::set<IntVec> next;
    for (const auto& x : level)
      for (const auto& h : steps) {
        IntVec y = add(x, h);
        if (ideal_contains(m, i, y)) return std::make_pair(x, h);
        if (next.size() < 50000) next.insert(std::move(y));
      }
    level = std::move(next);
  }
  return std::nullopt;
}

PrimeClosure prime_closure(const PointedMonoid& m, const MonomialIdeal& i) {
  const Cone& sigma = m.cone();
  const FaceLattice& fl = sigma.face_lattice();
  std::vector<Face> ok;
  for (const auto& f : fl.faces) {
    bool contains_all = true;
    for (const auto& g : i.gens)
      if (in_perp(sigma, f, g)) {
        contains_all = false;
        break;
      }
    if (contains_all) ok.push_back(f);
  }
  PrimeClosure out;
  for (const auto& f : ok) {
    bool minimal = true;
    for (const auto& g : ok)
      if (g != f && g.subset_of(f)) {
        minimal = false;
        break;
      }
    if (minimal) out.minimal_faces.push_back(f);
  }
  out.face = zero_face(sigma);
  for (const auto& f : out.minimal_faces) out.face = face_join(sigma, out.face, f);
  out.unique = out.minimal_faces.size() <= 1;
  out.prime = prime_of_face(m, out.face);
  return out;
}

// ---- morphisms --------------------------------------------------------------

PointedMorphism::PointedMorphism(PointedMonoid source, PointedMonoid target, Face kernel_face, LatticeMap toric_part)
    : source_(std::move(source)),
      target_(std::move(target)),
      kernel_face_(std::move(kernel_face)),
      toric_part_(std::move(toric_part)) {
  if (!is_face(source_.cone(), kernel_face_)) throw InvalidArgument("PointedMorphism: kernel face is not a face");
  quotient_ = cone_quotient(source_.cone(), kernel_face_);
  if (toric_part_.source_rank() != quotient_.projection.target_rank() ||
      toric_part_.target_rank() != target_.rank())
    throw InvalidArgument("PointedMorphism: toric part has the wrong shape");
  if (!maps_into(toric_part_, dual_cone(quotient_.cone), target_.dual()))
    throw InvalidArgument("PointedMorphism: toric part does not preserve the monoids");
}

PointedMorphism PointedMorphism::identity(const PointedMonoid& m) {
  return PointedMorphism(m, m, zero_face(m.cone()), LatticeMap::identity(m.rank()));
}

PointedMorphism PointedMorphism::toric(const PointedMonoid& source, const PointedMonoid& target, LatticeMap t) {
  return PointedMorphism(source, target, zero_face(source.cone()), std::move(t));
}

std::optional<PointedMorphism> PointedMorphism::from_generator_images(const PointedMonoid& source,
                                                                      const PointedMonoid& target,
                                                                      const std::vector<MonoidElement>& images) {
  const auto& hb = source.hilbert_basis();
  if (images.size() != hb.size()) throw InvalidArgument("from_generator_images: one image per generator expected");
  std::vector<IntVec> finite;
  for (std::size_t i = 0; i < hb.size(); ++i) {
    if (images[i].is_inf()) continue;
    if (images[i].value->size() != target.rank() || !target.contains(*images[i].value)) return std::nullopt;
    finite.push_back(hb[i]);
  }
  const Face tau = orthogonal_face(source.cone(), finite);
  for (std::size_t i = 0; i < hb.size(); ++i)
    if (images[i].is_inf() && in_perp(source.cone(), tau, hb[i])) return std::nullopt;
  const ConeQuotient q = cone_quotient(source.cone(), tau);
  const LatticeMap st = q.section.transpose();
  std::vector<IntVec> inputs, values;
  for (std::size_t i = 0; i < hb.size(); ++i) {
    if (images[i].is_inf()) continue;
    inputs.push_back(st(hb[i]));
    values.push_back(*images[i].value);
  }
  const std::size_t k = st.target_rank();
  const auto t = solve_linear_map(inputs, values, k, target.rank());
  if (!t) return std::nullopt;
  try {
    return PointedMorphism(source, target, tau, LatticeMap(k, target.rank(), *t));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

MonoidElement PointedMorphism::operator()(const IntVec& u) const {
  if (!source_.contains(u)) throw InvalidArgument("PointedMorphism: element outside the source monoid");
  if (!in_perp(source_.cone(), kernel_face_, u)) return MonoidElement::inf();
  return MonoidElement::of(toric_part_(quotient_.section.transpose()(u)));
}

MonoidElement PointedMorphism::operator()(const MonoidElement& u) const {
  if (u.is_inf()) return u;
  return (*this)(*u.value);
}

std::vector<MonoidElement> PointedMorphism::generator_images() const {
  std::vector<MonoidElement> out;
  for (const auto& h : source_.hilbert_basis()) out.push_back((*this)(h));
  return out;
}

bool PointedMorphism::operator==(const PointedMorphism& other) const {
  return source_ == other.source_ && target_ == other.target_ && kernel_face_ == other.kernel_face_ &&
         toric_part_ == other.toric_part_;
}

PointedMorphism compose(const PointedMorphism& f, const PointedMorphism& g) {
  if (f.target() != g.source()) throw InvalidArgument("compose: target of the first map is not the source of the second");
  std::vector<MonoidElement> images;
  for (const auto& h : f.source().hilbert_basis()) images.push_back(g(f(h)));
  auto out = PointedMorphism::from_generator_images(f.source(), g.target(), images);
  if (!out) throw Error("compose: composite is not determined by generator images");
  return *out;
}

ReesQuotient rees_quotient(const PointedMonoid& m, const Face& tau) {
  const ConeQuotient q = cone_quotient(m.cone(), tau);
  PointedMonoid quotient(q.cone);
  PointedMorphism map(m, quotient, tau, LatticeMap::identity(quotient.rank()));
  return {std::move(quotient), std::move(map)};
}

ReesQuotient rees_quotient(const PointedMonoid& m, const MonomialIdeal& prime) {
  return rees_quotient(m, face_of_prime(m, prime));
}

Factorization factorize_morphism(const PointedMorphism& f) {
  ReesQuotient rees = rees_quotient(f.source(), f.kernel_face());
  PointedMorphism toric = PointedMorphism::toric(rees.quotient, f.target(), f.toric_part());
  return {std::move(rees), std::move(toric)};
}

// ---- pushouts ---------------------------------------------------------------

namespace {

std::vector<IntVec> finite_images(const PointedMorphism& f, const std::vector<IntVec>& elems) {
  std::vector<IntVec> out;
  for (const auto& h : elems) {
    const MonoidElement v = f(h);
    if (v.is_inf()) continue;
    if (f.target().is_unit(*v.value))
      throw Error("pushout: an element to be collapsed maps to a unit; the pushout is the zero monoid");
    out.push_back(*v.value);
  }
  return out;
}

RawReesQuotient raw_quotient(const PointedMonoid& m, MonomialIdeal ideal) {
  RawReesQuotient r;
  r.integral = is_prime(m, ideal);
  if (!r.integral) r.witness = primality_witness(m, ideal);
  r.ideal = std::move(ideal);
  return r;
}

}  // namespace

Pushout pushout(const PointedMorphism& f, const PointedMorphism& g) {
  if (f.source() != g.source()) throw InvalidArgument("pushout: morphisms do not share a source");
  const PointedMonoid& p = f.source();
  const PointedMonoid& q = f.target();
  const PointedMonoid& q2 = g.target();
  const Cone& sigma = p.cone();

  Face rho = face_join(sigma, f.kernel_face(), g.kernel_face());
  // raw quotients are by the ideals of the first pass: Q∞/(f(I) + Q)
  std::optional<RawReesQuotient> raw_a, raw_b;
  for (;;) {
    std::vector<IntVec> killed;
    for (const auto& h : p.hilbert_basis())
      if (!in_perp(sigma, rho, h)) killed.push_back(h);
    MonomialIdeal ia = make_ideal(q, finite_images(f, killed));
    MonomialIdeal ib = make_ideal(q2, finite_images(g, killed));
    if (!raw_a) {
      raw_a = raw_quotient(q, ia);
      raw_b = raw_quotient(q2, ib);
    }
    const PrimeClosure ca = prime_closure(q, ia);
    const PrimeClosure cb = prime_closure(q2, ib);
    const ReesQuotient ra = rees_quotient(q, ca.face);
    const ReesQuotient rb = rees_quotient(q2, cb.face);
    const PointedMorphism fa = compose(f, ra.map);
    const PointedMorphism gb = compose(g, rb.map);
    const Face next = face_join(sigma, fa.kernel_face(), gb.kernel_face());
    if (next != rho) {
      rho = next;
      continue;
    }

    // Toric step: dual of the fiber product of σ_A -> σ_C <- σ_B.
    const IntMatrix phi_t = fa.toric_part().matrix().transpose();  // N_A -> N_C
    const IntMatrix psi_t = gb.toric_part().matrix().transpose();  // N_B -> N_C
    const std::size_t a = ra.quotient.rank(), b = rb.quotient.rank(), c = phi_t.rows();
    IntMatrix joint(c, a + b);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < a; ++j) joint(i, j) = phi_t(i, j);
      for (std::size_t j = 0; j < b; ++j) joint(i, a + j) = -psi_t(i, j);
    }
    const std::vector<IntVec> basis = kernel_basis(LatticeMap(a + b, c, joint));
    const std::size_t x = basis.size();
    const IntMatrix k = IntMatrix::from_columns(a + b, basis);  // (a+b) x x
    const IntMatrix ka = k.rows_range(0, a);
    const IntMatrix kb = k.rows_range(a, a + b);

    std::vector<IntVec> ineqs, eqs;
    auto pull = [&](const Cone& cone, const IntMatrix& block) {
      const IntMatrix bt = block.transpose();
      for (const auto& m : cone.facets()) ineqs.push_back(bt.apply(m));
      for (const auto& e : cone.equations()) eqs.push_back(bt.apply(e));
    };
    pull(ra.quotient.cone(), ka);
    pull(rb.quotient.cone(), kb);
    const Cone sigma_x = Cone::from_inequalities(x, ineqs, eqs);
    PointedMonoid obj(sigma_x);

    PointedMorphism left(q, obj, ca.face, LatticeMap(a, x, ka.transpose()));
    PointedMorphism right(q2, obj, cb.face, LatticeMap(b, x, kb.transpose()));
    return Pushout{std::move(obj),
                   std::move(left),
                   std::move(right),
                   rho,
                   std::move(*raw_a),
                   std::move(*raw_b),
                   ca.unique && cb.unique};
  }
}

ProductMonoid product_monoid(const PointedMonoid& a, const PointedMonoid& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  std::vector<IntVec> gens;
  for (const auto& r : a.cone().rays()) {
    IntVec v(ra + rb, 0);
    std::copy(r.begin(), r.end(), v.begin());
    gens.push_back(std::move(v));
  }
  for (const auto& r : b.cone().rays()) {
    IntVec v(ra + rb, 0);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(ra));
    gens.push_back(std::move(v));
  }
  PointedMonoid prod(Cone::from_generators(ra + rb, gens));
  IntMatrix ia(ra + rb, ra), ib(ra + rb, rb);
  for (std::size_t i = 0; i < ra; ++i) ia(i, i) = 1;
  for (std::size_t i = 0; i < rb; ++i) ib(ra + i, i) = 1;
  PointedMorphism left = PointedMorphism::toric(a, prod, LatticeMap(ra, ra + rb, ia));
  PointedMorphism right = PointedMorphism::toric(b, prod, LatticeMap(rb, ra + rb, ib));
  return {std::move(prod), std::move(left), std::move(right)};
}

}  // namespace extrop
