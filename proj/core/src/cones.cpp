#include "extrop/cones.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace extrop {

namespace {

struct DDResult {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

// Double description: generators of { x : <a, x> >= 0 for a in constraints }.
DDResult double_description(std::size_t n, const std::vector<IntVec>& constraints) {
  using Bits = boost::dynamic_bitset<>;
  struct Ray {
    IntVec v;
    Bits z;
  };
  const std::size_t m = constraints.size();
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntVec& a = constraints[k];
    if (a.size() != n) throw InvalidArgument("double description: constraint of wrong dimension");
    if (is_zero(a)) {
      for (auto& r : rays) r.z.set(k);
      continue;
    }
    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pick = i;
        break;
      }
    if (pick != lin.size()) {
      IntVec l = lin[pick];
      if (dot(a, l) < 0) l = negate(l);
      const Int al = dot(a, l);
      std::vector<IntVec> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pick) continue;
        IntVec v = primitive(sub(scale(al, lin[i]), scale(dot(a, lin[i]), l)));
        if (!is_zero(v)) next_lin.push_back(std::move(v));
      }
      for (auto& r : rays) {
        r.v = primitive(sub(scale(al, r.v), scale(dot(a, r.v), l)));
        r.z.set(k);
      }
      Ray nr{primitive(l), Bits(m)};
      for (std::size_t j = 0; j < k; ++j) nr.z.set(j);
      rays.push_back(std::move(nr));
      lin = std::move(next_lin);
      continue;
    }

    std::vector<Int> s(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) s[i] = dot(a, rays[i].v);
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      Ray r = rays[i];
      if (s[i] == 0) r.z.set(k);
      next.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        const Bits common = rays[p].z & rays[q].z;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].z)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray w{primitive(sub(scale(s[p], rays[q].v), scale(s[q], rays[p].v))), common};
        w.z.set(k);
        next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  DDResult out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

// Primitive representative of v modulo the rational span of `basis`,
// orthogonal to that span.
IntVec project_off(const IntVec& v, const std::vector<IntVec>& basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size();
  IntMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) rhs[i] = Rat(dot(basis[i], v));
  const auto coef = solve_rational(gram, rhs);
  if (!coef) throw Error("project_off: singular Gram matrix");
  RatVec w = to_rat(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w[j] -= (*coef)[i] * Rat(basis[i][j]);
  return primitive(w);
}

std::vector<IntVec> canonical_rays(const std::vector<IntVec>& rays, const std::vector<IntVec>& lin) {
  std::vector<IntVec> out;
  for (const auto& r : rays) {
    IntVec p = project_off(r, lin);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVec> nonzero(const std::vector<IntVec>& vs) {
  std::vector<IntVec> out;
  for (const auto& v : vs)
    if (!is_zero(v)) out.push_back(v);
  return out;
}

Face from_mask(const std::vector<bool>& m) {
  Face f;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) f.rays.push_back(i);
  return f;
}

}  // namespace

// ---- Face -------------------------------------------------------------------

bool Face::contains(std::size_t ray) const { return std::binary_search(rays.begin(), rays.end(), ray); }

bool Face::subset_of(const Face& other) const {
  return std::includes(other.rays.begin(), other.rays.end(), rays.begin(), rays.end());
}

std::size_t FaceLattice::index_of(const Face& f) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i] == f) return i;
  throw InvalidArgument("FaceLattice::index_of: not a face");
}

std::string to_string(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.rays.size(); ++i) os << (i ? "," : "") << f.rays[i];
  os << '}';
  return os.str();
}

// ---- Cone -------------------------------------------------------------------

struct Cone::Cache {
  std::once_flag incidence_once;
  std::vector<std::vector<bool>> incidence;
  std::once_flag lattice_once;
  FaceLattice lattice;
  std::once_flag hilbert_once;
  std::vector<IntVec> hilbert;
};

struct Cone::Data {
  std::size_t rank = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
  std::vector<IntVec> facets;
  std::vector<IntVec> equations;
  std::unique_ptr<Cache> cache = std::make_unique<Cache>();
};

Cone::Cone() : d_(std::make_shared<Data>()) {}

Cone::Cone(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

Cone Cone::from_generators(std::size_t rank, const std::vector<IntVec>& generators, bool allow_lineality) {
  for (const auto& g : generators)
    if (g.size() != rank) throw InvalidArgument("Cone: generator of wrong dimension");
  const std::vector<IntVec> gens = nonzero(generators);

  const DDResult dual = double_description(rank, gens);
  auto data = std::make_shared<Data>();
  data->rank = rank;
  data->equations = saturate(dual.lineality, rank);
  data->facets = canonical_rays(dual.rays, data->equations);

  std::vector<IntVec> cons = data->facets;
  for (const auto& e : data->equations) {
    cons.push_back(e);
    cons.push_back(negate(e));
  }
  const DDResult primal = double_description(rank, cons);
  data->lineality = saturate(primal.lineality, rank);
  data->rays = canonical_rays(primal.rays, data->lineality);
  if (!allow_lineality && !data->lineality.empty())
    throw InvalidArgument("Cone: generators span a cone containing a line");
  return Cone(std::move(data));
}

Cone Cone::from_inequalities(std::size_t rank, const std::vector<IntVec>& inequalities,
                             const std::vector<IntVec>& equations) {
  std::vector<IntVec> cons = inequalities;
  for (const auto& e : equations) {
    cons.push_back(e);
    cons.push_back(negate(e));
  }
  const DDResult r = double_description(rank, cons);
  std::vector<IntVec> gens = r.rays;
  for (const auto& l : r.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return from_generators(rank, gens, true);
}

Cone Cone::orthant(std::size_t rank) {
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    IntVec e(rank, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return from_generators(rank, gens);
}

Cone Cone::zero(std::size_t rank) { return from_generators(rank, {}); }

std::size_t Cone::rank() const { return d_->rank; }
std::size_t Cone::dim() const { return d_->rank - d_->equations.size(); }
const std::vector<IntVec>& Cone::rays() const { return d_->rays; }
const std::vector<IntVec>& Cone::lineality() const { return d_->lineality; }
const std::vector<IntVec>& Cone::facets() const { return d_->facets; }
const std::vector<IntVec>& Cone::equations() const { return d_->equations; }

bool Cone::contains(const IntVec& x) const {
  if (x.size() != rank()) return false;
  for (const auto& e : d_->equations)
    if (dot(e, x) != 0) return false;
  for (const auto& f : d_->facets)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains(const RatVec& x) const {
  if (x.size() != rank()) return false;
  for (const auto& e : d_->equations)
    if (dot(x, e) != 0) return false;
  for (const auto& f : d_->facets)
    if (dot(x, f) < 0) return false;
  return true;
}

bool Cone::in_relative_interior(const IntVec& x) const {
  if (x.size() != rank()) return false;
  for (const auto& e : d_->equations)
    if (dot(e, x) != 0) return false;
  for (const auto& f : d_->facets)
    if (dot(f, x) <= 0) return false;
  return true;
}

const std::vector<std::vector<bool>>& Cone::facet_incidence() const {
  Cache& c = *d_->cache;
  std::call_once(c.incidence_once, [&] {
    for (const auto& f : d_->facets) {
      std::vector<bool> z(d_->rays.size());
      for (std::size_t i = 0; i < d_->rays.size(); ++i) z[i] = dot(f, d_->rays[i]) == 0;
      c.incidence.push_back(std::move(z));
    }
  });
  return c.incidence;
}

const FaceLattice& Cone::face_lattice() const {
  Cache& c = *d_->cache;
  std::call_once(c.lattice_once, [&] {
    const auto& inc = facet_incidence();
    const std::size_t n = d_->rays.size();
    std::set<std::vector<bool>> seen;
    std::vector<std::vector<bool>> todo{std::vector<bool>(n, true)};
    seen.insert(todo.front());
    while (!todo.empty()) {
      const std::vector<bool> f = todo.back();
      todo.pop_back();
      for (const auto& z : inc) {
        std::vector<bool> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = f[i] && z[i];
        if (seen.insert(g).second) todo.push_back(std::move(g));
      }
    }
    std::vector<std::pair<std::size_t, Face>> faces;
    for (const auto& m : seen) {
      Face f = from_mask(m);
      faces.emplace_back(face_dim(*this, f), std::move(f));
    }
    std::sort(faces.begin(), faces.end());
    FaceLattice& fl = c.lattice;
    for (auto& [dim, f] : faces) {
      fl.dims.push_back(dim);
      fl.faces.push_back(std::move(f));
    }
    fl.covers.resize(fl.faces.size());
    for (std::size_t i = 0; i < fl.faces.size(); ++i)
      for (std::size_t j = 0; j < fl.faces.size(); ++j)
        if (fl.dims[j] == fl.dims[i] + 1 && fl.faces[i].subset_of(fl.faces[j])) fl.covers[i].push_back(j);
  });
  return c.lattice;
}

namespace {

// Lattice coordinates on the saturated span of a cone.
struct SpanCoords {
  IntMatrix to;    // d x n
  IntMatrix from;  // n x d
};

SpanCoords span_coordinates(const std::vector<IntVec>& span_gens, std::size_t n) {
  const std::vector<IntVec> b = saturate(span_gens, n);
  const std::size_t d = b.size();
  if (d == 0) return {IntMatrix(0, n), IntMatrix(n, 0)};
  const SmithForm s = snf(IntMatrix::from_rows(n, b));
  // b = u^-1 [I 0] v^-1, so the coordinates of x = y^T b are y = u^T v[:, :d]^T x.
  IntMatrix to = s.u.transpose() * s.v.columns(0, d).transpose();
  return {std::move(to), IntMatrix::from_rows(n, b).transpose()};
}

// Pulling triangulation of a face, as ray-index sets of simplicial cones.
std::vector<std::vector<std::size_t>> triangulate(const FaceLattice& fl, std::size_t face) {
  const Face& f = fl.faces[face];
  if (f.rays.size() == fl.dims[face]) return {f.rays};
  const std::size_t apex = f.rays.front();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < fl.faces.size(); ++i) {
    if (fl.dims[i] + 1 != fl.dims[face] || !fl.faces[i].subset_of(f) || fl.faces[i].contains(apex)) continue;
    for (auto s : triangulate(fl, i)) {
      s.push_back(apex);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Hilbert basis of a full-dimensional pointed cone.
std::vector<IntVec> pointed_full_hilbert_basis(const Cone& c) {
  const std::size_t d = c.rank();
  if (c.rays().empty()) return {};
  const FaceLattice& fl = c.face_lattice();
  std::set<IntVec> cand(c.rays().begin(), c.rays().end());
  for (const auto& simplex : triangulate(fl, fl.size() - 1)) {
    std::vector<IntVec> cols;
    for (auto i : simplex) cols.push_back(c.rays()[i]);
    const IntMatrix r = IntMatrix::from_columns(d, cols);
    const SmithForm s = snf(r);
    const IntMatrix uinv = inverse_unimodular(s.u);
    std::vector<Int> mods(d);
    for (std::size_t i = 0; i < d; ++i) mods[i] = s.d(i, i);
    // Walk the group Z^d / r Z^d through its Smith coordinates.
    IntVec digit(d, Int(0));
    for (;;) {
      const IntVec x = uinv.apply(digit);
      const auto lambda = solve_rational(r, to_rat(x));
      RatVec point(d, Rat(0));
      for (std::size_t i = 0; i < d; ++i) {
        const Rat& l = (*lambda)[i];
        const Rat frac = l - Rat(floor_div(boost::multiprecision::numerator(l),
                                           boost::multiprecision::denominator(l)));
        for (std::size_t j = 0; j < d; ++j) point[j] += frac * Rat(cols[i][j]);
      }
      IntVec p(d);
      for (std::size_t j = 0; j < d; ++j) p[j] = boost::multiprecision::numerator(point[j]);
      if (!is_zero(p)) cand.insert(std::move(p));
      std::size_t pos = 0;
      while (pos < d) {
        if (++digit[pos] < mods[pos]) break;
        digit[pos] = 0;
        ++pos;
      }
      if (pos == d) break;
    }
  }
  IntVec grade(d, Int(0));
  for (const auto& f : c.facets()) grade = add(grade, f);
  std::vector<std::pair<Int, IntVec>> sorted;
  for (const auto& x : cand) sorted.emplace_back(dot(grade, x), x);
  std::sort(sorted.begin(), sorted.end());
  std::vector<IntVec> basis;
  for (const auto& [deg, x] : sorted) {
    bool reducible = false;
    for (const auto& h : basis)
      if (c.contains(sub(x, h))) {
        reducible = true;
        break;
      }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<IntVec> compute_hilbert_basis(const Cone& c) {
  const std::size_t n = c.rank();
  std::vector<IntVec> out;
  std::vector<IntVec> rays = c.rays();
  if (!c.lineality().empty()) {
    const LatticeQuotient q = quotient_by(c.lineality(), n);
    std::vector<IntVec> img;
    for (const auto& r : rays) img.push_back(q.projection(r));
    const Cone pc = Cone::from_generators(q.projection.target_rank(), img);
    for (const auto& h : compute_hilbert_basis(pc)) out.push_back(q.section(h));
    for (const auto& l : c.lineality()) {
      out.push_back(l);
      out.push_back(negate(l));
    }
  } else if (!rays.empty()) {
    const SpanCoords sc = span_coordinates(rays, n);
    std::vector<IntVec> local;
    for (const auto& r : rays) local.push_back(sc.to.apply(r));
    const Cone lc = Cone::from_generators(sc.to.rows(), local);
    for (const auto& h : pointed_full_hilbert_basis(lc)) out.push_back(sc.from.apply(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::mutex g_hilbert_mutex;
std::unordered_map<std::string, std::vector<IntVec>> g_hilbert_memo;

}  // namespace

const std::vector<IntVec>& Cone::hilbert_basis() const {
  Cache& c = *d_->cache;
  std::call_once(c.hilbert_once, [&] {
    const std::string k = key();
    {
      std::lock_guard<std::mutex> lock(g_hilbert_mutex);
      auto it = g_hilbert_memo.find(k);
      if (it != g_hilbert_memo.end()) {
        c.hilbert = it->second;
        return;
      }
    }
    c.hilbert = compute_hilbert_basis(*this);
    std::lock_guard<std::mutex> lock(g_hilbert_mutex);
    g_hilbert_memo.emplace(k, c.hilbert);
  });
  return c.hilbert;
}

std::string Cone::key() const {
  std::ostringstream os;
  os << d_->rank << ";";
  for (const auto& r : d_->rays) os << to_string(r);
  os << ";";
  for (const auto& l : d_->lineality) os << to_string(l);
  return os.str();
}

bool Cone::operator==(const Cone& other) const {
  if (d_ == other.d_) return true;
  return d_->rank == other.d_->rank && d_->rays == other.d_->rays && d_->lineality == other.d_->lineality;
}

Cone dual_cone(const Cone& c) {
  std::vector<IntVec> gens = c.facets();
  for (const auto& e : c.equations()) {
    gens.push_back(e);
    gens.push_back(negate(e));
  }
  return Cone::from_generators(c.rank(), gens, true);
}

// ---- faces ------------------------------------------------------------------

Face zero_face(const Cone& c) { return closure(c, {}); }

Face full_face(const Cone& c) {
  Face f;
  for (std::size_t i = 0; i < c.rays().size(); ++i) f.rays.push_back(i);
  return f;
}

Face closure(const Cone& c, const std::vector<std::size_t>& rays) {
  const auto& inc = c.facet_incidence();
  std::vector<bool> m(c.rays().size(), true);
  for (const auto& z : inc) {
    bool vanishes = true;
    for (auto i : rays)
      if (!z[i]) {
        vanishes = false;
        break;
      }
    if (!vanishes) continue;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = m[i] && z[i];
  }
  return from_mask(m);
}

bool is_face(const Cone& c, const Face& f) {
  if (!std::is_sorted(f.rays.begin(), f.rays.end())) return false;
  if (std::adjacent_find(f.rays.begin(), f.rays.end()) != f.rays.end()) return false;
  for (auto i : f.rays)
    if (i >= c.rays().size()) return false;
  return closure(c, f.rays) == f;
}

std::vector<std::size_t> facets_vanishing_on(const Cone& c, const Face& f) {
  const auto& inc = c.facet_incidence();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < inc.size(); ++j) {
    bool all = true;
    for (auto i : f.rays)
      if (!inc[j][i]) {
        all = false;
        break;
      }
    if (all) out.push_back(j);
  }
  return out;
}

namespace {

template <typename Vec>
Face smallest_face_impl(const Cone& c, const std::vector<Vec>& points) {
  for (const auto& p : points)
    if (!c.contains(p)) throw InvalidArgument("smallest_face_containing: point outside the cone");
  const auto& inc = c.facet_incidence();
  std::vector<bool> m(c.rays().size(), true);
  for (std::size_t j = 0; j < c.facets().size(); ++j) {
    bool vanishes = true;
    for (const auto& p : points)
      if (dot(p, c.facets()[j]) != 0) {
        vanishes = false;
        break;
      }
    if (!vanishes) continue;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = m[i] && inc[j][i];
  }
  return from_mask(m);
}

}  // namespace

Face smallest_face_containing(const Cone& c, const std::vector<IntVec>& points) {
  return smallest_face_impl(c, points);
}

Face smallest_face_containing(const Cone& c, const std::vector<RatVec>& points) {
  return smallest_face_impl(c, points);
}

Face face_join(const Cone& c, const Face& a, const Face& b) {
  std::vector<std::size_t> u;
  std::set_union(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), std::back_inserter(u));
  return closure(c, u);
}

Face face_meet(const Cone& c, const Face& a, const Face& b) {
  std::vector<std::size_t> m;
  std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), std::back_inserter(m));
  return closure(c, m);
}

std::vector<IntVec> face_rays(const Cone& c, const Face& f) {
  std::vector<IntVec> out;
  for (auto i : f.rays) out.push_back(c.rays().at(i));
  return out;
}

std::vector<IntVec> face_span(const Cone& c, const Face& f) {
  std::vector<IntVec> out = face_rays(c, f);
  out.insert(out.end(), c.lineality().begin(), c.lineality().end());
  return out;
}

std::size_t face_dim(const Cone& c, const Face& f) { return rank_of(face_span(c, f), c.rank()); }

Cone face_cone(const Cone& c, const Face& f) {
  std::vector<IntVec> gens = face_rays(c, f);
  for (const auto& l : c.lineality()) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return Cone::from_generators(c.rank(), gens, !c.lineality().empty());
}

bool face_contains(const Cone& c, const Face& f, const IntVec& x) {
  if (!c.contains(x)) return false;
  for (auto j : facets_vanishing_on(c, f))
    if (dot(c.facets()[j], x) != 0) return false;
  return true;
}

bool face_contains(const Cone& c, const Face& f, const RatVec& x) {
  if (!c.contains(x)) return false;
  for (auto j : facets_vanishing_on(c, f))
    if (dot(x, c.facets()[j]) != 0) return false;
  return true;
}

std::vector<IntVec> face_perp(const Cone& c, const Face& f) {
  return orthogonal_lattice(face_span(c, f), c.rank());
}

// ---- quotients --------------------------------------------------------------

ConeQuotient cone_quotient(const Cone& c, const Face& t) {
  if (!is_face(c, t)) throw InvalidArgument("cone_quotient: not a face of the cone");
  LatticeQuotient q = quotient_by(face_span(c, t), c.rank());
  std::vector<IntVec> img;
  for (const auto& r : c.rays()) img.push_back(q.projection(r));
  Cone qc = Cone::from_generators(q.projection.target_rank(), img);
  return {std::move(qc), std::move(q.projection), std::move(q.section)};
}

Face quotient_face(const Cone& c, const Face& t, const ConeQuotient& q, const Face& f) {
  if (!t.subset_of(f)) throw InvalidArgument("quotient_face: face does not contain the quotient face");
  std::vector<IntVec> pts;
  for (auto i : f.rays) pts.push_back(q.projection(c.rays()[i]));
  return smallest_face_containing(q.cone, pts);
}

Face lift_face(const Cone& c, const Face& /*t*/, const ConeQuotient& q, const Face& g) {
  Face out;
  for (std::size_t i = 0; i < c.rays().size(); ++i)
    if (face_contains(q.cone, g, q.projection(c.rays()[i]))) out.rays.push_back(i);
  return out;
}

// ---- morphisms --------------------------------------------------------------

bool maps_into(const LatticeMap& m, const Cone& source, const Cone& target) {
  if (m.source_rank() != source.rank() || m.target_rank() != target.rank()) return false;
  for (const auto& r : source.rays())
    if (!target.contains(m(r))) return false;
  for (const auto& l : source.lineality()) {
    const IntVec v = m(l);
    if (!target.contains(v) || !target.contains(negate(v))) return false;
  }
  return true;
}

ConeMorphism::ConeMorphism(Cone source, Cone target, LatticeMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!maps_into(map_, source_, target_)) throw InvalidArgument("ConeMorphism: map does not send source into target");
}

ConeMorphism ConeMorphism::identity(const Cone& c) { return ConeMorphism(c, c, LatticeMap::identity(c.rank())); }

ConeMorphism ConeMorphism::after(const ConeMorphism& first) const {
  if (first.target() != source_) throw InvalidArgument("ConeMorphism::after: not composable");
  return ConeMorphism(first.source(), target_, map_.after(first.map()));
}

}  // namespace extrop
