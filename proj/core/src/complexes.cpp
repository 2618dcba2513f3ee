#include "extrop/complexes.hpp"

#include <algorithm>
#include <set>

namespace extrop {

namespace {

// Coordinates of x with respect to the rows of `basis`.
IntVec coordinates(const std::vector<IntVec>& basis, const IntVec& x) {
  const std::size_t d = basis.size();
  const IntMatrix bt = IntMatrix::from_rows(x.size(), basis).transpose();
  const auto y = solve_rational(bt, to_rat(x));
  if (!y) throw InvalidArgument("coordinates: vector outside the span");
  IntVec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (boost::multiprecision::denominator((*y)[i]) != 1) throw InvalidArgument("coordinates: vector outside the lattice");
    out[i] = boost::multiprecision::numerator((*y)[i]);
  }
  return out;
}

bool saturated_injective(const LatticeMap& m) {
  const std::vector<IntVec> cols = m.matrix().transpose().row_vectors();
  if (rank_of(cols, m.target_rank()) != m.source_rank()) return false;
  return hnf_rows(cols, m.target_rank()) == saturate(cols, m.target_rank());
}

}  // namespace

ConeComplex::ConeComplex(std::vector<Cone> cells, std::vector<FaceMap> face_maps)
    : cells_(std::move(cells)), face_maps_(std::move(face_maps)) {
  for (const auto& c : cells_)
    if (!c.is_pointed() || !c.is_full_dimensional())
      throw InvalidArgument("ConeComplex: cells must be strictly convex and full-dimensional");
  for (std::size_t k = 0; k < face_maps_.size(); ++k) {
    const FaceMap& fm = face_maps_[k];
    if (fm.src >= cells_.size() || fm.dst >= cells_.size() || fm.src == fm.dst)
      throw InvalidArgument("ConeComplex: face map with bad endpoints");
    if (!index_.emplace(std::make_pair(fm.src, fm.dst), k).second)
      throw InvalidArgument("ConeComplex: duplicate face map");
    const Cone& s = cells_[fm.src];
    const Cone& t = cells_[fm.dst];
    if (fm.map.source_rank() != s.rank() || fm.map.target_rank() != t.rank() || !saturated_injective(fm.map))
      throw InvalidArgument("ConeComplex: face map is not a saturated embedding");
    std::vector<IntVec> imgs;
    for (const auto& r : s.rays()) imgs.push_back(fm.map(r));
    std::sort(imgs.begin(), imgs.end());
    const Face f = smallest_face_containing(t, imgs);
    std::vector<IntVec> frays = face_rays(t, f);
    std::sort(frays.begin(), frays.end());
    if (frays != imgs || f == full_face(t))
      throw InvalidArgument("ConeComplex: face map does not identify the cell with a proper face");
  }
  // every proper face of a cell comes from exactly one cell
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    std::set<Face> seen;
    for (const auto& fm : face_maps_)
      if (fm.dst == j && !seen.insert(image_face(fm.src, j)).second)
        throw InvalidArgument("ConeComplex: two cells identified with the same face");
    for (const auto& f : cells_[j].face_lattice().faces)
      if (f != full_face(cells_[j]) && !seen.count(f))
        throw InvalidArgument("ConeComplex: a face of a cell is not a cell");
  }
  // closed under composition
  for (const auto& a : face_maps_)
    for (const auto& b : face_maps_) {
      if (a.dst != b.src) continue;
      const FaceMap* c = face_map(a.src, b.dst);
      if (!c || c->map != b.map.after(a.map))
        throw InvalidArgument("ConeComplex: face maps are not closed under composition");
    }
}

ConeComplex ConeComplex::from_fan(std::size_t rank, const std::vector<Cone>& cones) {
  std::map<std::string, Cone> global;
  for (const auto& c : cones) {
    if (c.rank() != rank) throw InvalidArgument("from_fan: cone in the wrong lattice");
    if (!c.is_pointed()) throw InvalidArgument("from_fan: cones must be strictly convex");
    for (const auto& f : c.face_lattice().faces) {
      Cone fc = face_cone(c, f);
      global.emplace(fc.key(), fc);
    }
  }
  std::vector<Cone> order;
  for (auto& [k, c] : global) order.push_back(c);
  std::stable_sort(order.begin(), order.end(), [](const Cone& a, const Cone& b) { return a.dim() < b.dim(); });

  std::vector<std::vector<IntVec>> bases;
  std::vector<Cone> cells;
  for (const auto& c : order) {
    std::vector<IntVec> b = saturate(c.rays(), rank);
    std::vector<IntVec> local;
    for (const auto& r : c.rays()) local.push_back(coordinates(b, r));
    cells.push_back(Cone::from_generators(b.size(), local));
    bases.push_back(std::move(b));
  }
  std::vector<FaceMap> maps;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (i == j || order[i].dim() >= order[j].dim()) continue;
      bool sub = true;
      for (const auto& r : order[i].rays())
        if (std::find(order[j].rays().begin(), order[j].rays().end(), r) == order[j].rays().end()) {
          sub = false;
          break;
        }
      if (!sub) continue;
      const Face f = smallest_face_containing(order[j], order[i].rays());
      if (face_cone(order[j], f) != order[i]) continue;
      std::vector<IntVec> cols;
      for (const auto& e : bases[i]) cols.push_back(coordinates(bases[j], e));
      maps.push_back({i, j, LatticeMap(bases[i].size(), bases[j].size(),
                                       IntMatrix::from_columns(bases[j].size(), cols))});
    }
  return ConeComplex(std::move(cells), std::move(maps));
}

ConeComplex ConeComplex::single_cone(const Cone& c) { return from_fan(c.rank(), {c}); }

const FaceMap* ConeComplex::face_map(std::size_t src, std::size_t dst) const {
  auto it = index_.find({src, dst});
  return it == index_.end() ? nullptr : &face_maps_[it->second];
}

bool ConeComplex::is_face_of(std::size_t src, std::size_t dst) const {
  return src == dst || face_map(src, dst) != nullptr;
}

Face ConeComplex::image_face(std::size_t src, std::size_t dst) const {
  if (src == dst) return full_face(cells_[dst]);
  const FaceMap* fm = face_map(src, dst);
  if (!fm) throw InvalidArgument("image_face: not a face");
  std::vector<IntVec> imgs;
  for (const auto& r : cells_[src].rays()) imgs.push_back(fm->map(r));
  return smallest_face_containing(cells_[dst], imgs);
}

std::size_t ConeComplex::cell_of_face(std::size_t cell, const Face& f) const {
  if (f == full_face(cells_[cell])) return cell;
  for (const auto& fm : face_maps_)
    if (fm.dst == cell && image_face(fm.src, cell) == f) return fm.src;
  throw InvalidArgument("cell_of_face: face is not a cell");
}

// ---- morphisms --------------------------------------------------------------

ComplexMorphism::ComplexMorphism(ConeComplex source, ConeComplex target, std::vector<CellImage> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) throw InvalidArgument("ComplexMorphism: one image per cell expected");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const CellImage& im = images_[i];
    if (im.cell >= target_.size() || im.map.source() != source_.cells()[i] ||
        im.map.target() != target_.cells()[im.cell])
      throw InvalidArgument("ComplexMorphism: cell image does not match the cells");
  }
  for (const auto& fm : source_.face_maps()) {
    const CellImage& a = images_[fm.src];
    const CellImage& b = images_[fm.dst];
    if (!target_.is_face_of(a.cell, b.cell))
      throw InvalidArgument("ComplexMorphism: images of a face and its cell are not incident");
    const ExtConeMorphism phi = ExtConeMorphism::toric(
        ConeMorphism(source_.cells()[fm.src], source_.cells()[fm.dst], fm.map));
    const ExtConeMorphism psi =
        a.cell == b.cell ? ExtConeMorphism::identity(target_.cells()[a.cell])
                         : ExtConeMorphism::toric(ConeMorphism(target_.cells()[a.cell], target_.cells()[b.cell],
                                                               target_.face_map(a.cell, b.cell)->map));
    if (compose_ext(phi, b.map) != compose_ext(a.map, psi))
      throw InvalidArgument("ComplexMorphism: cell maps disagree on a shared face");
  }
}

ComplexMorphism ComplexMorphism::identity(const ConeComplex& c) {
  std::vector<CellImage> images;
  for (std::size_t i = 0; i < c.size(); ++i) images.push_back({i, ExtConeMorphism::identity(c.cells()[i])});
  return ComplexMorphism(c, c, std::move(images));
}

bool ComplexMorphism::is_toroidal() const {
  return std::all_of(images_.begin(), images_.end(), [](const CellImage& im) { return im.map.is_toric(); });
}

bool ComplexMorphism::operator==(const ComplexMorphism& other) const {
  if (images_.size() != other.images_.size() || source_.cells() != other.source_.cells() ||
      target_.cells() != other.target_.cells())
    return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i].cell != other.images_[i].cell || images_[i].map != other.images_[i].map) return false;
  return true;
}

ComplexMorphism compose_complex(const ComplexMorphism& f, const ComplexMorphism& g) {
  std::vector<CellImage> images;
  for (const auto& im : f.images()) {
    const CellImage& next = g.images().at(im.cell);
    images.push_back({next.cell, compose_ext(im.map, next.map)});
  }
  return ComplexMorphism(f.source(), g.target(), std::move(images));
}

// ---- stars ------------------------------------------------------------------

Star star(std::size_t sigma, const ConeComplex& complex) {
  if (sigma >= complex.size()) throw InvalidArgument("star: no such cell");
  Star out;
  std::vector<ConeQuotient> quotients;
  for (std::size_t j = 0; j < complex.size(); ++j) {
    if (!complex.is_face_of(sigma, j)) continue;
    Face f = complex.image_face(sigma, j);
    quotients.push_back(cone_quotient(complex.cells()[j], f));
    out.cells.push_back(j);
    out.faces.push_back(std::move(f));
  }
  std::vector<Cone> cells;
  for (const auto& q : quotients) cells.push_back(q.cone);
  std::vector<FaceMap> maps;
  for (std::size_t a = 0; a < out.cells.size(); ++a)
    for (std::size_t b = 0; b < out.cells.size(); ++b) {
      const FaceMap* fm = complex.face_map(out.cells[a], out.cells[b]);
      if (!fm) continue;
      maps.push_back({a, b, quotients[b].projection.after(fm->map).after(quotients[a].section)});
    }
  out.complex = ConeComplex(std::move(cells), std::move(maps));
  return out;
}

ComplexMorphism extended_star_inclusion(std::size_t sigma, const ConeComplex& complex) {
  const Star st = star(sigma, complex);
  std::vector<CellImage> images;
  for (std::size_t a = 0; a < st.cells.size(); ++a)
    images.push_back({st.cells[a], ExtConeMorphism::inclusion(complex.cells()[st.cells[a]], st.faces[a])});
  return ComplexMorphism(st.complex, complex, std::move(images));
}

bool is_strict(const ComplexMorphism& f) {
  for (std::size_t i = 0; i < f.images().size(); ++i) {
    const CellImage& im = f.images()[i];
    if (!im.map.is_toric()) return false;
    const Cone& s = f.source().cells()[i];
    const Cone& t = f.target().cells()[im.cell];
    if (!saturated_injective(im.map.map())) return false;
    std::vector<IntVec> imgs;
    for (const auto& r : s.rays()) imgs.push_back(im.map.map()(r));
    std::sort(imgs.begin(), imgs.end());
    std::vector<IntVec> frays = face_rays(t, smallest_face_containing(t, imgs));
    std::sort(frays.begin(), frays.end());
    if (frays != imgs) return false;
  }
  return true;
}

ComplexFactorization factorize_complex(const ComplexMorphism& f) {
  if (f.images().empty()) throw InvalidArgument("factorize_complex: empty source complex");
  const ConeComplex& target = f.target();
  std::size_t gamma = target.size();
  for (const auto& im : f.images()) {
    const std::size_t c = target.cell_of_face(im.cell, im.map.target_face());
    if (gamma == target.size()) gamma = c;
    if (c != gamma) throw Error("factorize_complex: cells land in strata of different cells");
  }
  const Star st = star(gamma, target);
  std::vector<CellImage> images;
  for (const auto& im : f.images()) {
    const auto pos = std::find(st.cells.begin(), st.cells.end(), im.cell) - st.cells.begin();
    images.push_back({static_cast<std::size_t>(pos), factorize_ext(im.map).toric});
  }
  ComplexMorphism toroidal(f.source(), st.complex, std::move(images));
  return {gamma, std::move(toroidal), extended_star_inclusion(gamma, target)};
}

ExtConeMorphism descend_to_stratum(const ExtConeMorphism& f, const Face& gamma) {
  const Cone& t = f.target();
  if (!gamma.subset_of(f.target_face())) throw InvalidArgument("descend_to_stratum: face not below the target face");
  const ConeQuotient qg = cone_quotient(t, gamma);
  const Face kappa = quotient_face(t, gamma, qg, f.target_face());
  const ConeQuotient qk = cone_quotient(qg.cone, kappa);
  const LatticeMap m = qk.projection.after(qg.projection).after(f.target_quotient().section).after(f.map());
  return ExtConeMorphism(f.source(), qg.cone, kappa, m);
}

}  // namespace extrop
