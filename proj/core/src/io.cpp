#include "extrop/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace extrop {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw SchemaError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw SchemaError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<IntVec> vecs_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw SchemaError("expected an array of vectors");
  std::vector<IntVec> out;
  for (const auto& v : j) {
    IntVec x = int_vec_from_json(v);
    if (x.size() != rank) throw SchemaError("vector of the wrong length");
    out.push_back(std::move(x));
  }
  return out;
}

Json vecs_to_json(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) return "unknown";
  if (j.contains("kind") && j["kind"].is_string()) return j["kind"].get<std::string>();
  if (j.contains("images")) return "complex_morphism";
  if (j.contains("cells")) return "complex";
  if (j.contains("cones")) return "fan";
  if (j.contains("components")) return "log_curve";
  if (j.contains("lengths")) return "tropical_curve";
  if (j.contains("vertices")) return "graph";
  if (j.contains("kernel_face")) return "morphism";
  if (j.contains("target_face")) return "ext_morphism";
  if (j.contains("gens")) return "ideal";
  if (j.contains("generators") || j.contains("cone")) return "monoid";
  if (j.contains("rays") || j.contains("inequalities")) return "cone";
  return "unknown";
}

// ---- scalars and vectors ----------------------------------------------------

Json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), ::isdigit))
      throw SchemaError("not an integer: " + s);
    return Int(s);
  }
  throw SchemaError("expected an integer");
}

Json rat_to_json(const Rat& q) { return Json(to_string(q)); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(int_from_json(j));
  if (!j.is_string()) throw SchemaError("expected a rational \"p/q\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_json(Json(s)));
  const Int p = int_from_json(Json(s.substr(0, slash)));
  const Int q = int_from_json(Json(s.substr(slash + 1)));
  if (q == 0) throw SchemaError("zero denominator");
  return Rat(p, q);
}

Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an integer vector");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

RatVec rat_vec_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected a rational vector");
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json matrix_to_json(const IntMatrix& m) { return vecs_to_json(m.row_vectors()); }

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw SchemaError("matrix has the wrong number of rows");
  return IntMatrix::from_rows(cols, vecs_from_json(j, cols));
}

Json to_json(const Face& f) {
  Json a = Json::array();
  for (auto r : f.rays) a.push_back(r);
  return a;
}

Face face_from_json(const Json& j, const Cone& parent) {
  if (!j.is_array()) throw SchemaError("a face is an array of ray indices");
  Face f;
  for (const auto& x : j) {
    const std::size_t r = size_from_json(x, "ray index");
    if (r >= parent.rays().size()) throw SchemaError("ray index out of range");
    f.rays.push_back(r);
  }
  std::sort(f.rays.begin(), f.rays.end());
  f.rays.erase(std::unique(f.rays.begin(), f.rays.end()), f.rays.end());
  if (!is_face(parent, f)) throw SchemaError("ray set " + to_string(f) + " is not a face");
  return f;
}

// ---- cones and monoids ------------------------------------------------------

Json to_json(const Cone& c) {
  Json j{{"kind", "cone"}, {"rank", c.rank()}, {"rays", vecs_to_json(c.rays())}};
  if (!c.lineality().empty()) j["lineality"] = vecs_to_json(c.lineality());
  return j;
}

Cone cone_from_json(const Json& j) {
  const std::size_t rank = size_from_json(field(j, "rank"), "rank");
  if (j.contains("inequalities")) {
    std::vector<IntVec> eqs;
    if (j.contains("equations")) eqs = vecs_from_json(j["equations"], rank);
    return Cone::from_inequalities(rank, vecs_from_json(j["inequalities"], rank), eqs);
  }
  std::vector<IntVec> gens = vecs_from_json(array_field(j, "rays"), rank);
  if (j.contains("lineality"))
    for (const auto& l : vecs_from_json(j["lineality"], rank)) {
      gens.push_back(l);
      gens.push_back(negate(l));
    }
  return Cone::from_generators(rank, gens, true);
}

Json to_json(const PointedMonoid& m) {
  return Json{{"kind", "monoid"}, {"rank", m.rank()}, {"cone", to_json(m.cone())},
              {"generators", vecs_to_json(m.hilbert_basis())}};
}

PointedMonoid monoid_from_json(const Json& j) {
  if (j.contains("cone")) return PointedMonoid(cone_from_json(j["cone"]));
  const std::size_t rank = size_from_json(field(j, "rank"), "rank");
  const Cone gens = Cone::from_generators(rank, vecs_from_json(array_field(j, "generators"), rank), true);
  const Cone sigma = dual_cone(gens);
  if (!sigma.is_pointed()) throw SchemaError("generators must span the lattice");
  PointedMonoid m(sigma);
  return m;
}

Json to_json(const MonoidElement& e) { return e.is_inf() ? Json("inf") : to_json(*e.value); }

MonoidElement element_from_json(const Json& j, std::size_t rank) {
  if (j.is_string() && j.get<std::string>() == "inf") return MonoidElement::inf();
  IntVec v = int_vec_from_json(j);
  if (v.size() != rank) throw SchemaError("monoid element of the wrong rank");
  return MonoidElement::of(std::move(v));
}

Json to_json(const MonomialIdeal& i) { return Json{{"kind", "ideal"}, {"gens", vecs_to_json(i.gens)}}; }

// ---- morphisms --------------------------------------------------------------

Json to_json(const PointedMorphism& f) {
  return Json{{"kind", "morphism"},
              {"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"kernel_face", to_json(f.kernel_face())},
              {"matrix", matrix_to_json(f.toric_part().matrix())}};
}

PointedMorphism morphism_from_json(const Json& j) {
  PointedMonoid source = monoid_from_json(field(j, "source"));
  PointedMonoid target = monoid_from_json(field(j, "target"));
  Face tau = face_from_json(field(j, "kernel_face"), source.cone());
  const std::size_t k = cone_quotient(source.cone(), tau).cone.rank();
  IntMatrix t = matrix_from_json(field(j, "matrix"), target.rank(), k);
  return PointedMorphism(std::move(source), std::move(target), std::move(tau), LatticeMap(k, target.rank(), t));
}

Json to_json(const ExtendedPoint& p) { return Json{{"face", to_json(p.face)}, {"coords", to_json(p.coords)}}; }

ExtendedPoint point_from_json(const Json& j, const Cone& sigma) {
  return make_point(sigma, face_from_json(field(j, "face"), sigma), rat_vec_from_json(field(j, "coords")));
}

Json to_json(const ExtConeMorphism& f) {
  return Json{{"kind", "ext_morphism"},
              {"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"target_face", to_json(f.target_face())},
              {"map", matrix_to_json(f.map().matrix())}};
}

ExtConeMorphism ext_morphism_from_json(const Json& j) {
  Cone source = cone_from_json(field(j, "source"));
  Cone target = cone_from_json(field(j, "target"));
  Face tau = face_from_json(field(j, "target_face"), target);
  const std::size_t k = cone_quotient(target, tau).cone.rank();
  IntMatrix m = matrix_from_json(field(j, "map"), k, source.rank());
  const std::size_t r = source.rank();
  return ExtConeMorphism(std::move(source), std::move(target), std::move(tau), LatticeMap(r, k, m));
}

// ---- complexes --------------------------------------------------------------

Json to_json(const ConeComplex& c) {
  Json cells = Json::array();
  for (const auto& cell : c.cells()) cells.push_back(to_json(cell));
  Json maps = Json::array();
  for (const auto& fm : c.face_maps())
    maps.push_back(Json{{"src", fm.src}, {"dst", fm.dst}, {"matrix", matrix_to_json(fm.map.matrix())}});
  return Json{{"kind", "complex"}, {"cells", cells}, {"face_maps", maps}};
}

ConeComplex complex_from_json(const Json& j) {
  if (j.contains("cones")) {
    const std::size_t rank = size_from_json(field(j, "rank"), "rank");
    std::vector<Cone> cones;
    for (const auto& c : array_field(j, "cones")) cones.push_back(cone_from_json(c));
    return ConeComplex::from_fan(rank, cones);
  }
  std::vector<Cone> cells;
  for (const auto& c : array_field(j, "cells")) cells.push_back(cone_from_json(c));
  std::vector<FaceMap> maps;
  for (const auto& m : array_field(j, "face_maps")) {
    const std::size_t src = size_from_json(field(m, "src"), "src");
    const std::size_t dst = size_from_json(field(m, "dst"), "dst");
    if (src >= cells.size() || dst >= cells.size()) throw SchemaError("face map endpoint out of range");
    const std::size_t rs = cells[src].rank(), rd = cells[dst].rank();
    maps.push_back({src, dst, LatticeMap(rs, rd, matrix_from_json(field(m, "matrix"), rd, rs))});
  }
  return ConeComplex(std::move(cells), std::move(maps));
}

Json to_json(const ComplexMorphism& f) {
  Json images = Json::array();
  for (const auto& im : f.images())
    images.push_back(Json{{"cell", im.cell},
                          {"target_face", to_json(im.map.target_face())},
                          {"map", matrix_to_json(im.map.map().matrix())}});
  return Json{{"kind", "complex_morphism"},
              {"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"images", images}};
}

ComplexMorphism complex_morphism_from_json(const Json& j) {
  ConeComplex source = complex_from_json(field(j, "source"));
  ConeComplex target = complex_from_json(field(j, "target"));
  const Json& ims = array_field(j, "images");
  if (ims.size() != source.size()) throw SchemaError("one image per source cell expected");
  std::vector<CellImage> images;
  for (std::size_t i = 0; i < ims.size(); ++i) {
    const std::size_t cell = size_from_json(field(ims[i], "cell"), "cell");
    if (cell >= target.size()) throw SchemaError("image cell out of range");
    const Cone& t = target.cells()[cell];
    Face tau = face_from_json(field(ims[i], "target_face"), t);
    const std::size_t k = cone_quotient(t, tau).cone.rank();
    const std::size_t r = source.cells()[i].rank();
    images.push_back({cell, ExtConeMorphism(source.cells()[i], t, std::move(tau),
                                            LatticeMap(r, k, matrix_from_json(field(ims[i], "map"), k, r)))});
  }
  return ComplexMorphism(std::move(source), std::move(target), std::move(images));
}

// ---- graphs and curves ------------------------------------------------------

Json to_json(const StableGraph& g) {
  Json vertices = Json::array();
  for (int w : g.weights) vertices.push_back(Json{{"h", w}});
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  Json legs = Json::array();
  for (std::size_t i = 0; i < g.legs.size(); ++i) legs.push_back(Json{{"mark", i + 1}, {"vertex", g.legs[i]}});
  return Json{{"kind", "graph"}, {"g", g.genus()}, {"n", g.num_markings()},
              {"vertices", vertices}, {"edges", edges}, {"legs", legs}};
}

StableGraph graph_from_json(const Json& j) {
  StableGraph g;
  for (const auto& v : array_field(j, "vertices")) g.weights.push_back(small_int(field(v, "h"), "h"));
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw SchemaError("an edge is a pair of vertices");
    g.edges.emplace_back(small_int(e[0], "edge end"), small_int(e[1], "edge end"));
  }
  const Json& legs = array_field(j, "legs");
  g.legs.assign(legs.size(), -1);
  for (const auto& l : legs) {
    const std::size_t mark = size_from_json(field(l, "mark"), "mark");
    if (mark < 1 || mark > legs.size() || g.legs[mark - 1] >= 0) throw SchemaError("markings must be 1..n, each once");
    g.legs[mark - 1] = small_int(field(l, "vertex"), "vertex");
  }
  g.check();
  if (j.contains("n") && size_from_json(j["n"], "n") != g.num_markings())
    throw SchemaError("declared n does not match the legs");
  if (j.contains("g") && small_int(j["g"], "g") != g.genus()) throw SchemaError("declared genus does not match");
  return g;
}

Json to_json(const GraphIsomorphism& iso) {
  Json flips = Json::array();
  for (bool b : iso.flip) flips.push_back(b);
  return Json{{"vertex", iso.vertex}, {"edge", iso.edge}, {"flip", flips}};
}

Json to_json(const ExtendedTropicalCurve& c) {
  Json lengths = Json::array();
  for (const auto& d : c.lengths) lengths.push_back(to_json(d));
  return Json{{"kind", "tropical_curve"}, {"graph", to_json(c.graph)}, {"base", to_json(c.base)}, {"lengths", lengths}};
}

ExtendedTropicalCurve tropical_curve_from_json(const Json& j) {
  ExtendedTropicalCurve c;
  c.graph = graph_from_json(field(j, "graph"));
  c.base = monoid_from_json(field(j, "base"));
  for (const auto& d : array_field(j, "lengths")) c.lengths.push_back(element_from_json(d, c.base.rank()));
  c.check();
  return c;
}

Json to_json(const CombLogCurve& x) {
  Json comps = Json::array();
  for (int g : x.genera) comps.push_back(Json{{"genus", g}});
  Json nodes = Json::array();
  for (const auto& nd : x.nodes) nodes.push_back(Json{{"ends", Json::array({nd.a, nd.b})}, {"delta", to_json(nd.delta)}});
  return Json{{"kind", "log_curve"}, {"base", to_json(x.base)}, {"components", comps},
              {"nodes", nodes}, {"markings", x.markings}};
}

CombLogCurve log_curve_from_json(const Json& j) {
  CombLogCurve x;
  x.base = monoid_from_json(field(j, "base"));
  for (const auto& c : array_field(j, "components")) x.genera.push_back(small_int(field(c, "genus"), "genus"));
  for (const auto& nd : array_field(j, "nodes")) {
    const Json& ends = field(nd, "ends");
    if (!ends.is_array() || ends.size() != 2) throw SchemaError("node ends must be a pair of components");
    x.nodes.push_back({small_int(ends[0], "node end"), small_int(ends[1], "node end"),
                       element_from_json(field(nd, "delta"), x.base.rank())});
  }
  for (const auto& m : array_field(j, "markings")) x.markings.push_back(small_int(m, "marking"));
  x.check();
  return x;
}

Json to_json(const SquareReport& r) {
  Json j{{"kind", "square_report"}, {"pass", r.pass}, {"left", to_json(r.left)}, {"right", to_json(r.right)}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.pass) j["certificate"] = r.certificate;
  return j;
}

Json to_json(const ModuliAtlas& a) {
  Json graphs = Json::array();
  for (const auto& g : a.graphs) graphs.push_back(to_json(g));
  Json arrows = Json::array();
  for (const auto& ar : a.contractions)
    arrows.push_back(Json{{"source", ar.source}, {"edges", ar.edges}, {"target", ar.target}, {"iso", to_json(ar.iso)}});
  Json auts = Json::array();
  for (const auto& group : a.automorphisms) {
    Json g = Json::array();
    for (const auto& iso : group) g.push_back(to_json(iso));
    auts.push_back(std::move(g));
  }
  Json cones = Json::array();
  for (const auto& c : a.cones) cones.push_back(to_json(c));
  return Json{{"kind", "atlas"}, {"g", a.genus}, {"n", a.markings}, {"graphs", graphs},
              {"cones", cones}, {"contractions", arrows}, {"automorphisms", auts}};
}

}  // namespace extrop
