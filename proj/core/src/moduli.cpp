#include "extrop/moduli.hpp"

#include <map>
#include <unordered_map>

namespace extrop {

void ExtendedTropicalCurve::check() const {
  graph.check();
  if (!graph.connected()) throw InvalidArgument("curve: graph is disconnected");
  if (!graph.is_stable()) throw InvalidArgument("curve: graph is not stable");
  if (lengths.size() != graph.num_edges()) throw InvalidArgument("curve: one length per edge expected");
  for (const auto& d : lengths) {
    if (d.is_inf()) continue;
    if (d.value->size() != base.rank() || !base.contains(*d.value))
      throw InvalidArgument("curve: edge length outside the base monoid");
    if (is_zero(*d.value)) throw InvalidArgument("curve: zero edge length");
  }
}

Cone cone_of_graph(const StableGraph& g) { return Cone::orthant(g.num_edges()); }

CurveFromHom curve_from_hom(const StableGraph& g, const PointedMonoid& base, const std::vector<MonoidElement>& values) {
  if (values.size() != g.num_edges()) throw InvalidArgument("curve_from_hom: one value per edge expected");
  std::vector<int> zero;
  for (std::size_t e = 0; e < values.size(); ++e) {
    if (!base.contains(values[e])) throw InvalidArgument("curve_from_hom: value outside the base monoid");
    if (!values[e].is_inf() && is_zero(*values[e].value)) zero.push_back(static_cast<int>(e));
  }
  auto [h, c] = contract(g, zero);
  std::vector<MonoidElement> lengths(h.num_edges());
  for (std::size_t e = 0; e < values.size(); ++e)
    if (c.edge_map[e] >= 0) lengths[c.edge_map[e]] = values[e];
  CurveFromHom out{{std::move(h), base, std::move(lengths)}, std::move(c)};
  out.curve.check();
  return out;
}

CurveFromHom curve_from_hom(const StableGraph& g, const PointedMorphism& f) {
  if (f.source() != PointedMonoid::free(g.num_edges()))
    throw InvalidArgument("curve_from_hom: morphism must start at the edge monoid");
  std::vector<MonoidElement> values;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    IntVec u(g.num_edges(), 0);
    u[e] = 1;
    values.push_back(f(u));
  }
  return curve_from_hom(g, f.target(), values);
}

std::optional<GraphIsomorphism> find_curve_isomorphism(const ExtendedTropicalCurve& a, const ExtendedTropicalCurve& b) {
  if (a.base != b.base) return std::nullopt;
  std::map<MonoidElement, int> palette;
  auto colours = [&](const ExtendedTropicalCurve& c) {
    std::vector<int> out;
    for (const auto& d : c.lengths) out.push_back(palette.emplace(d, static_cast<int>(palette.size())).first->second);
    return out;
  };
  const std::vector<int> ca = colours(a), cb = colours(b);
  return find_isomorphism(a.graph, b.graph, &ca, &cb);
}

// ---- atlas ------------------------------------------------------------------

std::size_t ModuliAtlas::index_of(const StableGraph& g) const {
  const std::string k = canonical_key(g);
  const auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k) throw InvalidArgument("atlas: graph type not listed");
  return static_cast<std::size_t>(it - keys.begin());
}

ModuliAtlas moduli_atlas(int genus, int markings, bool with_arrows) {
  ModuliAtlas atlas;
  atlas.genus = genus;
  atlas.markings = markings;
  std::vector<std::pair<std::string, StableGraph>> sorted;
  for (auto& g : enumerate_stable_graphs(genus, markings)) sorted.emplace_back(canonical_key(g), std::move(g));
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, g] : sorted) {
    atlas.keys.push_back(k);
    atlas.cones.push_back(cone_of_graph(g));
    atlas.graphs.push_back(std::move(g));
  }
  if (!with_arrows) return atlas;
  for (std::size_t i = 0; i < atlas.graphs.size(); ++i) {
    const StableGraph& g = atlas.graphs[i];
    atlas.automorphisms.push_back(automorphisms(g));
    const std::size_t ne = g.num_edges();
    for (std::size_t mask = 1; mask < (std::size_t{1} << ne); ++mask) {
      std::vector<int> edges;
      for (std::size_t e = 0; e < ne; ++e)
        if ((mask >> e) & 1) edges.push_back(static_cast<int>(e));
      auto [h, c] = contract(g, edges);
      const std::size_t j = atlas.index_of(h);
      auto iso = find_isomorphism(h, atlas.graphs[j]);
      if (!iso) throw Error("moduli_atlas: canonical keys disagree with isomorphism search");
      atlas.contractions.push_back({i, std::move(edges), j, std::move(*iso)});
    }
  }
  return atlas;
}

// ---- gluing -----------------------------------------------------------------

ExtendedTropicalCurve clutch(const ExtendedTropicalCurve& a, const ExtendedTropicalCurve& b, BaseMode mode) {
  if (a.num_markings() == 0 || b.num_markings() == 0) throw InvalidArgument("clutch: both curves need a marking");
  ExtendedTropicalCurve out;
  std::vector<MonoidElement> la = a.lengths, lb = b.lengths;
  if (mode == BaseMode::Shared) {
    if (a.base != b.base) throw InvalidArgument("clutch: curves live over different bases");
    out.base = a.base;
  } else {
    const ProductMonoid pm = product_monoid(a.base, b.base);
    for (auto& d : la) d = pm.left(d);
    for (auto& d : lb) d = pm.right(d);
    out.base = pm.monoid;
  }
  const int off = static_cast<int>(a.graph.num_vertices());
  StableGraph& g = out.graph;
  g.weights = a.graph.weights;
  g.weights.insert(g.weights.end(), b.graph.weights.begin(), b.graph.weights.end());
  g.edges = a.graph.edges;
  for (const auto& [x, y] : b.graph.edges) g.edges.emplace_back(x + off, y + off);
  g.edges.emplace_back(a.graph.legs.back(), b.graph.legs.back() + off);
  g.legs.assign(a.graph.legs.begin(), a.graph.legs.end() - 1);
  for (std::size_t i = 0; i + 1 < b.graph.legs.size(); ++i) g.legs.push_back(b.graph.legs[i] + off);
  out.lengths = std::move(la);
  out.lengths.insert(out.lengths.end(), lb.begin(), lb.end());
  out.lengths.push_back(MonoidElement::inf());
  out.check();
  return out;
}

ExtendedTropicalCurve self_glue(const ExtendedTropicalCurve& c) {
  const std::size_t n = c.num_markings();
  if (n < 2) throw InvalidArgument("self_glue: need two markings");
  return self_glue(c, n - 2, n - 1);
}

ExtendedTropicalCurve self_glue(const ExtendedTropicalCurve& c, std::size_t i, std::size_t j) {
  const std::size_t n = c.num_markings();
  if (i == j || i >= n || j >= n) throw InvalidArgument("self_glue: need two distinct markings");
  ExtendedTropicalCurve out = c;
  out.graph.edges.emplace_back(c.graph.legs[i], c.graph.legs[j]);
  out.graph.legs.clear();
  for (std::size_t k = 0; k < n; ++k)
    if (k != i && k != j) out.graph.legs.push_back(c.graph.legs[k]);
  out.lengths.push_back(MonoidElement::inf());
  out.check();
  return out;
}

ExtendedTropicalCurve tropical_base_change(const ExtendedTropicalCurve& c, const PointedMorphism& f) {
  if (f.source() != c.base) throw InvalidArgument("base change: morphism does not start at the base");
  std::vector<MonoidElement> values;
  for (const auto& d : c.lengths) values.push_back(f(d));
  return curve_from_hom(c.graph, f.target(), values).curve;
}

std::string to_dot(const ExtendedTropicalCurve& c, const std::string& name) {
  std::vector<std::string> labels;
  for (const auto& d : c.lengths) labels.push_back(to_string(d));
  return to_dot(c.graph, name, &labels);
}

}  // namespace extrop
