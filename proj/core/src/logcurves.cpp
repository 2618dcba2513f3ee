#include "extrop/logcurves.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace extrop {

namespace {

bool is_zero_element(const MonoidElement& e) { return !e.is_inf() && is_zero(*e.value); }

}  // namespace

void CombLogCurve::check(bool stable) const {
  const int nc = static_cast<int>(genera.size());
  if (nc == 0) throw InvalidArgument("log curve: no components");
  for (int g : genera)
    if (g < 0) throw InvalidArgument("log curve: negative genus");
  for (const auto& nd : nodes) {
    if (nd.a < 0 || nd.b < 0 || nd.a >= nc || nd.b >= nc) throw InvalidArgument("log curve: node on a missing component");
    if (!base.contains(nd.delta)) throw InvalidArgument("log curve: δ outside the base monoid");
    if (!nd.delta.is_inf() && nd.delta.value->size() != base.rank()) throw InvalidArgument("log curve: δ of wrong rank");
    if (is_zero_element(nd.delta)) throw InvalidArgument("log curve: node with δ = 0");
  }
  for (int m : markings)
    if (m < 0 || m >= nc) throw InvalidArgument("log curve: marking on a missing component");
  StableGraph g{genera, {}, markings};
  for (const auto& nd : nodes) g.edges.emplace_back(nd.a, nd.b);
  if (!g.connected()) throw InvalidArgument("log curve: dual graph is disconnected");
  if (stable && !g.is_stable()) throw InvalidArgument("log curve: unstable component");
}

int CombLogCurve::genus() const {
  int g = static_cast<int>(nodes.size()) - static_cast<int>(genera.size()) + 1;
  for (int h : genera) g += h;
  return g;
}

ExtendedTropicalCurve dual_tropical_curve(const CombLogCurve& x) {
  ExtendedTropicalCurve c;
  c.base = x.base;
  c.graph.weights = x.genera;
  c.graph.legs = x.markings;
  for (const auto& nd : x.nodes) {
    c.graph.edges.emplace_back(nd.a, nd.b);
    c.lengths.push_back(nd.delta);
  }
  c.check();
  return c;
}

CombLogCurve log_curve_of(const ExtendedTropicalCurve& c) {
  CombLogCurve x;
  x.base = c.base;
  x.genera = c.graph.weights;
  x.markings = c.graph.legs;
  for (std::size_t e = 0; e < c.graph.num_edges(); ++e)
    x.nodes.push_back({c.graph.edges[e].first, c.graph.edges[e].second, c.lengths[e]});
  x.check();
  return x;
}

CombLogCurve log_clutch(const CombLogCurve& x, const CombLogCurve& y, BaseMode mode) {
  if (x.markings.empty() || y.markings.empty()) throw InvalidArgument("log_clutch: both curves need a marking");
  CombLogCurve out;
  std::vector<LogNode> nx = x.nodes, ny = y.nodes;
  if (mode == BaseMode::Shared) {
    if (x.base != y.base) throw InvalidArgument("log_clutch: curves live over different log points");
    out.base = x.base;
  } else {
    const ProductMonoid pm = product_monoid(x.base, y.base);
    for (auto& nd : nx) nd.delta = pm.left(nd.delta);
    for (auto& nd : ny) nd.delta = pm.right(nd.delta);
    out.base = pm.monoid;
  }
  const int off = static_cast<int>(x.genera.size());
  out.genera = x.genera;
  out.genera.insert(out.genera.end(), y.genera.begin(), y.genera.end());
  out.nodes = std::move(nx);
  for (auto nd : ny) {
    nd.a += off;
    nd.b += off;
    out.nodes.push_back(std::move(nd));
  }
  out.nodes.push_back({x.markings.back(), y.markings.back() + off, MonoidElement::inf()});
  out.markings.assign(x.markings.begin(), x.markings.end() - 1);
  for (std::size_t i = 0; i + 1 < y.markings.size(); ++i) out.markings.push_back(y.markings[i] + off);
  out.check();
  return out;
}

CombLogCurve log_self_glue(const CombLogCurve& x) {
  const std::size_t n = x.markings.size();
  if (n < 2) throw InvalidArgument("log_self_glue: need two markings");
  return log_self_glue(x, n - 2, n - 1);
}

CombLogCurve log_self_glue(const CombLogCurve& x, std::size_t i, std::size_t j) {
  const std::size_t n = x.markings.size();
  if (i == j || i >= n || j >= n) throw InvalidArgument("log_self_glue: need two distinct markings");
  CombLogCurve out = x;
  out.nodes.push_back({x.markings[i], x.markings[j], MonoidElement::inf()});
  out.markings.clear();
  for (std::size_t k = 0; k < n; ++k)
    if (k != i && k != j) out.markings.push_back(x.markings[k]);
  out.check();
  return out;
}

CombLogCurve base_change(const CombLogCurve& x, const PointedMorphism& f) {
  if (f.source() != x.base) throw InvalidArgument("base_change: morphism does not start at the base");
  const int nc = static_cast<int>(x.genera.size());
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  std::vector<int> genus = x.genera;
  std::vector<LogNode> kept;
  for (const auto& nd : x.nodes) {
    MonoidElement d = f(nd.delta);
    if (!is_zero_element(d)) {
      kept.push_back({nd.a, nd.b, std::move(d)});
      continue;
    }
    // smoothing: a self-node adds a handle, otherwise the branches merge
    const int ra = find(nd.a), rb = find(nd.b);
    if (ra == rb) {
      genus[ra] += 1;
    } else {
      parent[rb] = ra;
      genus[ra] += genus[rb];
    }
  }
  std::vector<int> index(nc, -1);
  CombLogCurve out;
  out.base = f.target();
  for (int v = 0; v < nc; ++v) {
    const int r = find(v);
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.genera.size());
      out.genera.push_back(genus[r]);
    }
  }
  for (auto& nd : kept) out.nodes.push_back({index[find(nd.a)], index[find(nd.b)], std::move(nd.delta)});
  for (int m : x.markings) out.markings.push_back(index[find(m)]);
  out.check();
  return out;
}

// ---- squares ----------------------------------------------------------------

SquareReport compare_curves(const ExtendedTropicalCurve& left, const ExtendedTropicalCurve& right) {
  SquareReport r{false, left, right, std::nullopt, {}};
  std::ostringstream why;
  if (left.base != right.base) {
    why << "bases differ";
  } else if (left.graph.num_vertices() != right.graph.num_vertices() ||
             left.graph.num_edges() != right.graph.num_edges() ||
             left.graph.num_markings() != right.graph.num_markings()) {
    why << "graph sizes differ: (" << left.graph.num_vertices() << "," << left.graph.num_edges() << ","
        << left.graph.num_markings() << ") vs (" << right.graph.num_vertices() << "," << right.graph.num_edges()
        << "," << right.graph.num_markings() << ")";
  } else if (left.genus() != right.genus()) {
    why << "genera differ: " << left.genus() << " vs " << right.genus();
  } else if (auto iso = find_curve_isomorphism(left, right)) {
    r.pass = true;
    r.witness = std::move(iso);
    return r;
  } else if (!find_isomorphism(left.graph, right.graph)) {
    why << "underlying graphs are not isomorphic";
  } else {
    why << "graphs are isomorphic but no isomorphism matches the edge lengths";
  }
  r.certificate = why.str();
  return r;
}

SquareReport verify_clutch(const CombLogCurve& x, const CombLogCurve& y, BaseMode mode) {
  return compare_curves(dual_tropical_curve(log_clutch(x, y, mode)),
                        clutch(dual_tropical_curve(x), dual_tropical_curve(y), mode));
}

SquareReport verify_glue(const CombLogCurve& x) {
  return compare_curves(dual_tropical_curve(log_self_glue(x)), self_glue(dual_tropical_curve(x)));
}

SquareReport verify_base_change(const CombLogCurve& x, const PointedMorphism& f) {
  return compare_curves(dual_tropical_curve(base_change(x, f)), tropical_base_change(dual_tropical_curve(x), f));
}

}  // namespace extrop
