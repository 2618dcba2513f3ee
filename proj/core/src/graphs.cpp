#include "extrop/graphs.hpp"

#include "extrop/arith.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace extrop {

namespace {

struct Adjacency {
  int n = 0;
  std::vector<int> mult;  // n*n, symmetric; diagonal counts loops
  std::vector<std::vector<int>> marks;

  explicit Adjacency(const StableGraph& g) : n(static_cast<int>(g.num_vertices())), mult(n * n, 0), marks(n) {
    for (const auto& [a, b] : g.edges) {
      if (a == b) {
        ++mult[a * n + a];
      } else {
        ++mult[a * n + b];
        ++mult[b * n + a];
      }
    }
    for (std::size_t i = 0; i < g.legs.size(); ++i) marks[g.legs[i]].push_back(static_cast<int>(i));
  }
  int at(int a, int b) const { return mult[a * n + b]; }
};

}  // namespace

void StableGraph::check() const {
  const int n = static_cast<int>(weights.size());
  for (int w : weights)
    if (w < 0) throw InvalidArgument("StableGraph: negative vertex weight");
  for (const auto& [a, b] : edges)
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("StableGraph: edge endpoint out of range");
  for (int l : legs)
    if (l < 0 || l >= n) throw InvalidArgument("StableGraph: leg on a missing vertex");
}

bool StableGraph::connected() const {
  const int n = static_cast<int>(weights.size());
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int comps = n;
  for (const auto& [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

int StableGraph::genus() const {
  check();
  if (!connected()) throw InvalidArgument("genus: graph is disconnected");
  int g = static_cast<int>(edges.size()) - static_cast<int>(weights.size()) + 1;
  for (int w : weights) g += w;
  return g;
}

int StableGraph::valence(int v) const {
  int val = 0;
  for (const auto& [a, b] : edges) val += (a == v) + (b == v);
  for (int l : legs) val += (l == v);
  return val;
}

bool StableGraph::is_stable() const {
  for (std::size_t v = 0; v < weights.size(); ++v)
    if (2 * weights[v] - 2 + valence(static_cast<int>(v)) <= 0) return false;
  return true;
}

// ---- canonical form ---------------------------------------------------------

namespace {

std::vector<int> refined_colours(const StableGraph& g, const Adjacency& adj) {
  const int n = adj.n;
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v] = {g.weights[v], adj.at(v, v), g.valence(v), static_cast<int>(adj.marks[v].size())};
    sig[v].insert(sig[v].end(), adj.marks[v].begin(), adj.marks[v].end());
  }
  std::vector<int> colour(n);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (static_cast<int>(sorted.size()) == classes) break;
    classes = static_cast<int>(sorted.size());
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && adj.at(u, v) > 0) nb.emplace_back(colour[u], adj.at(u, v));
      std::sort(nb.begin(), nb.end());
      sig[v] = {colour[v]};
      for (const auto& [c, m] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(m);
      }
    }
  }
  return colour;
}

std::vector<int> encode(const StableGraph& g, const Adjacency& adj, const std::vector<int>& order) {
  const int n = adj.n;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> enc;
  enc.reserve(n * n + g.legs.size() + 3);
  enc.push_back(n);
  for (int i = 0; i < n; ++i) enc.push_back(g.weights[order[i]]);
  for (int l : g.legs) enc.push_back(pos[l]);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) enc.push_back(adj.at(order[i], order[j]));
  return enc;
}

// Best vertex order (position -> vertex).
std::vector<int> canonical_order(const StableGraph& g, const Adjacency& adj) {
  const int n = adj.n;
  const std::vector<int> colour = refined_colours(g, adj);
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  std::vector<std::vector<int>> cell_list;
  for (auto& [c, vs] : cells) cell_list.push_back(vs);

  std::vector<int> best_order, best_enc, order;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cell_list.size()) {
      std::vector<int> enc = encode(g, adj, order);
      if (best_enc.empty() || enc < best_enc) {
        best_enc = std::move(enc);
        best_order = order;
      }
      return;
    }
    std::vector<int> cell = cell_list[k];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      rec(k + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  rec(0);
  return best_order;
}

}  // namespace

StableGraph canonical_form(const StableGraph& g) {
  g.check();
  const Adjacency adj(g);
  const std::vector<int> order = canonical_order(g, adj);
  const int n = adj.n;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  StableGraph out;
  for (int i = 0; i < n; ++i) out.weights.push_back(g.weights[order[i]]);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < adj.at(order[i], order[j]); ++k) out.edges.emplace_back(i, j);
  for (int l : g.legs) out.legs.push_back(pos[l]);
  return out;
}

std::string canonical_key(const StableGraph& g) {
  g.check();
  const Adjacency adj(g);
  const std::vector<int> enc = encode(g, adj, canonical_order(g, adj));
  std::string s;
  for (int x : enc) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

// ---- isomorphisms -----------------------------------------------------------

namespace {

struct IsoData {
  const StableGraph* g;
  Adjacency adj;
  std::vector<std::vector<int>> pair_edges;     // n*n lists of edge indices (a <= b stored at a*n+b)
  std::vector<std::vector<int>> pair_colours;   // sorted colours per pair
  std::vector<std::vector<int>> signature;

  IsoData(const StableGraph& graph, const std::vector<int>* colours) : g(&graph), adj(graph) {
    const int n = adj.n;
    pair_edges.assign(n * n, {});
    pair_colours.assign(n * n, {});
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      auto [a, b] = graph.edges[e];
      if (a > b) std::swap(a, b);
      pair_edges[a * n + b].push_back(static_cast<int>(e));
      pair_colours[a * n + b].push_back(colours ? (*colours)[e] : 0);
    }
    for (auto& c : pair_colours) std::sort(c.begin(), c.end());
    signature.resize(n);
    for (int v = 0; v < n; ++v) {
      signature[v] = {graph.weights[v], graph.valence(v), static_cast<int>(adj.marks[v].size())};
      signature[v].insert(signature[v].end(), adj.marks[v].begin(), adj.marks[v].end());
      signature[v].push_back(-1);
      signature[v].insert(signature[v].end(), pair_colours[v * n + v].begin(), pair_colours[v * n + v].end());
    }
  }
  const std::vector<int>& colours_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    return pair_colours[a * adj.n + b];
  }
  const std::vector<int>& edges_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    return pair_edges[a * adj.n + b];
  }
};

// Calls visit(vertex map) for each vertex bijection compatible with all
// pairwise edge-colour multisets; stops when visit returns false.
void vertex_bijections(const IsoData& x, const IsoData& y, const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = x.adj.n;
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(int)> rec = [&](int v) {
    if (stop) return;
    if (v == n) {
      if (!visit(phi)) stop = true;
      return;
    }
    for (int w = 0; w < n && !stop; ++w) {
      if (used[w] || x.signature[v] != y.signature[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (x.colours_between(u, v) != y.colours_between(phi[u], w)) ok = false;
      if (!ok) continue;
      phi[v] = w;
      used[w] = true;
      rec(v + 1);
      used[w] = false;
      phi[v] = -1;
    }
  };
  rec(0);
}

struct EdgeGroup {
  std::vector<int> src;  // edges of G with one colour between one vertex pair
  std::vector<int> dst;  // matching edges of H
  bool loop = false;
};

std::vector<EdgeGroup> edge_groups(const IsoData& x, const IsoData& y, const std::vector<int>& phi,
                                   const std::vector<int>* cg, const std::vector<int>* ch) {
  const int n = x.adj.n;
  std::vector<EdgeGroup> groups;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      const auto& es = x.edges_between(a, b);
      if (es.empty()) continue;
      const auto& fs = y.edges_between(phi[a], phi[b]);
      std::map<int, EdgeGroup> by_colour;
      for (int e : es) by_colour[cg ? (*cg)[e] : 0].src.push_back(e);
      for (int f : fs) by_colour[ch ? (*ch)[f] : 0].dst.push_back(f);
      for (auto& [c, grp] : by_colour) {
        grp.loop = a == b;
        groups.push_back(std::move(grp));
      }
    }
  return groups;
}

bool natural_flip(const StableGraph& g, const StableGraph& h, const std::vector<int>& phi, int e, int f) {
  return phi[g.edges[e].first] != h.edges[f].first;
}

}  // namespace

bool is_isomorphism(const StableGraph& g, const StableGraph& h, const GraphIsomorphism& iso,
                    const std::vector<int>* cg, const std::vector<int>* ch) {
  const std::size_t n = g.num_vertices();
  if (h.num_vertices() != n || g.num_edges() != h.num_edges() || g.num_markings() != h.num_markings()) return false;
  if (iso.vertex.size() != n || iso.edge.size() != g.num_edges() || iso.flip.size() != g.num_edges()) return false;
  std::vector<bool> seen_v(n, false), seen_e(g.num_edges(), false);
  for (std::size_t v = 0; v < n; ++v) {
    const int w = iso.vertex[v];
    if (w < 0 || static_cast<std::size_t>(w) >= n || seen_v[w]) return false;
    seen_v[w] = true;
    if (g.weights[v] != h.weights[w]) return false;
  }
  for (std::size_t i = 0; i < g.legs.size(); ++i)
    if (iso.vertex[g.legs[i]] != h.legs[i]) return false;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const int f = iso.edge[e];
    if (f < 0 || static_cast<std::size_t>(f) >= g.num_edges() || seen_e[f]) return false;
    seen_e[f] = true;
    std::pair<int, int> img{iso.vertex[g.edges[e].first], iso.vertex[g.edges[e].second]};
    if (iso.flip[e]) std::swap(img.first, img.second);
    if (img != h.edges[f]) return false;
    if (cg && ch && (*cg)[e] != (*ch)[f]) return false;
  }
  return true;
}

std::vector<GraphIsomorphism> isomorphisms(const StableGraph& g, const StableGraph& h, const std::vector<int>* cg,
                                           const std::vector<int>* ch) {
  std::vector<GraphIsomorphism> out;
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() || g.num_markings() != h.num_markings())
    return out;
  const IsoData x(g, cg), y(h, ch);
  vertex_bijections(x, y, [&](const std::vector<int>& phi) {
    const std::vector<EdgeGroup> groups = edge_groups(x, y, phi, cg, ch);
    for (const auto& grp : groups)
      if (grp.src.size() != grp.dst.size()) return true;
    GraphIsomorphism iso{phi, std::vector<int>(g.num_edges(), -1), std::vector<bool>(g.num_edges(), false)};
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == groups.size()) {
        out.push_back(iso);
        return;
      }
      const EdgeGroup& grp = groups[k];
      std::vector<int> perm = grp.dst;
      std::sort(perm.begin(), perm.end());
      do {
        const std::size_t m = grp.src.size();
        const std::size_t flips = grp.loop ? (std::size_t{1} << m) : 1;
        for (std::size_t mask = 0; mask < flips; ++mask) {
          for (std::size_t i = 0; i < m; ++i) {
            const int e = grp.src[i];
            iso.edge[e] = perm[i];
            iso.flip[e] = grp.loop ? ((mask >> i) & 1) != 0 : natural_flip(g, h, phi, e, perm[i]);
          }
          rec(k + 1);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
    return true;
  });
  return out;
}

std::optional<GraphIsomorphism> find_isomorphism(const StableGraph& g, const StableGraph& h,
                                                 const std::vector<int>* cg, const std::vector<int>* ch) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() || g.num_markings() != h.num_markings())
    return std::nullopt;
  const IsoData x(g, cg), y(h, ch);
  std::optional<GraphIsomorphism> found;
  vertex_bijections(x, y, [&](const std::vector<int>& phi) {
    const std::vector<EdgeGroup> groups = edge_groups(x, y, phi, cg, ch);
    GraphIsomorphism iso{phi, std::vector<int>(g.num_edges(), -1), std::vector<bool>(g.num_edges(), false)};
    for (const auto& grp : groups) {
      if (grp.src.size() != grp.dst.size()) return true;
      for (std::size_t i = 0; i < grp.src.size(); ++i) {
        iso.edge[grp.src[i]] = grp.dst[i];
        iso.flip[grp.src[i]] = grp.loop ? false : natural_flip(g, h, phi, grp.src[i], grp.dst[i]);
      }
    }
    found = std::move(iso);
    return false;
  });
  return found;
}

std::vector<GraphIsomorphism> automorphisms(const StableGraph& g) { return isomorphisms(g, g); }

// ---- contraction ------------------------------------------------------------

std::pair<StableGraph, Contraction> contract(const StableGraph& g, const std::vector<int>& edges) {
  g.check();
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int e : sorted)
    if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges()) throw InvalidArgument("contract: no such edge");

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> weight = g.weights;
  for (int e : sorted) {
    const int a = find(g.edges[e].first), b = find(g.edges[e].second);
    if (a == b) {
      ++weight[a];
    } else {
      parent[b] = a;
      weight[a] += weight[b];
    }
  }
  Contraction c;
  c.edges = sorted;
  c.vertex_map.assign(n, -1);
  std::vector<int> root_index(n, -1);
  StableGraph out;
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (root_index[r] < 0) {
      root_index[r] = static_cast<int>(out.weights.size());
      out.weights.push_back(weight[r]);
    }
    c.vertex_map[v] = root_index[r];
  }
  c.edge_map.assign(g.num_edges(), -1);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (std::binary_search(sorted.begin(), sorted.end(), static_cast<int>(e))) continue;
    c.edge_map[e] = static_cast<int>(out.edges.size());
    out.edges.emplace_back(c.vertex_map[g.edges[e].first], c.vertex_map[g.edges[e].second]);
  }
  for (int l : g.legs) out.legs.push_back(c.vertex_map[l]);
  return {std::move(out), std::move(c)};
}

// ---- enumeration ------------------------------------------------------------

namespace {

void check_type(int genus, int markings) {
  if (genus < 0 || markings < 0 || 2 * genus - 2 + markings <= 0)
    throw InvalidArgument("enumerate: (g, n) must satisfy 2g - 2 + n > 0");
}

std::vector<StableGraph> sorted_classes(std::unordered_map<std::string, StableGraph>& classes) {
  std::vector<std::pair<std::string, StableGraph>> v(classes.begin(), classes.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<StableGraph> out;
  for (auto& [k, g] : v) out.push_back(canonical_form(g));
  return out;
}

}  // namespace

std::vector<StableGraph> enumerate_by_splitting(int genus, int markings) {
  check_type(genus, markings);
  StableGraph start{{genus}, {}, std::vector<int>(markings, 0)};
  std::unordered_map<std::string, StableGraph> classes;
  classes.emplace(canonical_key(start), start);
  std::vector<StableGraph> frontier{start};
  while (!frontier.empty()) {
    std::unordered_map<std::string, StableGraph> next;
    auto offer = [&](StableGraph&& h) {
      std::string k = canonical_key(h);
      if (classes.count(k) || next.count(k)) return;
      next.emplace(std::move(k), std::move(h));
    };
    for (const auto& g : frontier) {
      const int n = static_cast<int>(g.num_vertices());
      for (int v = 0; v < n; ++v) {
        if (g.weights[v] >= 1) {
          StableGraph h = g;
          --h.weights[v];
          h.edges.emplace_back(v, v);
          offer(std::move(h));
        }
        // items at v: half-edges (edge, side) and legs
        std::vector<std::pair<int, int>> items;  // (kind 0 edge-end / 1 leg, index)
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
          if (g.edges[e].first == v) items.emplace_back(0, static_cast<int>(2 * e));
          if (g.edges[e].second == v) items.emplace_back(0, static_cast<int>(2 * e + 1));
        }
        for (std::size_t l = 0; l < g.legs.size(); ++l)
          if (g.legs[l] == v) items.emplace_back(1, static_cast<int>(l));
        const int k = static_cast<int>(items.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
          const int moved = __builtin_popcount(mask);
          for (int h2 = 0; h2 <= g.weights[v]; ++h2) {
            const int h1 = g.weights[v] - h2;
            if (2 * h1 - 2 + (k - moved) + 1 <= 0 || 2 * h2 - 2 + moved + 1 <= 0) continue;
            StableGraph h = g;
            h.weights[v] = h1;
            h.weights.push_back(h2);
            for (int i = 0; i < k; ++i) {
              if (!((mask >> i) & 1)) continue;
              const auto [kind, idx] = items[i];
              if (kind == 1) {
                h.legs[idx] = n;
              } else if (idx % 2 == 0) {
                h.edges[idx / 2].first = n;
              } else {
                h.edges[idx / 2].second = n;
              }
            }
            h.edges.emplace_back(v, n);
            offer(std::move(h));
          }
        }
      }
    }
    frontier.clear();
    for (auto& [k, h] : next) {
      frontier.push_back(h);
      classes.emplace(k, std::move(h));
    }
  }
  return sorted_classes(classes);
}

std::vector<StableGraph> enumerate_by_partition(int genus, int markings) {
  check_type(genus, markings);
  std::unordered_map<std::string, StableGraph> classes;
  const int max_vertices = 2 * genus - 2 + markings;
  for (int nv = 1; nv <= max_vertices; ++nv) {
    for (int b1 = 0; b1 <= genus; ++b1) {
      const int ne = nv - 1 + b1;
      const int wsum = genus - b1;
      // weights non-increasing, summing to wsum
      std::vector<std::vector<int>> weight_vectors;
      std::vector<int> w(nv, 0);
      std::function<void(int, int, int)> gen_w = [&](int i, int left, int cap) {
        if (i == nv) {
          if (left == 0) weight_vectors.push_back(w);
          return;
        }
        for (int x = std::min(left, cap); x >= 0; --x) {
          w[i] = x;
          gen_w(i + 1, left - x, x);
        }
      };
      gen_w(0, wsum, wsum);

      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < nv; ++a)
        for (int b = a; b < nv; ++b) pairs.emplace_back(a, b);

      for (const auto& weights : weight_vectors) {
        std::unordered_map<std::string, StableGraph> cores;
        std::vector<int> mult(pairs.size(), 0);
        std::vector<int> deg(nv, 0);
        auto need = [&](int v) { return std::max(0, 3 - 2 * weights[v] - deg[v]); };
        std::function<void(std::size_t, int)> gen_e = [&](std::size_t p, int left) {
          if (p == pairs.size()) {
            if (left != 0) return;
            int total_need = 0;
            for (int v = 0; v < nv; ++v) total_need += need(v);
            if (total_need > markings) return;
            StableGraph core{weights, {}, {}};
            for (std::size_t q = 0; q < pairs.size(); ++q)
              for (int k = 0; k < mult[q]; ++k) core.edges.push_back(pairs[q]);
            if (!core.connected()) return;
            cores.emplace(canonical_key(core), std::move(core));
            return;
          }
          const auto [a, b] = pairs[p];
          for (int m = 0; m <= left; ++m) {
            mult[p] = m;
            deg[a] += m;
            deg[b] += m;
            gen_e(p + 1, left - m);
            deg[a] -= m;
            deg[b] -= m;
          }
          mult[p] = 0;
        };
        gen_e(0, ne);

        for (const auto& [key, core] : cores) {
          std::vector<int> needs(nv);
          for (int v = 0; v < nv; ++v) {
            int d = 0;
            for (const auto& [a, b] : core.edges) d += (a == v) + (b == v);
            needs[v] = std::max(0, 3 - 2 * core.weights[v] - d);
          }
          std::vector<int> counts(nv);
          std::function<void(int, int)> gen_c = [&](int v, int left) {
            if (v == nv - 1) {
              if (left < needs[v]) return;
              counts[v] = left;
              // distribute labelled legs with these counts
              StableGraph g = core;
              g.legs.assign(markings, -1);
              std::vector<int> room = counts;
              std::function<void(int)> place = [&](int leg) {
                if (leg == markings) {
                  classes.emplace(canonical_key(g), g);
                  return;
                }
                for (int u = 0; u < nv; ++u) {
                  if (room[u] == 0) continue;
                  --room[u];
                  g.legs[leg] = u;
                  place(leg + 1);
                  ++room[u];
                }
              };
              place(0);
              return;
            }
            for (int c = needs[v]; c <= left; ++c) {
              counts[v] = c;
              gen_c(v + 1, left - c);
            }
          };
          gen_c(0, markings);
        }
      }
    }
  }
  return sorted_classes(classes);
}

std::vector<StableGraph> enumerate_stable_graphs(int genus, int markings) {
  return enumerate_by_partition(genus, markings);
}

std::string to_dot(const StableGraph& g, const std::string& name, const std::vector<std::string>* edge_labels) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    os << "  v" << v << " [label=\"h=" << g.weights[v] << "\"];\n";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    os << "  v" << g.edges[e].first << " -- v" << g.edges[e].second;
    if (edge_labels) os << " [label=\"" << (*edge_labels)[e] << "\"]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < g.legs.size(); ++i)
    os << "  l" << i + 1 << " [shape=plaintext,label=\"" << i + 1 << "\"];\n  l" << i + 1 << " -- v" << g.legs[i]
       << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace extrop
