#include "diskflow/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diskflow {

const char* to_string(Sense s) { return s == Sense::compatibility ? "compat" : "conflict"; }

Adjacency::Adjacency(size_t vertex_count) : rows_(vertex_count, Bits(vertex_count)) {}

void Adjacency::connect(size_t i, size_t j) {
  if (i == j) throw std::invalid_argument("Adjacency: self loop");
  rows_[i].set(j);
  rows_[j].set(i);
}

size_t Adjacency::edge_count() const {
  size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

Adjacency Adjacency::complement() const {
  Adjacency out(size());
  for (size_t i = 0; i < size(); ++i) {
    for (size_t j = i + 1; j < size(); ++j) {
      if (!adjacent(i, j)) out.connect(i, j);
    }
  }
  return out;
}

CompatibilityGraph::CompatibilityGraph(int n, Sense sense, std::vector<TouchLine> vertices,
                                       Adjacency adjacency)
    : n_(n), sense_(sense), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != vertices_.size()) {
    throw std::invalid_argument("CompatibilityGraph: adjacency size mismatch");
  }
  lookup_.assign(static_cast<size_t>(n_) * n_ * n_, -1);
  for (size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    lookup_[static_cast<size_t>(((v.a - 1) * n_ + (v.p - 1)) * n_ + (v.q - 1))] = static_cast<int>(i);
  }
}

int CompatibilityGraph::index_of(const TouchLine& v) const {
  if (v.a < 1 || v.a > n_ || v.p < 1 || v.p > n_ || v.q < 1 || v.q > n_) return -1;
  return lookup_[static_cast<size_t>(((v.a - 1) * n_ + (v.p - 1)) * n_ + (v.q - 1))];
}

std::vector<TouchLine> build_vertices(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("build_vertices: n must be even and >= 4, got " + std::to_string(n));
  }
  std::vector<TouchLine> out;
  out.reserve(static_cast<size_t>(n) * n * (n - 2) / 8);
  for (NodeId a = 1; a <= n; ++a) {
    for (NodeId p = 1; p <= n; ++p) {
      for (NodeId q = 1; q <= n; ++q) {
        if (is_touch_line(a, p, q, n)) out.push_back({a, p, q});
      }
    }
  }
  return out;
}

bool compatible(const TouchLine& v1, const TouchLine& v2, int n) {
  if (v1.a == v2.a) return false;
  const Region r = region_of_node(v1, v2.a, n);
  return region_has_gap(v1, r, cw_end_gap(v2, n), n) && region_has_gap(v1, r, ccw_end_gap(v2, n), n);
}

bool hulls_intersect(std::span<const NodeId> first, std::span<const NodeId> second, int n) {
  // Walk the circle and count colour changes between consecutive marked nodes.
  std::vector<int> colour(static_cast<size_t>(n) + 1, -1);
  for (NodeId x : first) colour[static_cast<size_t>(x)] = 0;
  for (NodeId x : second) colour[static_cast<size_t>(x)] = 1;
  std::vector<int> seq;
  for (int i = 1; i <= n; ++i) {
    if (colour[static_cast<size_t>(i)] >= 0) seq.push_back(colour[static_cast<size_t>(i)]);
  }
  int changes = 0;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != seq[(i + seq.size() - 1) % seq.size()]) ++changes;
  }
  return changes > 2;
}

namespace {

// (a, p+1, q) and (b, q+1, p): a, b of different parity, six distinct nodes,
// chord [a, b] separating gap p from gap q.
bool rule_shared_gaps(const TouchLine& x, const TouchLine& y, int n) {
  const NodeId p = wrap(x.p - 1, n);
  const NodeId q = x.q;
  if (y.p != wrap(q + 1, n) || y.q != p) return false;
  if ((x.a - y.a) % 2 == 0) return false;
  std::array<NodeId, 6> nodes{x.a, x.p, x.q, y.a, y.p, y.q};
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) return false;
  const int span = cw_distance(x.a, y.a, n);
  auto side = [&](NodeId z) { return cw_distance(x.a, z, n) < span; };
  return side(p) == side(wrap(p + 1, n)) && side(q) == side(wrap(q + 1, n)) && side(p) != side(q);
}

// (a, p, b) and (b, p, x)
bool rule_far_touch(const TouchLine& x, const TouchLine& y) { return x.q == y.a && x.p == y.p; }

// (a, b, p) and (b, x, p)
bool rule_near_touch(const TouchLine& x, const TouchLine& y) { return x.p == y.a && x.q == y.q; }

}  // namespace

bool compatible_by_rules(const TouchLine& v1, const TouchLine& v2, int n) {
  if (v1.a == v2.a) return false;
  if (v1.degenerate() && v2.degenerate() && v1.p == v2.a && v2.p == v1.a) return false;
  const std::array<NodeId, 3> s1{v1.a, v1.p, v1.q};
  const std::array<NodeId, 3> s2{v2.a, v2.p, v2.q};
  bool shared = false;
  for (NodeId x : s1) shared = shared || std::find(s2.begin(), s2.end(), x) != s2.end();
  if (!shared && !hulls_intersect(s1, s2, n)) return true;
  return rule_shared_gaps(v1, v2, n) || rule_shared_gaps(v2, v1, n) || rule_far_touch(v1, v2) ||
         rule_far_touch(v2, v1) || rule_near_touch(v1, v2) || rule_near_touch(v2, v1);
}

CompatibilityGraph build_graph(int n, Sense sense) {
  auto vertices = build_vertices(n);
  Adjacency adj(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      const bool edge = compatible(vertices[i], vertices[j], n);
      if (edge == (sense == Sense::compatibility)) adj.connect(i, j);
    }
  }
  return CompatibilityGraph(n, sense, std::move(vertices), std::move(adj));
}

std::vector<std::vector<size_t>> connected_components(const Adjacency& g) {
  std::vector<std::vector<size_t>> out;
  std::vector<bool> seen(g.size(), false);
  for (size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<size_t> comp{s};
    seen[s] = true;
    for (size_t head = 0; head < comp.size(); ++head) {
      g.row(comp[head]).for_each([&](size_t v) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

GraphStats graph_stats(const Adjacency& g) {
  GraphStats s;
  s.vertex_count = g.size();
  s.edge_count = g.edge_count();
  for (size_t i = 0; i < g.size(); ++i) ++s.degree_histogram[g.degree(i)];
  for (const auto& c : connected_components(g)) s.component_sizes.push_back(c.size());
  s.regular = s.degree_histogram.size() <= 1;
  for (size_t i = 0; i < g.size(); ++i) {
    g.row(i).for_each([&](size_t j) {
      if (j <= i) return;
      Bits common = g.row(i) & g.row(j);
      common.keep_above(j);
      s.triangle_count += common.count();
    });
  }
  return s;
}

bool is_bipartite_component_k33(const Adjacency& g, std::span<const size_t> component) {
  if (component.size() != 6) return false;
  Bits members(g.size());
  for (size_t v : component) members.set(v);
  size_t edges = 0;
  for (size_t v : component) {
    const size_t d = (g.row(v) & members).count();
    if (d != 3) return false;
    edges += d;
  }
  if (edges != 18) return false;
  // 2-colour; K_{3,3} is the only 3-regular bipartite graph on 6 vertices.
  std::vector<int> colour(g.size(), -1);
  colour[component[0]] = 0;
  std::vector<size_t> queue{component[0]};
  for (size_t head = 0; head < queue.size(); ++head) {
    const size_t u = queue[head];
    bool ok = true;
    (g.row(u) & members).for_each([&](size_t w) {
      if (colour[w] < 0) {
        colour[w] = 1 - colour[u];
        queue.push_back(w);
      } else if (colour[w] == colour[u]) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  if (queue.size() != 6) return false;
  size_t zeros = 0;
  for (size_t v : component) zeros += colour[v] == 0;
  return zeros == 3;
}

}  // namespace diskflow
