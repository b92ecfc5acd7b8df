#pragma once

// The compatibility graph over touching lines. Two lines are adjacent in the
// compatibility sense when they can occur together in one diagram; the
// conflict sense is the exact complement on the same vertex list.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "diskflow/bitset.hpp"
#include "diskflow/geometry.hpp"

namespace diskflow {

enum class Sense { compatibility, conflict };

const char* to_string(Sense s);

/// Symmetric, irreflexive adjacency stored as one bitset row per vertex.
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(size_t vertex_count);

  size_t size() const { return rows_.size(); }
  void connect(size_t i, size_t j);
  bool adjacent(size_t i, size_t j) const { return rows_[i].test(j); }
  const Bits& row(size_t i) const { return rows_[i]; }
  size_t degree(size_t i) const { return rows_[i].count(); }
  size_t edge_count() const;
  /// Complement graph (no self loops).
  Adjacency complement() const;

 private:
  std::vector<Bits> rows_;
};

class CompatibilityGraph {
 public:
  CompatibilityGraph(int n, Sense sense, std::vector<TouchLine> vertices, Adjacency adjacency);

  int n() const { return n_; }
  Sense sense() const { return sense_; }
  const std::vector<TouchLine>& vertices() const { return vertices_; }
  const Adjacency& adjacency() const { return adjacency_; }
  size_t size() const { return vertices_.size(); }
  bool adjacent(size_t i, size_t j) const { return adjacency_.adjacent(i, j); }

  /// Position of `v` in the canonical vertex order, or -1.
  int index_of(const TouchLine& v) const;

 private:
  int n_;
  Sense sense_;
  std::vector<TouchLine> vertices_;
  Adjacency adjacency_;
  std::vector<int> lookup_;  // a*n*n + p*n + q (0-based) -> index
};

/// All touching lines for n nodes, sorted lexicographically by (a, p, q).
/// There are n^2 (n-2) / 8 of them. Throws for odd n or n < 4.
std::vector<TouchLine> build_vertices(int n);

/// Whether two distinct lines can appear in the same diagram: their touch
/// nodes differ and the second line (touch node and both end gaps) fits
/// inside a single region of the first. Symmetric.
bool compatible(const TouchLine& v1, const TouchLine& v2, int n);

/// Case-based edge rules: no edge on a shared touch node or for an
/// (a,b,b)/(b,a,a) pair; an edge for disjoint node sets whose convex hulls are
/// disjoint; an edge for three shared-gap patterns. This is a strict sub-relation of compatible() for
/// n >= 8 and is kept for comparison.
bool compatible_by_rules(const TouchLine& v1, const TouchLine& v2, int n);

/// Whether two node sets (disjoint, on the circle) interleave, i.e. their
/// convex hulls intersect.
bool hulls_intersect(std::span<const NodeId> first, std::span<const NodeId> second, int n);

CompatibilityGraph build_graph(int n, Sense sense);

struct GraphStats {
  size_t vertex_count = 0;
  size_t edge_count = 0;
  std::map<size_t, size_t> degree_histogram;  // degree -> number of vertices
  std::vector<size_t> component_sizes;        // in order of smallest member
  bool regular = false;
  size_t triangle_count = 0;

  size_t component_count() const { return component_sizes.size(); }
};

GraphStats graph_stats(const Adjacency& g);
inline GraphStats graph_stats(const CompatibilityGraph& g) { return graph_stats(g.adjacency()); }

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<size_t>> connected_components(const Adjacency& g);

/// Whether the induced subgraph on `component` is K_{3,3}.
bool is_bipartite_component_k33(const Adjacency& g, std::span<const size_t> component);

}  // namespace diskflow
