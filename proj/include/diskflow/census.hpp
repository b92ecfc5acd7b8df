#pragma once

// Enumeration of all diagrams with n nodes.
//
// A diagram is a set of n/2 - 1 pairwise compatible touching lines, i.e. a
// maximal clique of the compatibility graph. Three independent routes:
//
//   enumerate_diagrams       exact-size clique search over adjacency bitsets
//   maximal_cliques_generic  pivoting Bron-Kerbosch, no size assumption
//   oracle_enumerate         recursive disk splitting along touching lines

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diskflow/combinat.hpp"
#include "diskflow/geometry.hpp"
#include "diskflow/graph.hpp"

namespace diskflow {

struct Diagram {
  int n = 0;
  std::vector<TouchLine> lines;  // sorted, canonical order

  /// Touch nodes of the lines, ascending.
  std::vector<NodeId> b_nodes() const;
  /// Every other node, ascending.
  std::vector<NodeId> a_nodes() const;

  friend auto operator<=>(const Diagram&, const Diagram&) = default;
};

/// Sorts the lines and builds the diagram without validation.
Diagram make_diagram(int n, std::vector<TouchLine> lines);

/// Reason `d` is not a valid diagram, or nullopt.
std::optional<std::string> diagram_error(const Diagram& d);

enum class Enumerator { specialized, generic, oracle };
const char* to_string(Enumerator e);

using DiagramSink = std::function<void(const Diagram&)>;

struct CensusOptions {
  int workers = 1;
  DiagramSink sink;  // optional; called in canonical order
  /// Called after each finished partition with (finished, total).
  std::function<void(size_t, size_t)> progress;
};

struct CensusResult {
  int n = 0;
  uint64_t count = 0;
  double elapsed_seconds = 0.0;
  Enumerator enumerator = Enumerator::specialized;
  std::map<size_t, uint64_t> clique_sizes;  // size -> number of maximal cliques
  /// Specialized search only: maximal cliques smaller than n/2 - 1 met while
  /// pruning (a lower bound), and the first one as text.
  uint64_t undersized_maximal = 0;
  std::string undersized_example;
};

struct CensusLimits {
  int specialized_max_n = 18;
  int generic_max_n = 10;
  int oracle_max_n = 10;
  int orbits_max_n = 14;
};

/// Every diagram of the compatibility graph, each once, in lexicographic
/// order of their sorted vertex indices. The search takes lines in increasing
/// touch node order and prunes any branch whose remaining distinct touch nodes
/// cannot complete n/2 - 1 lines. Throws std::logic_error if a clique of the
/// target size is extendable. Smaller maximal cliques do exist from n = 12 on
/// (e.g. (1,3,3) (4,6,6) (7,9,9) (10,12,12)); they are tallied in the result.
CensusResult enumerate_diagrams(const CompatibilityGraph& g, const CensusOptions& options = {});
CensusResult enumerate_diagrams(int n, const CensusOptions& options = {});

/// All maximal cliques via Bron-Kerbosch with Tomita pivoting. Throws
/// std::invalid_argument if n exceeds max_n.
CensusResult maximal_cliques_generic(int n, const DiagramSink& sink = {}, int max_n = 10);

/// Every diagram generated by recursively splitting the disk along the
/// touching line met first from node 1 (or through node 1), sorted. n >= 2.
std::vector<Diagram> oracle_enumerate(int n, int max_n = 10);

/// Closed-form number of diagrams containing `v`:
/// 3^(n/2-2) C_(k/2-1) C_(l/2-1) C_(m/2-1) with (k, l, m) = region_sizes(v).
BigInt vertex_multiplicity(const TouchLine& v, int n);

/// Number of diagrams containing each vertex, counted from the census.
std::vector<uint64_t> line_membership_counts(const CompatibilityGraph& g, int workers = 1);

/// Census grouped by b-node set. For n <= 10 every (n/2-1)-subset appears,
/// with 0 where no diagram exists; larger n lists only non-zero sets.
std::map<std::vector<NodeId>, uint64_t> b_node_distribution(int n, int workers = 1);

}  // namespace diskflow
