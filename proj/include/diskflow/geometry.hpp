#pragma once

// Circle-node arithmetic and the (a, p, q) coding of touching lines.
//
// Nodes are labelled 1..n clockwise and all arithmetic is cyclic with
// representatives in 1..n. Gap j is the boundary arc between node j and node
// j+1. A touching line (a, p, q) touches the circle at node a and leaves the
// boundary through gap p-1 and gap q. Cutting along it leaves three regions:
//
//   clockwise         nodes a+1 .. p-1, gaps a .. p-1
//   far               nodes p .. q,     gaps p-1 .. q
//   counterclockwise  nodes q+1 .. a-1, gaps q .. a-1
//
// Gap p-1 and gap q are each shared by two regions (the line ends inside
// them). Every region holds an odd number of nodes.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace diskflow {

using NodeId = int;

struct TouchLine {
  NodeId a = 0;
  NodeId p = 0;
  NodeId q = 0;

  bool degenerate() const { return p == q; }
  friend auto operator<=>(const TouchLine&, const TouchLine&) = default;
};

enum class Region { clockwise, far, counterclockwise };

struct RegionSizes {
  int k = 0;  // far region, including its newborn node
  int l = 0;  // clockwise region
  int m = 0;  // counterclockwise region
  friend bool operator==(const RegionSizes&, const RegionSizes&) = default;
};

enum class Transform { rotation, reflection };

/// Rotation by `param` nodes (i -> i + param) or reflection i -> param - i.
struct GroupElement {
  Transform kind = Transform::rotation;
  int param = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

enum class GroupKind { trivial, rotations, full };

/// Representative of i modulo n in 1..n.
constexpr NodeId wrap(long i, int n) {
  long r = (i - 1) % n;
  if (r < 0) r += n;
  return static_cast<NodeId>(r + 1);
}

/// (j - i) mod n, in 0..n-1.
constexpr int cw_distance(NodeId i, NodeId j, int n) {
  int d = (j - i) % n;
  return d < 0 ? d + n : d;
}

/// Reason the triple is not a touching line for n nodes, or nullopt if valid.
std::optional<std::string> touch_line_error(NodeId a, NodeId p, NodeId q, int n);

bool is_touch_line(NodeId a, NodeId p, NodeId q, int n);

/// Validated constructor; throws std::invalid_argument with the reason.
TouchLine make_touch_line(NodeId a, NodeId p, NodeId q, int n);

/// Gap through which the line leaves on the clockwise side of a (gap p-1).
inline int cw_end_gap(const TouchLine& v, int n) { return wrap(v.p - 1, n); }
/// Gap through which the line leaves on the counterclockwise side of a (gap q).
inline int ccw_end_gap(const TouchLine& v, int) { return v.q; }

/// Region of `v` containing node `node` (node must differ from v.a).
Region region_of_node(const TouchLine& v, NodeId node, int n);

/// Whether gap `gap` lies (at least partly) on the boundary of `region`.
bool region_has_gap(const TouchLine& v, Region region, int gap, int n);

/// Node counts (plus newborn) of the three pieces; k + l + m = n + 2.
RegionSizes region_sizes(const TouchLine& v, int n);

NodeId apply_to_node(const GroupElement& g, NodeId i, int n);

/// Image of a line; reflections swap p and q to keep the triple clockwise.
TouchLine apply_to_line(const GroupElement& g, const TouchLine& v, int n);

/// outer o inner, i.e. the map x -> outer(inner(x)).
GroupElement compose(const GroupElement& outer, const GroupElement& inner, int n);

/// Rotations first (param 0..n-1), then reflections (param 0..n-1).
std::vector<GroupElement> group_elements(int n, GroupKind kind);

std::string to_string(const TouchLine& v);
std::string to_string(const GroupElement& g);

}  // namespace diskflow
