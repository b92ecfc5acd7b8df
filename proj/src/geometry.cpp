#include "diskflow/geometry.hpp"

#include <stdexcept>

namespace diskflow {

std::optional<std::string> touch_line_error(NodeId a, NodeId p, NodeId q, int n) {
  if (n < 2 || n % 2 != 0) return "node count must be even and >= 2";
  for (NodeId x : {a, p, q}) {
    if (x < 1 || x > n) return "node " + std::to_string(x) + " outside 1.." + std::to_string(n);
  }
  if (a == p || a == q) return "touch node coincides with a far node";
  if ((a - p) % 2 != 0 || (a - q) % 2 != 0) return "parity mismatch";
  if (p != q && cw_distance(a, p, n) > cw_distance(a, q, n)) {
    return "triple is not clockwise oriented";
  }
  return std::nullopt;
}

bool is_touch_line(NodeId a, NodeId p, NodeId q, int n) {
  return !touch_line_error(a, p, q, n).has_value();
}

TouchLine make_touch_line(NodeId a, NodeId p, NodeId q, int n) {
  if (auto err = touch_line_error(a, p, q, n)) {
    throw std::invalid_argument("invalid touching line (" + std::to_string(a) + "," +
                                std::to_string(p) + "," + std::to_string(q) + "): " + *err);
  }
  return TouchLine{a, p, q};
}

Region region_of_node(const TouchLine& v, NodeId node, int n) {
  const int d = cw_distance(v.a, node, n);
  if (d < cw_distance(v.a, v.p, n)) return Region::clockwise;
  if (d <= cw_distance(v.a, v.q, n)) return Region::far;
  return Region::counterclockwise;
}

bool region_has_gap(const TouchLine& v, Region region, int gap, int n) {
  // Gap j is the arc from node j to node j+1; measure its start from a.
  const int d = cw_distance(v.a, gap, n);
  const int cw_end = cw_distance(v.a, cw_end_gap(v, n), n);
  const int ccw_end = cw_distance(v.a, ccw_end_gap(v, n), n);
  switch (region) {
    case Region::clockwise:
      return d <= cw_end;
    case Region::far:
      return d >= cw_end && d <= ccw_end;
    case Region::counterclockwise:
      return d >= ccw_end;
  }
  return false;
}

RegionSizes region_sizes(const TouchLine& v, int n) {
  return RegionSizes{cw_distance(v.p, v.q, n) + 2, cw_distance(v.a, v.p, n),
                     cw_distance(v.q, v.a, n)};
}

NodeId apply_to_node(const GroupElement& g, NodeId i, int n) {
  if (g.kind == Transform::rotation) return wrap(static_cast<long>(i) + g.param, n);
  return wrap(static_cast<long>(g.param) - i, n);
}

TouchLine apply_to_line(const GroupElement& g, const TouchLine& v, int n) {
  const NodeId a = apply_to_node(g, v.a, n);
  const NodeId p = apply_to_node(g, v.p, n);
  const NodeId q = apply_to_node(g, v.q, n);
  if (g.kind == Transform::rotation) return TouchLine{a, p, q};
  return TouchLine{a, q, p};
}

GroupElement compose(const GroupElement& outer, const GroupElement& inner, int n) {
  auto mod = [n](long x) { return static_cast<int>(((x % n) + n) % n); };
  const bool outer_rot = outer.kind == Transform::rotation;
  const bool inner_rot = inner.kind == Transform::rotation;
  if (outer_rot && inner_rot) return {Transform::rotation, mod(outer.param + inner.param)};
  if (outer_rot) return {Transform::reflection, mod(inner.param + outer.param)};
  if (inner_rot) return {Transform::reflection, mod(outer.param - inner.param)};
  return {Transform::rotation, mod(outer.param - inner.param)};
}

std::vector<GroupElement> group_elements(int n, GroupKind kind) {
  std::vector<GroupElement> out;
  if (kind == GroupKind::trivial) {
    out.push_back({Transform::rotation, 0});
    return out;
  }
  for (int c = 0; c < n; ++c) out.push_back({Transform::rotation, c});
  if (kind == GroupKind::full) {
    for (int t = 0; t < n; ++t) out.push_back({Transform::reflection, t});
  }
  return out;
}

std::string to_string(const TouchLine& v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.p) + "," + std::to_string(v.q) + ")";
}

std::string to_string(const GroupElement& g) {
  return (g.kind == Transform::rotation ? "rot" : "ref") + std::to_string(g.param);
}

}  // namespace diskflow
