#include "diskflow/orbits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace diskflow {

Diagram apply_to_diagram(const GroupElement& g, const Diagram& d) {
  std::vector<TouchLine> lines;
  lines.reserve(d.lines.size());
  for (const auto& v : d.lines) lines.push_back(apply_to_line(g, v, d.n));
  return make_diagram(d.n, std::move(lines));
}

Diagram canonical_form(const Diagram& d, GroupKind group) {
  Diagram best = d;
  for (const auto& g : group_elements(d.n, group)) {
    Diagram image = apply_to_diagram(g, d);
    if (image < best) best = std::move(image);
  }
  return best;
}

std::vector<Diagram> orbit_of(const Diagram& d, GroupKind group) {
  std::set<Diagram> images;
  for (const auto& g : group_elements(d.n, group)) images.insert(apply_to_diagram(g, d));
  return {images.begin(), images.end()};
}

OrbitRecord orbit_record(const Diagram& d, GroupKind group) {
  OrbitRecord r;
  r.representative = canonical_form(d, group);
  const auto elements = group_elements(d.n, group);
  int fixed = 0;
  for (const auto& g : elements) {
    if (apply_to_diagram(g, d) == d) ++fixed;
  }
  r.stabilizer_order = fixed;
  r.orbit_size = static_cast<int>(elements.size()) / fixed;
  r.rotation_period = d.n;
  for (int c = 1; c < d.n; ++c) {
    if (apply_to_diagram({Transform::rotation, c}, d) == d) {
      r.rotation_period = c;
      break;
    }
  }
  r.rotation_stabilizer_order = d.n / r.rotation_period;
  for (int t = 0; t < d.n; ++t) {
    if (apply_to_diagram({Transform::reflection, t}, d) == d) {
      r.reflection_invariant = true;
      break;
    }
  }
  return r;
}

uint64_t OrbitSummary::orbits(GroupKind g) const {
  switch (g) {
    case GroupKind::trivial:
      return census_count;
    case GroupKind::rotations:
      return rotation_orbits;
    case GroupKind::full:
      return full_orbits;
  }
  return 0;
}

long long OrbitSummary::burnside_count(GroupKind g) const {
  if (g == GroupKind::trivial) return static_cast<long long>(census_count);
  const uint64_t order = g == GroupKind::rotations ? static_cast<uint64_t>(n) : 2 * static_cast<uint64_t>(n);
  const uint64_t fixed = g == GroupKind::rotations ? rotation_fixed_points : full_fixed_points;
  if (fixed % order != 0) return -1;
  return static_cast<long long>(fixed / order);
}

OrbitSummary orbit_counts(int n, int workers, int max_n) {
  if (n > max_n) {
    throw std::invalid_argument("orbit_counts: n=" + std::to_string(n) + " exceeds bound " +
                                std::to_string(max_n));
  }
  const auto graph = build_graph(n, Sense::compatibility);
  const auto elements = group_elements(n, GroupKind::full);

  // Vertex permutation of every group element, in graph index space. Sorted
  // index vectors compare exactly like sorted line lists.
  std::vector<std::vector<uint16_t>> perm(elements.size(), std::vector<uint16_t>(graph.size()));
  for (size_t e = 0; e < elements.size(); ++e) {
    for (size_t i = 0; i < graph.size(); ++i) {
      const int j = graph.index_of(apply_to_line(elements[e], graph.vertices()[i], n));
      if (j < 0) throw std::logic_error("group element maps a line outside the vertex set");
      perm[e][i] = static_cast<uint16_t>(j);
    }
  }

  OrbitSummary s;
  s.n = n;
  std::set<std::vector<uint16_t>> full_forms;
  std::set<std::vector<uint16_t>> rotation_forms;
  std::vector<uint16_t> current;
  std::vector<uint16_t> image;
  std::vector<uint16_t> best_full;
  std::vector<uint16_t> best_rot;

  CensusOptions opts;
  opts.workers = workers;
  opts.sink = [&](const Diagram& d) {
    ++s.census_count;
    current.clear();
    for (const auto& v : d.lines) current.push_back(static_cast<uint16_t>(graph.index_of(v)));
    best_full = current;
    best_rot = current;
    int fixed_rot = 0;
    int fixed_full = 0;
    for (size_t e = 0; e < elements.size(); ++e) {
      image.clear();
      for (uint16_t i : current) image.push_back(perm[e][i]);
      std::sort(image.begin(), image.end());
      const bool rotation = elements[e].kind == Transform::rotation;
      if (image == current) {
        ++fixed_full;
        if (rotation) ++fixed_rot;
      }
      if (image < best_full) best_full = image;
      if (rotation && image < best_rot) best_rot = image;
    }
    s.full_fixed_points += static_cast<uint64_t>(fixed_full);
    s.rotation_fixed_points += static_cast<uint64_t>(fixed_rot);
    if (full_forms.insert(best_full).second) {
      const int size = 2 * n / fixed_full;
      ++s.full_histogram[size];
      s.full_size_sum += static_cast<uint64_t>(size);
    }
    if (rotation_forms.insert(best_rot).second) {
      const int size = n / fixed_rot;
      ++s.rotation_histogram[size];
      s.rotation_size_sum += static_cast<uint64_t>(size);
    }
  };
  enumerate_diagrams(graph, opts);
  s.full_orbits = full_forms.size();
  s.rotation_orbits = rotation_forms.size();
  return s;
}

bool burnside_check(const OrbitSummary& summary, GroupKind group) {
  const long long b = summary.burnside_count(group);
  return b >= 0 && static_cast<uint64_t>(b) == summary.orbits(group);
}

bool burnside_check(int n, GroupKind group, int workers, int max_n) {
  return burnside_check(orbit_counts(n, workers, max_n), group);
}

}  // namespace diskflow
