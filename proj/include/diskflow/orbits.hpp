#pragma once

// Orbits of the diagram census under rotations and under the full dihedral
// group of order 2n.
//
// The symmetry group is the dihedral group: n rotations plus the n
// reflections i -> t - i.

#include <cstdint>
#include <map>
#include <vector>

#include "diskflow/census.hpp"
#include "diskflow/geometry.hpp"

namespace diskflow {

Diagram apply_to_diagram(const GroupElement& g, const Diagram& d);

/// Lexicographically smallest image of `d` under the group.
Diagram canonical_form(const Diagram& d, GroupKind group);

/// The distinct images of `d`, sorted.
std::vector<Diagram> orbit_of(const Diagram& d, GroupKind group);

struct OrbitRecord {
  Diagram representative;          // canonical form
  int orbit_size = 0;
  int stabilizer_order = 0;        // orbit_size * stabilizer_order = |group|
  int rotation_period = 0;         // least c > 0 with rotation c fixing d; divides n
  int rotation_stabilizer_order = 0;  // n / rotation_period
  bool reflection_invariant = false;  // fixed by at least one reflection
};

OrbitRecord orbit_record(const Diagram& d, GroupKind group);

struct OrbitSummary {
  int n = 0;
  uint64_t census_count = 0;
  uint64_t full_orbits = 0;      // |R_n|
  uint64_t rotation_orbits = 0;  // |R_n^0|
  std::map<int, uint64_t> full_histogram;      // orbit size -> number of orbits
  std::map<int, uint64_t> rotation_histogram;
  uint64_t full_size_sum = 0;      // sum of orbit sizes, equals census_count
  uint64_t rotation_size_sum = 0;
  uint64_t full_fixed_points = 0;      // sum over g of |Fix(g)|
  uint64_t rotation_fixed_points = 0;

  uint64_t orbits(GroupKind g) const;
  /// Burnside average (1/|G|) sum |Fix(g)|, or -1 if it is not an integer.
  long long burnside_count(GroupKind g) const;
};

/// Streams the census once and counts canonical forms for both groups.
/// Throws std::invalid_argument if n exceeds max_n.
OrbitSummary orbit_counts(int n, int workers = 1, int max_n = 14);

/// Burnside average over the census equals the canonical-form orbit count.
bool burnside_check(int n, GroupKind group, int workers = 1, int max_n = 14);
bool burnside_check(const OrbitSummary& summary, GroupKind group);

}  // namespace diskflow
