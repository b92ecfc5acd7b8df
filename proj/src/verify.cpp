#include "diskflow/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "diskflow/census.hpp"
#include "diskflow/combinat.hpp"
#include "diskflow/graph.hpp"
#include "diskflow/orbits.hpp"

namespace diskflow {

const char* to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::identities: return "identities";
    case Suite::graph: return "graph";
    case Suite::census: return "census";
    case Suite::orbits: return "orbits";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::all, Suite::identities, Suite::graph, Suite::census, Suite::orbits}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const Check* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = to_string(suite);
  doc["max_n"] = max_n;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  if (const Check* f = first_failure()) {
    doc["first_failure"] = f->name;
  } else {
    doc["first_failure"] = nullptr;
  }
  return doc.dump(2);
}

namespace {

// Runs `body`, which fills in the detail and returns the verdict. Exceptions
// count as failures.
void check(VerifyReport& report, std::string name, const std::function<bool(std::string&)>& body) {
  Check c;
  c.name = std::move(name);
  try {
    c.passed = body(c.detail);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  report.checks.push_back(std::move(c));
}

std::string str(const BigInt& v) { return v.get_str(); }

void identities(VerifyReport& r, int max_n) {
  check(r, "catalan convolution", [&](std::string& detail) {
    for (int n = 1; n <= max_n; ++n) {
      BigInt sum = 0;
      for (int i = 0; i <= n; ++i) sum += catalan(i) * catalan(n - i);
      if (sum != catalan(n + 1)) {
        detail = "fails at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "1 <= n <= " + std::to_string(max_n);
    return true;
  });
  check(r, "catalan triple sum", [&](std::string& detail) {
    for (int n = 1; n <= max_n; ++n) {
      if (catalan_triple_sum(n) != catalan(n + 1) - catalan(n)) {
        detail = "fails at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "1 <= n <= " + std::to_string(max_n) + "; n=3 gives " + str(catalan_triple_sum(3));
    return catalan_triple_sum(3) == 9;
  });
  check(r, "alpha and T recurrences", [&](std::string& detail) {
    for (int n = 4; n <= max_n; n += 2) {
      if (!alpha_recurrence_check(n) || !t_recurrence_check(n)) {
        detail = "fails at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "even 4 <= n <= " + std::to_string(max_n);
    return true;
  });
  check(r, "a275607 closed form", [&](std::string& detail) {
    const int top = std::max(1, max_n / 2);
    for (int n = 1; n <= top; ++n) {
      if (a275607(n) != t_count(2 * n + 2)) {
        detail = "fails at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "1 <= n <= " + std::to_string(top);
    return true;
  });
  check(r, "generating function", [&](std::string& detail) {
    const int top = std::max(1, max_n / 2);
    const auto coeffs = series_coeffs(top);
    if (coeffs[0] != BigRational(1, 9)) {
      detail = "constant term " + coeffs[0].get_str();
      return false;
    }
    for (int k = 1; k <= top; ++k) {
      const auto& c = coeffs[static_cast<size_t>(k)];
      if (c.get_den() != 1 || c.get_num() != t_count(2 * k)) {
        detail = "coefficient " + std::to_string(k) + " is " + c.get_str();
        return false;
      }
    }
    detail = "constant 1/9, coefficients 1.." + std::to_string(top);
    return true;
  });
}

std::set<size_t> support(const GraphStats& s) {
  std::set<size_t> out;
  for (const auto& [degree, count] : s.degree_histogram) out.insert(degree);
  return out;
}

void graph(VerifyReport& r, int max_n) {
  check(r, "vertex count", [&](std::string& detail) {
    for (int n = 4; n <= max_n; n += 2) {
      const size_t expected = static_cast<size_t>(n) * n * (n - 2) / 8;
      if (build_vertices(n).size() != expected) {
        detail = "fails at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "even 4 <= n <= " + std::to_string(max_n);
    return true;
  });
  if (max_n >= 4) {
    check(r, "conflict graph n=4 is K4", [&](std::string& detail) {
      const auto s = graph_stats(build_graph(4, Sense::conflict));
      detail = std::to_string(s.vertex_count) + " vertices, " + std::to_string(s.edge_count) + " edges";
      return s.vertex_count == 4 && s.edge_count == 6;
    });
  }
  if (max_n >= 6) {
    check(r, "compatibility graph n=6 is 3 K33", [&](std::string& detail) {
      const auto g = build_graph(6, Sense::compatibility);
      const auto s = graph_stats(g);
      const auto comps = connected_components(g.adjacency());
      bool all_k33 = comps.size() == 3;
      for (const auto& c : comps) all_k33 = all_k33 && is_bipartite_component_k33(g.adjacency(), c);
      detail = std::to_string(s.vertex_count) + " vertices, " + std::to_string(s.edge_count) + " edges, " +
               std::to_string(comps.size()) + " components, " + std::to_string(s.triangle_count) + " triangles";
      return s.vertex_count == 18 && s.edge_count == 27 && all_k33 && s.triangle_count == 0;
    });
  }
  if (max_n >= 8) {
    check(r, "degree support {6,15} at n=8", [&](std::string& detail) {
      const auto compat = graph_stats(build_graph(8, Sense::compatibility));
      const auto conflict = graph_stats(build_graph(8, Sense::conflict));
      const std::set<size_t> target{6, 15};
      const bool in_compat = support(compat) == target;
      const bool in_conflict = support(conflict) == target;
      detail = std::string("compatibility graph ") + (in_compat ? "has" : "lacks") + " it, conflict graph " +
               (in_conflict ? "has" : "lacks") + " it; compatibility graph has " +
               std::to_string(compat.component_count()) + " component(s)";
      return in_compat != in_conflict && compat.component_count() == 1;
    });
  }
  check(r, "conflict graph connected", [&](std::string& detail) {
    for (int n = 6; n <= std::min(max_n, 12); n += 2) {
      if (graph_stats(build_graph(n, Sense::conflict)).component_count() != 1) {
        detail = "disconnected at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "even 6 <= n <= " + std::to_string(std::min(max_n, 12));
    return true;
  });
  check(r, "regularity only at n=4,6", [&](std::string& detail) {
    std::string regular;
    bool ok = true;
    for (int n = 4; n <= std::min(max_n, 12); n += 2) {
      const bool reg = graph_stats(build_graph(n, Sense::compatibility)).regular;
      if (reg) regular += (regular.empty() ? "" : ",") + std::to_string(n);
      ok = ok && reg == (n <= 6);
    }
    detail = "regular at n in {" + regular + "}";
    return ok;
  });
}

void census(VerifyReport& r, int max_n, int workers) {
  for (int n = 4; n <= max_n; n += 2) {
    check(r, "census n=" + std::to_string(n), [&](std::string& detail) {
      CensusOptions opts;
      opts.workers = workers;
      const auto result = enumerate_diagrams(n, opts);
      detail = std::to_string(result.count) + " diagrams, formula " + str(t_count(n));
      return BigInt(std::to_string(result.count)) == t_count(n);
    });
  }
  for (int n = 4; n <= std::min(max_n, 10); n += 2) {
    check(r, "maximal cliques uniform n=" + std::to_string(n), [&](std::string& detail) {
      const auto result = maximal_cliques_generic(n);
      std::ostringstream sizes;
      for (const auto& [size, count] : result.clique_sizes) sizes << size << ":" << count << " ";
      detail = "sizes " + sizes.str();
      return result.clique_sizes.size() == 1 &&
             result.clique_sizes.begin()->first == static_cast<size_t>(n / 2 - 1) &&
             BigInt(std::to_string(result.count)) == t_count(n);
    });
    check(r, "oracle equivalence n=" + std::to_string(n), [&](std::string& detail) {
      const auto oracle = oracle_enumerate(n);
      std::vector<Diagram> cliques;
      CensusOptions opts;
      opts.sink = [&](const Diagram& d) { cliques.push_back(d); };
      enumerate_diagrams(n, opts);
      std::sort(cliques.begin(), cliques.end());
      std::vector<Diagram> diff;
      std::set_symmetric_difference(oracle.begin(), oracle.end(), cliques.begin(), cliques.end(),
                                    std::back_inserter(diff));
      detail = std::to_string(oracle.size()) + " oracle, " + std::to_string(cliques.size()) + " census, " +
               std::to_string(diff.size()) + " differ";
      return diff.empty();
    });
  }
  for (int n = 4; n <= std::min(max_n, 12); n += 2) {
    check(r, "line multiplicity n=" + std::to_string(n), [&](std::string& detail) {
      const auto g = build_graph(n, Sense::compatibility);
      const auto counts = line_membership_counts(g, workers);
      BigInt total = 0;
      for (size_t i = 0; i < g.size(); ++i) {
        const BigInt expected = vertex_multiplicity(g.vertices()[i], n);
        if (expected != BigInt(std::to_string(counts[i]))) {
          detail = "mismatch at " + to_string(g.vertices()[i]);
          return false;
        }
        total += expected;
      }
      detail = "sum " + str(total);
      return total == (n / 2 - 1) * t_count(n);
    });
  }
  if (max_n >= 6) {
    check(r, "b-node distribution n=6", [&](std::string& detail) {
      const auto dist = b_node_distribution(6, workers);
      uint64_t total = 0;
      for (const auto& [set, count] : dist) total += count;
      const uint64_t c12 = dist.at({1, 2}), c13 = dist.at({1, 3}), c14 = dist.at({1, 4});
      detail = "{1,2}:" + std::to_string(c12) + " {1,3}:" + std::to_string(c13) + " {1,4}:" + std::to_string(c14) +
               " total " + std::to_string(total);
      return c12 == 1 && c13 == 2 && c14 == 3 && total == 27;
    });
  }
}

void orbits(VerifyReport& r, int max_n, int workers) {
  for (int n = 4; n <= max_n; n += 2) {
    check(r, "orbits n=" + std::to_string(n), [&](std::string& detail) {
      const auto s = orbit_counts(n, workers, std::max(max_n, 14));
      detail = "full " + std::to_string(s.full_orbits) + ", rotations " + std::to_string(s.rotation_orbits);
      bool ok = burnside_check(s, GroupKind::full) && burnside_check(s, GroupKind::rotations) &&
                s.full_size_sum == s.census_count && s.rotation_size_sum == s.census_count &&
                BigInt(std::to_string(s.census_count)) == t_count(n);
      if (n == 4) ok = ok && s.full_orbits == 1 && s.rotation_orbits == 1;
      if (n == 6) ok = ok && s.full_orbits == 4 && s.rotation_orbits == 6;
      return ok;
    });
  }
}

}  // namespace

VerifyReport run_suite(Suite suite, const VerifyOptions& options) {
  VerifyReport r;
  r.suite = suite;
  r.max_n = options.max_n;
  if (suite == Suite::all || suite == Suite::identities) identities(r, options.max_n);
  if (suite == Suite::all || suite == Suite::graph) graph(r, options.max_n);
  if (suite == Suite::all || suite == Suite::census) census(r, options.max_n, options.workers);
  if (suite == Suite::all || suite == Suite::orbits) orbits(r, options.max_n, options.workers);
  return r;
}

}  // namespace diskflow
