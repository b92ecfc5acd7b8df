#pragma once

// Reference computations that avoid the library's own formulas.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "diskflow/census.hpp"

namespace oracle {

// C_m = (2m)! / ((m+1)! m!) straight from factorials.
inline mpz_class catalan_factorial(unsigned m) {
  mpz_class num, a, b;
  mpz_fac_ui(num.get_mpz_t(), 2 * m);
  mpz_fac_ui(a.get_mpz_t(), m + 1);
  mpz_fac_ui(b.get_mpz_t(), m);
  return num / (a * b);
}

// Number of Dyck words of semilength m, by walking all of them.
inline unsigned long dyck_words(int m) {
  unsigned long count = 0;
  std::function<void(int, int)> walk = [&](int open, int close) {
    if (open == m && close == m) {
      ++count;
      return;
    }
    if (open < m) walk(open + 1, close);
    if (close < open) walk(open, close + 1);
  };
  walk(0, 0);
  return count;
}

// Coefficients of T(x) = (1+6x)(1 - S)/(54x) where S is obtained by solving
// S^2 = 1 - 12x term by term.
inline std::vector<mpq_class> t_series_by_squaring(int K) {
  const int len = K + 2;
  std::vector<mpq_class> s(static_cast<size_t>(len), 0);
  s[0] = 1;
  for (int k = 1; k < len; ++k) {
    mpq_class target = k == 1 ? mpq_class(-12) : mpq_class(0);
    for (int i = 1; i < k; ++i) target -= s[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = target / 2;
  }
  // (1 - S)/x, then multiply by (1+6x)/54.
  std::vector<mpq_class> u(static_cast<size_t>(len - 1));
  for (int k = 0; k + 1 < len; ++k) u[static_cast<size_t>(k)] = -s[static_cast<size_t>(k + 1)];
  std::vector<mpq_class> out(static_cast<size_t>(K + 1));
  for (int k = 0; k <= K; ++k) {
    mpq_class c = u[static_cast<size_t>(k)];
    if (k > 0) c += 6 * u[static_cast<size_t>(k - 1)];
    out[static_cast<size_t>(k)] = c / 54;
  }
  return out;
}

inline std::vector<diskflow::Diagram> census(int n) {
  std::vector<diskflow::Diagram> out;
  diskflow::CensusOptions opts;
  opts.sink = [&](const diskflow::Diagram& d) { out.push_back(d); };
  diskflow::enumerate_diagrams(n, opts);
  return out;
}

// Pairs of lines that occur together in at least one diagram.
inline std::set<std::pair<diskflow::TouchLine, diskflow::TouchLine>> co_occurring(
    const std::vector<diskflow::Diagram>& diagrams) {
  std::set<std::pair<diskflow::TouchLine, diskflow::TouchLine>> out;
  for (const auto& d : diagrams) {
    for (const auto& x : d.lines) {
      for (const auto& y : d.lines) {
        if (x < y) out.insert({x, y});
      }
    }
  }
  return out;
}

// Node map i -> s*i + c (mod n, 1-based), s = +1 or -1.
inline int map_node(int i, int s, int c, int n) { return ((s * (i - 1) + c) % n + 2 * n) % n + 1; }

// Image of a diagram under i -> s*i + c. A reflection reverses the boundary
// orientation, so the two nearest nodes of each line trade roles.
inline diskflow::Diagram map_diagram(const diskflow::Diagram& d, int s, int c) {
  diskflow::Diagram out{d.n, {}};
  for (const auto& v : d.lines) {
    const int a = map_node(v.a, s, c, d.n);
    const int p = map_node(v.p, s, c, d.n);
    const int q = map_node(v.q, s, c, d.n);
    out.lines.push_back(s > 0 ? diskflow::TouchLine{a, p, q} : diskflow::TouchLine{a, q, p});
  }
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

// Orbit count by flood fill over the census.
inline size_t orbit_count(const std::vector<diskflow::Diagram>& diagrams, bool with_reflections) {
  std::set<diskflow::Diagram> unseen(diagrams.begin(), diagrams.end());
  size_t orbits = 0;
  while (!unseen.empty()) {
    const diskflow::Diagram d = *unseen.begin();
    ++orbits;
    for (int s : {1, -1}) {
      if (s < 0 && !with_reflections) continue;
      for (int c = 0; c < d.n; ++c) unseen.erase(map_diagram(d, s, c));
    }
  }
  return orbits;
}

// 64-bit FNV-1a.
inline unsigned long long fnv1a(const std::string& s) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace oracle
