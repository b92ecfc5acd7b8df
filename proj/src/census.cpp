#include "diskflow/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace diskflow {

std::vector<NodeId> Diagram::b_nodes() const {
  std::vector<NodeId> out;
  out.reserve(lines.size());
  for (const auto& v : lines) out.push_back(v.a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> Diagram::a_nodes() const {
  std::vector<bool> touch(static_cast<size_t>(n) + 1, false);
  for (const auto& v : lines) touch[static_cast<size_t>(v.a)] = true;
  std::vector<NodeId> out;
  for (NodeId i = 1; i <= n; ++i) {
    if (!touch[static_cast<size_t>(i)]) out.push_back(i);
  }
  return out;
}

Diagram make_diagram(int n, std::vector<TouchLine> lines) {
  std::sort(lines.begin(), lines.end());
  return Diagram{n, std::move(lines)};
}

std::optional<std::string> diagram_error(const Diagram& d) {
  if (d.n < 2 || d.n % 2 != 0) return "node count must be even and >= 2";
  if (static_cast<int>(d.lines.size()) != d.n / 2 - 1) {
    return "expected " + std::to_string(d.n / 2 - 1) + " lines, got " +
           std::to_string(d.lines.size());
  }
  for (const auto& v : d.lines) {
    if (auto err = touch_line_error(v.a, v.p, v.q, d.n)) return to_string(v) + ": " + *err;
  }
  for (size_t i = 0; i < d.lines.size(); ++i) {
    for (size_t j = i + 1; j < d.lines.size(); ++j) {
      const auto& x = d.lines[i];
      const auto& y = d.lines[j];
      if (x == y) return "duplicate line " + to_string(x);
      if (x.a == y.a) return "rule 1a violation: " + to_string(x) + " and " + to_string(y) + " share touch node";
      if (!compatible(x, y, d.n)) return "incompatible lines " + to_string(x) + " and " + to_string(y);
    }
  }
  return std::nullopt;
}

const char* to_string(Enumerator e) {
  switch (e) {
    case Enumerator::specialized:
      return "specialized";
    case Enumerator::generic:
      return "generic";
    case Enumerator::oracle:
      return "oracle";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Diagram diagram_from_indices(const CompatibilityGraph& g, const std::vector<size_t>& indices) {
  Diagram d;
  d.n = g.n();
  d.lines.reserve(indices.size());
  for (size_t i : indices) d.lines.push_back(g.vertices()[i]);
  return d;
}

// Exact-size clique search. One instance per worker; the graph is shared.
class ExactCliqueSearch {
 public:
  explicit ExactCliqueSearch(const CompatibilityGraph& g)
      : g_(g),
        target_(static_cast<size_t>(g.n() / 2 - 1)),
        touch_masks_(static_cast<size_t>(g.n()) + 1, Bits(g.size())),
        cand_(target_ + 1, Bits(g.size())),
        common_(target_ + 1, Bits(g.size())) {
    for (size_t i = 0; i < g.size(); ++i) touch_masks_[static_cast<size_t>(g.vertices()[i].a)].set(i);
  }

  template <typename Emit>
  void run_from(size_t first, Emit&& emit) {
    chosen_.clear();
    cand_[1] = g_.adjacency().row(first);
    cand_[1].keep_above(first);
    common_[1] = g_.adjacency().row(first);
    if (!viable(1, first)) return;
    chosen_.push_back(first);
    extend(1, emit);
  }

 /// Undersized maximal cliques met since the last call; resets the tally.
  std::pair<uint64_t, std::string> take_undersized() {
    auto out = std::make_pair(undersized_, std::move(undersized_example_));
    undersized_ = 0;
    undersized_example_.clear();
    return out;
  }

 private:
  // Distinct touch nodes among the candidates of `depth`.
  size_t distinct_touch(size_t depth) const {
    size_t c = 0;
    for (size_t a = 1; a < touch_masks_.size(); ++a) c += cand_[depth].intersects(touch_masks_[a]);
    return c;
  }

  // Whether the clique at `depth` may still grow to the target size. A clique
  // that cannot, and has no common neighbour at all, is a maximal clique of
  // the wrong size; those are tallied, not emitted. Detection is a lower
  // bound since pruning may stop short of the full clique.
  bool viable(size_t depth, size_t next) {
    if (depth == target_) return true;
    if (depth + distinct_touch(depth) >= target_) return true;
    if (!common_[depth].any()) {
      if (undersized_ == 0) {
        for (size_t v : chosen_) undersized_example_ += to_string(g_.vertices()[v]) + " ";
        undersized_example_ += to_string(g_.vertices()[next]);
      }
      ++undersized_;
    }
    return false;
  }

  template <typename Emit>
  void extend(size_t depth, Emit& emit) {
    if (depth == target_) {
      if (common_[depth].any()) {
        throw std::logic_error("clique of size " + std::to_string(target_) + " is not maximal");
      }
      emit(chosen_);
      return;
    }
    // Lines are taken in increasing touch node order, at most one per node.
    std::array<size_t, 64> groups{};
    size_t group_count = 0;
    for (size_t a = 1; a < touch_masks_.size(); ++a) {
      if (cand_[depth].intersects(touch_masks_[a])) groups[group_count++] = a;
    }
    for (size_t gi = 0; gi < group_count; ++gi) {
      if (depth + (group_count - gi) < target_) break;
      const Bits members = cand_[depth] & touch_masks_[groups[gi]];
      members.for_each([&](size_t v) {
        const Bits& row = g_.adjacency().row(v);
        cand_[depth + 1] = cand_[depth] & row;
        cand_[depth + 1].keep_above(v);
        common_[depth + 1] = common_[depth] & row;
        if (!viable(depth + 1, v)) return;
        chosen_.push_back(v);
        extend(depth + 1, emit);
        chosen_.pop_back();
      });
    }
  }

  const CompatibilityGraph& g_;
  size_t target_;
  uint64_t undersized_ = 0;
  std::string undersized_example_;
  std::vector<Bits> touch_masks_;
  std::vector<Bits> cand_;
  std::vector<Bits> common_;
  std::vector<size_t> chosen_;
};

}  // namespace

CensusResult enumerate_diagrams(const CompatibilityGraph& g, const CensusOptions& options) {
  if (g.sense() != Sense::compatibility) {
    throw std::invalid_argument("enumerate_diagrams: needs the compatibility graph");
  }
  const auto t0 = Clock::now();
  CensusResult result;
  result.n = g.n();
  result.enumerator = Enumerator::specialized;
  auto note_undersized = [&](std::pair<uint64_t, std::string> u) {
    if (u.first == 0) return;
    if (result.undersized_maximal == 0) result.undersized_example = std::move(u.second);
    result.undersized_maximal += u.first;
  };

  const size_t tasks = g.size();
  const size_t workers = std::clamp<size_t>(static_cast<size_t>(std::max(1, options.workers)), 1, tasks);

  if (workers == 1) {
    ExactCliqueSearch search(g);
    for (size_t t = 0; t < tasks; ++t) {
      search.run_from(t, [&](const std::vector<size_t>& clique) {
        ++result.count;
        if (options.sink) options.sink(diagram_from_indices(g, clique));
      });
      note_undersized(search.take_undersized());
      if (options.progress) options.progress(t + 1, tasks);
    }
  } else {
    // Partitioned by first line; the calling thread merges partitions in order.
    std::vector<std::vector<size_t>> buffers(tasks);
    std::vector<uint64_t> counts(tasks, 0);
    std::vector<std::pair<uint64_t, std::string>> undersized(tasks);
    std::vector<char> done(tasks, 0);
    std::atomic<size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr error;
    const bool keep = static_cast<bool>(options.sink);

    auto work = [&] {
      try {
        ExactCliqueSearch search(g);
        for (size_t t = next++; t < tasks; t = next++) {
          std::vector<size_t> flat;
          uint64_t c = 0;
          search.run_from(t, [&](const std::vector<size_t>& clique) {
            ++c;
            if (keep) flat.insert(flat.end(), clique.begin(), clique.end());
          });
          auto u = search.take_undersized();
          std::lock_guard<std::mutex> lock(mu);
          buffers[t] = std::move(flat);
          counts[t] = c;
          undersized[t] = std::move(u);
          done[t] = 1;
          cv.notify_all();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        next = tasks;
        cv.notify_all();
      }
    };

    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);

    const size_t width = static_cast<size_t>(g.n() / 2 - 1);
    for (size_t t = 0; t < tasks; ++t) {
      std::vector<size_t> flat;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return done[t] || error; });
        if (error) break;
        flat = std::move(buffers[t]);
        result.count += counts[t];
        note_undersized(std::move(undersized[t]));
      }
      if (keep && width > 0) {
        std::vector<size_t> clique(width);
        for (size_t off = 0; off < flat.size(); off += width) {
          std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(off), width, clique.begin());
          options.sink(diagram_from_indices(g, clique));
        }
      }
      if (options.progress) options.progress(t + 1, tasks);
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  result.clique_sizes[static_cast<size_t>(g.n() / 2 - 1)] = result.count;
  result.elapsed_seconds = seconds_since(t0);
  return result;
}

CensusResult enumerate_diagrams(int n, const CensusOptions& options) {
  return enumerate_diagrams(build_graph(n, Sense::compatibility), options);
}

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const Adjacency& adj, std::function<void(const std::vector<size_t>&)> report)
      : adj_(adj), report_(std::move(report)) {}

  void run() {
    Bits all(adj_.size());
    all.set_all();
    Bits none(adj_.size());
    expand(all, none);
  }

 private:
  void expand(Bits candidates, Bits excluded) {
    if (!candidates.any() && !excluded.any()) {
      std::vector<size_t> clique = stack_;
      std::sort(clique.begin(), clique.end());
      report_(clique);
      return;
    }
    // Tomita pivot: the vertex of P u X with most neighbours in P.
    size_t pivot = 0;
    size_t best = 0;
    bool have = false;
    auto consider = [&](size_t u) {
      const size_t c = (candidates & adj_.row(u)).count();
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    Bits branch = candidates;
    branch.subtract(adj_.row(pivot));
    branch.for_each([&](size_t v) {
      stack_.push_back(v);
      expand(candidates & adj_.row(v), excluded & adj_.row(v));
      stack_.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  }

  const Adjacency& adj_;
  std::function<void(const std::vector<size_t>&)> report_;
  std::vector<size_t> stack_;
};

}  // namespace

CensusResult maximal_cliques_generic(int n, const DiagramSink& sink, int max_n) {
  if (n > max_n) {
    throw std::invalid_argument("maximal_cliques_generic: n=" + std::to_string(n) +
                                " exceeds bound " + std::to_string(max_n));
  }
  const auto t0 = Clock::now();
  const auto g = build_graph(n, Sense::compatibility);
  CensusResult result;
  result.n = n;
  result.enumerator = Enumerator::generic;
  BronKerbosch bk(g.adjacency(), [&](const std::vector<size_t>& clique) {
    ++result.count;
    ++result.clique_sizes[clique.size()];
    if (sink) sink(diagram_from_indices(g, clique));
  });
  bk.run();
  result.elapsed_seconds = seconds_since(t0);
  return result;
}

namespace {

// A piece of the disk after some cuts. entries[i] is an original node label,
// or 0 for the newborn node left by collapsing the cut line. gaps[i] is the
// original gap lying between entries[i] and entries[i+1].
struct SubDisk {
  std::vector<NodeId> entries;
  std::vector<int> gaps;
};

using LineSet = std::vector<TouchLine>;

class SplittingOracle {
 public:
  explicit SplittingOracle(int n) : n_(n) {}

  std::vector<LineSet> all() const {
    SubDisk disk;
    for (NodeId i = 1; i <= n_; ++i) {
      disk.entries.push_back(i);
      disk.gaps.push_back(i);
    }
    // Node 1 an a-node.
    std::vector<LineSet> out = prescribed(disk, 0);
    // Node 1 a b-node: its line splits the disk into three prescribed pieces.
    const size_t k = disk.entries.size();
    for (size_t ip = 2; ip < k; ip += 2) {
      for (size_t iq = ip; iq < k; iq += 2) {
        const TouchLine line = line_at(disk, 0, ip, iq);
        const auto pieces = split(disk, 0, ip, iq);
        auto combos = product({prescribed(pieces[0], pieces[0].entries.size() - 1),
                               prescribed(pieces[1], pieces[1].entries.size() - 1),
                               prescribed(pieces[2], pieces[2].entries.size() - 1)});
        for (auto& c : combos) {
          c.push_back(line);
          out.push_back(std::move(c));
        }
      }
    }
    return out;
  }

 private:
  // Diagrams of `disk` in which entry `d` is an a-node. The flow leaving d
  // first meets a line whose piece containing d holds d alone; that piece is
  // the far one, the counterclockwise one, or the clockwise one.
  std::vector<LineSet> prescribed(const SubDisk& disk, size_t d) const {
    const size_t k = disk.entries.size();
    if (k == 2) return {LineSet{}};
    struct Choice {
      size_t ia, ip, iq;
      int trivial;  // piece index holding only d
    };
    std::vector<Choice> choices;
    for (size_t t = 2; t + 1 < k; t += 2) choices.push_back({(d + t) % k, d, d, 1});
    for (size_t t = 3; t < k; t += 2) choices.push_back({(d + 1) % k, (d + t) % k, (d + k - 1) % k, 2});
    for (size_t t = 1; t + 2 < k; t += 2) choices.push_back({(d + k - 1) % k, (d + 1) % k, (d + t) % k, 0});

    std::vector<LineSet> out;
    for (const auto& c : choices) {
      const TouchLine line = line_at(disk, c.ia, c.ip, c.iq);
      const auto pieces = split(disk, c.ia, c.ip, c.iq);
      std::vector<std::vector<LineSet>> factors;
      for (int i = 0; i < 3; ++i) {
        if (i == c.trivial) continue;
        factors.push_back(prescribed(pieces[static_cast<size_t>(i)], pieces[static_cast<size_t>(i)].entries.size() - 1));
      }
      for (auto& combo : product(factors)) {
        combo.push_back(line);
        out.push_back(std::move(combo));
      }
    }
    return out;
  }

  TouchLine line_at(const SubDisk& disk, size_t ia, size_t ip, size_t iq) const {
    const size_t k = disk.entries.size();
    return TouchLine{disk.entries[ia], wrap(disk.gaps[(ip + k - 1) % k] + 1, n_), disk.gaps[iq]};
  }

  // Pieces {clockwise, far, counterclockwise}, each with its newborn last.
  std::array<SubDisk, 3> split(const SubDisk& disk, size_t ia, size_t ip, size_t iq) const {
    const size_t k = disk.entries.size();
    auto piece = [&](size_t from, size_t to, int gap_before_newborn, int gap_after_newborn) {
      SubDisk out;
      for (size_t i = from;; i = (i + 1) % k) {
        out.entries.push_back(disk.entries[i]);
        if (i == to) break;
        out.gaps.push_back(disk.gaps[i]);
      }
      out.entries.push_back(0);
      out.gaps.push_back(gap_before_newborn);
      out.gaps.push_back(gap_after_newborn);
      return out;
    };
    const size_t before_p = (ip + k - 1) % k;
    const size_t before_a = (ia + k - 1) % k;
    return {piece((ia + 1) % k, before_p, disk.gaps[before_p], disk.gaps[ia]),
            piece(ip, iq, disk.gaps[iq], disk.gaps[before_p]),
            piece((iq + 1) % k, before_a, disk.gaps[before_a], disk.gaps[iq])};
  }

  static std::vector<LineSet> product(const std::vector<std::vector<LineSet>>& factors) {
    std::vector<LineSet> acc{LineSet{}};
    for (const auto& f : factors) {
      std::vector<LineSet> next;
      next.reserve(acc.size() * f.size());
      for (const auto& x : acc) {
        for (const auto& y : f) {
          LineSet merged = x;
          merged.insert(merged.end(), y.begin(), y.end());
          next.push_back(std::move(merged));
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

  int n_;
};

}  // namespace

std::vector<Diagram> oracle_enumerate(int n, int max_n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("oracle_enumerate: n must be even and >= 2");
  if (n > max_n) {
    throw std::invalid_argument("oracle_enumerate: n=" + std::to_string(n) + " exceeds bound " +
                                std::to_string(max_n));
  }
  std::vector<Diagram> out;
  for (auto& lines : SplittingOracle(n).all()) out.push_back(make_diagram(n, std::move(lines)));
  std::sort(out.begin(), out.end());
  return out;
}

BigInt vertex_multiplicity(const TouchLine& v, int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("vertex_multiplicity: n must be even and >= 4");
  const RegionSizes r = region_sizes(v, n);
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(n / 2 - 2));
  return out * catalan(r.k / 2 - 1) * catalan(r.l / 2 - 1) * catalan(r.m / 2 - 1);
}

std::vector<uint64_t> line_membership_counts(const CompatibilityGraph& g, int workers) {
  std::vector<uint64_t> counts(g.size(), 0);
  CensusOptions opts;
  opts.workers = workers;
  opts.sink = [&](const Diagram& d) {
    for (const auto& v : d.lines) ++counts[static_cast<size_t>(g.index_of(v))];
  };
  enumerate_diagrams(g, opts);
  return counts;
}

std::map<std::vector<NodeId>, uint64_t> b_node_distribution(int n, int workers) {
  std::map<std::vector<NodeId>, uint64_t> out;
  const int size = n / 2 - 1;
  if (n <= 10) {
    // All subsets of the given size, via a sliding selection mask.
    std::vector<bool> pick(static_cast<size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<NodeId> key;
      for (int i = 0; i < n; ++i) {
        if (pick[static_cast<size_t>(i)]) key.push_back(i + 1);
      }
      out.emplace(std::move(key), 0);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  CensusOptions opts;
  opts.workers = workers;
  opts.sink = [&](const Diagram& d) { ++out[d.b_nodes()]; };
  enumerate_diagrams(n, opts);
  return out;
}

}  // namespace diskflow
