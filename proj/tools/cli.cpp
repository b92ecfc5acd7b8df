#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diskflow/census.hpp"
#include "diskflow/combinat.hpp"
#include "diskflow/graph.hpp"
#include "diskflow/io_render.hpp"
#include "diskflow/orbits.hpp"
#include "diskflow/verify.hpp"

namespace diskflow::cli {
namespace {

struct RunConfig {
  int n = 0;
  bool enumerate = false;
  std::string out_path;
  std::string in_path;
  long long index = 0;
  std::string format = "dot";
  std::string sense = "compat";
  std::string group = "full";
  std::string suite = "all";
  int workers = 1;
  int max_n = -1;  // -1: use the command's default bound
  bool node_sets = false;
  bool json = false;
};

// Signals an exit code from deep inside a command.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw Exit{kUsage, message}; }
[[noreturn]] void failure(const std::string& message) { throw Exit{kFailure, message}; }

void require_even(int n, int least) {
  if (n < least || n % 2 != 0) {
    usage("--nodes must be even and >= " + std::to_string(least) + ", got " + std::to_string(n));
  }
}

void require_bound(const RunConfig& cfg, int default_bound, const char* what) {
  const int bound = cfg.max_n >= 0 ? cfg.max_n : default_bound;
  if (cfg.n > bound) {
    usage(std::string(what) + " is bounded to n <= " + std::to_string(bound) + "; raise it with --max-n");
  }
}

std::string resolve_output(const std::string& path) {
  if (path == "-") return path;
  std::filesystem::path p(path);
  const char* dir = std::getenv("DISKFLOW_OUTPUT_DIR");
  if (p.is_relative() && dir != nullptr && *dir != '\0') return (std::filesystem::path(dir) / p).string();
  return path;
}

// Runs `write` against the named file, or `out` for "-".
void with_output(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (path == "-") {
    write(out);
    out.flush();
    if (!out) failure("write to standard output failed");
    return;
  }
  const std::string resolved = resolve_output(path);
  std::ofstream file(resolved, std::ios::binary);
  if (!file) failure("cannot open " + resolved + " for writing");
  write(file);
  file.flush();
  if (!file) failure("write to " + resolved + " failed");
}

std::string big(uint64_t v) { return std::to_string(v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const CensusLimits kLimits;

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_even(cfg.n, 2);
  const BigInt formula = t_count(cfg.n);
  if (!cfg.enumerate) {
    out << "formula=" << formula.get_str() << '\n';
    return kOk;
  }
  require_bound(cfg, kLimits.specialized_max_n, "census");
  uint64_t census = 0;
  if (cfg.n == 2) {
    census = oracle_enumerate(2).size();
  } else {
    CensusOptions opts;
    opts.workers = cfg.workers;
    const auto result = enumerate_diagrams(cfg.n, opts);
    census = result.count;
    err << "census n=" << cfg.n << " finished in " << std::fixed << std::setprecision(3) << result.elapsed_seconds
        << "s\n";
  }
  const bool agree = BigInt(big(census)) == formula;
  out << "formula=" << formula.get_str() << " census=" << census << (agree ? " OK" : " MISMATCH") << '\n';
  return agree ? kOk : kFailure;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_even(cfg.n, 4);
  require_bound(cfg, kLimits.specialized_max_n, "census");
  const std::string path = cfg.out_path.empty() ? "census_n" + std::to_string(cfg.n) + ".jsonl" : cfg.out_path;
  CensusResult result;
  size_t written = 0;
  with_output(path, out, [&](std::ostream& dest) {
    JsonlWriter writer(dest, JsonlOptions{cfg.node_sets});
    CensusOptions opts;
    opts.workers = cfg.workers;
    opts.sink = [&](const Diagram& d) { writer.write(d); };
    result = enumerate_diagrams(cfg.n, opts);
    written = writer.written();
  });
  err << "wrote " << written << " diagrams for n=" << cfg.n << " to " << (path == "-" ? "stdout" : resolve_output(path))
      << " in " << std::fixed << std::setprecision(3) << result.elapsed_seconds << "s\n";
  if (BigInt(big(written)) != t_count(cfg.n)) {
    err << "error: expected " << t_count(cfg.n).get_str() << " diagrams\n";
    return kFailure;
  }
  return kOk;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_even(cfg.n, 4);
  const Sense sense = cfg.sense == "compat" ? Sense::compatibility : Sense::conflict;
  const GraphFormat format = cfg.format == "dot" ? GraphFormat::dot : GraphFormat::json;
  const auto g = build_graph(cfg.n, sense);
  with_output(cfg.out_path.empty() ? "-" : cfg.out_path, out, [&](std::ostream& dest) { export_graph(g, format, dest); });
  err << "graph n=" << cfg.n << " " << to_string(sense) << ": " << g.size() << " vertices, "
      << g.adjacency().edge_count() << " edges\n";
  return kOk;
}

int cmd_orbits(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_even(cfg.n, 4);
  require_bound(cfg, kLimits.orbits_max_n, "orbit counting");
  const GroupKind group = cfg.group == "full" ? GroupKind::full : GroupKind::rotations;
  const auto s = orbit_counts(cfg.n, cfg.workers, cfg.max_n >= 0 ? cfg.max_n : kLimits.orbits_max_n);
  const auto& histogram = group == GroupKind::full ? s.full_histogram : s.rotation_histogram;
  const long long burnside = s.burnside_count(group);
  const bool ok = burnside >= 0 && static_cast<uint64_t>(burnside) == s.orbits(group);
  if (cfg.json) {
    nlohmann::ordered_json doc;
    doc["n"] = cfg.n;
    doc["group"] = cfg.group;
    doc["census"] = s.census_count;
    doc["orbits"] = s.orbits(group);
    doc["histogram"] = nlohmann::ordered_json::object();
    for (const auto& [size, count] : histogram) doc["histogram"][std::to_string(size)] = count;
    doc["burnside"] = burnside;
    doc["burnside_ok"] = ok;
    out << doc.dump() << '\n';
  } else {
    out << "orbits=" << s.orbits(group) << '\n';
    out << "histogram";
    for (const auto& [size, count] : histogram) out << ' ' << size << ':' << count;
    out << '\n';
    out << "burnside=" << burnside << (ok ? " OK" : " MISMATCH") << '\n';
  }
  if (!ok) err << "error: Burnside count disagrees with canonical-form count\n";
  return ok ? kOk : kFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(cfg.suite);
  if (!suite) usage("unknown suite " + cfg.suite);
  const int max_n = cfg.max_n >= 0 ? cfg.max_n : 10;
  if (max_n < 0) usage("--max-n must be >= 0");
  // Suites that enumerate are bounded like the commands that do.
  if ((*suite == Suite::all || *suite == Suite::census) && max_n > kLimits.specialized_max_n) {
    usage("census suite is bounded to n <= " + std::to_string(kLimits.specialized_max_n));
  }
  if ((*suite == Suite::all || *suite == Suite::orbits) && max_n > kLimits.orbits_max_n) {
    usage("orbits suite is bounded to n <= " + std::to_string(kLimits.orbits_max_n));
  }
  const auto report = run_suite(*suite, VerifyOptions{max_n, cfg.workers});
  out << report.to_json() << '\n';
  if (const Check* f = report.first_failure()) {
    err << "FAIL " << f->name << ": " << f->detail << '\n';
    return kFailure;
  }
  err << "all " << report.checks.size() << " checks passed\n";
  return kOk;
}

int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.index < 0) usage("--index must be >= 0");
  std::ifstream in(cfg.in_path);
  if (!in) failure("cannot open " + cfg.in_path);
  std::string line;
  long long record = -1;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (++record == cfg.index) break;
  }
  if (record != cfg.index) {
    usage("index " + std::to_string(cfg.index) + " out of range: " + cfg.in_path + " has " +
          std::to_string(record + 1) + " records");
  }
  Diagram d;
  try {
    d = parse_jsonl_record(line, line_number);
  } catch (const RecordError& e) {
    failure(cfg.in_path + ": " + e.what());
  }
  const std::string path = cfg.out_path.empty() ? "-" : cfg.out_path;
  with_output(path, out, [&](std::ostream& dest) { render_svg(d, dest); });
  err << "rendered record " << cfg.index << " (n=" << d.n << ")\n";
  return kOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_even(cfg.n, 4);
  require_bound(cfg, kLimits.specialized_max_n, "census");
  const auto g = build_graph(cfg.n, Sense::compatibility);
  const BigInt expected = t_count(cfg.n);
  std::vector<int> worker_counts{1};
  if (cfg.workers > 1) worker_counts.push_back(cfg.workers);
  double base = 0.0;
  bool ok = true;
  out << "n=" << cfg.n << " vertices=" << g.size() << " expected=" << expected.get_str() << '\n';
  for (int w : worker_counts) {
    CensusOptions opts;
    opts.workers = w;
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = enumerate_diagrams(g, opts);
    const double secs = seconds_since(t0);
    if (w == 1) base = secs;
    const bool match = BigInt(big(result.count)) == expected;
    ok = ok && match;
    std::ostringstream line;
    line << std::fixed << std::setprecision(4) << "workers=" << w << " count=" << result.count
         << " seconds=" << secs << std::setprecision(0) << " rate=" << (secs > 0 ? result.count / secs : 0.0)
         << "/s" << std::setprecision(2) << " speedup=" << (secs > 0 ? base / secs : 1.0)
         << (match ? " OK" : " MISMATCH");
    out << line.str() << '\n';
  }
  if (!ok) err << "error: census count differs from the closed form\n";
  return ok ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and classify vector-field diagrams on the disk", "diskflow"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto nodes = [&](CLI::App* sub) { sub->add_option("-n,--nodes", cfg.n, "Number of boundary nodes (even)")->required(); };
  auto workers = [&](CLI::App* sub) {
    sub->add_option("-w,--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto bound = [&](CLI::App* sub) {
    sub->add_option("--max-n", cfg.max_n, "Override the safety bound on n")->check(CLI::NonNegativeNumber);
  };

  auto* count = app.add_subcommand("count", "Closed-form count, optionally checked against the census");
  nodes(count);
  count->add_flag("--enumerate", cfg.enumerate, "Also run the census");
  workers(count);
  bound(count);

  auto* enumerate = app.add_subcommand("enumerate", "Write the census as JSONL");
  nodes(enumerate);
  enumerate->add_option("-o,--out", cfg.out_path, "Output file or - (default census_n<N>.jsonl)");
  enumerate->add_flag("--node-sets", cfg.node_sets, "Add b_nodes and a_nodes to each record");
  workers(enumerate);
  bound(enumerate);

  auto* graph = app.add_subcommand("graph", "Export the compatibility or conflict graph");
  nodes(graph);
  graph->add_option("-f,--format", cfg.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("-s,--sense", cfg.sense, "compat or conflict")->check(CLI::IsMember({"compat", "conflict"}));
  graph->add_option("-o,--out", cfg.out_path, "Output file or - (default -)");

  auto* orbits = app.add_subcommand("orbits", "Orbit counts under the full group or rotations");
  nodes(orbits);
  orbits->add_option("-g,--group", cfg.group, "full or rot")->check(CLI::IsMember({"full", "rot"}));
  orbits->add_flag("--json", cfg.json, "Print a JSON summary");
  workers(orbits);
  bound(orbits);

  auto* verify = app.add_subcommand("verify", "Run invariant suites and print a JSON report");
  verify->add_option("--suite", cfg.suite, "all, identities, graph, census or orbits")
      ->check(CLI::IsMember({"all", "identities", "graph", "census", "orbits"}));
  verify->add_option("--max-n", cfg.max_n, "Largest n (default 10)")->check(CLI::NonNegativeNumber);
  workers(verify);

  auto* render = app.add_subcommand("render", "Render one JSONL record as SVG");
  render->add_option("-i,--in", cfg.in_path, "JSONL input")->required();
  render->add_option("-k,--index", cfg.index, "Zero-based record index")->required();
  render->add_option("-o,--out", cfg.out_path, "SVG output file or - (default -)");

  auto* bench = app.add_subcommand("bench", "Time the census with 1 and W workers");
  nodes(bench);
  workers(bench);
  bound(bench);

  std::vector<std::string> argv_storage{"diskflow"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(cfg, out, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (graph->parsed()) return cmd_graph(cfg, out, err);
    if (orbits->parsed()) return cmd_orbits(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (render->parsed()) return cmd_render(cfg, out, err);
    if (bench->parsed()) return cmd_bench(cfg, out, err);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const WriteError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace diskflow::cli
