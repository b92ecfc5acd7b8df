#pragma once

// Serialization and drawing.
//
// JSONL record: {"n":6,"lines":[[1,3,5],[3,5,5]]} with optional "b_nodes",
// "a_nodes" and "orbit" fields, in that order. Lines are written sorted.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskflow/census.hpp"
#include "diskflow/graph.hpp"

namespace diskflow {

struct JsonlOptions {
  bool node_sets = false;  // add "b_nodes" and "a_nodes"
};

/// Thrown when the destination stream fails; carries the records written.
class WriteError : public std::runtime_error {
 public:
  WriteError(const std::string& what, size_t written) : std::runtime_error(what), written_(written) {}
  size_t written() const { return written_; }

 private:
  size_t written_;
};

/// One invalid input record.
class RecordError : public std::runtime_error {
 public:
  RecordError(size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
  size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  size_t line_;
  std::string reason_;
};

std::string to_jsonl_record(const Diagram& d, const JsonlOptions& options = {},
                            std::optional<long long> orbit = std::nullopt);

class JsonlWriter {
 public:
  explicit JsonlWriter(std::ostream& out, JsonlOptions options = {});
  void write(const Diagram& d, std::optional<long long> orbit = std::nullopt);
  size_t written() const { return written_; }

 private:
  std::ostream& out_;
  JsonlOptions options_;
  size_t written_ = 0;
};

size_t write_jsonl(const std::vector<Diagram>& diagrams, std::ostream& out, const JsonlOptions& options = {});

struct ReadOptions {
  bool skip_invalid = false;
};

struct ReadResult {
  std::vector<Diagram> diagrams;
  std::vector<RecordError> skipped;
};

/// Parses and validates every record; throws RecordError on the first invalid
/// one unless skip_invalid is set. Blank lines are ignored.
ReadResult read_jsonl(std::istream& in, const ReadOptions& options = {});

/// Parses one record and validates it as a diagram.
Diagram parse_jsonl_record(const std::string& text, size_t line_number);

enum class GraphFormat { dot, json };

void export_graph(const CompatibilityGraph& g, GraphFormat format, std::ostream& out);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

using Polyline = std::vector<Point>;

/// Node position on the unit circle; node 1 at the top, labels run clockwise
/// on screen (y axis pointing down).
Point node_position(NodeId i, int n);

/// Sampled touching-line curves, one polyline per line in d.lines order.
/// Each curve follows the chords from its counterclockwise end to the touch
/// node and on to its clockwise end, rounded near the touch node into a
/// curve tangent to the circle.
std::vector<Polyline> touch_curves(const Diagram& d, int samples_per_bend = 24);

/// Number of proper crossings between polylines of different curves.
size_t count_crossings(const std::vector<Polyline>& curves);

void render_svg(const Diagram& d, std::ostream& out);

}  // namespace diskflow
