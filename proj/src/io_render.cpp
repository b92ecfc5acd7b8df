#include "diskflow/io_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>

#include <json.hpp>

namespace diskflow {

using ordered_json = nlohmann::ordered_json;

std::string to_jsonl_record(const Diagram& d, const JsonlOptions& options, std::optional<long long> orbit) {
  std::vector<TouchLine> lines = d.lines;
  std::sort(lines.begin(), lines.end());
  ordered_json rec;
  rec["n"] = d.n;
  rec["lines"] = ordered_json::array();
  for (const auto& v : lines) rec["lines"].push_back({v.a, v.p, v.q});
  if (options.node_sets) {
    rec["b_nodes"] = d.b_nodes();
    rec["a_nodes"] = d.a_nodes();
  }
  if (orbit) rec["orbit"] = *orbit;
  return rec.dump();
}

JsonlWriter::JsonlWriter(std::ostream& out, JsonlOptions options) : out_(out), options_(options) {}

void JsonlWriter::write(const Diagram& d, std::optional<long long> orbit) {
  out_ << to_jsonl_record(d, options_, orbit) << '\n';
  if (!out_) throw WriteError("write failed after " + std::to_string(written_) + " records", written_);
  ++written_;
}

size_t write_jsonl(const std::vector<Diagram>& diagrams, std::ostream& out, const JsonlOptions& options) {
  JsonlWriter writer(out, options);
  for (const auto& d : diagrams) writer.write(d);
  out.flush();
  if (!out) throw WriteError("flush failed", writer.written());
  return writer.written();
}

Diagram parse_jsonl_record(const std::string& text, size_t line_number) {
  ordered_json rec;
  try {
    rec = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw RecordError(line_number, std::string("malformed JSON: ") + e.what());
  }
  if (!rec.is_object()) throw RecordError(line_number, "record is not an object");
  if (!rec.contains("n") || !rec["n"].is_number_integer()) throw RecordError(line_number, "missing integer \"n\"");
  if (!rec.contains("lines") || !rec["lines"].is_array()) throw RecordError(line_number, "missing array \"lines\"");
  Diagram d;
  d.n = rec["n"].get<int>();
  if (d.n < 2 || d.n % 2 != 0) throw RecordError(line_number, "n must be even and >= 2");
  for (const auto& t : rec["lines"]) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
        !t[2].is_number_integer()) {
      throw RecordError(line_number, "each line must be an [a,p,q] integer triple");
    }
    d.lines.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  std::sort(d.lines.begin(), d.lines.end());
  if (auto err = diagram_error(d)) throw RecordError(line_number, *err);
  return d;
}

ReadResult read_jsonl(std::istream& in, const ReadOptions& options) {
  ReadResult out;
  std::string text;
  size_t line_number = 0;
  while (std::getline(in, text)) {
    ++line_number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.diagrams.push_back(parse_jsonl_record(text, line_number));
    } catch (const RecordError& e) {
      if (!options.skip_invalid) throw;
      out.skipped.push_back(e);
    }
  }
  return out;
}

namespace {

std::string vertex_label(const TouchLine& v) {
  return std::to_string(v.a) + "-" + std::to_string(v.p) + "-" + std::to_string(v.q);
}

}  // namespace

void export_graph(const CompatibilityGraph& g, GraphFormat format, std::ostream& out) {
  if (format == GraphFormat::dot) {
    out << "graph " << to_string(g.sense()) << "_" << g.n() << " {\n";
    for (const auto& v : g.vertices()) out << "  \"" << vertex_label(v) << "\";\n";
    for (size_t i = 0; i < g.size(); ++i) {
      for (size_t j = i + 1; j < g.size(); ++j) {
        if (g.adjacent(i, j)) {
          out << "  \"" << vertex_label(g.vertices()[i]) << "\" -- \"" << vertex_label(g.vertices()[j])
              << "\";\n";
        }
      }
    }
    out << "}\n";
    return;
  }
  ordered_json doc;
  doc["n"] = g.n();
  doc["sense"] = to_string(g.sense());
  doc["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices()) doc["vertices"].push_back({v.a, v.p, v.q});
  doc["edges"] = ordered_json::array();
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = i + 1; j < g.size(); ++j) {
      if (g.adjacent(i, j)) doc["edges"].push_back({i, j});
    }
  }
  out << doc.dump() << '\n';
}

// ---------------------------------------------------------------------------
// Drawing

namespace {

constexpr double kPi = std::numbers::pi;

double node_angle(double position, int n) { return -kPi / 2 + 2 * kPi * (position - 1) / n; }

Point on_circle(double angle) { return {std::cos(angle), std::sin(angle)}; }

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double norm(Point a) { return std::hypot(a.x, a.y); }
Point unit(Point a) { return (1.0 / norm(a)) * a; }

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double t = len2 > 0 ? ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

struct Bezier {
  Point p0, p1, p2, p3;
  Point at(double t) const {
    const double u = 1 - t;
    return (u * u * u) * p0 + (3 * u * u * t) * p1 + (3 * u * t * t) * p2 + (t * t * t) * p3;
  }
};

// Chord S-A, rounded corner at A, chord A-E.
struct CurveShape {
  Point start;
  Bezier into;
  Bezier out_of;
  Point end;
};

struct Endpoint {
  size_t line;
  bool clockwise_end;
};

// Whether line x's end in `gap` sits nearer node `gap` than line y's end.
bool nearer_gap_start(const TouchLine& x, const TouchLine& y, int gap, int n) {
  const Region r = region_of_node(y, x.a, n);
  if (gap == cw_end_gap(y, n)) return r == Region::clockwise;
  return r == Region::far;
}

std::vector<CurveShape> curve_shapes(const Diagram& d) {
  const int n = d.n;
  const size_t count = d.lines.size();
  // Place line ends inside their gaps, ordered so that no chords cross.
  std::vector<std::vector<Endpoint>> in_gap(static_cast<size_t>(n) + 1);
  for (size_t i = 0; i < count; ++i) {
    in_gap[static_cast<size_t>(cw_end_gap(d.lines[i], n))].push_back({i, true});
    in_gap[static_cast<size_t>(ccw_end_gap(d.lines[i], n))].push_back({i, false});
  }
  std::vector<Point> cw_end(count);
  std::vector<Point> ccw_end(count);
  for (int gap = 1; gap <= n; ++gap) {
    auto& ends = in_gap[static_cast<size_t>(gap)];
    std::sort(ends.begin(), ends.end(), [&](const Endpoint& x, const Endpoint& y) {
      return nearer_gap_start(d.lines[x.line], d.lines[y.line], gap, n);
    });
    for (size_t r = 0; r < ends.size(); ++r) {
      const double f = 0.25 + 0.5 * static_cast<double>(r + 1) / static_cast<double>(ends.size() + 1);
      const Point p = on_circle(node_angle(gap + f, n));
      (ends[r].clockwise_end ? cw_end : ccw_end)[ends[r].line] = p;
    }
  }

  std::vector<Point> touch(count);
  for (size_t i = 0; i < count; ++i) touch[i] = node_position(d.lines[i].a, n);

  std::vector<CurveShape> out;
  for (size_t i = 0; i < count; ++i) {
    const Point a = touch[i];
    const Point s = ccw_end[i];
    const Point e = cw_end[i];
    // Rounding radius: small enough that the rounded part stays clear of
    // every other curve.
    double r = std::min({0.4 * norm(s - a), 0.4 * norm(e - a), 0.2});
    for (size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      r = std::min(r, 0.25 * norm(touch[j] - a));
      r = std::min(r, 0.45 * point_segment_distance(a, ccw_end[j], touch[j]));
      r = std::min(r, 0.45 * point_segment_distance(a, touch[j], cw_end[j]));
    }
    const double angle = node_angle(d.lines[i].a, n);
    const Point tangent{-std::sin(angle), std::cos(angle)};  // clockwise direction
    const Point to_s = unit(s - a);
    const Point to_e = unit(e - a);
    CurveShape c;
    c.start = s;
    c.into = {a + r * to_s, a + (r / 2) * to_s, a + (-r / 3) * tangent, a};
    c.out_of = {a, a + (r / 3) * tangent, a + (r / 2) * to_e, a + r * to_e};
    c.end = e;
    out.push_back(c);
  }
  return out;
}

bool segments_touch(Point a, Point b, Point c, Point d) {
  auto orient = [](Point p, Point q, Point r) {
    const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return (v > 1e-12) - (v < -1e-12);
  };
  auto on_segment = [](Point p, Point q, Point r) {
    return std::min(p.x, r.x) - 1e-12 <= q.x && q.x <= std::max(p.x, r.x) + 1e-12 &&
           std::min(p.y, r.y) - 1e-12 <= q.y && q.y <= std::max(p.y, r.y) + 1e-12;
  };
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, c, b)) return true;
  if (o2 == 0 && on_segment(a, d, b)) return true;
  if (o3 == 0 && on_segment(c, a, d)) return true;
  if (o4 == 0 && on_segment(c, b, d)) return true;
  return false;
}

void append_fmt(std::string& out, const char* fmt, double a, double b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  out += buf;
}

}  // namespace

Point node_position(NodeId i, int n) { return on_circle(node_angle(i, n)); }

std::vector<Polyline> touch_curves(const Diagram& d, int samples_per_bend) {
  std::vector<Polyline> out;
  for (const auto& c : curve_shapes(d)) {
    Polyline pl{c.start};
    for (int k = 0; k <= samples_per_bend; ++k) pl.push_back(c.into.at(static_cast<double>(k) / samples_per_bend));
    for (int k = 1; k <= samples_per_bend; ++k) pl.push_back(c.out_of.at(static_cast<double>(k) / samples_per_bend));
    pl.push_back(c.end);
    out.push_back(std::move(pl));
  }
  return out;
}

size_t count_crossings(const std::vector<Polyline>& curves) {
  size_t crossings = 0;
  for (size_t i = 0; i < curves.size(); ++i) {
    for (size_t j = i + 1; j < curves.size(); ++j) {
      for (size_t s = 0; s + 1 < curves[i].size(); ++s) {
        for (size_t t = 0; t + 1 < curves[j].size(); ++t) {
          crossings += segments_touch(curves[i][s], curves[i][s + 1], curves[j][t], curves[j][t + 1]);
        }
      }
    }
  }
  return crossings;
}

void render_svg(const Diagram& d, std::ostream& out) {
  constexpr double size = 400.0;
  constexpr double centre = size / 2;
  constexpr double radius = 160.0;
  auto sx = [&](Point p) { return centre + radius * p.x; };
  auto sy = [&](Point p) { return centre + radius * p.y; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  svg += "  <circle cx=\"200\" cy=\"200\" r=\"160\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
  for (const auto& c : curve_shapes(d)) {
    std::string path = "  <path d=\"";
    append_fmt(path, "M %.3f %.3f", sx(c.start), sy(c.start));
    append_fmt(path, " L %.3f %.3f", sx(c.into.p0), sy(c.into.p0));
    append_fmt(path, " C %.3f %.3f", sx(c.into.p1), sy(c.into.p1));
    append_fmt(path, " %.3f %.3f", sx(c.into.p2), sy(c.into.p2));
    append_fmt(path, " %.3f %.3f", sx(c.into.p3), sy(c.into.p3));
    append_fmt(path, " C %.3f %.3f", sx(c.out_of.p1), sy(c.out_of.p1));
    append_fmt(path, " %.3f %.3f", sx(c.out_of.p2), sy(c.out_of.p2));
    append_fmt(path, " %.3f %.3f", sx(c.out_of.p3), sy(c.out_of.p3));
    append_fmt(path, " L %.3f %.3f", sx(c.end), sy(c.end));
    path += "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\"/>\n";
    svg += path;
  }
  std::vector<bool> touch(static_cast<size_t>(d.n) + 1, false);
  for (const auto& v : d.lines) touch[static_cast<size_t>(v.a)] = true;
  for (NodeId i = 1; i <= d.n; ++i) {
    const Point p = node_position(i, d.n);
    const bool b = touch[static_cast<size_t>(i)];
    std::string node = "  <circle";
    append_fmt(node, " cx=\"%.3f\" cy=\"%.3f\"", sx(p), sy(p));
    node += b ? " r=\"6\" fill=\"#000\" class=\"b-node\"/>\n"
              : " r=\"6\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"1.5\" class=\"a-node\"/>\n";
    svg += node;
    const Point l = 1.13 * p;
    std::string label = "  <text";
    append_fmt(label, " x=\"%.3f\" y=\"%.3f\"", sx(l), sy(l));
    label += " font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
             std::to_string(i) + "</text>\n";
    svg += label;
  }
  svg += "</svg>\n";
  out << svg;
}

}  // namespace diskflow
