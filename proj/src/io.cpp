#include "crowdflow/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace crowdflow {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

[[noreturn]] void fail_line(const std::filesystem::path& path, std::size_t line,
                            const std::string& what) {
  fail(path, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct CsvRecord {
  std::uint64_t frame;
  double x, y;
  std::size_t line;  // 1-based source line, for diagnostics
};

std::vector<CsvRecord> parse_csv_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open");
  std::vector<CsvRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view sv = trim(line);
    if (sv.empty()) continue;
    if (line_no == 1 && sv == "frame,x,y") continue;  // optional literal header

    const std::size_t c1 = sv.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : sv.find(',', c1 + 1);
    if (c2 == std::string_view::npos || sv.find(',', c2 + 1) != std::string_view::npos)
      fail_line(path, line_no, "expected 'frame,x,y'");

    CsvRecord rec{};
    rec.line = line_no;
    if (!parse_number(sv.substr(0, c1), rec.frame))
      fail_line(path, line_no, "bad frame id");
    if (!parse_number(sv.substr(c1 + 1, c2 - c1 - 1), rec.x) || !std::isfinite(rec.x))
      fail_line(path, line_no, "bad x coordinate");
    if (!parse_number(sv.substr(c2 + 1), rec.y) || !std::isfinite(rec.y))
      fail_line(path, line_no, "bad y coordinate");
    records.push_back(rec);
  }
  return records;
}

void write_csv_records(const std::filesystem::path& path,
                       const std::vector<CsvRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out << "frame,x,y\n";
  for (const CsvRecord& r : records)
    out << r.frame << ',' << format_double(r.x) << ',' << format_double(r.y) << '\n';
  if (!out) fail(path, "write failed");
}

}  // namespace

std::vector<FrameAnnotations> parse_annotations(const std::filesystem::path& path,
                                                FrameDims dims, bool clip_out_of_bounds) {
  std::map<std::uint64_t, std::vector<Point>> by_frame;
  for (const CsvRecord& rec : parse_csv_records(path)) {
    Point p(rec.x, rec.y);
    if (!dims.contains(p)) {
      if (!clip_out_of_bounds)
        fail_line(path, rec.line,
                  "point (" + format_double(rec.x) + ", " + format_double(rec.y) +
                      ") outside " + std::to_string(dims.width) + "x" +
                      std::to_string(dims.height) + " frame");
      p = Point(std::clamp(rec.x, 0.0, static_cast<double>(dims.width - 1)),
                std::clamp(rec.y, 0.0, static_cast<double>(dims.height - 1)));
    }
    by_frame[rec.frame].push_back(p);
  }

  std::vector<FrameAnnotations> frames;
  frames.reserve(by_frame.size());
  for (auto& [frame_id, heads] : by_frame)
    frames.emplace_back(frame_id, std::move(heads), dims);
  return frames;
}

void write_annotations_csv(std::span<const FrameAnnotations> frames,
                           const std::filesystem::path& path) {
  std::vector<CsvRecord> records;
  for (const FrameAnnotations& f : frames)
    for (const Point& p : f.heads) records.push_back({f.frame_id, p.x, p.y});
  write_csv_records(path, records);
}

std::vector<CentroidSet> read_centroid_csv(const std::filesystem::path& path) {
  std::map<std::uint64_t, std::vector<Point>> by_frame;
  for (const CsvRecord& r : parse_csv_records(path))
    by_frame[r.frame].emplace_back(r.x, r.y);
  std::vector<CentroidSet> sets;
  sets.reserve(by_frame.size());
  for (auto& [frame_id, centroids] : by_frame)
    sets.emplace_back(frame_id, std::move(centroids));
  return sets;
}

void write_centroid_csv(std::span<const CentroidSet> sets,
                        const std::filesystem::path& path) {
  std::vector<CsvRecord> records;
  for (const CentroidSet& s : sets)
    for (const Point& p : s.centroids) records.push_back({s.frame_id, p.x, p.y});
  write_csv_records(path, records);
}

namespace {

constexpr char kMagic[4] = {'C', 'D', 'M', '1'};
constexpr std::uint64_t kMaxCells = 1ull << 30;  // 4 GiB of f32 payload

void put_u32_le(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff),
                         static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t get_u32_le(std::istream& in) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

}  // namespace

void write_density_map(const DensityMap& map, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out.write(kMagic, 4);
  put_u32_le(out, map.dims.width);
  put_u32_le(out, map.dims.height);
  const char kind = map.kind == MapKind::Centroid ? 1 : 0;
  out.write(&kind, 1);
  for (Eigen::Index y = 0; y < map.values.rows(); ++y) {
    for (Eigen::Index x = 0; x < map.values.cols(); ++x) {
      const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(map.values(y, x)));
      put_u32_le(out, bits);
    }
  }
  if (!out) fail(path, "write failed");
}

DensityMap read_density_map(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");

  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) fail(path, "bad magic (want CDM1)");

  const std::uint32_t width = get_u32_le(in);
  const std::uint32_t height = get_u32_le(in);
  char kind_byte = 0;
  in.read(&kind_byte, 1);
  if (!in) fail(path, "truncated header");
  if (width == 0 || height == 0) fail(path, "zero dimension");
  if (static_cast<std::uint64_t>(width) * height > kMaxCells) fail(path, "size overflow");
  if (kind_byte != 0 && kind_byte != 1)
    fail(path, "bad kind byte " + std::to_string(static_cast<int>(kind_byte)));

  Grid values(height, width);
  for (Eigen::Index y = 0; y < values.rows(); ++y) {
    for (Eigen::Index x = 0; x < values.cols(); ++x) {
      const std::uint32_t bits = get_u32_le(in);
      if (!in) fail(path, "truncated payload");
      values(y, x) = static_cast<double>(std::bit_cast<float>(bits));
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) fail(path, "trailing bytes");
  return DensityMap(FrameDims(width, height),
                    std::move(values),
                    kind_byte == 1 ? MapKind::Centroid : MapKind::Crowd);
}

namespace {

ordered_json point_json(const Point& p) { return ordered_json::array({p.x, p.y}); }

Point point_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("expected [x, y]");
  return Point(j[0].get<double>(), j[1].get<double>());
}

std::string_view connectivity_name(Connectivity c) {
  return c == Connectivity::Eight ? "eight" : "four";
}

Connectivity connectivity_from_name(std::string_view name) {
  if (name == "eight") return Connectivity::Eight;
  if (name == "four") return Connectivity::Four;
  throw std::runtime_error("unknown connectivity '" + std::string(name) + "'");
}

}  // namespace

void write_flow_report(std::span<const FlowReportEntry> entries,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  for (const FlowReportEntry& entry : entries) {
    ordered_json j;
    j["t0"] = entry.result.t0_frame;
    j["tk"] = entry.result.tk_frame;
    j["matches"] = ordered_json::array();
    for (const FlowMatch& m : entry.result.matches) {
      ordered_json jm;
      jm["from"] = point_json(m.from);
      jm["to"] = point_json(m.to);
      jm["displacement"] = ordered_json::array({m.dx, m.dy});
      jm["distance"] = m.distance;
      jm["direction"] = direction_name(m.direction);
      j["matches"].push_back(std::move(jm));
    }
    j["unmatched_start"] = ordered_json::array();
    for (const Point& p : entry.result.unmatched_start)
      j["unmatched_start"].push_back(point_json(p));
    j["unmatched_end"] = ordered_json::array();
    for (const Point& p : entry.result.unmatched_end)
      j["unmatched_end"].push_back(point_json(p));
    j["elapsed_ms"] = entry.elapsed_ms;
    j["config"] = {{"tau", entry.extraction.tau},
                   {"min_area", entry.extraction.min_area},
                   {"connectivity", connectivity_name(entry.extraction.connectivity)},
                   {"stationary_eps", entry.matching.stationary_eps}};
    out << j.dump() << '\n';
  }
  if (!out) fail(path, "write failed");
}

std::vector<FlowReportEntry> read_flow_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open");
  std::vector<FlowReportEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);

      std::vector<FlowMatch> matches;
      for (const ordered_json& jm : j.at("matches")) {
        FlowMatch m;
        m.from = point_from_json(jm.at("from"));
        m.to = point_from_json(jm.at("to"));
        m.dx = jm.at("displacement").at(0).get<double>();
        m.dy = jm.at("displacement").at(1).get<double>();
        m.distance = jm.at("distance").get<double>();
        m.direction = direction_from_name(jm.at("direction").get<std::string>());
        if (std::abs(m.distance - std::hypot(m.dx, m.dy)) >
            1e-9 * std::max(1.0, m.distance))
          throw std::runtime_error("distance inconsistent with displacement");
        matches.push_back(m);
      }
      std::vector<Point> unmatched_start, unmatched_end;
      for (const ordered_json& jp : j.at("unmatched_start"))
        unmatched_start.push_back(point_from_json(jp));
      for (const ordered_json& jp : j.at("unmatched_end"))
        unmatched_end.push_back(point_from_json(jp));

      FlowReportEntry entry{
          FlowResult(j.at("t0").get<std::uint64_t>(), j.at("tk").get<std::uint64_t>(),
                     std::move(matches), std::move(unmatched_start),
                     std::move(unmatched_end)),
          j.at("elapsed_ms").get<double>(), ExtractionConfig{}, MatchConfig{}};
      if (j.contains("config")) {
        const ordered_json& jc = j["config"];
        entry.extraction.tau = jc.at("tau").get<double>();
        entry.extraction.min_area = jc.at("min_area").get<std::uint32_t>();
        entry.extraction.connectivity =
            connectivity_from_name(jc.at("connectivity").get<std::string>());
        entry.matching.stationary_eps = jc.at("stationary_eps").get<double>();
      }
      entries.push_back(std::move(entry));
    } catch (const std::exception& e) {
      fail_line(path, line_no, e.what());
    }
  }
  return entries;
}

namespace {

std::pair<double, double> parse_number_pair(const std::filesystem::path& path,
                                            std::size_t line_no, std::string_view value) {
  const std::size_t comma = value.find(',');
  if (comma == std::string_view::npos)
    fail_line(path, line_no, "expected 'x, y' pair");
  double a = 0.0, b = 0.0;
  if (!parse_number(value.substr(0, comma), a) ||
      !parse_number(value.substr(comma + 1), b))
    fail_line(path, line_no, "bad number pair");
  return {a, b};
}

}  // namespace

SceneSpec parse_scene_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open");

  std::optional<std::uint32_t> width, height;
  std::uint64_t n_frames = 1, seed = 0;
  std::vector<GroupSpec> groups;
  bool in_group = false;
  GroupSpec current;
  bool have_center = false;

  auto flush_group = [&](std::size_t line_no) {
    if (!in_group) return;
    if (!have_center) fail_line(path, line_no, "group missing 'center'");
    groups.push_back(current);
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view sv(raw);
    if (const std::size_t hash = sv.find('#'); hash != std::string_view::npos)
      sv = sv.substr(0, hash);
    sv = trim(sv);
    if (sv.empty()) continue;

    if (sv == "[group]") {
      flush_group(line_no);
      in_group = true;
      current = GroupSpec{};
      have_center = false;
      continue;
    }

    const std::size_t eq = sv.find('=');
    if (eq == std::string_view::npos) fail_line(path, line_no, "expected 'key = value'");
    const std::string_view key = trim(sv.substr(0, eq));
    const std::string_view value = trim(sv.substr(eq + 1));

    if (!in_group) {
      if (key == "width") {
        std::uint32_t v;
        if (!parse_number(value, v)) fail_line(path, line_no, "bad width");
        width = v;
      } else if (key == "height") {
        std::uint32_t v;
        if (!parse_number(value, v)) fail_line(path, line_no, "bad height");
        height = v;
      } else if (key == "frames") {
        if (!parse_number(value, n_frames)) fail_line(path, line_no, "bad frames");
      } else if (key == "seed") {
        if (!parse_number(value, seed)) fail_line(path, line_no, "bad seed");
      } else {
        fail_line(path, line_no, "unknown scene key '" + std::string(key) + "'");
      }
    } else {
      if (key == "center") {
        const auto [x, y] = parse_number_pair(path, line_no, value);
        current.center0 = Point(x, y);
        have_center = true;
      } else if (key == "members") {
        if (!parse_number(value, current.members)) fail_line(path, line_no, "bad members");
      } else if (key == "spread") {
        if (!parse_number(value, current.spread)) fail_line(path, line_no, "bad spread");
      } else if (key == "velocity") {
        std::tie(current.vx, current.vy) = parse_number_pair(path, line_no, value);
      } else if (key == "birth") {
        if (!parse_number(value, current.birth_frame)) fail_line(path, line_no, "bad birth");
      } else if (key == "death") {
        std::uint64_t v;
        if (!parse_number(value, v)) fail_line(path, line_no, "bad death");
        current.death_frame = v;
      } else {
        fail_line(path, line_no, "unknown group key '" + std::string(key) + "'");
      }
    }
  }
  flush_group(line_no + 1);

  if (!width || !height) fail(path, "scene spec must set width and height");
  return SceneSpec{FrameDims(*width, *height), n_frames, std::move(groups), seed};
}

}  // namespace crowdflow
