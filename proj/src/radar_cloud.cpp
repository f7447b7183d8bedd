#include "ero/radar_cloud.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ero/errors.hpp"

namespace ero {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_g9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_field(const std::string& text, const char* column, int row,
                   const std::string& path) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::malformed_line,
                path + ": row " + std::to_string(row) + ": cannot parse '" +
                    text + "' in column " + column);
  }
}

}  // namespace

RadarFrame read_frame_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_failure, "cannot open " + path);

  std::string header;
  if (!std::getline(in, header)) {
    throw Error(ErrorCode::empty_file, path + ": empty file");
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const std::vector<std::string> cols = split_csv_line(header);
  const std::vector<std::string> expected = {"x", "y", "z", "doppler", "rcs"};
  for (const auto& want : expected) {
    if (std::find(cols.begin(), cols.end(), want) == cols.end()) {
      throw Error(ErrorCode::missing_column,
                  path + ": missing column '" + want + "' in header '" +
                      header + "'");
    }
  }
  if (cols != expected) {
    throw Error(ErrorCode::missing_column,
                path + ": header must be exactly 'x,y,z,doppler,rcs', got '" +
                    header + "'");
  }

  RadarFrame frame;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) {
      throw Error(ErrorCode::malformed_line,
                  path + ": row " + std::to_string(row) + ": expected 5 fields, got " +
                      std::to_string(fields.size()));
    }
    RadarPoint p;
    p.position.x() = parse_field(fields[0], "x", row, path);
    p.position.y() = parse_field(fields[1], "y", row, path);
    p.position.z() = parse_field(fields[2], "z", row, path);
    p.doppler = parse_field(fields[3], "doppler", row, path);
    p.rcs = parse_field(fields[4], "rcs", row, path);
    if (!p.position.allFinite() || !std::isfinite(p.doppler) ||
        !std::isfinite(p.rcs)) {
      throw Error(ErrorCode::non_finite_value,
                  path + ": row " + std::to_string(row) + ": non-finite value");
    }
    if (p.position.norm() <= 0.0) {
      throw Error(ErrorCode::zero_range,
                  path + ": row " + std::to_string(row) + ": zero range");
    }
    frame.points.push_back(p);
  }
  return frame;
}

void write_frame_csv(const RadarFrame& frame, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path);
  out << "x,y,z,doppler,rcs\n";
  for (const auto& p : frame.points) {
    out << format_g9(p.position.x()) << ',' << format_g9(p.position.y()) << ','
        << format_g9(p.position.z()) << ',' << format_g9(p.doppler) << ','
        << format_g9(p.rcs) << '\n';
  }
  if (!out) throw Error(ErrorCode::io_failure, "write failed for " + path);
}

SequenceManifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_failure, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::config_error, path + ": " + e.what());
  }
  SequenceManifest m;
  if (!j.is_object() || !j.contains("frames") || !j["frames"].is_array()) {
    throw Error(ErrorCode::config_error,
                path + ": manifest must be an object with a 'frames' array");
  }
  for (const auto& f : j["frames"]) {
    ManifestEntry e;
    if (!f.contains("path") || !f.contains("timestamp")) {
      throw Error(ErrorCode::config_error,
                  path + ": each frame needs 'path' and 'timestamp'");
    }
    e.path = f["path"].get<std::string>();
    e.timestamp = f["timestamp"].get<double>();
    if (f.contains("labels")) e.labels = f["labels"].get<std::string>();
    m.frames.push_back(e);
  }
  if (j.contains("ground_truth")) {
    m.ground_truth = j["ground_truth"].get<std::string>();
  }
  return m;
}

void write_manifest(const SequenceManifest& manifest, const std::string& path) {
  json j;
  j["frames"] = json::array();
  for (const auto& e : manifest.frames) {
    json f;
    f["path"] = e.path;
    f["timestamp"] = e.timestamp;
    if (!e.labels.empty()) f["labels"] = e.labels;
    j["frames"].push_back(f);
  }
  if (!manifest.ground_truth.empty()) j["ground_truth"] = manifest.ground_truth;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path);
  out << j.dump(2) << '\n';
}

Sequence load_sequence_frames(const std::string& manifest_path) {
  const SequenceManifest m = read_manifest(manifest_path);
  const fs::path base = fs::path(manifest_path).parent_path();
  Sequence seq;
  double prev_ts = -std::numeric_limits<double>::infinity();
  for (const auto& e : m.frames) {
    RadarFrame f = read_frame_csv((base / e.path).string());
    f.timestamp = e.timestamp;
    if (f.timestamp <= prev_ts) {
      throw Error(ErrorCode::timestamp_mismatch,
                  manifest_path + ": timestamps must be strictly increasing (" +
                      format_g9(prev_ts) + " then " + format_g9(f.timestamp) + ")");
    }
    prev_ts = f.timestamp;
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

SignCheckReport doppler_sign_check(const RadarFrame& frame,
                                   const KnownGeometry& known,
                                   double tolerance) {
  if (static_cast<int>(known.v_abs.size()) != frame.size()) {
    throw Error(ErrorCode::shape_mismatch,
                "doppler_sign_check: v_abs count != point count");
  }
  SignCheckReport report;
  report.tolerance = tolerance;
  report.checked = frame.size();
  for (int i = 0; i < frame.size(); ++i) {
    const auto& p = frame.points[i];
    const Eigen::Vector3d dir = p.position / p.position.norm();
    const double predicted = dir.dot(known.v_ego - known.v_abs[i]);
    if (std::abs(predicted) <= tolerance || std::abs(p.doppler) <= tolerance) {
      continue;
    }
    if ((predicted > 0.0) != (p.doppler > 0.0)) report.flagged.push_back(i);
  }
  return report;
}

}  // namespace ero
