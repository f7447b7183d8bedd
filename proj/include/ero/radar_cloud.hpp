#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "ero/se3.hpp"

namespace ero {

/// One radar detection in the sensor frame. Doppler is positive for
/// approaching targets, negative for receding ones; this sign convention
/// is asserted at ingest and used by every downstream formula.
struct RadarPoint {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // meters
  double doppler = 0.0;                                // m/s
  double rcs = 0.0;                                    // dBsm
};

struct RadarFrame {
  double timestamp = 0.0;  // seconds
  std::vector<RadarPoint> points;

  int size() const { return static_cast<int>(points.size()); }
};

struct Sequence {
  std::vector<RadarFrame> frames;
  std::optional<Trajectory> ground_truth;
};

/// CSV schema: header `x,y,z,doppler,rcs`; meters, m/s, dBsm; UTF-8, LF
/// line endings, `.` decimal separator.
RadarFrame read_frame_csv(const std::string& path);
void write_frame_csv(const RadarFrame& frame, const std::string& path);

/// Sequence manifest: JSON listing frame files with timestamps, plus
/// optional ground-truth trajectory and per-frame label files. Paths are
/// relative to the manifest's directory.
struct ManifestEntry {
  std::string path;
  double timestamp = 0.0;
  std::string labels;  // optional per-frame ground-truth labels CSV
};

struct SequenceManifest {
  std::vector<ManifestEntry> frames;
  std::string ground_truth;  // optional TUM trajectory path
};

SequenceManifest read_manifest(const std::string& path);
void write_manifest(const SequenceManifest& manifest, const std::string& path);

/// Loads all frames named by a manifest; validates that timestamps are
/// strictly increasing.
Sequence load_sequence_frames(const std::string& manifest_path);

/// Known per-frame kinematics for the Doppler sign diagnostic, expressed
/// in the same sensor frame as the point positions.
struct KnownGeometry {
  Eigen::Vector3d v_ego = Eigen::Vector3d::Zero();
  std::vector<Eigen::Vector3d> v_abs;  // one entry per point
};

struct SignCheckReport {
  std::vector<int> flagged;  // indices whose Doppler sign contradicts Eq-1 prediction
  int checked = 0;
  double tolerance = 0.0;
};

/// Flags points whose measured Doppler sign contradicts the prediction
/// from the known velocities. Predictions and measurements inside the
/// tolerance band are not flagged.
SignCheckReport doppler_sign_check(const RadarFrame& frame,
                                   const KnownGeometry& known,
                                   double tolerance = 1e-9);

/// Formats a double with 9 significant digits (the project-wide policy
/// for reproducible text output).
std::string format_g9(double v);

}  // namespace ero
