#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstdint>
#include <vector>

namespace ero {

/// Intrinsic Z-Y-X angles (yaw about z, then pitch about y, then roll
/// about x). Yaw is vehicle heading. Angles live in (-pi, pi], pitch in
/// [-pi/2, pi/2].
struct EulerAngles {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

/// Rigid transform x -> R*x + t. Used both for frame-to-frame relative
/// poses and for accumulated world poses.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return Pose{}; }

  Pose inverse() const {
    Pose out;
    out.rotation = rotation.transpose();
    out.translation = -(rotation.transpose() * translation);
    return out;
  }

  Eigen::Matrix4d homogeneous() const {
    Eigen::Matrix4d h = Eigen::Matrix4d::Identity();
    h.topLeftCorner<3, 3>() = rotation;
    h.topRightCorner<3, 1>() = translation;
    return h;
  }
};

struct TrajectoryPoint {
  double timestamp = 0.0;
  Pose pose;
};

/// Pose chain, one entry per frame; first entry is conventionally the
/// identity for odometry output.
using Trajectory = std::vector<TrajectoryPoint>;

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

Eigen::Matrix3d rotation_from_euler(const EulerAngles& e);

/// Inverse of rotation_from_euler away from gimbal lock. At
/// |pitch| = pi/2 the roll/yaw split is canonicalized with roll = 0.
EulerAngles euler_from_rotation(const Eigen::Matrix3d& r);

Pose compose(const Pose& a, const Pose& b);

Eigen::Vector3d apply(const Pose& p, const Eigen::Vector3d& x);

/// Deterministic per seed, uniform on SO(3) (normalized quaternion of
/// four Gaussian samples).
Eigen::Matrix3d random_rotation(std::uint64_t seed);

/// Geodesic rotation angle in [0, pi].
double rotation_angle(const Eigen::Matrix3d& r);

bool is_rotation(const Eigen::Matrix3d& r, double tol = 1e-9);

}  // namespace ero
