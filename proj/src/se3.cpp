#include "ero/se3.hpp"

#include <cmath>

#include "ero/rng.hpp"

namespace ero {

double wrap_angle(double a) {
  double x = std::fmod(a + M_PI, 2.0 * M_PI);
  if (x <= 0.0) x += 2.0 * M_PI;
  return x - M_PI;
}

Eigen::Matrix3d rotation_from_euler(const EulerAngles& e) {
  const Eigen::AngleAxisd rz(e.yaw, Eigen::Vector3d::UnitZ());
  const Eigen::AngleAxisd ry(e.pitch, Eigen::Vector3d::UnitY());
  const Eigen::AngleAxisd rx(e.roll, Eigen::Vector3d::UnitX());
  return (rz * ry * rx).toRotationMatrix();
}

EulerAngles euler_from_rotation(const Eigen::Matrix3d& r) {
  EulerAngles e;
  const double sp = std::clamp(-r(2, 0), -1.0, 1.0);
  e.pitch = std::asin(sp);
  if (std::abs(r(2, 0)) < 1.0 - 1e-12) {
    e.roll = wrap_angle(std::atan2(r(2, 1), r(2, 2)));
    e.yaw = wrap_angle(std::atan2(r(1, 0), r(0, 0)));
  } else {
    // Gimbal lock: roll forced to 0, yaw absorbs the remaining angle.
    e.roll = 0.0;
    e.yaw = wrap_angle(std::atan2(-r(0, 1), r(1, 1)));
  }
  return e;
}

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = a.rotation * b.rotation;
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

Eigen::Vector3d apply(const Pose& p, const Eigen::Vector3d& x) {
  return p.rotation * x + p.translation;
}

Eigen::Matrix3d random_rotation(std::uint64_t seed) {
  SeededRng rng(mix_seed(seed, 0x5e3u));
  Eigen::Vector4d q;
  do {
    for (int i = 0; i < 4; ++i) q[i] = rng.normal();
  } while (q.norm() < 1e-12);
  q.normalize();
  return Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix();
}

double rotation_angle(const Eigen::Matrix3d& r) {
  const double c = std::clamp((r.trace() - 1.0) * 0.5, -1.0, 1.0);
  return std::acos(c);
}

bool is_rotation(const Eigen::Matrix3d& r, double tol) {
  const Eigen::Matrix3d rrt = r * r.transpose();
  return (rrt - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < tol &&
         std::abs(r.determinant() - 1.0) < tol;
}

}  // namespace ero
