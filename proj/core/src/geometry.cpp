#include "ndtslam/geometry.hpp"

#include <cmath>
#include <numbers>

namespace ndtslam {

namespace {

constexpr double kPi = std::numbers::pi;

// Euler extraction for R = Rz * Ry * Rx. Near |ry| = pi/2 the yaw/roll
// split is degenerate; the standard branch pins rx = 0 and folds the
// remaining rotation into rz.
void euler_from_matrix(const Eigen::Matrix3d& r, double& rx, double& ry,
                       double& rz) {
  const double sy = -r(2, 0);
  if (std::abs(sy) >= 1.0 - 1e-12) {
    ry = std::copysign(kPi / 2.0, sy);
    rx = 0.0;
    rz = std::atan2(-r(0, 1), r(1, 1));
  } else {
    ry = std::asin(sy);
    rx = std::atan2(r(2, 1), r(2, 2));
    rz = std::atan2(r(1, 0), r(0, 0));
  }
}

Pose6D from_rotation_translation(const Eigen::Matrix3d& r,
                                 const Eigen::Vector3d& t) {
  Pose6D out;
  out.tx = t.x();
  out.ty = t.y();
  out.tz = t.z();
  euler_from_matrix(r, out.rx, out.ry, out.rz);
  out.rx = wrap_angle(out.rx);
  out.ry = wrap_angle(out.ry);
  out.rz = wrap_angle(out.rz);
  return out;
}

}  // namespace

double wrap_angle(double radians) {
  double r = std::remainder(radians, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Eigen::Matrix3d rotation_matrix(const Pose6D& p) {
  const double cx = std::cos(p.rx), sx = std::sin(p.rx);
  const double cy = std::cos(p.ry), sy = std::sin(p.ry);
  const double cz = std::cos(p.rz), sz = std::sin(p.rz);
  Eigen::Matrix3d r;
  r << cz * cy, cz * sy * sx - sz * cx, cz * sy * cx + sz * sx,
       sz * cy, sz * sy * sx + cz * cx, sz * sy * cx - cz * sx,
       -sy, cy * sx, cy * cx;
  return r;
}

Eigen::Isometry3d to_isometry(const Pose6D& p) {
  Eigen::Isometry3d iso = Eigen::Isometry3d::Identity();
  iso.linear() = rotation_matrix(p);
  iso.translation() = Eigen::Vector3d(p.tx, p.ty, p.tz);
  return iso;
}

Pose6D from_isometry(const Eigen::Isometry3d& iso) {
  return from_rotation_translation(iso.linear(), iso.translation());
}

Pose6D compose(const Pose6D& a, const Pose6D& b) {
  const Eigen::Matrix3d ra = rotation_matrix(a);
  const Eigen::Matrix3d rb = rotation_matrix(b);
  const Eigen::Vector3d ta(a.tx, a.ty, a.tz);
  const Eigen::Vector3d tb(b.tx, b.ty, b.tz);
  return from_rotation_translation(ra * rb, ra * tb + ta);
}

Pose6D invert(const Pose6D& p) {
  const Eigen::Matrix3d r = rotation_matrix(p);
  const Eigen::Vector3d t(p.tx, p.ty, p.tz);
  return from_rotation_translation(r.transpose(), -(r.transpose() * t));
}

Point3 apply(const Pose6D& p, const Point3& pt) {
  const Eigen::Matrix3d r = rotation_matrix(p);
  const Eigen::Vector3d v = r * Eigen::Vector3d(pt.x, pt.y, pt.z) +
                            Eigen::Vector3d(p.tx, p.ty, p.tz);
  return {v.x(), v.y(), v.z()};
}

PoseError6 edge_error(const Pose6D& xi, const Pose6D& xj, const Pose6D& zij) {
  const Pose6D rel = compose(invert(xi), xj);
  const Pose6D err = compose(invert(zij), rel);
  PoseError6 e;
  e << err.tx, err.ty, err.tz, wrap_angle(err.rx), wrap_angle(err.ry),
      wrap_angle(err.rz);
  return e;
}

void rotation_matrix_derivatives(const Pose6D& p, Eigen::Matrix3d& d_rx,
                                 Eigen::Matrix3d& d_ry,
                                 Eigen::Matrix3d& d_rz) {
  const double cx = std::cos(p.rx), sx = std::sin(p.rx);
  const double cy = std::cos(p.ry), sy = std::sin(p.ry);
  const double cz = std::cos(p.rz), sz = std::sin(p.rz);

  Eigen::Matrix3d rz_m, ry_m, rx_m;
  rz_m << cz, -sz, 0, sz, cz, 0, 0, 0, 1;
  ry_m << cy, 0, sy, 0, 1, 0, -sy, 0, cy;
  rx_m << 1, 0, 0, 0, cx, -sx, 0, sx, cx;

  Eigen::Matrix3d drz, dry, drx;
  drz << -sz, -cz, 0, cz, -sz, 0, 0, 0, 0;
  dry << -sy, 0, cy, 0, 0, 0, -cy, 0, -sy;
  drx << 0, 0, 0, 0, -sx, -cx, 0, cx, -sx;

  d_rx = rz_m * ry_m * drx;
  d_ry = rz_m * dry * rx_m;
  d_rz = drz * ry_m * rx_m;
}

}  // namespace ndtslam
