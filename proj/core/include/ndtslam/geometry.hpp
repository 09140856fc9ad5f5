#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace ndtslam {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

// Wraps an angle to (-pi, pi].
double wrap_angle(double radians);

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Rigid transform stored as [tx ty tz rx ry rz]: translation in meters and
// intrinsic z-y-x Euler angles in radians (yaw, then pitch, then roll), i.e.
// the rotation matrix is Rz(rz) * Ry(ry) * Rx(rx). Angles are kept in
// (-pi, pi] by every constructor-like operation below.
struct Pose6D {
  double tx = 0.0;
  double ty = 0.0;
  double tz = 0.0;
  double rx = 0.0;
  double ry = 0.0;
  double rz = 0.0;

  static Pose6D identity() { return {}; }

  Vector6d vector() const {
    Vector6d v;
    v << tx, ty, tz, rx, ry, rz;
    return v;
  }
};

// 6-vector edge residual: translation part in meters, rotation part in
// radians with each component wrapped to (-pi, pi].
using PoseError6 = Vector6d;

Eigen::Matrix3d rotation_matrix(const Pose6D& p);
Eigen::Isometry3d to_isometry(const Pose6D& p);
Pose6D from_isometry(const Eigen::Isometry3d& iso);

// Result applies b first, then a, as rigid maps: T(a*b) x = T(a)(T(b) x).
Pose6D compose(const Pose6D& a, const Pose6D& b);

Pose6D invert(const Pose6D& p);

// Rotation applied before translation: R(p) * pt + t(p).
Point3 apply(const Pose6D& p, const Point3& pt);

// Residual of the relative pose of (xi, xj) against the measurement zij:
// the 6-vector of invert(zij) * invert(xi) * xj. Zero iff the pair is
// consistent with the measurement.
PoseError6 edge_error(const Pose6D& xi, const Pose6D& xj, const Pose6D& zij);

// Derivatives of the rotation matrix with respect to rx, ry, rz; used by
// the analytic scan-matching gradient.
void rotation_matrix_derivatives(const Pose6D& p, Eigen::Matrix3d& d_rx,
                                 Eigen::Matrix3d& d_ry, Eigen::Matrix3d& d_rz);

}  // namespace ndtslam
