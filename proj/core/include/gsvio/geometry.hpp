#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace gsvio {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Rotation on SO(3), stored as a unit quaternion with both quaternion and
/// matrix views. Quaternion component order at serialization boundaries is
/// vector-first (x, y, z, w), matching the TUM trajectory format.
///
/// Renormalization policy: the quaternion is renormalized after every 100
/// compositions, or sooner if its norm drifts from 1 by more than 1e-10.
class Rotation {
 public:
  Rotation() : q_(Eigen::Quaterniond::Identity()) {}

  static Rotation identity() { return Rotation(); }

  /// From quaternion components in (x, y, z, w) order; normalizes.
  static Rotation from_quaternion(double x, double y, double z, double w);
  static Rotation from_matrix(const Mat3& m);

  const Eigen::Quaterniond& quaternion() const { return q_; }
  Mat3 matrix() const { return q_.toRotationMatrix(); }

  Rotation operator*(const Rotation& rhs) const;
  Vec3 operator*(const Vec3& v) const { return q_ * v; }
  Rotation inverse() const;

  /// Angle of the relative rotation this->inverse() * other, in [0, pi].
  double angle_to(const Rotation& other) const;

  /// Deviation of R^T R from identity (max abs entry), for invariant checks.
  double orthonormality_error() const;

 private:
  explicit Rotation(const Eigen::Quaterniond& q, int compositions = 0)
      : q_(q), compositions_(compositions) {}

  void renormalize_if_needed();

  Eigen::Quaterniond q_;
  int compositions_ = 0;
};

/// Rigid transform on SE(3). `rotation * x + translation` maps a point from
/// the source frame of the transform into its target frame.
struct Pose {
  Rotation rotation;
  Vec3 translation = Vec3::Zero();

  Pose() = default;
  Pose(const Rotation& r, const Vec3& t) : rotation(r), translation(t) {}

  static Pose identity() { return Pose(); }

  Mat4 matrix() const;
};

/// Exponential map so(3) -> SO(3). Angle below 1e-8 rad falls back to a
/// second-order Taylor expansion.
Rotation so3_exp(const Vec3& omega);

/// Logarithm map SO(3) -> so(3), principal branch (|result| <= pi). At angle
/// pi the representative with non-negative first nonzero axis component is
/// returned.
Vec3 so3_log(const Rotation& r);

/// Skew-symmetric cross-product matrix: skew(w) * v == w x v.
Mat3 skew(const Vec3& omega);

/// Quaternion-rate operator [[ -skew(w), w ], [ -w^T, 0 ]] acting on
/// vector-first (x, y, z, w) quaternions.
Mat4 omega_matrix(const Vec3& omega);

Pose compose(const Pose& a, const Pose& b);
Pose inverse(const Pose& a);
Vec3 transform_point(const Pose& a, const Vec3& p);

inline Pose operator*(const Pose& a, const Pose& b) { return compose(a, b); }
inline Vec3 operator*(const Pose& a, const Vec3& p) {
  return transform_point(a, p);
}

/// Rotates a covariance by the rotation part of `t`: R * sigma * R^T.
/// Translation does not affect covariance. Throws on non-PSD input.
Mat3 transport_covariance(const Pose& t, const Mat3& sigma);

}  // namespace gsvio
