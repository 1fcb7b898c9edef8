#include "gsvio/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "gsvio/error.hpp"

namespace gsvio {

namespace {

constexpr int kRenormalizeEvery = 100;
constexpr double kRenormalizeError = 1e-10;

bool finite(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

}  // namespace

Rotation Rotation::from_quaternion(double x, double y, double z, double w) {
  Eigen::Quaterniond q(w, x, y, z);
  double n = q.norm();
  if (!std::isfinite(n) || n < 1e-12) {
    raise(ErrorCode::InvalidArgument, "Rotation: quaternion not normalizable");
  }
  q.coeffs() /= n;
  return Rotation(q);
}

Rotation Rotation::from_matrix(const Mat3& m) {
  if (!m.allFinite()) {
    raise(ErrorCode::InvalidArgument, "Rotation: non-finite matrix");
  }
  Eigen::Quaterniond q(m);
  q.normalize();
  return Rotation(q);
}

void Rotation::renormalize_if_needed() {
  if (compositions_ >= kRenormalizeEvery ||
      std::abs(q_.squaredNorm() - 1.0) > kRenormalizeError) {
    q_.normalize();
    compositions_ = 0;
  }
}

Rotation Rotation::operator*(const Rotation& rhs) const {
  Rotation out(q_ * rhs.q_, std::max(compositions_, rhs.compositions_) + 1);
  out.renormalize_if_needed();
  return out;
}

Rotation Rotation::inverse() const {
  return Rotation(q_.conjugate(), compositions_);
}

double Rotation::angle_to(const Rotation& other) const {
  double c = std::abs(q_.dot(other.q_));
  return 2.0 * std::acos(std::min(1.0, c));
}

double Rotation::orthonormality_error() const {
  Mat3 m = matrix();
  return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
}

Mat4 Pose::matrix() const {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rotation.matrix();
  m.topRightCorner<3, 1>() = translation;
  return m;
}

Rotation so3_exp(const Vec3& omega) {
  if (!finite(omega)) {
    raise(ErrorCode::InvalidArgument, "so3_exp: non-finite input");
  }
  double theta = omega.norm();
  if (theta < 1e-8) {
    // Second-order Taylor: q = [omega/2 * (1 - theta^2/24), 1 - theta^2/8].
    double t2 = theta * theta;
    Vec3 v = omega * (0.5 * (1.0 - t2 / 24.0));
    Eigen::Quaterniond q(1.0 - t2 / 8.0, v.x(), v.y(), v.z());
    q.normalize();
    return Rotation::from_quaternion(q.x(), q.y(), q.z(), q.w());
  }
  double half = 0.5 * theta;
  Vec3 axis = omega / theta;
  double s = std::sin(half);
  return Rotation::from_quaternion(axis.x() * s, axis.y() * s, axis.z() * s,
                                   std::cos(half));
}

Vec3 so3_log(const Rotation& r) {
  Eigen::Quaterniond q = r.quaternion();
  if (q.w() < 0) {
    q.coeffs() = -q.coeffs();
  }
  Vec3 v(q.x(), q.y(), q.z());
  double vn = v.norm();
  double theta = 2.0 * std::atan2(vn, q.w());
  if (vn < 1e-12) {
    // Near identity: log(q) ~= 2 * v * (1 + |v|^2 / (6 w^2)) / w.
    return 2.0 * v / q.w();
  }
  Vec3 axis = v / vn;
  if (theta > M_PI - 1e-9) {
    // Fix the sign at the branch cut: first nonzero axis component >= 0.
    for (int i = 0; i < 3; ++i) {
      if (std::abs(axis[i]) > 1e-12) {
        if (axis[i] < 0) axis = -axis;
        break;
      }
    }
    theta = std::min(theta, M_PI);
  }
  return axis * theta;
}

Mat3 skew(const Vec3& omega) {
  Mat3 m;
  m << 0, -omega.z(), omega.y(),
      omega.z(), 0, -omega.x(),
      -omega.y(), omega.x(), 0;
  return m;
}

Mat4 omega_matrix(const Vec3& omega) {
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<3, 3>() = -skew(omega);
  m.topRightCorner<3, 1>() = omega;
  m.bottomLeftCorner<1, 3>() = -omega.transpose();
  return m;
}

Pose compose(const Pose& a, const Pose& b) {
  return Pose(a.rotation * b.rotation,
              a.rotation * b.translation + a.translation);
}

Pose inverse(const Pose& a) {
  Rotation rinv = a.rotation.inverse();
  return Pose(rinv, -(rinv * a.translation));
}

Vec3 transform_point(const Pose& a, const Vec3& p) {
  return a.rotation * p + a.translation;
}

Mat3 transport_covariance(const Pose& t, const Mat3& sigma) {
  if (!sigma.allFinite() ||
      (sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    raise(ErrorCode::InvalidArgument,
          "transport_covariance: covariance not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(sigma);
  if (eig.eigenvalues().minCoeff() < -1e-12) {
    raise(ErrorCode::InvalidArgument,
          "transport_covariance: covariance not positive semi-definite");
  }
  Mat3 r = t.rotation.matrix();
  return r * sigma * r.transpose();
}

}  // namespace gsvio
