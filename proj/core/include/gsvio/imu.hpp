#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gsvio/geometry.hpp"

namespace gsvio {

/// One inertial measurement. `accel` is specific force: a stationary, level
/// sensor reads (0, 0, +9.81) m/s^2.
struct ImuSample {
  double timestamp = 0.0;  // seconds
  Vec3 accel = Vec3::Zero();  // m/s^2
  Vec3 gyro = Vec3::Zero();   // rad/s
};

struct ImuBias {
  Vec3 accel_bias = Vec3::Zero();  // m/s^2
  Vec3 gyro_bias = Vec3::Zero();   // rad/s
};

/// Gravity reaction vector in the world frame: +9.81 on z by default, so the
/// specific-force convention above is self-consistent.
struct GravityModel {
  Vec3 gravity_world = Vec3(0.0, 0.0, 9.81);  // m/s^2
};

/// World-frame inertial state propagated between frames and reset from
/// tracking. `rotation` is body-to-world.
struct NavState {
  Vec3 position = Vec3::Zero();  // m
  Vec3 velocity = Vec3::Zero();  // m/s
  Rotation rotation;
  double timestamp = 0.0;
};

/// Preintegrated motion increments over one inter-frame window, expressed in
/// the body frame at the window start. Independent of the absolute state.
struct PreintegrationDelta {
  Vec3 alpha = Vec3::Zero();  // position increment, m
  Vec3 beta = Vec3::Zero();   // velocity increment, m/s
  Rotation gamma;             // rotation increment
  double duration = 0.0;      // seconds
  int sample_count = 0;

  static PreintegrationDelta identity() { return {}; }
};

/// Fixed camera/IMU rig calibration. `cam_from_imu` maps IMU-frame
/// coordinates into the camera frame; `imu_from_cam` is its cached inverse.
struct Extrinsics {
  Pose cam_from_imu;
  Pose imu_from_cam;

  static Extrinsics from_cam_from_imu(const Pose& cam_from_imu) {
    return {cam_from_imu, inverse(cam_from_imu)};
  }
  static Extrinsics identity() { return from_cam_from_imu(Pose::identity()); }
};

/// Subtracts the constant biases from a raw sample. Gravity stays in; it is
/// removed later in the kinematic prediction.
std::pair<Vec3, Vec3> correct_sample(const ImuSample& s, const ImuBias& bias);

/// Advances (alpha, beta, gamma) across [s_prev.timestamp, s_curr.timestamp]
/// with midpoint-rule discretization: mean corrected accel rotated by the
/// half-step gamma, mean corrected gyro driving the rotation increment.
/// Throws on non-monotonic timestamps or gaps above 0.1 s.
PreintegrationDelta integrate_sample(const PreintegrationDelta& delta,
                                     const ImuSample& s_prev,
                                     const ImuSample& s_curr,
                                     const ImuBias& bias);

/// Integrates exactly [t_start, t_end]; boundary samples are linearly
/// interpolated in accel and gyro. Throws a coverage error when the stream
/// starts more than 0.05 s after t_start or ends more than 0.05 s before
/// t_end.
PreintegrationDelta preintegrate(std::span<const ImuSample> samples,
                                 double t_start, double t_end,
                                 const ImuBias& bias);

/// Chains two deltas over adjacent windows: the composite over [a, c] from
/// deltas over [a, b] and [b, c].
PreintegrationDelta compose_deltas(const PreintegrationDelta& ab,
                                   const PreintegrationDelta& bc);

/// Relative body motion over the delta's window, expressed in the body frame
/// at the window start: rotation = gamma, translation =
/// R_prev^T (v_prev dt - 1/2 g dt^2) + alpha. The transform maps end-frame
/// coordinates into start-frame coordinates. With a stationary level sensor
/// the gravity term cancels alpha exactly and the result is identity.
Pose predict_relative_pose(const PreintegrationDelta& delta,
                           const NavState& state, const GravityModel& gravity);

/// Initial-guess policy for the camera-frame composition: the full similarity
/// transform (default) transports the IMU relative motion through both
/// extrinsic factors; the literal form applies only the leading one.
enum class ExtrinsicComposition { FullSimilarity, Literal };

/// Camera-pose initial guess for the next frame. `prev_cam_pose` and the
/// result are world-from-camera. The IMU relative motion is transported into
/// the camera frame through the extrinsics and composed onto the previous
/// pose.
Pose initial_guess_camera(
    const Pose& rel_imu, const Pose& prev_cam_pose, const Extrinsics& ext,
    ExtrinsicComposition mode = ExtrinsicComposition::FullSimilarity);

/// Resets the inertial state from two consecutive tracked camera poses
/// (world-from-camera): position/rotation from the IMU world pose at the
/// current frame, velocity from the finite difference of the IMU positions.
NavState update_from_tracking(const Pose& tracked_cam_pose_prev,
                              const Pose& tracked_cam_pose_curr,
                              const Extrinsics& ext, double frame_dt,
                              double timestamp = 0.0);

}  // namespace gsvio
