#ifndef TRACKBA_SE3_HPP
#define TRACKBA_SE3_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "trackba/camera.hpp"

namespace trackba {

using Vector6d = Eigen::Matrix<double, 6, 1>;

// Rigid camera-to-world transform: X_world = R * X_cam + t.
// Stored as a unit quaternion plus translation; the quaternion is
// normalized on construction and after every retraction.
class Pose {
 public:
  Pose() : q_(Eigen::Quaterniond::Identity()), t_(Eigen::Vector3d::Zero()) {}
  Pose(const Eigen::Quaterniond& q, const Eigen::Vector3d& t)
      : q_(q.normalized()), t_(t) {}
  Pose(const Eigen::Matrix3d& r, const Eigen::Vector3d& t)
      : q_(Eigen::Quaterniond(r).normalized()), t_(t) {}

  static Pose identity() { return Pose(); }
  static Pose from_matrix(const Eigen::Matrix4d& m) {
    return Pose(Eigen::Matrix3d(m.block<3, 3>(0, 0)),
                Eigen::Vector3d(m.block<3, 1>(0, 3)));
  }

  const Eigen::Quaterniond& rotation() const { return q_; }
  const Eigen::Vector3d& translation() const { return t_; }
  Eigen::Matrix3d rotation_matrix() const { return q_.toRotationMatrix(); }

  Eigen::Matrix4d matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(0, 0) = rotation_matrix();
    m.block<3, 1>(0, 3) = t_;
    return m;
  }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return q_ * p + t_; }
  Eigen::Vector3d apply_inverse(const Eigen::Vector3d& p) const {
    return q_.conjugate() * (p - t_);
  }

 private:
  Eigen::Quaterniond q_;
  Eigen::Vector3d t_;
};

// Twist increments are ordered (translation, rotation): delta = (rho, phi).
Pose se3_exp(const Vector6d& delta);
Vector6d se3_log(const Pose& a);

Pose se3_compose(const Pose& a, const Pose& b);
Pose se3_inverse(const Pose& a);

// Relative transform from frame a to frame b: inverse(a) * b.
Pose se3_relative(const Pose& a, const Pose& b);

// Right-multiplicative retraction a * exp(delta); the rotation is
// renormalized so long chains of retractions stay on the manifold.
Pose se3_retract(const Pose& a, const Vector6d& delta);

// Geodesic rotation angle of a's rotation part, in radians.
double rotation_angle(const Pose& a);

// Maps a pixel-depth observation from camera frame i into camera frame j:
// back-project in i, move through world, project in j. With Ti == Tj this
// is the identity on (u, v, d). Throws BehindCameraError when the point
// lands behind camera j.
Point3D reproject(const Point3D& x, double depth, const Pose& cam_i,
                  const Pose& cam_j, const CameraIntrinsics& k);

// Non-throwing variant; nullopt when the point lands behind camera j.
std::optional<Point3D> try_reproject(const Point3D& x, double depth,
                                     const Pose& cam_i, const Pose& cam_j,
                                     const CameraIntrinsics& k);

}  // namespace trackba

#endif  // TRACKBA_SE3_HPP
