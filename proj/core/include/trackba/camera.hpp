#ifndef TRACKBA_CAMERA_HPP
#define TRACKBA_CAMERA_HPP

#include <Eigen/Core>
#include <optional>

namespace trackba {

// Pinhole camera intrinsics. Pixel coordinates are (u, v) = (column, row)
// with the origin at the center of the top-left pixel, so the sampleable
// image domain is [0, width-1] x [0, height-1].
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  // Throws DomainError when fx/fy are non-positive or the principal point
  // lies outside the image.
  void validate() const;

  bool contains(double u, double v) const {
    return u >= 0.0 && v >= 0.0 && u <= width - 1.0 && v <= height - 1.0;
  }
};

// A 3D point in (pixel, depth) parameterization: 2D image location plus
// depth along the optical axis, in meters.
struct Point3D {
  double u = 0.0;
  double v = 0.0;
  double d = 0.0;
};

// Lifts a (pixel, depth) point to camera-frame meters:
// (d*(u-cx)/fx, d*(v-cy)/fy, d). Throws InvalidDepthError for d <= 0.
Eigen::Vector3d back_project(const Point3D& p, const CameraIntrinsics& k);

// Pinhole projection with the depth carried through, so the result can be
// compared directly against a (u, v, d) track point.
// Throws BehindCameraError for q.z <= 0.
Point3D project(const Eigen::Vector3d& q, const CameraIntrinsics& k);

// Non-throwing variant for hot paths; nullopt when q.z <= 0.
std::optional<Point3D> try_project(const Eigen::Vector3d& q,
                                   const CameraIntrinsics& k);

}  // namespace trackba

#endif  // TRACKBA_CAMERA_HPP
