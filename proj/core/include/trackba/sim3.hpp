#ifndef TRACKBA_SIM3_HPP
#define TRACKBA_SIM3_HPP

#include <Eigen/Core>
#include <vector>

namespace trackba {

// Similarity transform p -> scale * R * p + t.
struct Sim3Transform {
  double scale = 1.0;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return scale * (rotation * p) + translation;
  }
  Sim3Transform inverse() const;
};

// Closed-form least-squares similarity aligning src onto dst, i.e. the
// global minimizer of sum_i ||dst_i - (s R src_i + t)||^2.
// Requires n >= 3 non-collinear points; throws DegenerateConfigError for
// too few points or a rank-deficient cross-covariance.
Sim3Transform umeyama_sim3(const std::vector<Eigen::Vector3d>& src,
                           const std::vector<Eigen::Vector3d>& dst);

}  // namespace trackba

#endif  // TRACKBA_SIM3_HPP
