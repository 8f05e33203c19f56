#pragma once

#include <Eigen/Dense>

namespace radialgeo {

using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;

}  // namespace radialgeo
