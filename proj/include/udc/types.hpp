#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace udc {

using Vec3d = Eigen::Vector3d;
using Vec3f = Eigen::Vector3f;
using Vec3i = Eigen::Vector3i;
using Index = std::int64_t;

/// N x 3 matrix of point coordinates, one point per row.
using PointCloud = Eigen::Matrix<double, Eigen::Dynamic, 3>;

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr int axis_index(Axis a) { return static_cast<int>(a); }

inline constexpr Axis kAllAxes[3] = {Axis::X, Axis::Y, Axis::Z};

}  // namespace udc
