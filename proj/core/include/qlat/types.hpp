#pragma once

#include <Eigen/Dense>

namespace qlat {

// Vectors live in the orthonormal l-basis of the ambient n-dimensional space.
using VectorN = Eigen::VectorXd;
using MatrixN = Eigen::MatrixXd;

// Planar quantities after projection onto a principal plane.
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

}  // namespace qlat
