#pragma once

#include <Eigen/Dense>

namespace cdanet {

using Scalar = double;

// Row-major storage so that serialized blobs are plain row-major doubles.
template <typename T>
using MatrixT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename T>
using VectorT = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Mat = MatrixT<Scalar>;
using Vec = VectorT<Scalar>;
using Index = Eigen::Index;

inline bool all_finite(const Mat& m) { return m.allFinite(); }

}  // namespace cdanet
