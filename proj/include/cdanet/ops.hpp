#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "cdanet/errors.hpp"
#include "cdanet/types.hpp"

namespace cdanet {

inline std::string shape_str(const Mat& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

// y = x * W + b, with b broadcast over rows.
inline Mat affine(const Mat& x, const Mat& W, const Mat& b) {
  if (x.cols() != W.rows())
    throw DimensionError("affine: x is " + shape_str(x) + " but W is " +
                         shape_str(W));
  if (b.rows() != 1 || b.cols() != W.cols())
    throw DimensionError("affine: bias is " + shape_str(b) + ", expected 1x" +
                         std::to_string(W.cols()));
  Mat y = x * W;
  y.rowwise() += b.row(0);
  return y;
}

struct AffineGrads {
  Mat dx;
  Mat dW;
  Mat db;
};

inline AffineGrads affine_backward(const Mat& x, const Mat& W, const Mat& dy) {
  AffineGrads g;
  g.dx = dy * W.transpose();
  g.dW = x.transpose() * dy;
  g.db = dy.colwise().sum();
  return g;
}

inline Mat relu(const Mat& x) { return x.cwiseMax(0.0); }

// Subgradient at 0 is taken as 0.
inline Mat relu_backward(const Mat& x, const Mat& dy) {
  return (x.array() > 0.0).select(dy, Mat::Zero(dy.rows(), dy.cols()));
}

// Row-wise softmax with max subtraction; rows sum to 1.
inline Mat softmax_rows(const Mat& x) {
  Mat out(x.rows(), x.cols());
  for (Index i = 0; i < x.rows(); ++i) {
    const Scalar m = x.row(i).maxCoeff();
    out.row(i) = (x.row(i).array() - m).exp();
    out.row(i) /= out.row(i).sum();
  }
  return out;
}

// dx for y = softmax_rows(x), given y and dy.
inline Mat softmax_rows_backward(const Mat& y, const Mat& dy) {
  Mat dx(y.rows(), y.cols());
  for (Index i = 0; i < y.rows(); ++i) {
    const Scalar dot = y.row(i).cwiseProduct(dy.row(i)).sum();
    dx.row(i) = y.row(i).cwiseProduct(dy.row(i).array() - dot);
  }
  return dx;
}

inline Scalar sigmoid_scalar(Scalar v) {
  return v >= 0.0 ? 1.0 / (1.0 + std::exp(-v))
                  : std::exp(v) / (1.0 + std::exp(v));
}

inline Mat sigmoid(const Mat& x) {
  return x.unaryExpr([](Scalar v) { return sigmoid_scalar(v); });
}

inline constexpr Scalar kProbClamp = 1e-7;

// Mean binary cross entropy. Probabilities are clamped into
// [kProbClamp, 1 - kProbClamp] before the logs.
inline Scalar bce_mean(const Mat& p, const Mat& y) {
  if (p.rows() == 0) throw DataError("bce_mean: empty batch");
  if (p.rows() != y.rows() || p.cols() != 1 || y.cols() != 1)
    throw DimensionError("bce_mean: p is " + shape_str(p) + ", y is " +
                         shape_str(y));
  Scalar acc = 0.0;
  for (Index i = 0; i < p.rows(); ++i) {
    const Scalar yi = y(i, 0);
    if (yi != 0.0 && yi != 1.0)
      throw DataError("bce_mean: label " + std::to_string(yi) +
                      " at row " + std::to_string(i) + " is not in {0,1}");
    const Scalar pi = std::min(1.0 - kProbClamp, std::max(kProbClamp, p(i, 0)));
    acc -= yi * std::log(pi) + (1.0 - yi) * std::log(1.0 - pi);
  }
  return acc / static_cast<Scalar>(p.rows());
}

// d/dlogit of bce_mean(sigmoid(logit), y). Where the clamp is active the
// implemented loss is flat, so the gradient there is exactly 0.
inline Mat bce_logits_backward(const Mat& logit, const Mat& y) {
  const Scalar n = static_cast<Scalar>(logit.rows());
  Mat d(logit.rows(), 1);
  for (Index i = 0; i < logit.rows(); ++i) {
    const Scalar p = sigmoid_scalar(logit(i, 0));
    if (p < kProbClamp || p > 1.0 - kProbClamp)
      d(i, 0) = 0.0;
    else
      d(i, 0) = (p - y(i, 0)) / n;
  }
  return d;
}

inline Scalar frob_sq(const Mat& m) { return m.squaredNorm(); }

inline Mat concat_cols(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw DimensionError("concat_cols: " + shape_str(a) + " vs " +
                         shape_str(b));
  Mat out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

}  // namespace cdanet
