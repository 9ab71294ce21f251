#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tdet {

/// Dense N-mode real tensor, row-major storage (last mode varies fastest).
struct TensorD {
    std::vector<std::int64_t> shape;
    std::vector<double> data;

    TensorD() = default;
    TensorD(std::vector<std::int64_t> s, std::vector<double> d)
        : shape(std::move(s)), data(std::move(d)) {}

    static TensorD zeros(std::vector<std::int64_t> shape);

    int ndim() const { return static_cast<int>(shape.size()); }
    std::int64_t size() const { return static_cast<std::int64_t>(data.size()); }
    std::int64_t extent(int mode) const { return shape[static_cast<std::size_t>(mode)]; }

    double& operator[](std::int64_t i) { return data[static_cast<std::size_t>(i)]; }
    double operator[](std::int64_t i) const { return data[static_cast<std::size_t>(i)]; }

    /// Linear row-major offset of a multi-index.
    std::int64_t offset(std::initializer_list<std::int64_t> idx) const;

    bool all_finite() const;
    double frobenius_norm() const;
};

bool same_shape(const TensorD& a, const TensorD& b);

/// Thin SVD factors: m = u * s.asDiagonal() * v^T.
struct SvdFactors {
    Eigen::MatrixXd u;
    Eigen::VectorXd s;
    Eigen::MatrixXd v;
};

/// Mode-k unfolding. Rows index mode k; columns enumerate the remaining modes
/// in ascending mode order with the lowest-indexed remaining mode varying
/// fastest. fold() inverts it bit-exactly under the same convention.
Eigen::MatrixXd unfold(const TensorD& t, int mode);

TensorD fold(const Eigen::MatrixXd& m, int mode,
             const std::vector<std::int64_t>& shape);

/// Thin SVD with a deterministic sign convention: the largest-magnitude entry
/// of each left singular vector is positive, ties broken by lowest row index.
SvdFactors svd(const Eigen::MatrixXd& m);

/// Singular value thresholding: u * diag(max(s - tau, 0)) * v^T.
Eigen::MatrixXd svt(const Eigen::MatrixXd& m, double tau);

/// Elementwise sign(x) * max(|x| - tau, 0).
double soft_threshold(double x, double tau);
TensorD soft_threshold(const TensorD& t, double tau);

} // namespace tdet
