#include "tdet/tensor.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace tdet {

TensorD TensorD::zeros(std::vector<std::int64_t> shape) {
    std::int64_t n = 1;
    for (std::int64_t e : shape) {
        if (e < 1) throw std::invalid_argument("TensorD: extents must be >= 1");
        n *= e;
    }
    return TensorD(std::move(shape), std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

std::int64_t TensorD::offset(std::initializer_list<std::int64_t> idx) const {
    std::int64_t off = 0;
    int m = 0;
    for (std::int64_t i : idx) {
        off = off * shape[static_cast<std::size_t>(m)] + i;
        ++m;
    }
    return off;
}

bool TensorD::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

double TensorD::frobenius_norm() const {
    double s = 0.0;
    for (double v : data) s += v * v;
    return std::sqrt(s);
}

bool same_shape(const TensorD& a, const TensorD& b) { return a.shape == b.shape; }

namespace {

// Column offsets for the remaining modes, separable into a contribution from
// the modes before `mode` (the row-major "outer" block) and the modes after it
// (the "inner" block): col = before[outer_idx] + after[inner_idx].
struct UnfoldMap {
    std::int64_t rows = 0, cols = 0, outer = 1, inner = 1;
    std::vector<std::int64_t> col_before; // indexed by outer block offset
    std::vector<std::int64_t> col_after;  // indexed by inner block offset
};

UnfoldMap make_unfold_map(const std::vector<std::int64_t>& shape, int mode) {
    const int nd = static_cast<int>(shape.size());
    UnfoldMap map;
    map.rows = shape[static_cast<std::size_t>(mode)];
    for (int m = 0; m < mode; ++m) map.outer *= shape[static_cast<std::size_t>(m)];
    for (int m = mode + 1; m < nd; ++m) map.inner *= shape[static_cast<std::size_t>(m)];
    map.cols = map.outer * map.inner;

    // Column stride of each remaining mode: ascending mode order, earliest
    // remaining mode varying fastest.
    std::vector<std::int64_t> stride(static_cast<std::size_t>(nd), 0);
    std::int64_t acc = 1;
    for (int m = 0; m < nd; ++m) {
        if (m == mode) continue;
        stride[static_cast<std::size_t>(m)] = acc;
        acc *= shape[static_cast<std::size_t>(m)];
    }

    map.col_before.assign(static_cast<std::size_t>(map.outer), 0);
    for (std::int64_t o = 0; o < map.outer; ++o) {
        std::int64_t rem = o, col = 0;
        for (int m = mode - 1; m >= 0; --m) { // row-major: mode 0 slowest
            const std::int64_t e = shape[static_cast<std::size_t>(m)];
            col += (rem % e) * stride[static_cast<std::size_t>(m)];
            rem /= e;
        }
        map.col_before[static_cast<std::size_t>(o)] = col;
    }
    map.col_after.assign(static_cast<std::size_t>(map.inner), 0);
    for (std::int64_t i = 0; i < map.inner; ++i) {
        std::int64_t rem = i, col = 0;
        for (int m = nd - 1; m > mode; --m) {
            const std::int64_t e = shape[static_cast<std::size_t>(m)];
            col += (rem % e) * stride[static_cast<std::size_t>(m)];
            rem /= e;
        }
        map.col_after[static_cast<std::size_t>(i)] = col;
    }
    return map;
}

} // namespace

Eigen::MatrixXd unfold(const TensorD& t, int mode) {
    if (mode < 0 || mode >= t.ndim())
        throw std::invalid_argument("unfold: mode out of range");
    const UnfoldMap map = make_unfold_map(t.shape, mode);
    Eigen::MatrixXd m(map.rows, map.cols);
    std::int64_t idx = 0;
    for (std::int64_t o = 0; o < map.outer; ++o) {
        const std::int64_t base = map.col_before[static_cast<std::size_t>(o)];
        for (std::int64_t r = 0; r < map.rows; ++r) {
            for (std::int64_t i = 0; i < map.inner; ++i) {
                m(r, base + map.col_after[static_cast<std::size_t>(i)]) = t.data[static_cast<std::size_t>(idx++)];
            }
        }
    }
    return m;
}

TensorD fold(const Eigen::MatrixXd& m, int mode,
             const std::vector<std::int64_t>& shape) {
    const int nd = static_cast<int>(shape.size());
    if (mode < 0 || mode >= nd)
        throw std::invalid_argument("fold: mode out of range");
    std::int64_t n = 1;
    for (std::int64_t e : shape) {
        if (e < 1) throw std::invalid_argument("fold: extents must be >= 1");
        n *= e;
    }
    const UnfoldMap map = make_unfold_map(shape, mode);
    if (m.rows() != map.rows || m.cols() != map.cols)
        throw std::invalid_argument("fold: matrix dimensions inconsistent with shape and mode");
    TensorD t;
    t.shape = shape;
    t.data.resize(static_cast<std::size_t>(n));
    std::int64_t idx = 0;
    for (std::int64_t o = 0; o < map.outer; ++o) {
        const std::int64_t base = map.col_before[static_cast<std::size_t>(o)];
        for (std::int64_t r = 0; r < map.rows; ++r) {
            for (std::int64_t i = 0; i < map.inner; ++i) {
                t.data[static_cast<std::size_t>(idx++)] = m(r, base + map.col_after[static_cast<std::size_t>(i)]);
            }
        }
    }
    return t;
}

SvdFactors svd(const Eigen::MatrixXd& m) {
    if (!m.allFinite()) throw std::invalid_argument("svd: non-finite input");
    Eigen::BDCSVD<Eigen::MatrixXd> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdFactors f{solver.matrixU(), solver.singularValues(), solver.matrixV()};
    // Sign convention: largest-|.| entry of each left singular vector positive,
    // ties broken by lowest row index.
    for (Eigen::Index j = 0; j < f.u.cols(); ++j) {
        Eigen::Index best = 0;
        double mag = std::abs(f.u(0, j));
        for (Eigen::Index i = 1; i < f.u.rows(); ++i) {
            const double a = std::abs(f.u(i, j));
            if (a > mag) {
                mag = a;
                best = i;
            }
        }
        if (f.u(best, j) < 0.0) {
            f.u.col(j) = -f.u.col(j);
            f.v.col(j) = -f.v.col(j);
        }
    }
    return f;
}

Eigen::MatrixXd svt(const Eigen::MatrixXd& m, double tau) {
    if (tau < 0.0) throw std::invalid_argument("svt: negative threshold");
    const SvdFactors f = svd(m);
    Eigen::Index rank = 0;
    while (rank < f.s.size() && f.s(rank) > tau) ++rank;
    if (rank == 0) return Eigen::MatrixXd::Zero(m.rows(), m.cols());
    const Eigen::VectorXd shrunk = f.s.head(rank).array() - tau;
    return f.u.leftCols(rank) * shrunk.asDiagonal() * f.v.leftCols(rank).transpose();
}

double soft_threshold(double x, double tau) {
    if (tau < 0.0) throw std::invalid_argument("soft_threshold: negative threshold");
    const double mag = std::abs(x) - tau;
    return mag > 0.0 ? (x > 0.0 ? mag : -mag) : 0.0;
}

TensorD soft_threshold(const TensorD& t, double tau) {
    if (tau < 0.0) throw std::invalid_argument("soft_threshold: negative threshold");
    TensorD out = t;
    for (double& v : out.data) v = soft_threshold(v, tau);
    return out;
}

} // namespace tdet
