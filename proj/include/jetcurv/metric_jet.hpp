#pragma once

#include <Eigen/Dense>

#include "jetcurv/tensor.hpp"

namespace jetcurv {

/// 2-jet of a Riemannian metric at the origin of a chart.
///
/// Index conventions (0-based):
///   g0(i, j)         = g_ij(0)
///   dg(k, i, j)      = d_k g_ij(0),        symmetric in (i, j)
///   d2g(l, k, i, j)  = d_l d_k g_ij(0),    symmetric in (i, j) and in (k, l)
///
/// Values produced by validate_jet() are exactly symmetric and have a
/// positive definite g0. All operations treat jets as immutable.
struct MetricJet2 {
    int m = 0;
    Eigen::MatrixXd g0;
    Tensor3 dg;
    Tensor4 d2g;

    MetricJet2() = default;
    explicit MetricJet2(int dim) : m(dim), g0(Eigen::MatrixXd::Zero(dim, dim)), dg(dim), d2g(dim) {}
};

/// Packed coordinates of a jet on the fiber: length d + d*m + d*d with
/// d = m(m+1)/2. Used for linear-map material and serialization.
struct FiberVector {
    int m = 0;
    Eigen::VectorXd coords;
};

/// Number of independent entries of a symmetric m x m matrix.
inline int sym_dim(int m) { return m * (m + 1) / 2; }

/// Packed length of the fiber coordinates for dimension m.
inline int fiber_dim(int m) {
    const int d = sym_dim(m);
    return d + d * m + d * d;
}

/// Position of the pair (i, j), i <= j, in lexicographic upper-triangular order.
inline int sym_index(int m, int i, int j) { return i * m - i * (i - 1) / 2 + (j - i); }

/// Checks shapes, symmetry (partners differing by at most 1e-9 relative to the
/// block's max-abs entry are averaged), and positive definiteness of g0
/// (smallest eigenvalue > 1e-12).
MetricJet2 validate_jet(int m, const Eigen::MatrixXd& g0, const Tensor3& dg, const Tensor4& d2g);

/// Componentwise affine combination t*tau + (1-t)*psi of all three blocks.
MetricJet2 interpolate_jets(const MetricJet2& psi, const MetricJet2& tau, double t);

/// Degree-2 Taylor metric of the jet evaluated at x, together with its
/// derivatives up to `order`. The value at x = 0 is g0 exactly. Positive
/// definiteness away from 0 is not guaranteed.
struct TaylorEval {
    Eigen::MatrixXd g;
    Tensor3 dg;   // filled when order >= 1
    Tensor4 d2g;  // filled when order >= 2 (constant in x)
    int order = 0;
};

TaylorEval taylor_eval(const MetricJet2& jet, const Eigen::VectorXd& x, int order);

/// Taylor metric value only.
Eigen::MatrixXd taylor_metric(const MetricJet2& jet, const Eigen::VectorXd& x);

/// First derivatives of the Taylor metric at x: result(k, i, j) = d_k h_ij(x).
Tensor3 taylor_metric_d1(const MetricJet2& jet, const Eigen::VectorXd& x);

/// Packed coordinates: g0 upper triangle (i <= j, lexicographic), then dg with
/// the k index outer, then d2g with (k <= l) pairs outer.
FiberVector flatten(const MetricJet2& jet);

/// Inverse of flatten on data of the correct length. Does not validate
/// positive definiteness; packed vectors may encode arbitrary fiber points.
MetricJet2 unflatten(const FiberVector& v);

/// unflatten for raw coordinates when the dimension is known from context.
MetricJet2 unflatten(int m, const Eigen::VectorXd& coords);

}  // namespace jetcurv
