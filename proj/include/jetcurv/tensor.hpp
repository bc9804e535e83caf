#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace jetcurv {

// Dense rank-3 array with one common dimension. No symmetry is imposed by
// the container; callers maintain their own index conventions.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int n) : n_(n), v_(static_cast<std::size_t>(n) * n * n, 0.0) {}

    int dim() const noexcept { return n_; }

    double& operator()(int a, int b, int c) {
        assert(a >= 0 && a < n_ && b >= 0 && b < n_ && c >= 0 && c < n_);
        return v_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
    }
    double operator()(int a, int b, int c) const {
        assert(a >= 0 && a < n_ && b >= 0 && b < n_ && c >= 0 && c < n_);
        return v_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
    }

    double max_abs() const {
        double r = 0.0;
        for (double x : v_) r = std::max(r, std::abs(x));
        return r;
    }

    bool same_shape(const Tensor3& o) const noexcept { return n_ == o.n_; }

    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
        assert(a.same_shape(b));
        Tensor3 r(a.n_);
        for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = a.v_[i] + b.v_[i];
        return r;
    }
    friend Tensor3 operator*(double s, const Tensor3& a) {
        Tensor3 r(a.n_);
        for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = s * a.v_[i];
        return r;
    }
    friend Tensor3 operator-(const Tensor3& a, const Tensor3& b) { return a + (-1.0) * b; }

private:
    int n_ = 0;
    std::vector<double> v_;
};

// Dense rank-4 array with one common dimension.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int n) : n_(n), v_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

    int dim() const noexcept { return n_; }

    double& operator()(int a, int b, int c, int d) {
        assert(a >= 0 && a < n_ && b >= 0 && b < n_ && c >= 0 && c < n_ && d >= 0 && d < n_);
        return v_[((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d];
    }
    double operator()(int a, int b, int c, int d) const {
        assert(a >= 0 && a < n_ && b >= 0 && b < n_ && c >= 0 && c < n_ && d >= 0 && d < n_);
        return v_[((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d];
    }

    double max_abs() const {
        double r = 0.0;
        for (double x : v_) r = std::max(r, std::abs(x));
        return r;
    }

    bool same_shape(const Tensor4& o) const noexcept { return n_ == o.n_; }

    friend Tensor4 operator+(const Tensor4& a, const Tensor4& b) {
        assert(a.same_shape(b));
        Tensor4 r(a.n_);
        for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = a.v_[i] + b.v_[i];
        return r;
    }
    friend Tensor4 operator*(double s, const Tensor4& a) {
        Tensor4 r(a.n_);
        for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = s * a.v_[i];
        return r;
    }
    friend Tensor4 operator-(const Tensor4& a, const Tensor4& b) { return a + (-1.0) * b; }

private:
    int n_ = 0;
    std::vector<double> v_;
};

}  // namespace jetcurv
