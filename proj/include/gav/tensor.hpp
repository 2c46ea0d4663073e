// SPDX-License-Identifier: Apache-2.0
#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "gav/error.hpp"

namespace gav {

// Dense row-major tensor of doubles. Layouts used throughout:
//   [C,H,W] feature maps, [Cout,Cin,kh,kw] conv weights, [n] vectors, [1] scalars.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> dims) : dims_(std::move(dims)) {
        v_.assign(numel_of(dims_), 0.0);
    }
    Tensor(std::vector<int> dims, std::vector<double> data)
        : dims_(std::move(dims)), v_(std::move(data)) {
        check_input(v_.size() == numel_of(dims_), "tensor data size does not match dims");
    }

    static Tensor zeros(std::vector<int> dims) { return Tensor(std::move(dims)); }
    static Tensor full(std::vector<int> dims, double value) {
        Tensor t(std::move(dims));
        for (auto& x : t.v_) x = value;
        return t;
    }
    static Tensor scalar(double value) { return Tensor({1}, {value}); }

    const std::vector<int>& dims() const { return dims_; }
    int dim(size_t i) const { return dims_.at(i); }
    int ndim() const { return static_cast<int>(dims_.size()); }
    size_t numel() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    double& operator[](size_t i) { return v_[i]; }
    double operator[](size_t i) const { return v_[i]; }

    // [C,H,W] accessors for the common case.
    double& at3(int c, int y, int x) {
        return v_[(static_cast<size_t>(c) * dims_[1] + y) * dims_[2] + x];
    }
    double at3(int c, int y, int x) const {
        return v_[(static_cast<size_t>(c) * dims_[1] + y) * dims_[2] + x];
    }

    bool same_dims(const Tensor& o) const { return dims_ == o.dims_; }
    bool all_finite() const;
    // IEEE == comparison elementwise (so -0.0 equals +0.0).
    bool equals(const Tensor& o) const;

    std::string shape_str() const;

    static size_t numel_of(const std::vector<int>& dims);

private:
    std::vector<int> dims_;
    std::vector<double> v_;
};

}  // namespace gav
