// SPDX-License-Identifier: Apache-2.0
#include "gav/tensor.hpp"

#include <cmath>
#include <sstream>

namespace gav {

size_t Tensor::numel_of(const std::vector<int>& dims) {
    size_t n = 1;
    for (int d : dims) {
        check_input(d > 0, "tensor dims must be positive");
        n *= static_cast<size_t>(d);
    }
    return dims.empty() ? 0 : n;
}

bool Tensor::all_finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

bool Tensor::equals(const Tensor& o) const {
    if (dims_ != o.dims_) return false;
    for (size_t i = 0; i < v_.size(); ++i)
        if (v_[i] != o.v_[i]) return false;
    return true;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
    os << "]";
    return os.str();
}

}  // namespace gav
