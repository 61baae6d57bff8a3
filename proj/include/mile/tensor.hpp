// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mile/errors.hpp"

namespace mile {

/// Dense n-dimensional float64 array in row-major order. This is the numeric
/// substrate for weights, activations, gradients, images, and masks.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    Tensor(std::vector<std::size_t> shape_, std::vector<double> data_);

    static Tensor zeros(std::vector<std::size_t> shape);
    static Tensor full(std::vector<std::size_t> shape, double value);

    std::size_t size() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }
    std::size_t dim(std::size_t axis) const;

    bool same_shape(const Tensor& other) const { return shape == other.shape; }

    // 2-D accessors; valid only for rank-2 tensors (rows x cols).
    std::size_t rows() const { return dim(0); }
    std::size_t cols() const { return dim(1); }
    double& at2(std::size_t r, std::size_t c) { return data[r * shape[1] + c]; }
    double at2(std::size_t r, std::size_t c) const { return data[r * shape[1] + c]; }

    bool operator==(const Tensor& other) const = default;
};

std::size_t shape_product(std::span<const std::size_t> shape);
std::string shape_str(std::span<const std::size_t> shape);

bool all_finite(std::span<const double> values);

/// Throws ShapeError unless every value of `t` is finite. `what` names the
/// tensor in the message.
void require_finite(const Tensor& t, const char* what);

void require_same_shape(const Tensor& a, const Tensor& b, const char* what);

} // namespace mile
