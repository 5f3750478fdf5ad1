// Copyright 2026 The Portanet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PORTANET_TENSOR_HPP_
#define PORTANET_TENSOR_HPP_

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "portanet/types.hpp"

namespace portanet {

/// Dense float tensor. Activations are rank-4 NHWC; weight tensors may be
/// any rank (conv filters are HWIO, transpose-conv filters HWOI, biases and
/// PRELU slopes rank 1, fully-connected matrices rank 2).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape)
      : shape_(std::move(shape)), data_(element_count_of(shape_), 0.0f) {}
  Tensor(std::vector<int64_t> shape, std::vector<float> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (static_cast<int64_t>(data_.size()) != element_count_of(shape_)) {
      throw ShapeError("tensor data size does not match shape");
    }
  }

  static int64_t element_count_of(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t d : shape) n *= d;
    return n;
  }

  static Tensor nhwc(int64_t n, int64_t h, int64_t w, int64_t c) {
    return Tensor({n, h, w, c});
  }

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t elements() const { return static_cast<int64_t>(data_.size()); }
  int64_t dim(size_t i) const { return shape_.at(i); }

  const std::vector<float>& data() const { return data_; }
  std::vector<float>& data() { return data_; }

  float& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  float operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // NHWC accessors; only valid for rank-4 tensors.
  int64_t index(int64_t n, int64_t h, int64_t w, int64_t c) const {
    return ((n * shape_[1] + h) * shape_[2] + w) * shape_[3] + c;
  }
  float at(int64_t n, int64_t h, int64_t w, int64_t c) const {
    return data_[static_cast<size_t>(index(n, h, w, c))];
  }
  float& at(int64_t n, int64_t h, int64_t w, int64_t c) {
    return data_[static_cast<size_t>(index(n, h, w, c))];
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

 private:
  std::vector<int64_t> shape_;
  std::vector<float> data_;
};

// Binary tensor file: "PTTN" magic, u32 dtype code (0 = f32), four u32 dims,
// then the little-endian payload. Only f32 payloads are produced or consumed.
void save_tensor(const Tensor& t, const std::string& path);
Tensor load_tensor(const std::string& path);

}  // namespace portanet

#endif  // PORTANET_TENSOR_HPP_
