// Copyright 2026 The Portanet Authors
// SPDX-License-Identifier: Apache-2.0

#include "portanet/types.hpp"

#include <array>
#include <utility>

namespace portanet {

namespace {

constexpr std::array<std::pair<OpKind, std::string_view>, 14> kOpNames = {{
    {OpKind::CONV_2D, "CONV_2D"},
    {OpKind::TRANSPOSE_CONV_2D, "TRANSPOSE_CONV_2D"},
    {OpKind::DEPTH_TO_SPACE, "DEPTH_TO_SPACE"},
    {OpKind::SPACE_TO_DEPTH, "SPACE_TO_DEPTH"},
    {OpKind::RESIZE_BILINEAR, "RESIZE_BILINEAR"},
    {OpKind::RESIZE_NEAREST, "RESIZE_NEAREST"},
    {OpKind::CONCATENATION, "CONCATENATION"},
    {OpKind::ADD, "ADD"},
    {OpKind::MUL, "MUL"},
    {OpKind::RELU, "RELU"},
    {OpKind::PRELU, "PRELU"},
    {OpKind::MAX_POOL_2D, "MAX_POOL_2D"},
    {OpKind::AVG_POOL_2D, "AVG_POOL_2D"},
    {OpKind::FULLY_CONNECTED, "FULLY_CONNECTED"},
}};

constexpr std::array<std::pair<DataType, std::string_view>, 4> kDtypeNames = {{
    {DataType::F32, "F32"},
    {DataType::F16, "F16"},
    {DataType::Q8, "Q8"},
    {DataType::Q16, "Q16"},
}};

}  // namespace

std::string_view to_string(DataType dt) {
  for (auto& [v, n] : kDtypeNames) {
    if (v == dt) return n;
  }
  return "?";
}

std::string_view to_string(OpKind kind) {
  for (auto& [v, n] : kOpNames) {
    if (v == kind) return n;
  }
  return "?";
}

std::string_view to_string(PaddingMode mode) {
  return mode == PaddingMode::SAME ? "SAME" : "VALID";
}

std::optional<DataType> data_type_from_string(std::string_view s) {
  for (auto& [v, n] : kDtypeNames) {
    if (n == s) return v;
  }
  // Profile files use lowercase dtype section names.
  if (s == "f32") return DataType::F32;
  if (s == "f16") return DataType::F16;
  if (s == "q8") return DataType::Q8;
  if (s == "q16") return DataType::Q16;
  return std::nullopt;
}

std::optional<OpKind> op_kind_from_string(std::string_view s) {
  for (auto& [v, n] : kOpNames) {
    if (n == s) return v;
  }
  return std::nullopt;
}

std::optional<PaddingMode> padding_mode_from_string(std::string_view s) {
  if (s == "SAME") return PaddingMode::SAME;
  if (s == "VALID") return PaddingMode::VALID;
  return std::nullopt;
}

size_t byte_size(DataType dt) {
  switch (dt) {
    case DataType::F32:
      return 4;
    case DataType::F16:
      return 2;
    case DataType::Q8:
      return 1;
    case DataType::Q16:
      return 2;
  }
  return 4;
}

}  // namespace portanet
