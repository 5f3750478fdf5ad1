// Copyright 2026 The Portanet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PORTANET_TYPES_HPP_
#define PORTANET_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace portanet {

/// Tensor element types. F32 is the development reference, F16 models the
/// on-device float path, Q8 is asymmetric unsigned 8-bit and Q16 is
/// symmetric signed 16-bit fixed point.
enum class DataType : uint8_t { F32, F16, Q8, Q16 };

/// Operator vocabulary. These names are the stable external identifiers used
/// by graph files, device profiles, taint rules and reports.
enum class OpKind : uint8_t {
  CONV_2D,
  TRANSPOSE_CONV_2D,
  DEPTH_TO_SPACE,
  SPACE_TO_DEPTH,
  RESIZE_BILINEAR,
  RESIZE_NEAREST,
  CONCATENATION,
  ADD,
  MUL,
  RELU,
  PRELU,
  MAX_POOL_2D,
  AVG_POOL_2D,
  FULLY_CONNECTED,
};

enum class PaddingMode : uint8_t { SAME, VALID };

std::string_view to_string(DataType dt);
std::string_view to_string(OpKind kind);
std::string_view to_string(PaddingMode mode);

std::optional<DataType> data_type_from_string(std::string_view s);
std::optional<OpKind> op_kind_from_string(std::string_view s);
std::optional<PaddingMode> padding_mode_from_string(std::string_view s);

size_t byte_size(DataType dt);

/// Base class for all portanet errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// File or text that cannot be decoded (graph JSON, profile TOML, tensors).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Shapes that cannot be resolved or do not line up.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Invalid builder / pass configuration (bad ArchSpec, bad target, ...).
class SpecError : public Error {
 public:
  explicit SpecError(const std::string& what) : Error(what) {}
};

}  // namespace portanet

#endif  // PORTANET_TYPES_HPP_
