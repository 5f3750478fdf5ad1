// Copyright 2026 The Portanet Authors
// SPDX-License-Identifier: Apache-2.0

#include "portanet/tensor.hpp"

#include <cstring>
#include <fstream>

namespace portanet {

namespace {

constexpr char kMagic[4] = {'P', 'T', 'T', 'N'};

void put_u32(std::ostream& os, uint32_t v) {
  uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                  static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t get_u32(std::istream& is) {
  uint8_t b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw ParseError("tensor file: truncated header");
  return uint32_t(b[0]) | (uint32_t(b[1]) << 8) | (uint32_t(b[2]) << 16) | (uint32_t(b[3]) << 24);
}

}  // namespace

void save_tensor(const Tensor& t, const std::string& path) {
  if (t.shape().size() != 4) throw ShapeError("tensor file: only rank-4 tensors are stored");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open for writing: " + path);
  os.write(kMagic, 4);
  put_u32(os, 0);  // dtype code: f32
  for (int i = 0; i < 4; ++i) put_u32(os, static_cast<uint32_t>(t.dim(i)));
  for (float f : t.data()) {
    uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_u32(os, bits);
  }
  if (!os) throw Error("write failed: " + path);
}

Tensor load_tensor(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) {
    throw ParseError("tensor file: bad magic in " + path);
  }
  const uint32_t dtype = get_u32(is);
  if (dtype != 0) {
    throw ParseError("tensor file: unsupported dtype code " + std::to_string(dtype));
  }
  std::vector<int64_t> shape(4);
  for (int i = 0; i < 4; ++i) {
    shape[i] = static_cast<int64_t>(get_u32(is));
    if (shape[i] < 1) throw ParseError("tensor file: non-positive dim");
  }
  Tensor t(shape);
  for (int64_t i = 0; i < t.elements(); ++i) {
    const uint32_t bits = get_u32(is);
    float f;
    std::memcpy(&f, &bits, 4);
    t[i] = f;
  }
  return t;
}

}  // namespace portanet
