// Copyright 2026 The Portanet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PORTANET_F16_HPP_
#define PORTANET_F16_HPP_

#include <cstdint>
#include <cstring>

namespace portanet {

// IEEE 754 binary16 conversions with round-to-nearest-even. Used to emulate
// device-side 16-bit float storage; accumulation stays in f32.

uint16_t f32_to_f16_bits(float value);
float f16_bits_to_f32(uint16_t bits);

/// Rounds a float to the nearest value representable in binary16.
inline float round_to_f16(float value) {
  return f16_bits_to_f32(f32_to_f16_bits(value));
}

}  // namespace portanet

#endif  // PORTANET_F16_HPP_
