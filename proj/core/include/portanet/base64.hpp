// Copyright 2026 The Portanet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PORTANET_BASE64_HPP_
#define PORTANET_BASE64_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace portanet {

std::string base64_encode(const uint8_t* data, size_t size);

/// Decodes standard base64 (with '=' padding). Throws ParseError on
/// malformed input.
std::vector<uint8_t> base64_decode(std::string_view text);

}  // namespace portanet

#endif  // PORTANET_BASE64_HPP_
