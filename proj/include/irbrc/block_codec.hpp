// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "irbrc/frame.hpp"
#include "irbrc/predict.hpp"

namespace irbrc {

enum class Accounting : uint8_t {
  kExactBits = 0,
  kByteAligned = 1,
};

const char* accounting_name(Accounting accounting);  // "bits" / "bytes"
std::optional<Accounting> accounting_from_name(std::string_view name);

struct CodecConfig {
  uint32_t block_size = 8;
  Predictor predictor = Predictor::kEdge;
  Accounting accounting = Accounting::kByteAligned;

  void validate() const;  // throws InvalidBlockSize

  bool operator==(const CodecConfig&) const = default;
};

// One coded block, byte-aligned with zero padding. Layout, MSB first:
//   compressed: [flag=0][direction bit, HVD only][first sample, 8][units]
//   raw escape: [flag=1][samples row-major, 8 each]
// The raw escape bounds every payload at effective block bytes + 1.
struct CompressedBlock {
  bool raw_mode = false;
  uint32_t bit_length = 0;      // exact bits before padding
  std::vector<uint8_t> payload;

  bool operator==(const CompressedBlock&) const = default;
};

struct CompressedPlane {
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<CompressedBlock> blocks;  // raster tile order
};

struct CompressedFrame {
  FrameDescriptor desc;
  CodecConfig cfg;
  std::vector<CompressedPlane> planes;
};

CompressedBlock encode_block(const Plane& block, const CodecConfig& cfg);

// Decodes one block payload; width/height are the effective dims from the
// tile geometry. Returns the samples and the exact number of bits consumed.
std::pair<Plane, uint32_t> decode_block_bits(std::span<const uint8_t> payload,
                                             uint32_t width, uint32_t height,
                                             const CodecConfig& cfg);
Plane decode_block(std::span<const uint8_t> payload, uint32_t width,
                   uint32_t height, const CodecConfig& cfg);

CompressedPlane encode_plane(const Plane& plane, const CodecConfig& cfg);
Plane decode_plane(const CompressedPlane& cp, const CodecConfig& cfg);

CompressedFrame encode_frame(const Frame& frame, const CodecConfig& cfg);
Frame decode_frame(const CompressedFrame& cf);

}  // namespace irbrc
