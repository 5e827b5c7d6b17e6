// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "irbrc/error.hpp"

namespace irbrc {

enum class ChromaFormat : uint8_t {
  kMonochrome = 0,
  kI420 = 1,
};

const char* chroma_format_name(ChromaFormat format);  // "gray" / "yuv420p"
std::optional<ChromaFormat> chroma_format_from_name(std::string_view name);

struct FrameDescriptor {
  uint32_t width = 0;
  uint32_t height = 0;
  ChromaFormat chroma = ChromaFormat::kMonochrome;
  uint8_t bit_depth = 8;  // fixed at 8; kept as a field for the container

  // Planar byte size: w*h for monochrome, w*h*3/2 for 4:2:0.
  size_t frame_bytes() const;
  size_t plane_count() const { return chroma == ChromaFormat::kI420 ? 3 : 1; }

  void validate() const;  // throws InvalidDescriptor

  bool operator==(const FrameDescriptor&) const = default;
};

// Row-major grid of 8-bit samples. Accessors are range-checked on both
// coordinates so neighbor logic can never silently wrap to another row.
class Plane {
 public:
  Plane() = default;
  Plane(uint32_t width, uint32_t height, uint8_t fill = 0);
  Plane(uint32_t width, uint32_t height, std::vector<uint8_t> samples);

  uint32_t width() const { return width_; }
  uint32_t height() const { return height_; }

  uint8_t at(uint32_t x, uint32_t y) const { return samples_[index(x, y)]; }
  void set(uint32_t x, uint32_t y, uint8_t value) { samples_[index(x, y)] = value; }

  const std::vector<uint8_t>& samples() const { return samples_; }

  bool operator==(const Plane&) const = default;

 private:
  size_t index(uint32_t x, uint32_t y) const {
    if (x >= width_ || y >= height_)
      throw Error(Errc::kIndexOutOfRange, "plane sample access out of bounds");
    return static_cast<size_t>(y) * width_ + x;
  }

  uint32_t width_ = 0;
  uint32_t height_ = 0;
  std::vector<uint8_t> samples_;
};

struct Frame {
  FrameDescriptor desc;
  std::vector<Plane> planes;  // Y or Y,U,V

  bool operator==(const Frame&) const = default;
};

// One tile of the block partition. Effective dims are clipped at the right
// and bottom plane edges; origin is always a multiple of block_size.
struct BlockGeometry {
  uint32_t block_size = 0;
  uint32_t x = 0;
  uint32_t y = 0;
  uint32_t width = 0;   // effective, >= 1, <= block_size
  uint32_t height = 0;  // effective, >= 1, <= block_size

  bool operator==(const BlockGeometry&) const = default;
};

bool valid_block_size(uint32_t block_size);  // {4, 8, 16}

// Raster-order tiling of a w*h plane; edge tiles carry clipped dims.
// Throws InvalidBlockSize for sizes outside {4, 8, 16}.
std::vector<BlockGeometry> tile_plane(uint32_t width, uint32_t height,
                                      uint32_t block_size);

// Parses raw planar bytes (I420 order for 4:2:0) into planes; the byte count
// must match the descriptor exactly (SizeMismatch otherwise).
Frame load_raw_frame(std::span<const uint8_t> bytes, const FrameDescriptor& desc);

// Inverse of load_raw_frame, byte for byte.
std::vector<uint8_t> frame_to_raw(const Frame& frame);

Plane extract_block(const Plane& plane, const BlockGeometry& geometry);
void insert_block(Plane& plane, const BlockGeometry& geometry, const Plane& block);

// Binary PGM (P5, maxval <= 255).
Plane load_pgm(std::span<const uint8_t> bytes);
std::vector<uint8_t> write_pgm(const Plane& plane);

}  // namespace irbrc
