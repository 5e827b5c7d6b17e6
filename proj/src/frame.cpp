// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/frame.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>

namespace irbrc {

const char* chroma_format_name(ChromaFormat format) {
  return format == ChromaFormat::kI420 ? "yuv420p" : "gray";
}

std::optional<ChromaFormat> chroma_format_from_name(std::string_view name) {
  if (name == "gray") return ChromaFormat::kMonochrome;
  if (name == "yuv420p") return ChromaFormat::kI420;
  return std::nullopt;
}

size_t FrameDescriptor::frame_bytes() const {
  const size_t luma = static_cast<size_t>(width) * height;
  return chroma == ChromaFormat::kI420 ? luma + luma / 2 : luma;
}

void FrameDescriptor::validate() const {
  if (width < 1 || height < 1)
    throw Error(Errc::kInvalidDescriptor, "frame dimensions must be >= 1");
  if (chroma == ChromaFormat::kI420 && (width % 2 != 0 || height % 2 != 0))
    throw Error(Errc::kInvalidDescriptor, "4:2:0 requires even dimensions");
  if (bit_depth != 8)
    throw Error(Errc::kInvalidDescriptor, "only 8-bit samples are supported");
}

Plane::Plane(uint32_t width, uint32_t height, uint8_t fill)
    : width_(width), height_(height),
      samples_(static_cast<size_t>(width) * height, fill) {
  if (width < 1 || height < 1)
    throw Error(Errc::kInvalidDescriptor, "plane dimensions must be >= 1");
}

Plane::Plane(uint32_t width, uint32_t height, std::vector<uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width < 1 || height < 1)
    throw Error(Errc::kInvalidDescriptor, "plane dimensions must be >= 1");
  if (samples_.size() != static_cast<size_t>(width) * height)
    throw Error(Errc::kSizeMismatch, "sample count does not match plane dims");
}

bool valid_block_size(uint32_t block_size) {
  return block_size == 4 || block_size == 8 || block_size == 16;
}

std::vector<BlockGeometry> tile_plane(uint32_t width, uint32_t height,
                                      uint32_t block_size) {
  if (!valid_block_size(block_size))
    throw Error(Errc::kInvalidBlockSize, "block size must be 4, 8 or 16");
  std::vector<BlockGeometry> tiles;
  for (uint32_t y = 0; y < height; y += block_size) {
    for (uint32_t x = 0; x < width; x += block_size) {
      tiles.push_back({block_size, x, y, std::min(block_size, width - x),
                       std::min(block_size, height - y)});
    }
  }
  return tiles;
}

Frame load_raw_frame(std::span<const uint8_t> bytes, const FrameDescriptor& desc) {
  desc.validate();
  if (bytes.size() != desc.frame_bytes()) {
    char msg[96];
    std::snprintf(msg, sizeof(msg), "expected %zu bytes, got %zu",
                  desc.frame_bytes(), bytes.size());
    throw Error(Errc::kSizeMismatch, msg);
  }
  Frame frame;
  frame.desc = desc;
  const uint8_t* cursor = bytes.data();
  auto take_plane = [&cursor](uint32_t w, uint32_t h) {
    std::vector<uint8_t> samples(cursor, cursor + static_cast<size_t>(w) * h);
    cursor += static_cast<size_t>(w) * h;
    return Plane(w, h, std::move(samples));
  };
  frame.planes.push_back(take_plane(desc.width, desc.height));
  if (desc.chroma == ChromaFormat::kI420) {
    frame.planes.push_back(take_plane(desc.width / 2, desc.height / 2));
    frame.planes.push_back(take_plane(desc.width / 2, desc.height / 2));
  }
  return frame;
}

std::vector<uint8_t> frame_to_raw(const Frame& frame) {
  std::vector<uint8_t> bytes;
  bytes.reserve(frame.desc.frame_bytes());
  for (const Plane& plane : frame.planes)
    bytes.insert(bytes.end(), plane.samples().begin(), plane.samples().end());
  return bytes;
}

Plane extract_block(const Plane& plane, const BlockGeometry& g) {
  Plane block(g.width, g.height);
  for (uint32_t y = 0; y < g.height; ++y)
    for (uint32_t x = 0; x < g.width; ++x)
      block.set(x, y, plane.at(g.x + x, g.y + y));
  return block;
}

void insert_block(Plane& plane, const BlockGeometry& g, const Plane& block) {
  if (block.width() != g.width || block.height() != g.height)
    throw Error(Errc::kShapeMismatch, "block dims do not match geometry");
  for (uint32_t y = 0; y < g.height; ++y)
    for (uint32_t x = 0; x < g.width; ++x)
      plane.set(g.x + x, g.y + y, block.at(x, y));
}

namespace {

// Reads the next PGM header token, skipping whitespace and '#' comments.
bool next_pgm_token(std::span<const uint8_t> bytes, size_t& pos, std::string& token) {
  while (pos < bytes.size()) {
    if (std::isspace(bytes[pos])) {
      ++pos;
    } else if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
  token.clear();
  while (pos < bytes.size() && !std::isspace(bytes[pos]) && bytes[pos] != '#')
    token.push_back(static_cast<char>(bytes[pos++]));
  return !token.empty();
}

uint32_t parse_pgm_number(const std::string& token) {
  uint32_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9')
      throw Error(Errc::kInvalidDescriptor, "malformed PGM header");
    value = value * 10 + static_cast<uint32_t>(c - '0');
    if (value > 1000000u)
      throw Error(Errc::kInvalidDescriptor, "PGM dimension too large");
  }
  return value;
}

}  // namespace

Plane load_pgm(std::span<const uint8_t> bytes) {
  size_t pos = 0;
  std::string token;
  if (!next_pgm_token(bytes, pos, token) || token != "P5")
    throw Error(Errc::kInvalidDescriptor, "not a binary PGM (P5) file");
  uint32_t fields[3];
  for (uint32_t& field : fields) {
    if (!next_pgm_token(bytes, pos, token))
      throw Error(Errc::kInvalidDescriptor, "truncated PGM header");
    field = parse_pgm_number(token);
  }
  const uint32_t width = fields[0], height = fields[1], maxval = fields[2];
  if (maxval == 0 || maxval > 255)
    throw Error(Errc::kInvalidDescriptor, "PGM maxval must be in [1, 255]");
  if (width < 1 || height < 1)
    throw Error(Errc::kInvalidDescriptor, "PGM dimensions must be >= 1");
  ++pos;  // single whitespace byte after maxval
  const size_t expected = static_cast<size_t>(width) * height;
  if (pos > bytes.size() || bytes.size() - pos != expected)
    throw Error(Errc::kSizeMismatch, "PGM payload size does not match header");
  return Plane(width, height,
               std::vector<uint8_t>(bytes.begin() + pos, bytes.end()));
}

std::vector<uint8_t> write_pgm(const Plane& plane) {
  char header[48];
  const int n = std::snprintf(header, sizeof(header), "P5\n%u %u\n255\n",
                              plane.width(), plane.height());
  std::vector<uint8_t> bytes(header, header + n);
  bytes.insert(bytes.end(), plane.samples().begin(), plane.samples().end());
  return bytes;
}

}  // namespace irbrc
