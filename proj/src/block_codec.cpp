// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/block_codec.hpp"

#include "irbrc/bitstream.hpp"
#include "irbrc/vlc.hpp"

namespace irbrc {

const char* accounting_name(Accounting accounting) {
  return accounting == Accounting::kExactBits ? "bits" : "bytes";
}

std::optional<Accounting> accounting_from_name(std::string_view name) {
  if (name == "bits") return Accounting::kExactBits;
  if (name == "bytes") return Accounting::kByteAligned;
  return std::nullopt;
}

void CodecConfig::validate() const {
  if (!valid_block_size(block_size))
    throw Error(Errc::kInvalidBlockSize, "block size must be 4, 8 or 16");
}

CompressedBlock encode_block(const Plane& block, const CodecConfig& cfg) {
  cfg.validate();
  ResidualBlock rb = predict_block(block, cfg.predictor);

  BitWriter out;
  out.put_bit(false);  // compressed mode
  if (cfg.predictor == Predictor::kHvd) out.put_bit(*rb.hvd_vertical);
  out.put_bits(rb.first_sample, 8);
  std::vector<int16_t> unit;
  unit.reserve(16);
  for_each_unit(block.width(), block.height(),
                [&](uint32_t x0, uint32_t y0, uint32_t x1, uint32_t y1) {
                  collect_unit_residuals(rb, x0, y0, x1, y1, unit);
                  if (!unit.empty()) encode_unit(out, unit);
                });

  const size_t raw_bits =
      1 + 8 * static_cast<size_t>(block.width()) * block.height();
  if (out.bit_size() >= raw_bits) {
    BitWriter raw;
    raw.put_bit(true);
    for (uint32_t y = 0; y < block.height(); ++y)
      for (uint32_t x = 0; x < block.width(); ++x)
        raw.put_bits(block.at(x, y), 8);
    return {true, static_cast<uint32_t>(raw.bit_size()), raw.take()};
  }
  return {false, static_cast<uint32_t>(out.bit_size()), out.take()};
}

namespace {

Plane decode_block_stream(BitReader& in, uint32_t width, uint32_t height,
                          const CodecConfig& cfg) {
  if (in.get_bit()) {  // raw escape
    Plane block(width, height);
    for (uint32_t y = 0; y < height; ++y)
      for (uint32_t x = 0; x < width; ++x)
        block.set(x, y, static_cast<uint8_t>(in.get_bits(8)));
    return block;
  }
  ResidualBlock rb;
  rb.width = width;
  rb.height = height;
  if (cfg.predictor == Predictor::kHvd) rb.hvd_vertical = in.get_bit();
  rb.first_sample = static_cast<uint8_t>(in.get_bits(8));
  rb.residuals.assign(static_cast<size_t>(width) * height - 1, 0);
  std::vector<int16_t> unit;
  unit.reserve(16);
  for_each_unit(width, height,
                [&](uint32_t x0, uint32_t y0, uint32_t x1, uint32_t y1) {
                  size_t count = static_cast<size_t>(x1 - x0) * (y1 - y0);
                  if (x0 == 0 && y0 == 0) --count;  // (0,0) is stored raw
                  if (count == 0) return;
                  unit.resize(count);
                  decode_unit(in, unit);
                  size_t i = 0;
                  for (uint32_t y = y0; y < y1; ++y) {
                    for (uint32_t x = x0; x < x1; ++x) {
                      if (x == 0 && y == 0) continue;
                      rb.residuals[static_cast<size_t>(y) * width + x - 1] =
                          unit[i++];
                    }
                  }
                });
  return reconstruct_block(rb, cfg.predictor);
}

}  // namespace

std::pair<Plane, uint32_t> decode_block_bits(std::span<const uint8_t> payload,
                                             uint32_t width, uint32_t height,
                                             const CodecConfig& cfg) {
  cfg.validate();
  BitReader in(payload);
  Plane block = decode_block_stream(in, width, height, cfg);
  return {std::move(block), static_cast<uint32_t>(in.bit_pos())};
}

Plane decode_block(std::span<const uint8_t> payload, uint32_t width,
                   uint32_t height, const CodecConfig& cfg) {
  return decode_block_bits(payload, width, height, cfg).first;
}

CompressedPlane encode_plane(const Plane& plane, const CodecConfig& cfg) {
  CompressedPlane cp{plane.width(), plane.height(), {}};
  const auto tiles = tile_plane(plane.width(), plane.height(), cfg.block_size);
  cp.blocks.reserve(tiles.size());
  for (const BlockGeometry& g : tiles)
    cp.blocks.push_back(encode_block(extract_block(plane, g), cfg));
  return cp;
}

Plane decode_plane(const CompressedPlane& cp, const CodecConfig& cfg) {
  const auto tiles = tile_plane(cp.width, cp.height, cfg.block_size);
  if (tiles.size() != cp.blocks.size())
    throw Error(Errc::kShapeMismatch, "block count does not match tiling");
  Plane plane(cp.width, cp.height);
  for (size_t i = 0; i < tiles.size(); ++i) {
    insert_block(plane, tiles[i],
                 decode_block(cp.blocks[i].payload, tiles[i].width,
                              tiles[i].height, cfg));
  }
  return plane;
}

CompressedFrame encode_frame(const Frame& frame, const CodecConfig& cfg) {
  frame.desc.validate();
  cfg.validate();
  CompressedFrame cf{frame.desc, cfg, {}};
  cf.planes.reserve(frame.planes.size());
  for (const Plane& plane : frame.planes)
    cf.planes.push_back(encode_plane(plane, cfg));
  return cf;
}

Frame decode_frame(const CompressedFrame& cf) {
  Frame frame;
  frame.desc = cf.desc;
  frame.planes.reserve(cf.planes.size());
  for (const CompressedPlane& cp : cf.planes)
    frame.planes.push_back(decode_plane(cp, cf.cfg));
  return frame;
}

}  // namespace irbrc
