// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/frame_store.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace irbrc {

namespace {

constexpr char kMagic[4] = {'I', 'R', 'B', 'R'};
constexpr uint8_t kVersion = 1;

uint32_t ceil_div(uint32_t a, uint32_t b) { return (a + b - 1) / b; }

BlockGeometry slot_geometry(const PlaneStore& ps, uint32_t block_size,
                            uint32_t bx, uint32_t by) {
  return {block_size, bx * block_size, by * block_size,
          std::min(block_size, ps.width - bx * block_size),
          std::min(block_size, ps.height - by * block_size)};
}

std::span<const uint8_t> slot_span(const PlaneStore& ps, size_t index) {
  return std::span<const uint8_t>(ps.slots)
      .subspan(index * ps.slot_bytes, ps.used_bytes[index]);
}

const PlaneStore& plane_store_at(const Container& c, size_t plane_index) {
  if (plane_index >= c.planes.size())
    throw Error(Errc::kIndexOutOfRange, "plane index out of range");
  return c.planes[plane_index];
}

}  // namespace

Container store_frame(const CompressedFrame& cf) {
  cf.cfg.validate();
  Container c;
  c.bit_depth = cf.desc.bit_depth;
  c.cfg = cf.cfg;
  c.width = cf.desc.width;
  c.height = cf.desc.height;
  c.chroma = cf.desc.chroma;
  const uint32_t bs = cf.cfg.block_size;
  for (const CompressedPlane& cp : cf.planes) {
    PlaneStore ps;
    ps.width = cp.width;
    ps.height = cp.height;
    ps.blocks_x = ceil_div(cp.width, bs);
    ps.blocks_y = ceil_div(cp.height, bs);
    ps.slot_bytes = bs * bs + 1;
    const size_t count = static_cast<size_t>(ps.blocks_x) * ps.blocks_y;
    if (cp.blocks.size() != count)
      throw Error(Errc::kShapeMismatch, "block count does not match tiling");
    ps.used_bytes.resize(count);
    ps.bit_lengths.resize(count);
    ps.slots.assign(count * ps.slot_bytes, 0);
    for (size_t i = 0; i < count; ++i) {
      const CompressedBlock& blk = cp.blocks[i];
      if (blk.payload.size() > ps.slot_bytes)
        throw Error(Errc::kSlotOverflow, "payload exceeds slot capacity");
      std::copy(blk.payload.begin(), blk.payload.end(),
                ps.slots.begin() + i * ps.slot_bytes);
      ps.used_bytes[i] = static_cast<uint16_t>(blk.payload.size());
      ps.bit_lengths[i] = blk.bit_length;
    }
    c.planes.push_back(std::move(ps));
  }
  return c;
}

Frame unpack_frame(const Container& c) {
  Frame frame;
  frame.desc = {c.width, c.height, c.chroma, c.bit_depth};
  for (size_t p = 0; p < c.planes.size(); ++p) {
    const PlaneStore& ps = c.planes[p];
    Plane plane(ps.width, ps.height);
    for (uint32_t by = 0; by < ps.blocks_y; ++by) {
      for (uint32_t bx = 0; bx < ps.blocks_x; ++bx) {
        const BlockGeometry g = slot_geometry(ps, c.cfg.block_size, bx, by);
        insert_block(plane, g, fetch_block(c, p, bx, by));
      }
    }
    frame.planes.push_back(std::move(plane));
  }
  return frame;
}

Plane fetch_block(const Container& c, size_t plane_index, uint32_t bx,
                  uint32_t by) {
  const PlaneStore& ps = plane_store_at(c, plane_index);
  if (bx >= ps.blocks_x || by >= ps.blocks_y)
    throw Error(Errc::kIndexOutOfRange, "block index out of range");
  const size_t index = static_cast<size_t>(by) * ps.blocks_x + bx;
  const BlockGeometry g = slot_geometry(ps, c.cfg.block_size, bx, by);
  return decode_block(slot_span(ps, index), g.width, g.height, c.cfg);
}

std::pair<Plane, AccessStats> fetch_region(const Container& c,
                                           size_t plane_index, const Rect& rect,
                                           uint32_t burst_bytes) {
  const PlaneStore& ps = plane_store_at(c, plane_index);
  if (rect.width < 1 || rect.height < 1 ||
      rect.x + static_cast<uint64_t>(rect.width) > ps.width ||
      rect.y + static_cast<uint64_t>(rect.height) > ps.height)
    throw Error(Errc::kRectOutOfBounds, "region outside plane bounds");

  const uint32_t bs = c.cfg.block_size;
  Plane out(rect.width, rect.height);
  AccessStats stats;
  const uint32_t bx0 = rect.x / bs;
  const uint32_t by0 = rect.y / bs;
  const uint32_t bx1 = (rect.x + rect.width - 1) / bs;
  const uint32_t by1 = (rect.y + rect.height - 1) / bs;
  for (uint32_t by = by0; by <= by1; ++by) {
    for (uint32_t bx = bx0; bx <= bx1; ++bx) {
      const BlockGeometry g = slot_geometry(ps, bs, bx, by);
      const Plane block = fetch_block(c, plane_index, bx, by);
      const uint32_t x0 = std::max(rect.x, g.x);
      const uint32_t y0 = std::max(rect.y, g.y);
      const uint32_t x1 = std::min(rect.x + rect.width, g.x + g.width);
      const uint32_t y1 = std::min(rect.y + rect.height, g.y + g.height);
      for (uint32_t y = y0; y < y1; ++y)
        for (uint32_t x = x0; x < x1; ++x)
          out.set(x - rect.x, y - rect.y, block.at(x - g.x, y - g.y));
      const size_t index = static_cast<size_t>(by) * ps.blocks_x + bx;
      uint64_t transferred = ps.used_bytes[index];
      if (burst_bytes > 0)
        transferred = ceil_div(static_cast<uint32_t>(transferred), burst_bytes) *
                      static_cast<uint64_t>(burst_bytes);
      stats.raw_bytes += static_cast<uint64_t>(g.width) * g.height;
      stats.compressed_bytes += transferred;
      ++stats.blocks_touched;
    }
  }
  return {std::move(out), stats};
}

double container_drr(const Container& c, Accounting accounting) {
  uint64_t raw_bytes = 0;
  uint64_t used_bytes = 0;
  uint64_t exact_bits = 0;
  for (size_t p = 0; p < c.planes.size(); ++p) {
    const PlaneStore& ps = c.planes[p];
    raw_bytes += static_cast<uint64_t>(ps.width) * ps.height;
    for (size_t i = 0; i < ps.slot_count(); ++i) {
      used_bytes += ps.used_bytes[i];
      if (accounting == Accounting::kExactBits) {
        if (!ps.bit_lengths.empty() && ps.bit_lengths[i] != 0) {
          exact_bits += ps.bit_lengths[i];
        } else {
          const uint32_t bx = static_cast<uint32_t>(i % ps.blocks_x);
          const uint32_t by = static_cast<uint32_t>(i / ps.blocks_x);
          const BlockGeometry g = slot_geometry(ps, c.cfg.block_size, bx, by);
          exact_bits +=
              decode_block_bits(slot_span(ps, i), g.width, g.height, c.cfg)
                  .second;
        }
      }
    }
  }
  if (raw_bytes == 0)
    throw Error(Errc::kEmptyContainer, "container holds no samples");
  if (accounting == Accounting::kExactBits)
    return 1.0 - static_cast<double>(exact_bits) / (8.0 * raw_bytes);
  return 1.0 - static_cast<double>(used_bytes) / static_cast<double>(raw_bytes);
}

namespace {

void write_u32le(std::ostream& out, uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xFF),
                         static_cast<char>((v >> 8) & 0xFF),
                         static_cast<char>((v >> 16) & 0xFF),
                         static_cast<char>((v >> 24) & 0xFF)};
  out.write(bytes, 4);
}

void write_u16le(std::ostream& out, uint16_t v) {
  const char bytes[2] = {static_cast<char>(v & 0xFF),
                         static_cast<char>((v >> 8) & 0xFF)};
  out.write(bytes, 2);
}

void write_u8(std::ostream& out, uint8_t v) {
  out.put(static_cast<char>(v));
}

void read_exact(std::istream& in, void* dst, size_t n) {
  in.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<size_t>(in.gcount()) != n)
    throw Error(Errc::kTruncatedStream, "container file ends early");
}

uint8_t read_u8(std::istream& in) {
  uint8_t v;
  read_exact(in, &v, 1);
  return v;
}

uint16_t read_u16le(std::istream& in) {
  uint8_t b[2];
  read_exact(in, b, 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

uint32_t read_u32le(std::istream& in) {
  uint8_t b[4];
  read_exact(in, b, 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) |
         (static_cast<uint32_t>(b[3]) << 24);
}

}  // namespace

void write_container(const Container& c, std::ostream& out) {
  out.write(kMagic, 4);
  write_u8(out, c.version);
  write_u8(out, c.bit_depth);
  write_u8(out, static_cast<uint8_t>(c.cfg.block_size));
  write_u8(out, static_cast<uint8_t>(c.cfg.predictor));
  write_u8(out, static_cast<uint8_t>(c.cfg.accounting));
  write_u32le(out, c.width);
  write_u32le(out, c.height);
  write_u8(out, static_cast<uint8_t>(c.chroma));
  for (const PlaneStore& ps : c.planes) {
    write_u32le(out, static_cast<uint32_t>(ps.slot_count()));
    for (uint16_t used : ps.used_bytes) write_u16le(out, used);
    out.write(reinterpret_cast<const char*>(ps.slots.data()),
              static_cast<std::streamsize>(ps.slots.size()));
  }
  if (!out)
    throw Error(Errc::kIoError, "container write failed");
}

Container read_container(std::istream& in) {
  char magic[4];
  read_exact(in, magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw Error(Errc::kBadMagic, "not a container file");
  Container c;
  c.version = read_u8(in);
  if (c.version != kVersion)
    throw Error(Errc::kBadVersion, "unsupported container version");
  c.bit_depth = read_u8(in);
  if (c.bit_depth != 8)
    throw Error(Errc::kCorruptContainer, "unsupported bit depth");
  c.cfg.block_size = read_u8(in);
  if (!valid_block_size(c.cfg.block_size))
    throw Error(Errc::kCorruptContainer, "invalid block size");
  const uint8_t predictor_id = read_u8(in);
  if (predictor_id > 4)
    throw Error(Errc::kCorruptContainer, "invalid predictor id");
  c.cfg.predictor = static_cast<Predictor>(predictor_id);
  const uint8_t accounting_id = read_u8(in);
  if (accounting_id > 1)
    throw Error(Errc::kCorruptContainer, "invalid accounting id");
  c.cfg.accounting = static_cast<Accounting>(accounting_id);
  c.width = read_u32le(in);
  c.height = read_u32le(in);
  const uint8_t chroma_id = read_u8(in);
  if (chroma_id > 1)
    throw Error(Errc::kCorruptContainer, "invalid chroma format");
  c.chroma = static_cast<ChromaFormat>(chroma_id);
  FrameDescriptor desc{c.width, c.height, c.chroma, c.bit_depth};
  try {
    desc.validate();
  } catch (const Error&) {
    throw Error(Errc::kCorruptContainer, "invalid frame geometry");
  }

  const uint32_t bs = c.cfg.block_size;
  for (size_t p = 0; p < desc.plane_count(); ++p) {
    PlaneStore ps;
    ps.width = p == 0 ? c.width : c.width / 2;
    ps.height = p == 0 ? c.height : c.height / 2;
    ps.blocks_x = ceil_div(ps.width, bs);
    ps.blocks_y = ceil_div(ps.height, bs);
    ps.slot_bytes = bs * bs + 1;
    const size_t count = static_cast<size_t>(ps.blocks_x) * ps.blocks_y;
    if (read_u32le(in) != count)
      throw Error(Errc::kCorruptContainer, "slot table length mismatch");
    ps.used_bytes.resize(count);
    for (uint16_t& used : ps.used_bytes) {
      used = read_u16le(in);
      if (used > ps.slot_bytes)
        throw Error(Errc::kCorruptContainer, "slot used-bytes exceeds slot");
    }
    ps.slots.resize(count * ps.slot_bytes);
    read_exact(in, ps.slots.data(), ps.slots.size());
    c.planes.push_back(std::move(ps));
  }
  return c;
}

std::vector<uint8_t> container_to_bytes(const Container& c) {
  std::ostringstream out(std::ios::binary);
  write_container(c, out);
  const std::string s = out.str();
  return std::vector<uint8_t>(s.begin(), s.end());
}

Container container_from_bytes(std::span<const uint8_t> bytes) {
  std::istringstream in(
      std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size()),
      std::ios::binary);
  return read_container(in);
}

}  // namespace irbrc
