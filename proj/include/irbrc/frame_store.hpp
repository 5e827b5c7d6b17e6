// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "irbrc/block_codec.hpp"

namespace irbrc {

// Fixed-address block storage: every block owns a slot of block_size^2 + 1
// bytes (the +1 absorbs the raw-escape flag), so a slot's offset is
// block_index * slot_bytes with no address table. Used-byte counts are a
// side index kept for bandwidth/DRR accounting; the slots alone decode.
struct PlaneStore {
  uint32_t width = 0;
  uint32_t height = 0;
  uint32_t blocks_x = 0;
  uint32_t blocks_y = 0;
  uint32_t slot_bytes = 0;
  std::vector<uint16_t> used_bytes;    // per slot
  std::vector<uint32_t> bit_lengths;   // per slot; in-memory only
  std::vector<uint8_t> slots;          // blocks_x * blocks_y * slot_bytes

  size_t slot_count() const { return used_bytes.size(); }
};

struct Container {
  uint8_t version = 1;
  uint8_t bit_depth = 8;
  CodecConfig cfg;
  uint32_t width = 0;   // luma dims
  uint32_t height = 0;
  ChromaFormat chroma = ChromaFormat::kMonochrome;
  std::vector<PlaneStore> planes;
};

struct Rect {
  uint32_t x = 0;
  uint32_t y = 0;
  uint32_t width = 0;
  uint32_t height = 0;
};

struct AccessStats {
  uint64_t raw_bytes = 0;         // touched blocks at one byte per sample
  uint64_t compressed_bytes = 0;  // used payload bytes of touched slots
  uint32_t blocks_touched = 0;
};

Container store_frame(const CompressedFrame& cf);

// Full decode of every slot back into a frame.
Frame unpack_frame(const Container& container);

// Decodes exactly one slot; the reader is bounded to the slot's used bytes.
Plane fetch_block(const Container& container, size_t plane_index, uint32_t bx,
                  uint32_t by);

// Decodes all slots intersecting rect and crops. burst_bytes > 0 rounds each
// slot's transferred bytes up to that multiple (DRAM burst modeling, off by
// default).
std::pair<Plane, AccessStats> fetch_region(const Container& container,
                                           size_t plane_index, const Rect& rect,
                                           uint32_t burst_bytes = 0);

// Data reduction rate 1 - compressed/original over the whole container.
// Byte-aligned accounting sums used slot bytes; exact-bit accounting sums
// unpadded bit lengths (re-measured from the slots when not cached).
double container_drr(const Container& container, Accounting accounting);

// Container file format (little-endian, bit-exact):
//   magic "IRBR", version u8=1, bit_depth u8, block_size u8,
//   predictor u8 (0=edge 1=hd 2=hvd 3=med 4=gap), accounting u8
//   (0=bits 1=bytes), width u32, height u32, chroma u8 (0=mono 1=420),
//   then per plane in Y,U,V order: slot count u32, used-bytes u16 per slot,
//   slots back to back (slot_bytes each, tails zero-padded).
void write_container(const Container& container, std::ostream& out);
Container read_container(std::istream& in);

std::vector<uint8_t> container_to_bytes(const Container& container);
Container container_from_bytes(std::span<const uint8_t> bytes);

}  // namespace irbrc
