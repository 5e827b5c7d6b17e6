// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/block_codec.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "irbrc/corpus.hpp"
#include "test_util.hpp"

using namespace irbrc;

namespace {

const CodecConfig kEdge8{8, Predictor::kEdge, Accounting::kByteAligned};

}  // namespace

TEST_CASE("constant 8x8 block compresses to 17 bits in 3 bytes") {
  const Plane block(8, 8, 128);
  const CompressedBlock cb = encode_block(block, kEdge8);
  CHECK_FALSE(cb.raw_mode);
  CHECK(cb.bit_length == 1 + 8 + 4 * 2);  // flag + first sample + 4 zero units
  CHECK(cb.payload.size() == 3);
  CHECK(decode_block(cb.payload, 8, 8, kEdge8) == block);
}

TEST_CASE("noise blocks fall back to the raw escape at 65 bytes") {
  SplitMix64 rng(0xD1CE);
  const Plane block = test::random_plane(rng, 8, 8);
  const CompressedBlock cb = encode_block(block, kEdge8);
  CHECK(cb.raw_mode);
  CHECK(cb.bit_length == 1 + 64 * 8);
  CHECK(cb.payload.size() == 65);
  CHECK(decode_block(cb.payload, 8, 8, kEdge8) == block);
}

TEST_CASE("2x2 edge block bit layout is exact") {
  // residuals {4, 8, 4}: max 8 -> category 4 (header 1110), codes
  // 1000 / 00000 (escape for 8) / 1000; 26 bits total, under the 33-bit raw
  // alternative
  Plane block(2, 2);
  block.set(0, 0, 10);
  block.set(1, 0, 14);
  block.set(0, 1, 18);
  block.set(1, 1, 22);
  const CompressedBlock cb = encode_block(block, kEdge8);
  const std::string expected =
      std::string("0") + "00001010" + "1110" + "1000" + "00000" + "1000";
  CHECK_FALSE(cb.raw_mode);
  CHECK(cb.bit_length == expected.size());
  CHECK(test::bit_string(cb.payload, cb.bit_length) == expected);
  CHECK(cb.payload == std::vector<uint8_t>{0x05, 0x74, 0x02, 0x00});
  CHECK(decode_block(cb.payload, 2, 2, kEdge8) == block);
}

TEST_CASE("coded size matching the raw size escapes to raw mode") {
  // residuals {10, 20, 10}: max 20 -> category 6, three 6-bit codes; the
  // coded form is 1+8+6+18 = 33 bits, exactly the raw form's 1+32
  Plane block(2, 2);
  block.set(0, 0, 10);
  block.set(1, 0, 20);
  block.set(0, 1, 30);
  block.set(1, 1, 40);
  const CompressedBlock cb = encode_block(block, kEdge8);
  const std::string expected =
      std::string("1") + "00001010" + "00010100" + "00011110" + "00101000";
  CHECK(cb.raw_mode);
  CHECK(cb.bit_length == 33);
  CHECK(test::bit_string(cb.payload, cb.bit_length) == expected);
  CHECK(cb.payload == std::vector<uint8_t>{0x85, 0x0A, 0x0F, 0x14, 0x00});
  CHECK(decode_block(cb.payload, 2, 2, kEdge8) == block);
}

TEST_CASE("escape bound: payload never exceeds raw bytes plus one") {
  SplitMix64 rng(0x5EED);
  for (int iter = 0; iter < 80; ++iter) {
    const uint32_t w = 1 + rng.below(16);
    const uint32_t h = 1 + rng.below(16);
    const Plane block = test::varied_plane(rng, w, h);
    for (Predictor kind : kAllPredictors) {
      const CompressedBlock cb =
          encode_block(block, {8, kind, Accounting::kByteAligned});
      CHECK(cb.payload.size() <= size_t(w) * h + 1);
      CHECK(cb.bit_length <= 8 * cb.payload.size());
      CHECK(cb.payload.size() == (cb.bit_length + 7) / 8);
    }
  }
}

TEST_CASE("all-zero 16x16 plane encodes as four 3-byte blocks") {
  const Plane plane(16, 16, 0);
  const CompressedPlane cp = encode_plane(plane, kEdge8);
  REQUIRE(cp.blocks.size() == 4);
  for (const CompressedBlock& cb : cp.blocks) CHECK(cb.payload.size() == 3);
  CHECK(decode_plane(cp, kEdge8) == plane);
}

TEST_CASE("clipped plane roundtrip") {
  SplitMix64 rng(44);
  const Plane plane = test::varied_plane(rng, 10, 8);
  const CompressedPlane cp = encode_plane(plane, kEdge8);
  REQUIRE(cp.blocks.size() == 2);
  CHECK(decode_plane(cp, kEdge8) == plane);
}

TEST_CASE("blocks decode independently, in any order") {
  SplitMix64 rng(0xAB);
  const Plane plane = test::varied_plane(rng, 24, 16);
  const CompressedPlane cp = encode_plane(plane, kEdge8);
  const auto tiles = tile_plane(24, 16, 8);
  std::vector<size_t> order(tiles.size());
  std::iota(order.begin(), order.end(), 0);
  for (size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.below(static_cast<uint32_t>(i))]);
  Plane out(24, 16);
  for (size_t i : order) {
    // isolated copy: the decoder sees nothing but this block's payload
    const std::vector<uint8_t> isolated = cp.blocks[i].payload;
    insert_block(out, tiles[i],
                 decode_block(isolated, tiles[i].width, tiles[i].height, kEdge8));
  }
  CHECK(out == plane);
}

TEST_CASE("frame roundtrips across formats, kinds and block sizes") {
  SplitMix64 rng(0xF00D);
  const FrameDescriptor descs[] = {
      {24, 24, ChromaFormat::kMonochrome},
      {20, 14, ChromaFormat::kI420},
      {40, 8, ChromaFormat::kMonochrome},  // one block tall
  };
  for (const FrameDescriptor& desc : descs) {
    std::vector<uint8_t> raw(desc.frame_bytes());
    for (uint8_t& b : raw) b = static_cast<uint8_t>(rng.next() & 0xFF);
    const Frame frame = load_raw_frame(raw, desc);
    for (Predictor kind : kAllPredictors) {
      for (uint32_t bs : {4u, 8u, 16u}) {
        const CodecConfig cfg{bs, kind, Accounting::kByteAligned};
        CHECK(decode_frame(encode_frame(frame, cfg)) == frame);
      }
    }
  }
}

TEST_CASE("exact-bit accounting never exceeds byte-aligned accounting") {
  SplitMix64 rng(0x77);
  const Plane plane = test::varied_plane(rng, 32, 24);
  const CompressedPlane cp = encode_plane(plane, kEdge8);
  uint64_t bits = 0, bytes = 0;
  for (const CompressedBlock& cb : cp.blocks) {
    bits += cb.bit_length;
    bytes += cb.payload.size();
  }
  CHECK(bits <= 8 * bytes);
}

TEST_CASE("decode_block reports truncation and bad geometry") {
  const Plane block(8, 8, 200);
  const CompressedBlock cb = encode_block(block, kEdge8);
  const std::vector<uint8_t> cut(cb.payload.begin(), cb.payload.end() - 1);
  CHECK_THROWS_AS((void)decode_block(cut, 8, 8, kEdge8), Error);
  CHECK_THROWS_AS((void)encode_block(block, {5, Predictor::kEdge,
                                             Accounting::kByteAligned}),
                  Error);
}
