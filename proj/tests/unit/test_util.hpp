// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irbrc/bitstream.hpp"
#include "irbrc/corpus.hpp"
#include "irbrc/frame.hpp"

namespace irbrc::test {

// First `nbits` of a byte buffer as a "0101..." string, MSB first.
inline std::string bit_string(const std::vector<uint8_t>& bytes, size_t nbits) {
  std::string s;
  s.reserve(nbits);
  for (size_t i = 0; i < nbits; ++i)
    s.push_back(((bytes[i >> 3] >> (7 - (i & 7))) & 1) ? '1' : '0');
  return s;
}

// Encoded bits of a single value under `encode`, as a string.
template <typename Fn>
std::string encoded_bits(Fn&& encode) {
  BitWriter out;
  encode(out);
  return bit_string(out.bytes(), out.bit_size());
}

// Packs a "0101..." string into bytes for a BitReader.
inline std::vector<uint8_t> pack_bits(const std::string& bits) {
  std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == '1') bytes[i >> 3] |= static_cast<uint8_t>(0x80 >> (i & 7));
  return bytes;
}

inline Plane random_plane(SplitMix64& rng, uint32_t width, uint32_t height) {
  Plane p(width, height);
  for (uint32_t y = 0; y < height; ++y)
    for (uint32_t x = 0; x < width; ++x)
      p.set(x, y, static_cast<uint8_t>(rng.next() & 0xFF));
  return p;
}

// Blocks of the flavors the roundtrip properties sweep: noise, gradients,
// glyph-like content and saturated runs.
inline Plane varied_plane(SplitMix64& rng, uint32_t width, uint32_t height) {
  switch (rng.below(5)) {
    case 0:
      return random_plane(rng, width, height);
    case 1: {
      const CorpusSpec spec{CorpusKind::kTextLike, rng.next(), width, height, 1};
      return corpus_frame(spec, 0);
    }
    case 2: {  // diagonal gradient
      Plane p(width, height);
      for (uint32_t y = 0; y < height; ++y)
        for (uint32_t x = 0; x < width; ++x)
          p.set(x, y, static_cast<uint8_t>((3 * x + 5 * y) & 0xFF));
      return p;
    }
    case 3: {  // saturated runs
      Plane p(width, height);
      for (uint32_t y = 0; y < height; ++y)
        for (uint32_t x = 0; x < width; ++x)
          p.set(x, y, ((x / 3 + y / 2) % 2) ? 255 : 0);
      return p;
    }
    default:
      return Plane(width, height, static_cast<uint8_t>(rng.next() & 0xFF));
  }
}

}  // namespace irbrc::test
