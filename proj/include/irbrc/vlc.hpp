// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>

#include "irbrc/bitstream.hpp"

namespace irbrc {

// Small-value optimized VLC: eight table classes, one selected per 4x4 unit
// by the unit's max residual magnitude. Header codes form a complete prefix
// set. Categories 1..6 cover magnitudes up to 2^(id-1) with a generative
// code rule; category 0 carries all-zero units in the header alone; category
// 7 falls back to order-0 Exp-Golomb.
//
// Codes for category id c (k = c-1, U = 2^k):
//   0          -> k zeros, then "1"            (k+1 bits)
//   1..U-1     -> k-bit binary of |v|, sign    (k+1 bits)
//   U          -> k+1 zeros, sign              (k+2 bits)
// Sign bit: 0 positive, 1 negative.
struct Category {
  uint8_t id;           // 0..7
  uint8_t header_code;  // header bit pattern, MSB-aligned to header_len
  uint8_t header_len;   // 2..6
  uint16_t max_mag;     // largest |residual| the class covers
};

inline constexpr uint16_t kUnboundedMagnitude = 0xFFFF;

inline constexpr std::array<Category, 8> kCategories{{
    {0, 0b00, 2, 0},
    {1, 0b01, 2, 1},
    {2, 0b10, 2, 2},
    {3, 0b110, 3, 4},
    {4, 0b1110, 4, 8},
    {5, 0b11110, 5, 16},
    {6, 0b111110, 6, 32},
    {7, 0b111111, 6, kUnboundedMagnitude},
}};

// Smallest category whose range covers max_abs; > 32 maps to category 7.
const Category& category_for(unsigned max_abs);

void write_unit_header(BitWriter& out, const Category& category);
const Category& read_unit_header(BitReader& in);

// Single residual under a fixed category 1..6. Throws OutOfRange when the
// magnitude exceeds the category bound (or for category 0/7).
void encode_residual(BitWriter& out, int value, const Category& category);
int decode_residual(BitReader& in, const Category& category);
unsigned residual_bits(int value, const Category& category);

// Order-0 Exp-Golomb with the signed zigzag mapping
// code_num = 2v-1 for v > 0, -2v for v <= 0.
void eg0_encode_signed(BitWriter& out, int value);
int eg0_decode_signed(BitReader& in);
unsigned eg0_signed_bits(int value);

// One coding unit: up to 16 residuals sharing the table picked by their max
// magnitude. Header first, then residuals in the order given.
void encode_unit(BitWriter& out, std::span<const int16_t> residuals);
void decode_unit(BitReader& in, std::span<int16_t> residuals);
size_t unit_bits(std::span<const int16_t> residuals);

// Raster iteration over the 4x4 coding units of a w*h block; units clip to
// the block's effective dims. fn(x0, y0, x1, y1) with half-open bounds.
template <typename Fn>
void for_each_unit(uint32_t width, uint32_t height, Fn&& fn) {
  for (uint32_t y0 = 0; y0 < height; y0 += 4)
    for (uint32_t x0 = 0; x0 < width; x0 += 4)
      fn(x0, y0, std::min(x0 + 4, width), std::min(y0 + 4, height));
}

}  // namespace irbrc
