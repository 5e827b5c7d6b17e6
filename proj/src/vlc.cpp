// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/vlc.hpp"

#include <bit>
#include <cstdlib>

namespace irbrc {

const Category& category_for(unsigned max_abs) {
  for (const Category& c : kCategories)
    if (max_abs <= c.max_mag) return c;
  return kCategories[7];
}

void write_unit_header(BitWriter& out, const Category& category) {
  out.put_bits(category.header_code, category.header_len);
}

const Category& read_unit_header(BitReader& in) {
  // 00,01 | 10 | 110 | 1110 | 11110 | 111110,111111
  if (!in.get_bit()) return kCategories[in.get_bit() ? 1 : 0];
  if (!in.get_bit()) return kCategories[2];
  if (!in.get_bit()) return kCategories[3];
  if (!in.get_bit()) return kCategories[4];
  if (!in.get_bit()) return kCategories[5];
  return kCategories[in.get_bit() ? 7 : 6];
}

void encode_residual(BitWriter& out, int value, const Category& category) {
  if (category.id < 1 || category.id > 6)
    throw Error(Errc::kOutOfRange, "residual codes exist for categories 1..6");
  const unsigned k = category.id - 1u;
  const unsigned mag = static_cast<unsigned>(std::abs(value));
  if (mag > category.max_mag)
    throw Error(Errc::kOutOfRange, "residual magnitude exceeds category bound");
  if (mag == 0) {
    out.put_bits(1u, k + 1);  // k zeros then 1
  } else if (mag < (1u << k)) {
    out.put_bits(mag, k);  // nonzero k-bit magnitude
    out.put_bit(value < 0);
  } else {
    out.put_bits(0u, k + 1);  // escape for |v| == 2^k
    out.put_bit(value < 0);
  }
}

int decode_residual(BitReader& in, const Category& category) {
  const unsigned k = category.id - 1u;
  const unsigned mag = in.get_bits(k);
  if (mag != 0)
    return in.get_bit() ? -static_cast<int>(mag) : static_cast<int>(mag);
  if (in.get_bit()) return 0;
  const int escape = 1 << k;
  return in.get_bit() ? -escape : escape;
}

unsigned residual_bits(int value, const Category& category) {
  const unsigned k = category.id - 1u;
  const unsigned mag = static_cast<unsigned>(std::abs(value));
  return mag == (1u << k) ? k + 2 : k + 1;
}

namespace {

unsigned eg0_code_num(int value) {
  return value > 0 ? 2u * static_cast<unsigned>(value) - 1u
                   : 2u * static_cast<unsigned>(-value);
}

}  // namespace

void eg0_encode_signed(BitWriter& out, int value) {
  const unsigned info = eg0_code_num(value) + 1u;
  const unsigned width = static_cast<unsigned>(std::bit_width(info));
  out.put_bits(info, 2 * width - 1);  // width-1 leading zeros + width info bits
}

int eg0_decode_signed(BitReader& in) {
  unsigned zeros = 0;
  while (!in.get_bit()) ++zeros;
  const unsigned code_num = ((1u << zeros) | in.get_bits(zeros)) - 1u;
  return (code_num & 1u) ? static_cast<int>((code_num + 1u) / 2u)
                         : -static_cast<int>(code_num / 2u);
}

unsigned eg0_signed_bits(int value) {
  return 2 * static_cast<unsigned>(std::bit_width(eg0_code_num(value) + 1u)) - 1;
}

void encode_unit(BitWriter& out, std::span<const int16_t> residuals) {
  unsigned max_abs = 0;
  for (int v : residuals)
    max_abs = std::max(max_abs, static_cast<unsigned>(std::abs(v)));
  const Category& category = category_for(max_abs);
  write_unit_header(out, category);
  if (category.id == 0) return;
  for (int v : residuals) {
    if (category.id == 7)
      eg0_encode_signed(out, v);
    else
      encode_residual(out, v, category);
  }
}

void decode_unit(BitReader& in, std::span<int16_t> residuals) {
  const Category& category = read_unit_header(in);
  for (int16_t& v : residuals) {
    if (category.id == 0)
      v = 0;
    else if (category.id == 7)
      v = static_cast<int16_t>(eg0_decode_signed(in));
    else
      v = static_cast<int16_t>(decode_residual(in, category));
  }
}

size_t unit_bits(std::span<const int16_t> residuals) {
  unsigned max_abs = 0;
  for (int v : residuals)
    max_abs = std::max(max_abs, static_cast<unsigned>(std::abs(v)));
  const Category& category = category_for(max_abs);
  size_t bits = category.header_len;
  if (category.id == 0) return bits;
  for (int v : residuals)
    bits += category.id == 7 ? eg0_signed_bits(v) : residual_bits(v, category);
  return bits;
}

}  // namespace irbrc
