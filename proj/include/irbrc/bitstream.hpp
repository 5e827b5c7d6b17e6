// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "irbrc/error.hpp"

namespace irbrc {

// Append-only bit sink, most-significant-bit-first within each byte.
// The byte buffer is always zero-padded up to the next byte boundary, so
// bytes() can be stored as-is; bit_size() is the exact unpadded length.
class BitWriter {
 public:
  void put_bit(bool bit) {
    if ((nbits_ & 7u) == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<uint8_t>(0x80u >> (nbits_ & 7u));
    ++nbits_;
  }

  // Writes the low `count` bits of `value`, MSB first. count <= 32.
  void put_bits(uint32_t value, unsigned count) {
    for (unsigned i = count; i-- > 0;) put_bit(((value >> i) & 1u) != 0);
  }

  size_t bit_size() const { return nbits_; }
  const std::vector<uint8_t>& bytes() const { return bytes_; }

  std::vector<uint8_t> take() {
    nbits_ = 0;
    return std::move(bytes_);
  }

 private:
  std::vector<uint8_t> bytes_;
  size_t nbits_ = 0;
};

// Cursor over a fixed byte span, MSB-first. Reading past the end throws
// TruncatedStream; the span bound doubles as the out-of-slot access guard
// when decoding from fixed-address storage.
class BitReader {
 public:
  explicit BitReader(std::span<const uint8_t> data) : data_(data) {}

  bool get_bit() {
    if (pos_ >= data_.size() * 8)
      throw Error(Errc::kTruncatedStream, "bit stream exhausted");
    const bool bit = ((data_[pos_ >> 3] >> (7 - (pos_ & 7u))) & 1u) != 0;
    ++pos_;
    return bit;
  }

  uint32_t get_bits(unsigned count) {
    uint32_t value = 0;
    while (count-- > 0) value = (value << 1) | (get_bit() ? 1u : 0u);
    return value;
  }

  size_t bit_pos() const { return pos_; }
  size_t bit_size() const { return data_.size() * 8; }

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

}  // namespace irbrc
