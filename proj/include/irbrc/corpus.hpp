// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irbrc/frame.hpp"

namespace irbrc {

enum class CorpusKind : uint8_t {
  kFlat,      // constant 128
  kRamp,      // horizontal gradient mod 256, shifted per frame
  kTextLike,  // glyph-like strokes and boxes on a light background
  kNoise,     // seeded uniform noise
  kMixed,     // quadrants: flat / ramp / text_like / noise
};

inline constexpr CorpusKind kAllCorpusKinds[] = {
    CorpusKind::kFlat, CorpusKind::kRamp, CorpusKind::kTextLike,
    CorpusKind::kNoise, CorpusKind::kMixed};

const char* corpus_kind_name(CorpusKind kind);
std::optional<CorpusKind> corpus_kind_from_name(std::string_view name);

struct CorpusSpec {
  CorpusKind kind = CorpusKind::kFlat;
  uint64_t seed = 0;
  uint32_t width = 0;
  uint32_t height = 0;
  uint32_t frames = 1;

  std::string sequence_id() const;  // e.g. "text_like_s7_64x64_f3"
};

// Deterministic: the same spec and frame index always produce the same
// samples, on every platform.
Plane corpus_frame(const CorpusSpec& spec, uint32_t frame_index);

// splitmix64; used everywhere determinism across platforms matters.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound >= 1. Modulo bias is irrelevant here.
  uint32_t below(uint32_t bound) {
    return static_cast<uint32_t>(next() % bound);
  }
};

// The fixed corpus the block-size/predictor trend checks run on.
std::vector<CorpusSpec> bundled_corpus();

}  // namespace irbrc
