// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/corpus.hpp"

#include <algorithm>
#include <cstdio>

namespace irbrc {

const char* corpus_kind_name(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::kFlat: return "flat";
    case CorpusKind::kRamp: return "ramp";
    case CorpusKind::kTextLike: return "text_like";
    case CorpusKind::kNoise: return "noise";
    case CorpusKind::kMixed: return "mixed";
  }
  return "?";
}

std::optional<CorpusKind> corpus_kind_from_name(std::string_view name) {
  for (CorpusKind kind : kAllCorpusKinds)
    if (name == corpus_kind_name(kind)) return kind;
  return std::nullopt;
}

std::string CorpusSpec::sequence_id() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s_s%llu_%ux%u_f%u", corpus_kind_name(kind),
                static_cast<unsigned long long>(seed), width, height, frames);
  return buf;
}

namespace {

uint64_t frame_seed(uint64_t seed, CorpusKind kind, uint32_t frame_index) {
  return seed ^ (0x9E3779B97F4A7C15ull * (frame_index + 1)) ^
         (0xC2B2AE3D27D4EB4Full * (static_cast<uint64_t>(kind) + 1));
}

Plane flat_frame(uint32_t w, uint32_t h) { return Plane(w, h, 128); }

Plane ramp_frame(uint32_t w, uint32_t h, uint32_t frame_index) {
  Plane p(w, h);
  for (uint32_t y = 0; y < h; ++y)
    for (uint32_t x = 0; x < w; ++x)
      p.set(x, y, static_cast<uint8_t>((x + frame_index) & 0xFF));
  return p;
}

Plane noise_frame(uint32_t w, uint32_t h, uint64_t seed) {
  SplitMix64 rng(seed);
  Plane p(w, h);
  for (uint32_t y = 0; y < h; ++y)
    for (uint32_t x = 0; x < w; ++x)
      p.set(x, y, static_cast<uint8_t>(rng.next() & 0xFF));
  return p;
}

// Bilevel-ish screen content: strokes and character boxes drawn with a
// 4-color ink palette on a light background (5 distinct values total).
Plane text_like_frame(uint32_t w, uint32_t h, uint64_t seed) {
  constexpr uint8_t kBackground = 235;
  constexpr uint8_t kInk[4] = {16, 48, 96, 160};
  SplitMix64 rng(seed);
  Plane p(w, h, kBackground);
  auto fill = [&](uint32_t x0, uint32_t y0, uint32_t gw, uint32_t gh,
                  uint8_t ink, bool hollow) {
    const uint32_t x1 = std::min(x0 + gw, w);
    const uint32_t y1 = std::min(y0 + gh, h);
    for (uint32_t y = y0; y < y1; ++y)
      for (uint32_t x = x0; x < x1; ++x)
        if (!hollow || x == x0 || x == x1 - 1 || y == y0 || y == y1 - 1)
          p.set(x, y, ink);
  };
  const uint32_t glyphs = static_cast<uint32_t>(
      std::max<uint64_t>(4, static_cast<uint64_t>(w) * h / 64));
  for (uint32_t i = 0; i < glyphs; ++i) {
    const uint32_t x0 = rng.below(w);
    const uint32_t y0 = rng.below(h);
    const uint8_t ink = kInk[rng.below(4)];
    const uint32_t shape = rng.below(4);
    // one rng draw per dimension, sequenced: argument evaluation order must
    // not influence the stream
    uint32_t gw = 0, gh = 0;
    bool hollow = false;
    switch (shape) {
      case 0:  // vertical stroke
        gw = 1 + rng.below(2);
        gh = 3 + rng.below(6);
        break;
      case 1:  // horizontal stroke
        gw = 3 + rng.below(6);
        gh = 1 + rng.below(2);
        break;
      case 2:  // filled character blob
        gw = 1 + rng.below(4);
        gh = 1 + rng.below(6);
        break;
      default:  // hollow box
        gw = 2 + rng.below(5);
        gh = 2 + rng.below(6);
        hollow = true;
        break;
    }
    fill(x0, y0, gw, gh, ink, hollow);
  }
  return p;
}

void blit(Plane& dst, uint32_t x0, uint32_t y0, const Plane& src) {
  for (uint32_t y = 0; y < src.height(); ++y)
    for (uint32_t x = 0; x < src.width(); ++x)
      dst.set(x0 + x, y0 + y, src.at(x, y));
}

Plane mixed_frame(uint32_t w, uint32_t h, uint64_t seed, uint32_t frame_index) {
  Plane p(w, h, 128);
  const uint32_t wl = w / 2, hl = h / 2;
  const uint32_t wr = w - wl, hr = h - hl;
  if (wl > 0 && hl > 0) blit(p, 0, 0, flat_frame(wl, hl));
  if (wr > 0 && hl > 0) blit(p, wl, 0, ramp_frame(wr, hl, frame_index));
  if (wl > 0 && hr > 0) blit(p, 0, hl, text_like_frame(wl, hr, seed * 3 + 1));
  if (wr > 0 && hr > 0) blit(p, wl, hl, noise_frame(wr, hr, seed * 5 + 2));
  return p;
}

}  // namespace

Plane corpus_frame(const CorpusSpec& spec, uint32_t frame_index) {
  const uint64_t seed = frame_seed(spec.seed, spec.kind, frame_index);
  switch (spec.kind) {
    case CorpusKind::kFlat:
      return flat_frame(spec.width, spec.height);
    case CorpusKind::kRamp:
      return ramp_frame(spec.width, spec.height, frame_index);
    case CorpusKind::kTextLike:
      return text_like_frame(spec.width, spec.height, seed);
    case CorpusKind::kNoise:
      return noise_frame(spec.width, spec.height, seed);
    case CorpusKind::kMixed:
      return mixed_frame(spec.width, spec.height, seed, frame_index);
  }
  return flat_frame(spec.width, spec.height);
}

std::vector<CorpusSpec> bundled_corpus() {
  return {
      {CorpusKind::kTextLike, 11, 64, 64, 3},
      {CorpusKind::kTextLike, 12, 96, 64, 2},
      {CorpusKind::kMixed, 13, 64, 64, 3},
      {CorpusKind::kMixed, 14, 80, 48, 2},
  };
}

}  // namespace irbrc
