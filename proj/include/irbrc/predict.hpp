// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "irbrc/frame.hpp"

namespace irbrc {

enum class Predictor : uint8_t {
  kEdge = 0,  // edge-direction adaptive reference pick
  kHd = 1,    // horizontal DPCM
  kHvd = 2,   // best of horizontal/vertical DPCM, one direction bit
  kMed = 3,   // JPEG-LS median edge detector
  kGap = 4,   // CALIC gradient-adjusted prediction
};

inline constexpr Predictor kAllPredictors[] = {
    Predictor::kEdge, Predictor::kHd, Predictor::kHvd, Predictor::kMed,
    Predictor::kGap};

const char* predictor_name(Predictor kind);
std::optional<Predictor> predictor_from_name(std::string_view name);

// The four causal references around the current sample x:
//   r2 r3 r4
//   r1  x
// In the rightmost block column r4 is unavailable and callers set r4 = r3.
struct NeighborSet {
  uint8_t r1, r2, r3, r4;
};

// Edge direction components from the modified Roberts operators over the
// {r2, r3; r1, x} window: Dy = r3 - r2 (horizontal gradient), Dx = r1 - r2
// (vertical gradient).
struct EdgeComponents {
  int dx;
  int dy;
};

constexpr EdgeComponents edge_components(const NeighborSet& n) {
  return {static_cast<int>(n.r1) - static_cast<int>(n.r2),
          static_cast<int>(n.r3) - static_cast<int>(n.r2)};
}

// Reference index 1..4 selected by the edge direction:
//   r3 when |Dy| >  2|Dx|
//   r1 when |Dy| <= |Dx|/2 (floor)
//   otherwise r4 when sign(Dy) == sign(Dx), r2 when they differ
// Zero counts as non-negative, which makes the selection total.
int select_reference(const EdgeComponents& e);

uint8_t predict_edge(const NeighborSet& n);

// LOCO-I median predictor over left, above, above-left.
uint8_t predict_med(uint8_t left, uint8_t above, uint8_t above_left);

// Seven-sample causal window for GAP:
//   nn nne        (nne sits above-right of n)
//   nw n  ne
//   ww w  x
struct GapNeighbors {
  int w, ww, n, nn, nw, ne, nne;
};

// CALIC gradient-adjusted prediction with the canonical 80/32/8 thresholds;
// integer divisions truncate toward zero, result clamped to [0, 255].
uint8_t predict_gap(const GapNeighbors& g);

// Residuals of one block. Position (0,0) is stored raw; the remaining
// residuals are raster order. The first row is horizontal DPCM and the first
// column vertical DPCM for every predictor kind; interior samples use the
// kind's rule with neighbors clamped into the block.
struct ResidualBlock {
  uint32_t width = 0;
  uint32_t height = 0;
  uint8_t first_sample = 0;
  std::vector<int16_t> residuals;       // (y*width + x) - 1, skipping (0,0)
  std::optional<bool> hvd_vertical;     // HVD direction bit, unset otherwise

  bool operator==(const ResidualBlock&) const = default;
};

// For HVD both DPCM directions are coded and the cheaper one (exact SVO-VLC
// bit cost over the block's 4x4 units) is kept; ties pick horizontal.
ResidualBlock predict_block(const Plane& block, Predictor kind);

// Exact inverse of predict_block; raster order guarantees every neighbor is
// already reconstructed. Throws ShapeMismatch when the residual count (or a
// missing HVD direction) disagrees with the block dims.
Plane reconstruct_block(const ResidualBlock& rb, Predictor kind);

// Residuals of one 4x4 unit (half-open bounds) in raster order, skipping the
// raw (0,0) position. Shared by the entropy layer and HVD cost evaluation.
void collect_unit_residuals(const ResidualBlock& rb, uint32_t x0, uint32_t y0,
                            uint32_t x1, uint32_t y1,
                            std::vector<int16_t>& out);

// Exact SVO-VLC bit cost of a residual block (all unit headers + codes).
size_t block_code_bits(const ResidualBlock& rb);

}  // namespace irbrc
