// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/predict.hpp"

#include <algorithm>
#include <cstdlib>

#include "irbrc/vlc.hpp"

namespace irbrc {

const char* predictor_name(Predictor kind) {
  switch (kind) {
    case Predictor::kEdge: return "edge";
    case Predictor::kHd: return "hd";
    case Predictor::kHvd: return "hvd";
    case Predictor::kMed: return "med";
    case Predictor::kGap: return "gap";
  }
  return "?";
}

std::optional<Predictor> predictor_from_name(std::string_view name) {
  for (Predictor kind : kAllPredictors)
    if (name == predictor_name(kind)) return kind;
  return std::nullopt;
}

int select_reference(const EdgeComponents& e) {
  const int ax = std::abs(e.dx);
  const int ay = std::abs(e.dy);
  if (ay > (ax << 1)) return 3;
  if (ay <= (ax >> 1)) return 1;
  const int s = ((e.dy < 0) ? 1 : 0) ^ ((e.dx < 0) ? 1 : 0);
  return s == 0 ? 4 : 2;
}

uint8_t predict_edge(const NeighborSet& n) {
  switch (select_reference(edge_components(n))) {
    case 1: return n.r1;
    case 2: return n.r2;
    case 3: return n.r3;
    default: return n.r4;
  }
}

uint8_t predict_med(uint8_t left, uint8_t above, uint8_t above_left) {
  const int mn = std::min(left, above);
  const int mx = std::max(left, above);
  if (above_left >= mx) return static_cast<uint8_t>(mn);
  if (above_left <= mn) return static_cast<uint8_t>(mx);
  const int grad = static_cast<int>(left) + above - above_left;
  return static_cast<uint8_t>(std::clamp(grad, 0, 255));
}

uint8_t predict_gap(const GapNeighbors& g) {
  const int dh = std::abs(g.w - g.ww) + std::abs(g.n - g.nw) + std::abs(g.n - g.ne);
  const int dv = std::abs(g.w - g.nw) + std::abs(g.n - g.nn) + std::abs(g.ne - g.nne);
  const int d = dv - dh;
  int pred;
  if (d > 80) {
    pred = g.w;
  } else if (d < -80) {
    pred = g.n;
  } else {
    pred = (g.w + g.n) / 2 + (g.ne - g.nw) / 4;
    if (d > 32)
      pred = (pred + g.w) / 2;
    else if (d > 8)
      pred = (3 * pred + g.w) / 4;
    else if (d < -32)
      pred = (pred + g.n) / 2;
    else if (d < -8)
      pred = (3 * pred + g.n) / 4;
  }
  return static_cast<uint8_t>(std::clamp(pred, 0, 255));
}

namespace {

// Block sample with both coordinates clamped into the effective dims. The
// offsets used below only ever reach already-decoded positions, so clamping
// is safe on the reconstruction path as well.
uint8_t clamped_sample(const Plane& b, int x, int y) {
  const int cx = std::clamp(x, 0, static_cast<int>(b.width()) - 1);
  const int cy = std::clamp(y, 0, static_cast<int>(b.height()) - 1);
  return b.at(static_cast<uint32_t>(cx), static_cast<uint32_t>(cy));
}

uint8_t interior_prediction(const Plane& b, uint32_t x, uint32_t y,
                            Predictor kind, bool hvd_vertical) {
  switch (kind) {
    case Predictor::kEdge: {
      const NeighborSet n{
          b.at(x - 1, y), b.at(x - 1, y - 1), b.at(x, y - 1),
          x + 1 < b.width() ? b.at(x + 1, y - 1) : b.at(x, y - 1)};
      return predict_edge(n);
    }
    case Predictor::kHd:
      return b.at(x - 1, y);
    case Predictor::kHvd:
      return hvd_vertical ? b.at(x, y - 1) : b.at(x - 1, y);
    case Predictor::kMed:
      return predict_med(b.at(x - 1, y), b.at(x, y - 1), b.at(x - 1, y - 1));
    case Predictor::kGap: {
      const int ix = static_cast<int>(x), iy = static_cast<int>(y);
      const GapNeighbors g{
          clamped_sample(b, ix - 1, iy),     clamped_sample(b, ix - 2, iy),
          clamped_sample(b, ix, iy - 1),     clamped_sample(b, ix, iy - 2),
          clamped_sample(b, ix - 1, iy - 1), clamped_sample(b, ix + 1, iy - 1),
          clamped_sample(b, ix + 1, iy - 2)};
      return predict_gap(g);
    }
  }
  return 0;
}

uint8_t border_prediction(const Plane& b, uint32_t x, uint32_t y) {
  return y == 0 ? b.at(x - 1, 0) : b.at(0, y - 1);
}

ResidualBlock predict_directional(const Plane& b, Predictor kind,
                                  bool hvd_vertical) {
  ResidualBlock rb;
  rb.width = b.width();
  rb.height = b.height();
  rb.first_sample = b.at(0, 0);
  rb.residuals.reserve(static_cast<size_t>(b.width()) * b.height() - 1);
  for (uint32_t y = 0; y < b.height(); ++y) {
    for (uint32_t x = 0; x < b.width(); ++x) {
      if (x == 0 && y == 0) continue;
      const uint8_t pred = (y == 0 || x == 0)
                               ? border_prediction(b, x, y)
                               : interior_prediction(b, x, y, kind, hvd_vertical);
      rb.residuals.push_back(
          static_cast<int16_t>(static_cast<int>(b.at(x, y)) - pred));
    }
  }
  if (kind == Predictor::kHvd) rb.hvd_vertical = hvd_vertical;
  return rb;
}

}  // namespace

ResidualBlock predict_block(const Plane& block, Predictor kind) {
  if (kind != Predictor::kHvd) return predict_directional(block, kind, false);
  ResidualBlock horizontal = predict_directional(block, kind, false);
  ResidualBlock vertical = predict_directional(block, kind, true);
  return block_code_bits(vertical) < block_code_bits(horizontal)
             ? vertical
             : horizontal;
}

Plane reconstruct_block(const ResidualBlock& rb, Predictor kind) {
  const size_t expected = static_cast<size_t>(rb.width) * rb.height;
  if (rb.width < 1 || rb.height < 1 || rb.residuals.size() != expected - 1)
    throw Error(Errc::kShapeMismatch, "residual count does not match dims");
  if (kind == Predictor::kHvd && !rb.hvd_vertical.has_value())
    throw Error(Errc::kShapeMismatch, "HVD residual block lacks direction bit");
  const bool hvd_vertical = rb.hvd_vertical.value_or(false);
  Plane b(rb.width, rb.height);
  b.set(0, 0, rb.first_sample);
  size_t i = 0;
  for (uint32_t y = 0; y < rb.height; ++y) {
    for (uint32_t x = 0; x < rb.width; ++x) {
      if (x == 0 && y == 0) continue;
      const uint8_t pred = (y == 0 || x == 0)
                               ? border_prediction(b, x, y)
                               : interior_prediction(b, x, y, kind, hvd_vertical);
      b.set(x, y, static_cast<uint8_t>(pred + rb.residuals[i++]));
    }
  }
  return b;
}

void collect_unit_residuals(const ResidualBlock& rb, uint32_t x0, uint32_t y0,
                            uint32_t x1, uint32_t y1,
                            std::vector<int16_t>& out) {
  out.clear();
  for (uint32_t y = y0; y < y1; ++y) {
    for (uint32_t x = x0; x < x1; ++x) {
      if (x == 0 && y == 0) continue;
      out.push_back(rb.residuals[static_cast<size_t>(y) * rb.width + x - 1]);
    }
  }
}

size_t block_code_bits(const ResidualBlock& rb) {
  size_t bits = 0;
  std::vector<int16_t> unit;
  unit.reserve(16);
  for_each_unit(rb.width, rb.height,
                [&](uint32_t x0, uint32_t y0, uint32_t x1, uint32_t y1) {
                  collect_unit_residuals(rb, x0, y0, x1, y1, unit);
                  // 1x1 blocks leave the (0,0) unit empty; it emits nothing.
                  if (!unit.empty()) bits += unit_bits(unit);
                });
  return bits;
}

}  // namespace irbrc
