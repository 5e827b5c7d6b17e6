// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "irbrc/block_codec.hpp"
#include "irbrc/frame.hpp"

namespace irbrc {

// One raw sequence of a corpus. `frames == 0` means "derive from file size".
struct SequenceInfo {
  std::string id;
  std::string path;
  FrameDescriptor desc;
  uint32_t frames = 0;
  std::string class_label = "default";
};

struct BenchRow {
  std::string sequence_id;   // sequence id or "average:<class>"/"average:overall"
  std::string plane_set;     // "joint", "y", "u", "v"
  Predictor predictor = Predictor::kEdge;
  uint32_t block_size = 8;
  Accounting accounting = Accounting::kByteAligned;
  uint32_t frames = 0;
  uint64_t original_bytes = 0;
  double compressed_bytes = 0;  // exact-bit accounting yields bits/8
  double drr = 0;               // 1 - compressed/original
};

struct BenchReport {
  std::vector<BenchRow> rows;      // sorted by (sequence, predictor, size)
  std::vector<BenchRow> averages;  // per class, then overall
};

// Full predictor x block-size cross product over the sequences. Unreadable
// sequences are skipped with a warning on `warnings` (when non-null); they
// contribute no rows. Monochrome sequences emit one joint row per cell;
// 4:2:0 sequences add per-plane y/u/v rows.
BenchReport run_bench(const std::vector<SequenceInfo>& sequences,
                      const std::vector<Predictor>& predictors,
                      const std::vector<uint32_t>& block_sizes,
                      Accounting accounting, std::ostream* warnings);

void write_report_csv(const BenchReport& report, std::ostream& out);
void write_report_json(const BenchReport& report, std::ostream& out);

// manifest.json inside a corpus directory: {"sequences": [{"id", "file",
// "width", "height", "format", "frames", "class"}, ...]}. "id", "frames" and
// "class" are optional.
std::vector<SequenceInfo> read_manifest(const std::string& corpus_dir);
void write_manifest(const std::string& corpus_dir,
                    const std::vector<SequenceInfo>& sequences);

}  // namespace irbrc
