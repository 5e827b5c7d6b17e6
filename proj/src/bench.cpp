// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include <json.hpp>

namespace irbrc {

namespace {

constexpr const char* kPlaneSets[] = {"joint", "y", "u", "v"};

int plane_set_rank(const std::string& plane_set) {
  for (int i = 0; i < 4; ++i)
    if (plane_set == kPlaneSets[i]) return i;
  return 4;
}

bool row_order(const BenchRow& a, const BenchRow& b) {
  if (a.sequence_id != b.sequence_id) return a.sequence_id < b.sequence_id;
  if (a.predictor != b.predictor) return a.predictor < b.predictor;
  if (a.block_size != b.block_size) return a.block_size < b.block_size;
  return plane_set_rank(a.plane_set) < plane_set_rank(b.plane_set);
}

std::string format_compressed(double value, Accounting accounting) {
  char buf[48];
  if (accounting == Accounting::kByteAligned)
    std::snprintf(buf, sizeof(buf), "%llu",
                  static_cast<unsigned long long>(value + 0.5));
  else
    std::snprintf(buf, sizeof(buf), "%.3f", value);  // multiples of 1/8
  return buf;
}

std::string format_drr(double drr) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12f", drr);
  return buf;
}

// Per-plane byte/bit totals of one sequence under one config.
struct PlaneTotals {
  uint64_t original_bytes = 0;
  uint64_t compressed_bytes = 0;
  uint64_t exact_bits = 0;
};

double compressed_value(const PlaneTotals& t, Accounting accounting) {
  return accounting == Accounting::kExactBits
             ? static_cast<double>(t.exact_bits) / 8.0
             : static_cast<double>(t.compressed_bytes);
}

}  // namespace

BenchReport run_bench(const std::vector<SequenceInfo>& sequences,
                      const std::vector<Predictor>& predictors,
                      const std::vector<uint32_t>& block_sizes,
                      Accounting accounting, std::ostream* warnings) {
  struct CellKey {
    Predictor predictor;
    uint32_t block_size;
    bool operator<(const CellKey& o) const {
      return predictor != o.predictor ? predictor < o.predictor
                                      : block_size < o.block_size;
    }
  };
  struct ClassTotals {
    uint32_t frames = 0;
    uint64_t original_bytes = 0;
    double compressed = 0;
  };
  BenchReport report;
  std::map<std::pair<std::string, CellKey>, ClassTotals> class_totals;
  std::map<CellKey, ClassTotals> overall_totals;

  for (const SequenceInfo& seq : sequences) {
    std::ifstream in(seq.path, std::ios::binary);
    std::vector<uint8_t> bytes;
    uint32_t frames = 0;
    try {
      seq.desc.validate();
      if (!in) throw Error(Errc::kIoError, "cannot open " + seq.path);
      bytes.assign(std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>());
      const size_t frame_bytes = seq.desc.frame_bytes();
      const uint32_t available = static_cast<uint32_t>(bytes.size() / frame_bytes);
      frames = seq.frames == 0 ? available : std::min(seq.frames, available);
      if (frames == 0)
        throw Error(Errc::kSizeMismatch, "file shorter than one frame");
    } catch (const Error& e) {
      if (warnings)
        *warnings << "warning: skipping sequence " << seq.id << ": " << e.what()
                  << "\n";
      continue;
    }

    const size_t plane_count = seq.desc.plane_count();
    for (Predictor predictor : predictors) {
      for (uint32_t block_size : block_sizes) {
        const CodecConfig cfg{block_size, predictor, accounting};
        std::vector<PlaneTotals> totals(plane_count);
        for (uint32_t f = 0; f < frames; ++f) {
          const Frame frame = load_raw_frame(
              std::span<const uint8_t>(bytes.data() + f * seq.desc.frame_bytes(),
                                       seq.desc.frame_bytes()),
              seq.desc);
          const CompressedFrame cf = encode_frame(frame, cfg);
          for (size_t p = 0; p < plane_count; ++p) {
            totals[p].original_bytes +=
                static_cast<uint64_t>(cf.planes[p].width) * cf.planes[p].height;
            for (const CompressedBlock& blk : cf.planes[p].blocks) {
              totals[p].compressed_bytes += blk.payload.size();
              totals[p].exact_bits += blk.bit_length;
            }
          }
        }

        PlaneTotals joint;
        for (const PlaneTotals& t : totals) {
          joint.original_bytes += t.original_bytes;
          joint.compressed_bytes += t.compressed_bytes;
          joint.exact_bits += t.exact_bits;
        }
        auto emit = [&](const std::string& plane_set, const PlaneTotals& t) {
          BenchRow row;
          row.sequence_id = seq.id;
          row.plane_set = plane_set;
          row.predictor = predictor;
          row.block_size = block_size;
          row.accounting = accounting;
          row.frames = frames;
          row.original_bytes = t.original_bytes;
          row.compressed_bytes = compressed_value(t, accounting);
          row.drr = 1.0 - row.compressed_bytes /
                              static_cast<double>(t.original_bytes);
          report.rows.push_back(std::move(row));
        };
        emit("joint", joint);
        if (plane_count == 3) {
          emit("y", totals[0]);
          emit("u", totals[1]);
          emit("v", totals[2]);
        }

        const CellKey key{predictor, block_size};
        for (auto* bucket :
             {&class_totals[{seq.class_label, key}], &overall_totals[key]}) {
          bucket->frames += frames;
          bucket->original_bytes += joint.original_bytes;
          bucket->compressed += compressed_value(joint, accounting);
        }
      }
    }
  }

  std::sort(report.rows.begin(), report.rows.end(), row_order);

  auto average_row = [&](const std::string& label, const CellKey& key,
                         const ClassTotals& t) {
    BenchRow row;
    row.sequence_id = label;
    row.plane_set = "joint";
    row.predictor = key.predictor;
    row.block_size = key.block_size;
    row.accounting = accounting;
    row.frames = t.frames;
    row.original_bytes = t.original_bytes;
    row.compressed_bytes = t.compressed;
    row.drr = 1.0 - t.compressed / static_cast<double>(t.original_bytes);
    return row;
  };
  for (const auto& [key, totals] : class_totals)
    report.averages.push_back(
        average_row("average:" + key.first, key.second, totals));
  for (const auto& [key, totals] : overall_totals)
    report.averages.push_back(average_row("average:overall", key, totals));
  return report;
}

namespace {

void write_row_csv(const BenchRow& row, std::ostream& out) {
  out << row.sequence_id << ',' << row.plane_set << ','
      << predictor_name(row.predictor) << ',' << row.block_size << ','
      << accounting_name(row.accounting) << ',' << row.frames << ','
      << row.original_bytes << ','
      << format_compressed(row.compressed_bytes, row.accounting) << ','
      << format_drr(row.drr) << '\n';
}

nlohmann::ordered_json row_json(const BenchRow& row) {
  nlohmann::ordered_json j;
  j["sequence_id"] = row.sequence_id;
  j["plane_set"] = row.plane_set;
  j["predictor"] = predictor_name(row.predictor);
  j["block_size"] = row.block_size;
  j["accounting"] = accounting_name(row.accounting);
  j["frames"] = row.frames;
  j["original_bytes"] = row.original_bytes;
  j["compressed_bytes"] = row.compressed_bytes;
  j["drr"] = row.drr;
  return j;
}

}  // namespace

void write_report_csv(const BenchReport& report, std::ostream& out) {
  out << "sequence_id,plane_set,predictor,block_size,accounting,frames,"
         "original_bytes,compressed_bytes,drr\n";
  for (const BenchRow& row : report.rows) write_row_csv(row, out);
  for (const BenchRow& row : report.averages) write_row_csv(row, out);
}

void write_report_json(const BenchReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const BenchRow& row : report.rows) j["rows"].push_back(row_json(row));
  j["averages"] = nlohmann::ordered_json::array();
  for (const BenchRow& row : report.averages)
    j["averages"].push_back(row_json(row));
  out << j.dump(2) << '\n';
}

std::vector<SequenceInfo> read_manifest(const std::string& corpus_dir) {
  const std::filesystem::path path =
      std::filesystem::path(corpus_dir) / "manifest.json";
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::kIoError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kIoError, "malformed manifest: " + std::string(e.what()));
  }
  std::vector<SequenceInfo> sequences;
  for (const auto& entry : j.value("sequences", nlohmann::json::array())) {
    SequenceInfo seq;
    const std::string file = entry.at("file").get<std::string>();
    seq.path = (std::filesystem::path(corpus_dir) / file).string();
    seq.id = entry.value("id", std::filesystem::path(file).stem().string());
    seq.desc.width = entry.at("width").get<uint32_t>();
    seq.desc.height = entry.at("height").get<uint32_t>();
    const std::string format = entry.value("format", "gray");
    const auto chroma = chroma_format_from_name(format);
    if (!chroma)
      throw Error(Errc::kInvalidDescriptor, "unknown format " + format);
    seq.desc.chroma = *chroma;
    seq.frames = entry.value("frames", 0u);
    seq.class_label = entry.value("class", "default");
    sequences.push_back(std::move(seq));
  }
  return sequences;
}

void write_manifest(const std::string& corpus_dir,
                    const std::vector<SequenceInfo>& sequences) {
  nlohmann::ordered_json j;
  j["sequences"] = nlohmann::ordered_json::array();
  for (const SequenceInfo& seq : sequences) {
    nlohmann::ordered_json entry;
    entry["id"] = seq.id;
    entry["file"] = std::filesystem::path(seq.path).filename().string();
    entry["width"] = seq.desc.width;
    entry["height"] = seq.desc.height;
    entry["format"] = chroma_format_name(seq.desc.chroma);
    entry["frames"] = seq.frames;
    entry["class"] = seq.class_label;
    j["sequences"].push_back(std::move(entry));
  }
  const std::filesystem::path path =
      std::filesystem::path(corpus_dir) / "manifest.json";
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::kIoError, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace irbrc
