// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include "irbrc/bench.hpp"

#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "irbrc/corpus.hpp"
#include "test_util.hpp"

using namespace irbrc;

namespace {

std::filesystem::path make_temp_dir(const char* tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   (std::string("irbrc_test_") + tag + "_" +
                    std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

// Writes a sequence's frames and returns its manifest entry.
SequenceInfo write_sequence(const std::filesystem::path& dir,
                            const CorpusSpec& spec,
                            const std::string& class_label) {
  const std::string id = spec.sequence_id();
  const auto path = dir / (id + ".gray");
  std::ofstream out(path, std::ios::binary);
  for (uint32_t f = 0; f < spec.frames; ++f) {
    const Plane plane = corpus_frame(spec, f);
    out.write(reinterpret_cast<const char*>(plane.samples().data()),
              static_cast<std::streamsize>(plane.samples().size()));
  }
  SequenceInfo seq;
  seq.id = id;
  seq.path = path.string();
  seq.desc = {spec.width, spec.height, ChromaFormat::kMonochrome, 8};
  seq.frames = spec.frames;
  seq.class_label = class_label;
  return seq;
}

}  // namespace

TEST_CASE("corpus generation is deterministic") {
  const CorpusSpec spec{CorpusKind::kNoise, 42, 32, 20, 3};
  for (uint32_t f = 0; f < spec.frames; ++f)
    CHECK(corpus_frame(spec, f) == corpus_frame(spec, f));
  CHECK(corpus_frame(spec, 0) != corpus_frame(spec, 1));
}

TEST_CASE("flat frames are constant 128") {
  const Plane p = corpus_frame({CorpusKind::kFlat, 1, 16, 16, 1}, 0);
  for (uint8_t v : p.samples()) CHECK(v == 128);
}

TEST_CASE("ramp frames are horizontal gradients mod 256") {
  const Plane p = corpus_frame({CorpusKind::kRamp, 1, 300, 2, 1}, 0);
  for (uint32_t x = 0; x < 300; ++x) {
    CHECK(p.at(x, 0) == static_cast<uint8_t>(x & 0xFF));
    CHECK(p.at(x, 1) == p.at(x, 0));
  }
}

TEST_CASE("text_like frames use at most 8 distinct values") {
  for (uint64_t seed : {1ull, 9ull, 77ull}) {
    const CorpusSpec spec{CorpusKind::kTextLike, seed, 64, 48, 2};
    for (uint32_t f = 0; f < spec.frames; ++f) {
      const Plane frame = corpus_frame(spec, f);
      std::set<uint8_t> values;
      for (uint8_t v : frame.samples()) values.insert(v);
      CHECK(values.size() <= 8);
    }
  }
}

TEST_CASE("mixed frames place a flat quadrant top-left") {
  const Plane p = corpus_frame({CorpusKind::kMixed, 5, 32, 32, 1}, 0);
  for (uint32_t y = 0; y < 16; ++y)
    for (uint32_t x = 0; x < 16; ++x) CHECK(p.at(x, y) == 128);
}

TEST_CASE("bench evaluates the full matrix with sorted rows") {
  const auto dir = make_temp_dir("bench");
  const std::vector<SequenceInfo> seqs{
      write_sequence(dir, {CorpusKind::kMixed, 3, 32, 32, 2}, "MC")};
  const std::vector<Predictor> preds{Predictor::kEdge, Predictor::kHd};
  const std::vector<uint32_t> sizes{4, 8, 16};
  const BenchReport report =
      run_bench(seqs, preds, sizes, Accounting::kByteAligned, nullptr);

  // 2 predictors x 3 sizes, one joint row each for a monochrome sequence
  REQUIRE(report.rows.size() == 6);
  for (size_t i = 1; i < report.rows.size(); ++i) {
    const BenchRow& a = report.rows[i - 1];
    const BenchRow& b = report.rows[i];
    const auto key = [](const BenchRow& r) {
      return std::make_tuple(r.sequence_id, r.predictor, r.block_size);
    };
    CHECK(key(a) < key(b));
  }
  for (const BenchRow& row : report.rows) {
    CHECK(row.plane_set == "joint");
    CHECK(row.frames == 2);
    CHECK(row.original_bytes == 2 * 32 * 32);
    CHECK(std::abs(row.drr -
                   (1.0 - row.compressed_bytes / double(row.original_bytes))) <
          1e-12);
  }
  // averages: one per class cell plus one overall cell
  CHECK(report.averages.size() == 12);
  std::filesystem::remove_all(dir);
}

TEST_CASE("4:2:0 sequences report joint plus per-plane rows") {
  const auto dir = make_temp_dir("yuv");
  const FrameDescriptor desc{16, 8, ChromaFormat::kI420};
  std::vector<uint8_t> raw(desc.frame_bytes());
  SplitMix64 rng(12);
  for (uint8_t& b : raw) b = static_cast<uint8_t>(rng.next() & 0xFF);
  const auto path = dir / "clip.yuv";
  std::ofstream(path, std::ios::binary)
      .write(reinterpret_cast<const char*>(raw.data()),
             static_cast<std::streamsize>(raw.size()));

  SequenceInfo seq;
  seq.id = "clip";
  seq.path = path.string();
  seq.desc = desc;
  seq.frames = 0;  // derive from file size
  const BenchReport report = run_bench({seq}, {Predictor::kEdge}, {8},
                                       Accounting::kByteAligned, nullptr);
  REQUIRE(report.rows.size() == 4);
  CHECK(report.rows[0].plane_set == "joint");
  CHECK(report.rows[1].plane_set == "y");
  CHECK(report.rows[2].plane_set == "u");
  CHECK(report.rows[3].plane_set == "v");
  CHECK(report.rows[0].frames == 1);
  CHECK(report.rows[0].original_bytes ==
        report.rows[1].original_bytes + report.rows[2].original_bytes +
            report.rows[3].original_bytes);
  CHECK(report.rows[0].compressed_bytes ==
        report.rows[1].compressed_bytes + report.rows[2].compressed_bytes +
            report.rows[3].compressed_bytes);
  std::filesystem::remove_all(dir);
}

TEST_CASE("unreadable sequences are skipped with a warning") {
  SequenceInfo missing;
  missing.id = "ghost";
  missing.path = "/nonexistent/ghost.gray";
  missing.desc = {8, 8, ChromaFormat::kMonochrome, 8};
  std::ostringstream warnings;
  const BenchReport report = run_bench({missing}, {Predictor::kEdge}, {8},
                                       Accounting::kByteAligned, &warnings);
  CHECK(report.rows.empty());
  CHECK(warnings.str().find("ghost") != std::string::npos);
}

TEST_CASE("reports are deterministic and DRR recomputes from totals") {
  const auto dir = make_temp_dir("det");
  const std::vector<SequenceInfo> seqs{
      write_sequence(dir, {CorpusKind::kTextLike, 8, 32, 32, 1}, "TGM"),
      write_sequence(dir, {CorpusKind::kRamp, 9, 32, 32, 1}, "TGM")};
  for (Accounting acc : {Accounting::kByteAligned, Accounting::kExactBits}) {
    const BenchReport a =
        run_bench(seqs, {Predictor::kEdge}, {8}, acc, nullptr);
    const BenchReport b =
        run_bench(seqs, {Predictor::kEdge}, {8}, acc, nullptr);
    std::ostringstream csv_a, csv_b, json_a;
    write_report_csv(a, csv_a);
    write_report_csv(b, csv_b);
    CHECK(csv_a.str() == csv_b.str());
    write_report_json(a, json_a);
    CHECK(json_a.str().find("\"rows\"") != std::string::npos);
    for (const BenchRow& row : a.rows)
      CHECK(std::abs(row.drr - (1.0 - row.compressed_bytes /
                                          double(row.original_bytes))) < 1e-12);
    // averages divide summed compressed by summed original
    for (const BenchRow& row : a.averages)
      CHECK(std::abs(row.drr - (1.0 - row.compressed_bytes /
                                          double(row.original_bytes))) < 1e-12);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("manifest roundtrip") {
  const auto dir = make_temp_dir("manifest");
  std::vector<SequenceInfo> seqs{
      write_sequence(dir, {CorpusKind::kFlat, 1, 16, 16, 2}, "ANI")};
  write_manifest(dir.string(), seqs);
  const std::vector<SequenceInfo> back = read_manifest(dir.string());
  REQUIRE(back.size() == 1);
  CHECK(back[0].id == seqs[0].id);
  CHECK(back[0].desc == seqs[0].desc);
  CHECK(back[0].frames == 2);
  CHECK(back[0].class_label == "ANI");
  std::filesystem::remove_all(dir);
}
