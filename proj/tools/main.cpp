// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irbrc/bench.hpp"
#include "irbrc/corpus.hpp"
#include "irbrc/frame_store.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCorrupt = 3;

int exit_code_for(irbrc::Errc code) {
  switch (code) {
    case irbrc::Errc::kBadMagic:
    case irbrc::Errc::kBadVersion:
    case irbrc::Errc::kTruncatedStream:
    case irbrc::Errc::kCorruptContainer:
      return kExitCorrupt;
    default:
      return kExitUsage;
  }
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw irbrc::Error(irbrc::Errc::kIoError, "cannot open " + path);
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw irbrc::Error(irbrc::Errc::kIoError, "cannot open " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out)
    throw irbrc::Error(irbrc::Errc::kIoError, "write failed: " + path);
}

bool has_pgm_extension(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".pgm";
}

struct CompressArgs {
  std::string input, out;
  uint32_t width = 0, height = 0;
  std::string format = "gray";
  uint32_t block_size = 8;
  std::string predictor = "edge";
  std::string accounting = "bytes";
};

int run_compress(const CompressArgs& args) {
  irbrc::CodecConfig cfg;
  cfg.block_size = args.block_size;
  cfg.predictor = *irbrc::predictor_from_name(args.predictor);
  cfg.accounting = *irbrc::accounting_from_name(args.accounting);
  cfg.validate();

  const std::vector<uint8_t> bytes = read_file(args.input);
  std::vector<irbrc::Frame> frames;
  if (has_pgm_extension(args.input)) {
    irbrc::Plane plane = irbrc::load_pgm(bytes);
    irbrc::Frame frame;
    frame.desc = {plane.width(), plane.height(),
                  irbrc::ChromaFormat::kMonochrome, 8};
    frame.planes.push_back(std::move(plane));
    frames.push_back(std::move(frame));
  } else {
    if (args.width == 0 || args.height == 0)
      throw irbrc::Error(irbrc::Errc::kInvalidDescriptor,
                         "raw input requires --width and --height");
    const auto chroma = irbrc::chroma_format_from_name(args.format);
    irbrc::FrameDescriptor desc{args.width, args.height, *chroma, 8};
    desc.validate();
    const size_t frame_bytes = desc.frame_bytes();
    if (bytes.empty() || bytes.size() % frame_bytes != 0) {
      char msg[96];
      std::snprintf(msg, sizeof(msg),
                    "input is %zu bytes, not a multiple of frame size %zu",
                    bytes.size(), frame_bytes);
      throw irbrc::Error(irbrc::Errc::kSizeMismatch, msg);
    }
    for (size_t off = 0; off < bytes.size(); off += frame_bytes)
      frames.push_back(irbrc::load_raw_frame(
          std::span<const uint8_t>(bytes.data() + off, frame_bytes), desc));
  }

  std::ofstream out(args.out, std::ios::binary);
  if (!out)
    throw irbrc::Error(irbrc::Errc::kIoError, "cannot open " + args.out);
  for (size_t i = 0; i < frames.size(); ++i) {
    const irbrc::Container container =
        irbrc::store_frame(irbrc::encode_frame(frames[i], cfg));
    irbrc::write_container(container, out);
    std::printf("frame %zu: drr %.12f\n", i,
                irbrc::container_drr(container, cfg.accounting));
  }
  return kExitOk;
}

int run_decompress(const std::string& input, const std::string& output) {
  std::ifstream in(input, std::ios::binary);
  if (!in)
    throw irbrc::Error(irbrc::Errc::kIoError, "cannot open " + input);
  std::vector<uint8_t> raw;
  size_t frames = 0;
  while (in.peek() != std::char_traits<char>::eof()) {
    const irbrc::Container container = irbrc::read_container(in);
    const std::vector<uint8_t> bytes =
        irbrc::frame_to_raw(irbrc::unpack_frame(container));
    raw.insert(raw.end(), bytes.begin(), bytes.end());
    ++frames;
  }
  if (frames == 0)
    throw irbrc::Error(irbrc::Errc::kBadMagic, "empty input file");
  write_file(output, raw);
  std::printf("decoded %zu frame%s, %zu bytes\n", frames,
              frames == 1 ? "" : "s", raw.size());
  return kExitOk;
}

struct GenCorpusArgs {
  std::string kind;
  uint64_t seed = 0;
  uint32_t width = 64, height = 64, frames = 1;
  std::string out_dir;
};

int run_gen_corpus(const GenCorpusArgs& args) {
  const auto kind = irbrc::corpus_kind_from_name(args.kind);
  irbrc::CorpusSpec spec{*kind, args.seed, args.width, args.height, args.frames};
  if (spec.width < 1 || spec.height < 1 || spec.frames < 1)
    throw irbrc::Error(irbrc::Errc::kInvalidDescriptor,
                       "width, height and frames must be >= 1");

  std::filesystem::create_directories(args.out_dir);
  const std::string id = spec.sequence_id();
  const std::filesystem::path file =
      std::filesystem::path(args.out_dir) / (id + ".gray");
  std::ofstream out(file, std::ios::binary);
  if (!out)
    throw irbrc::Error(irbrc::Errc::kIoError, "cannot open " + file.string());
  for (uint32_t f = 0; f < spec.frames; ++f) {
    const irbrc::Plane plane = irbrc::corpus_frame(spec, f);
    out.write(reinterpret_cast<const char*>(plane.samples().data()),
              static_cast<std::streamsize>(plane.samples().size()));
  }
  if (!out)
    throw irbrc::Error(irbrc::Errc::kIoError, "write failed: " + file.string());
  out.close();

  std::vector<irbrc::SequenceInfo> sequences;
  try {
    sequences = irbrc::read_manifest(args.out_dir);
  } catch (const irbrc::Error&) {
    // no manifest yet
  }
  std::erase_if(sequences,
                [&](const irbrc::SequenceInfo& s) { return s.id == id; });
  irbrc::SequenceInfo seq;
  seq.id = id;
  seq.path = file.string();
  seq.desc = {spec.width, spec.height, irbrc::ChromaFormat::kMonochrome, 8};
  seq.frames = spec.frames;
  seq.class_label = irbrc::corpus_kind_name(spec.kind);
  sequences.push_back(std::move(seq));
  std::sort(sequences.begin(), sequences.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  irbrc::write_manifest(args.out_dir, sequences);
  std::printf("wrote %s (%u frame%s, %ux%u)\n", file.string().c_str(),
              spec.frames, spec.frames == 1 ? "" : "s", spec.width, spec.height);
  return kExitOk;
}

struct BenchArgs {
  std::string corpus_dir;
  std::vector<std::string> predictors = {"edge", "hd", "hvd", "med", "gap"};
  std::vector<uint32_t> block_sizes = {4, 8, 16};
  std::string accounting = "bytes";
  std::string report = "csv";
  std::string out;
};

int run_bench_cmd(const BenchArgs& args) {
  std::vector<irbrc::Predictor> predictors;
  for (const std::string& name : args.predictors) {
    const auto kind = irbrc::predictor_from_name(name);
    if (!kind)
      throw irbrc::Error(irbrc::Errc::kInvalidDescriptor,
                         "unknown predictor " + name);
    predictors.push_back(*kind);
  }
  for (uint32_t block_size : args.block_sizes)
    if (!irbrc::valid_block_size(block_size))
      throw irbrc::Error(irbrc::Errc::kInvalidBlockSize,
                         "block size must be 4, 8 or 16");
  const auto accounting = irbrc::accounting_from_name(args.accounting);

  const std::vector<irbrc::SequenceInfo> sequences =
      irbrc::read_manifest(args.corpus_dir);
  const irbrc::BenchReport report = irbrc::run_bench(
      sequences, predictors, args.block_sizes, *accounting, &std::cerr);
  if (report.rows.empty())
    throw irbrc::Error(irbrc::Errc::kIoError, "no readable sequences in corpus");

  auto emit = [&](std::ostream& out) {
    if (args.report == "json")
      irbrc::write_report_json(report, out);
    else
      irbrc::write_report_csv(report, out);
  };
  if (args.out.empty()) {
    emit(std::cout);
  } else {
    std::ofstream out(args.out);
    if (!out)
      throw irbrc::Error(irbrc::Errc::kIoError, "cannot open " + args.out);
    emit(out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irbrc: lossless reference-block recompression codec"};
  app.require_subcommand(1);

  CompressArgs compress_args;
  CLI::App* compress = app.add_subcommand(
      "compress", "Compress raw gray/yuv420p/PGM frames into a container");
  compress->add_option("--input", compress_args.input, "input file")->required();
  compress->add_option("--width", compress_args.width, "frame width");
  compress->add_option("--height", compress_args.height, "frame height");
  compress->add_option("--format", compress_args.format, "gray or yuv420p")
      ->check(CLI::IsMember({"gray", "yuv420p"}));
  compress->add_option("--block-size", compress_args.block_size, "4, 8 or 16")
      ->check(CLI::IsMember({4, 8, 16}));
  compress
      ->add_option("--predictor", compress_args.predictor,
                   "edge, hd, hvd, med or gap")
      ->check(CLI::IsMember({"edge", "hd", "hvd", "med", "gap"}));
  compress
      ->add_option("--accounting", compress_args.accounting, "bits or bytes")
      ->check(CLI::IsMember({"bits", "bytes"}));
  compress->add_option("--out", compress_args.out, "output container")
      ->required();

  std::string dec_input, dec_out;
  CLI::App* decompress = app.add_subcommand(
      "decompress", "Decode a container back to raw planar frames");
  decompress->add_option("--input", dec_input, "container file")->required();
  decompress->add_option("--out", dec_out, "output raw file")->required();

  GenCorpusArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "gen-corpus", "Generate a deterministic synthetic sequence");
  gen->add_option("--kind", gen_args.kind,
                  "flat, ramp, text_like, noise or mixed")
      ->required()
      ->check(CLI::IsMember({"flat", "ramp", "text_like", "noise", "mixed"}));
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--width", gen_args.width, "frame width");
  gen->add_option("--height", gen_args.height, "frame height");
  gen->add_option("--frames", gen_args.frames, "frame count");
  gen->add_option("--out", gen_args.out_dir, "corpus directory")->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Run the predictor x block-size DRR matrix over a corpus");
  bench->add_option("--corpus", bench_args.corpus_dir, "corpus directory")
      ->required();
  bench->add_option("--predictors", bench_args.predictors, "predictor list")
      ->delimiter(',');
  bench->add_option("--block-sizes", bench_args.block_sizes, "block size list")
      ->delimiter(',');
  bench->add_option("--accounting", bench_args.accounting, "bits or bytes")
      ->check(CLI::IsMember({"bits", "bytes"}));
  bench->add_option("--report", bench_args.report, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", bench_args.out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compress->parsed()) return run_compress(compress_args);
    if (decompress->parsed()) return run_decompress(dec_input, dec_out);
    if (gen->parsed()) return run_gen_corpus(gen_args);
    if (bench->parsed()) return run_bench_cmd(bench_args);
  } catch (const irbrc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
