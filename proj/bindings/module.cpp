// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "irbrc/corpus.hpp"
#include "irbrc/frame_store.hpp"

namespace py = pybind11;

namespace {

irbrc::CodecConfig make_config(uint32_t block_size, const std::string& predictor,
                               const std::string& accounting) {
  const auto kind = irbrc::predictor_from_name(predictor);
  if (!kind) throw irbrc::Error(irbrc::Errc::kInvalidDescriptor,
                                "unknown predictor " + predictor);
  const auto acc = irbrc::accounting_from_name(accounting);
  if (!acc) throw irbrc::Error(irbrc::Errc::kInvalidDescriptor,
                               "unknown accounting " + accounting);
  irbrc::CodecConfig cfg{block_size, *kind, *acc};
  cfg.validate();
  return cfg;
}

std::vector<uint8_t> to_vector(const py::bytes& data) {
  const std::string_view view = data;
  return std::vector<uint8_t>(view.begin(), view.end());
}

py::bytes to_bytes(const std::vector<uint8_t>& data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

irbrc::Container parse_container(const py::bytes& blob) {
  return irbrc::container_from_bytes(to_vector(blob));
}

}  // namespace

PYBIND11_MODULE(_irbrc, m) {
  m.doc() = "Lossless reference-block recompression codec";
  m.attr("__version__") = "0.1.0";

  py::register_exception<irbrc::Error>(m, "CodecError");

  m.def(
      "compress_frame",
      [](const py::bytes& data, uint32_t width, uint32_t height,
         const std::string& format, uint32_t block_size,
         const std::string& predictor, const std::string& accounting) {
        const auto chroma = irbrc::chroma_format_from_name(format);
        if (!chroma)
          throw irbrc::Error(irbrc::Errc::kInvalidDescriptor,
                             "unknown format " + format);
        const irbrc::FrameDescriptor desc{width, height, *chroma, 8};
        const irbrc::CodecConfig cfg =
            make_config(block_size, predictor, accounting);
        const irbrc::Frame frame = irbrc::load_raw_frame(to_vector(data), desc);
        return to_bytes(irbrc::container_to_bytes(
            irbrc::store_frame(irbrc::encode_frame(frame, cfg))));
      },
      py::arg("data"), py::arg("width"), py::arg("height"),
      py::arg("format") = "gray", py::arg("block_size") = 8,
      py::arg("predictor") = "edge", py::arg("accounting") = "bytes",
      "Compress one raw planar frame into a container blob.");

  m.def(
      "decompress_frame",
      [](const py::bytes& blob) {
        const irbrc::Container container = parse_container(blob);
        const irbrc::Frame frame = irbrc::unpack_frame(container);
        py::dict out;
        out["width"] = frame.desc.width;
        out["height"] = frame.desc.height;
        out["format"] = irbrc::chroma_format_name(frame.desc.chroma);
        out["block_size"] = container.cfg.block_size;
        out["predictor"] = irbrc::predictor_name(container.cfg.predictor);
        out["data"] = to_bytes(irbrc::frame_to_raw(frame));
        return out;
      },
      py::arg("container"),
      "Decode a container blob back to raw planar bytes plus its geometry.");

  m.def(
      "container_drr",
      [](const py::bytes& blob, const std::string& accounting) {
        const auto acc = irbrc::accounting_from_name(accounting);
        if (!acc)
          throw irbrc::Error(irbrc::Errc::kInvalidDescriptor,
                             "unknown accounting " + accounting);
        return irbrc::container_drr(parse_container(blob), *acc);
      },
      py::arg("container"), py::arg("accounting") = "bytes",
      "Data reduction rate of a container blob.");

  m.def(
      "fetch_block",
      [](const py::bytes& blob, size_t plane, uint32_t bx, uint32_t by) {
        const irbrc::Plane block =
            irbrc::fetch_block(parse_container(blob), plane, bx, by);
        return py::make_tuple(block.width(), block.height(),
                              to_bytes(block.samples()));
      },
      py::arg("container"), py::arg("plane"), py::arg("bx"), py::arg("by"),
      "Decode exactly one block slot; returns (width, height, samples).");

  m.def(
      "fetch_region",
      [](const py::bytes& blob, size_t plane, uint32_t x, uint32_t y,
         uint32_t width, uint32_t height, uint32_t burst_bytes) {
        const auto [samples, stats] = irbrc::fetch_region(
            parse_container(blob), plane, {x, y, width, height}, burst_bytes);
        py::dict out;
        out["width"] = samples.width();
        out["height"] = samples.height();
        out["data"] = to_bytes(samples.samples());
        out["raw_bytes"] = stats.raw_bytes;
        out["compressed_bytes"] = stats.compressed_bytes;
        out["blocks_touched"] = stats.blocks_touched;
        return out;
      },
      py::arg("container"), py::arg("plane"), py::arg("x"), py::arg("y"),
      py::arg("width"), py::arg("height"), py::arg("burst_bytes") = 0,
      "Decode the slots covering a rectangle; returns samples plus the "
      "bandwidth stats of the touched blocks.");

  m.def(
      "generate_frame",
      [](const std::string& kind, uint64_t seed, uint32_t width,
         uint32_t height, uint32_t frame_index) {
        const auto k = irbrc::corpus_kind_from_name(kind);
        if (!k)
          throw irbrc::Error(irbrc::Errc::kInvalidDescriptor,
                             "unknown corpus kind " + kind);
        const irbrc::CorpusSpec spec{*k, seed, width, height, 1};
        return to_bytes(irbrc::corpus_frame(spec, frame_index).samples());
      },
      py::arg("kind"), py::arg("seed"), py::arg("width"), py::arg("height"),
      py::arg("frame_index") = 0,
      "Deterministic synthetic frame (flat/ramp/text_like/noise/mixed).");
}
