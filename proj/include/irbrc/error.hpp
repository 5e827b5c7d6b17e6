// Copyright (c) the irbrc project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace irbrc {

enum class Errc {
  kSizeMismatch,
  kInvalidDescriptor,
  kInvalidBlockSize,
  kOutOfRange,
  kTruncatedStream,
  kShapeMismatch,
  kSlotOverflow,
  kIndexOutOfRange,
  kRectOutOfBounds,
  kEmptyContainer,
  kBadMagic,
  kBadVersion,
  kCorruptContainer,
  kIoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kInvalidDescriptor: return "InvalidDescriptor";
    case Errc::kInvalidBlockSize: return "InvalidBlockSize";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kTruncatedStream: return "TruncatedStream";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kSlotOverflow: return "SlotOverflow";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kRectOutOfBounds: return "RectOutOfBounds";
    case Errc::kEmptyContainer: return "EmptyContainer";
    case Errc::kBadMagic: return "BadMagic";
    case Errc::kBadVersion: return "BadVersion";
    case Errc::kCorruptContainer: return "CorruptContainer";
    case Errc::kIoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace irbrc
