"""Lossless reference-block recompression codec."""

from ._irbrc import (
    CodecError,
    __version__,
    compress_frame,
    container_drr,
    decompress_frame,
    fetch_block,
    fetch_region,
    generate_frame,
)

__all__ = [
    "CodecError",
    "__version__",
    "compress_frame",
    "container_drr",
    "decompress_frame",
    "fetch_block",
    "fetch_region",
    "generate_frame",
]
