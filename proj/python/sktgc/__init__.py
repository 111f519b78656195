"""Skew-tolerant Gray codes: constructions, rank/unrank, verification, search."""

from ._core import (
    Code,
    Error,
    NotInCode,
    SearchResult,
    VerificationReport,
    build,
    compress,
    decode_1sk,
    decode_2sk,
    decode_2sk_complete,
    decompress,
    encode_1sk,
    encode_2sk,
    encode_2sk_complete,
    parse_listing,
    predicted_size,
    search_base,
    search_complete,
    to_listing,
    verify,
)

__all__ = [
    "Code",
    "Error",
    "NotInCode",
    "SearchResult",
    "VerificationReport",
    "build",
    "compress",
    "decode_1sk",
    "decode_2sk",
    "decode_2sk_complete",
    "decompress",
    "encode_1sk",
    "encode_2sk",
    "encode_2sk_complete",
    "parse_listing",
    "predicted_size",
    "search_base",
    "search_complete",
    "to_listing",
    "verify",
]
