#!/usr/bin/env python3
"""Recompute the CRC32 checksums recorded in data/pairs.json after editing it."""
import json
import pathlib
import sys
import zlib


def crc(obj):
    dumped = json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return "%08x" % (zlib.crc32(dumped.encode()) & 0xFFFFFFFF)


path = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "data" / "pairs.json")
doc = json.loads(path.read_text())
out = {
    "format_version": doc["format_version"],
    "checksum": crc(doc["families"]),
    "record_checksums": {f["id"]: crc(f) for f in doc["families"]},
    "families": doc["families"],
}
path.write_text(json.dumps(out, indent=2, ensure_ascii=False) + "\n")
print(out["checksum"])
