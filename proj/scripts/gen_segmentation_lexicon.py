#!/usr/bin/env python3
"""Regenerates core/data/segmentation_lexicon.tsv from the wordfreq English
"small" list (itself built from Twitter, Wikipedia, subtitles, news and web
text). Pass the path to small_en.msgpack.gz from a wordfreq distribution.

Counts are per-billion-token frequencies: each cB bin i maps to
round(1e9 * 10 ** (-i / 100)). Only [a-z]+ words are kept; single letters
other than "a" and "i" are dropped so the segmenter does not over-split.
"""
import gzip
import re
import struct
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

# Domain words missing from the general-purpose list.
SUPPLEMENT = {"wuhan": 2000, "covid": 5000, "coronavirus": 3000}


def unpack(data):
    pos = 0

    def take(n):
        nonlocal pos
        out = data[pos:pos + n]
        pos += n
        return out

    def read():
        nonlocal pos
        b = data[pos]
        pos += 1
        if b <= 0x7F:
            return b
        if 0x80 <= b <= 0x8F:
            return {read(): read() for _ in range(b & 0x0F)}
        if 0x90 <= b <= 0x9F:
            return [read() for _ in range(b & 0x0F)]
        if 0xA0 <= b <= 0xBF:
            return take(b & 0x1F).decode()
        if b == 0xC0:
            return None
        if b in (0xC2, 0xC3):
            return b == 0xC3
        if b == 0xCC:
            return take(1)[0]
        if b == 0xCD:
            return struct.unpack(">H", take(2))[0]
        if b == 0xD9:
            return take(take(1)[0]).decode()
        if b == 0xDA:
            return take(struct.unpack(">H", take(2))[0]).decode()
        if b == 0xDC:
            return [read() for _ in range(struct.unpack(">H", take(2))[0])]
        if b == 0xDD:
            return [read() for _ in range(struct.unpack(">I", take(4))[0])]
        if b == 0xDE:
            return {read(): read() for _ in range(struct.unpack(">H", take(2))[0])}
        raise ValueError(f"unsupported msgpack byte 0x{b:02x}")

    return read()


def main():
    bins = unpack(gzip.open(sys.argv[1]).read())[1:]
    counts = {}
    for i, words in enumerate(bins):
        c = round(1e9 * 10 ** (-i / 100))
        for w in words:
            if not re.fullmatch(r"[a-z]+", w):
                continue
            if len(w) == 1 and w not in ("a", "i"):
                continue
            counts.setdefault(w, c)
    for w, c in SUPPLEMENT.items():
        counts[w] = max(counts.get(w, 0), c)
    out = ROOT / "core" / "data" / "segmentation_lexicon.tsv"
    with out.open("w", encoding="utf-8", newline="\n") as f:
        f.write("# Unigram counts (per billion tokens) for hashtag segmentation.\n")
        f.write("# Format: word<TAB>count. Derived from the wordfreq English small list.\n")
        f.write("# Generated by scripts/gen_segmentation_lexicon.py\n")
        for w, c in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
            f.write(f"{w}\t{c}\n")
    print(f"{len(counts)} words", file=sys.stderr)


if __name__ == "__main__":
    main()
