#!/usr/bin/env python3
"""Regenerates core/data/char_replacements.tsv and core/src/case_table.inc.

Replacements come from NFKD decomposition restricted to ASCII plus a short
manual table for letters and symbols that do not decompose. Code points with
no simple lowercase mapping are folded to lowercase output so that the
lowercase -> replace sequence never reintroduces uppercase ASCII.
"""
import sys
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

MANUAL = {
    0x2018: "'", 0x2019: "'", 0x201A: "'", 0x201B: "'", 0x2032: "'", 0x2035: "'",
    0x02BC: "'", 0x02B9: "'", 0x0060: None,
    0x201C: '"', 0x201D: '"', 0x201E: '"', 0x201F: '"', 0x2033: '"', 0x2036: '"',
    0x00AB: '"', 0x00BB: '"', 0x2039: "'", 0x203A: "'",
    0x2010: "-", 0x2011: "-", 0x2012: "-", 0x2013: "-", 0x2014: "-", 0x2015: "-",
    0x2212: "-", 0x2043: "-", 0x2022: "-", 0x00B7: "-",
    0x00D7: "x", 0x00F7: "/", 0x2044: "/",
    0x00DF: "ss", 0x1E9E: "SS",
    0x00E6: "ae", 0x00C6: "AE", 0x0153: "oe", 0x0152: "OE",
    0x00F8: "o", 0x00D8: "O", 0x0142: "l", 0x0141: "L",
    0x0111: "d", 0x0110: "D", 0x00F0: "d", 0x00D0: "D",
    0x00FE: "th", 0x00DE: "TH", 0x0131: "i", 0x0127: "h", 0x0126: "H",
    0x0167: "t", 0x0166: "T", 0x014B: "n", 0x014A: "N", 0x0138: "q",
    0x2026: "...", 0x00A0: " ", 0x3000: " ",
    0x2122: "tm", 0x00A9: "(c)", 0x00AE: "(r)",
    0x20AC: "eur", 0x00A3: "gbp", 0x00A5: "yen",
}

RANGES = [
    (0x0080, 0x024F), (0x02B0, 0x02FF), (0x1E00, 0x1EFF), (0x2000, 0x218F),
    (0x2460, 0x24FF), (0x3000, 0x3000), (0xFF01, 0xFF5E), (0x1D400, 0x1D7FF),
]


def simple_lower(cp):
    if cp == 0x0130:
        return 0x69
    low = chr(cp).lower()
    if len(low) == 1 and ord(low) != cp:
        return ord(low)
    return None


def ascii_fold(cp):
    if cp in MANUAL:
        return MANUAL[cp]
    decomposed = unicodedata.normalize("NFKD", chr(cp))
    out = "".join(c for c in decomposed if 0x20 <= ord(c) < 0x7F)
    return out or None


def main():
    case_pairs = []
    for cp in range(0x80, 0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = simple_lower(cp)
        if low is not None:
            case_pairs.append((cp, low))

    cased = {cp for cp, _ in case_pairs}
    table = {}
    for lo, hi in RANGES:
        for cp in range(lo, hi + 1):
            rep = ascii_fold(cp)
            if rep is None:
                continue
            if cp not in cased:
                rep = rep.lower()
            assert all(0x20 <= ord(c) < 0x7F for c in rep), hex(cp)
            table[cp] = rep
    for cp, rep in MANUAL.items():
        if rep is not None and cp not in table:
            table[cp] = rep if cp in cased else rep.lower()

    data = ROOT / "core" / "data" / "char_replacements.tsv"
    with data.open("w", encoding="utf-8", newline="\n") as f:
        f.write("# Non-ASCII code point -> ASCII replacement.\n")
        f.write("# Format: hex code point<TAB>replacement (taken verbatim).\n")
        f.write("# Code points not listed here are deleted.\n")
        f.write("# Generated by scripts/gen_char_table.py\n")
        for cp in sorted(table):
            f.write(f"{cp:04X}\t{table[cp]}\n")

    inc = ROOT / "core" / "src" / "case_table.inc"
    with inc.open("w", encoding="utf-8", newline="\n") as f:
        f.write("// Generated by scripts/gen_char_table.py. Do not edit.\n")
        f.write("// {code point, simple lowercase mapping}, sorted by code point.\n")
        for i in range(0, len(case_pairs), 4):
            chunk = case_pairs[i:i + 4]
            f.write(" ".join(f"{{0x{a:04X}, 0x{b:04X}}}," for a, b in chunk) + "\n")
    print(f"{len(table)} replacements, {len(case_pairs)} case pairs", file=sys.stderr)


if __name__ == "__main__":
    main()
