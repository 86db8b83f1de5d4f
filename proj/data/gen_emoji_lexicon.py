#!/usr/bin/env python3
"""Build the bundled emoji lexicon TSVs from a Unicode emoji-test.txt file.

Usage: gen_emoji_lexicon.py <emoji-test.txt> <out-dir>

Writes two files:
  emoji_lexicon.tsv       skin tones folded, variation selectors stripped
  emoji_lexicon_full.tsv  skin tones kept, variation selectors stripped

Only fully-qualified rows are used. Rows are kept in CLDR order; when several
rows collapse onto one canonical sequence, the first (base) row wins.
"""
import re
import sys

SKIN_TONES = set(range(0x1F3FB, 0x1F400))
VS16 = 0xFE0F


def slug(text):
    return re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-")


def group_of(name, unicode_group):
    words = set(re.split(r"[\s\-:,]+", name.lower()))
    if "face" in words:
        return "face"
    if "heart" in words or "hearts" in words:
        return "heart"
    return slug(unicode_group)


def keywords_of(name, subgroup):
    kws = []
    for w in re.split(r"[\s\-]+", subgroup.lower()):
        if w and w not in kws and w not in name.lower().split():
            kws.append(w)
    return kws


def canonical(cps, fold):
    out = [c for c in cps if c != VS16]
    if fold:
        out = [c for c in out if c not in SKIN_TONES]
    return out


def build(path, fold):
    group = subgroup = ""
    seen = set()
    rows = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.rstrip("\n")
            if line.startswith("# group:"):
                group = line.split(":", 1)[1].strip()
                continue
            if line.startswith("# subgroup:"):
                subgroup = line.split(":", 1)[1].strip()
                continue
            if not line or line.startswith("#"):
                continue
            m = re.match(r"^([0-9A-F ]+?)\s*;\s*(\S+)\s*#\s*\S+\s+E\d+\.\d+\s+(.*)$", line)
            if not m or m.group(2) != "fully-qualified":
                continue
            cps = [int(x, 16) for x in m.group(1).split()]
            name = m.group(3).strip()
            base_name = name
            if fold and ":" in name and "skin tone" in name.split(":", 1)[1]:
                base_name = name.split(":", 1)[0].strip()
            seq = tuple(canonical(cps, fold))
            if not seq or seq in seen:
                continue
            seen.add(seq)
            rows.append((seq, base_name.replace("\t", " "), keywords_of(base_name, subgroup),
                         group_of(base_name, group)))
    return rows


def write(rows, path, fold):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("#policy fold_skin_tones=%s strip_vs=true\n" % ("true" if fold else "false"))
        for seq, name, kws, grp in rows:
            f.write("%s\t%s\t%s\t%s\n" % (" ".join("%04X" % c for c in seq), name, ",".join(kws), grp))


def main():
    src, out = sys.argv[1], sys.argv[2]
    folded = build(src, True)
    write(folded, out + "/emoji_lexicon.tsv", True)
    full = build(src, False)
    write(full, out + "/emoji_lexicon_full.tsv", False)
    print("folded: %d entries, full: %d entries" % (len(folded), len(full)))


if __name__ == "__main__":
    main()
