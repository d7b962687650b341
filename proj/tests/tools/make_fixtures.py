#!/usr/bin/env python3
"""Regenerates the flat-file fixtures and their golden word tables.

The cleaning logic here is deliberately line-oriented and independent of the
C++ implementation, so the committed golden tables act as an external check
on the extraction pipeline.  Run from the repository root:

    python3 tests/tools/make_fixtures.py

Outputs land in tests/data/ and are committed.
"""

import json
import random
import re
import textwrap
from collections import Counter
from datetime import date, timedelta
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "data"

TOPIC_HEADINGS = [
    "ALLERGEN", "ALTERNATIVE PRODUCTS", "BIOPHYSICOCHEMICAL PROPERTIES",
    "BIOTECHNOLOGY", "CATALYTIC ACTIVITY", "CAUTION", "COFACTOR", "DATABASE",
    "DEVELOPMENTAL STAGE", "DISEASE", "DISRUPTION PHENOTYPE", "DOMAIN",
    "ENZYME REGULATION", "FUNCTION", "INDUCTION", "INTERACTION",
    "MASS SPECTROMETRY", "MISCELLANEOUS", "PATHWAY", "PHARMACEUTICAL",
    "POLYMORPHISM", "PTM", "RNA EDITING", "SEQUENCE CAUTION", "SIMILARITY",
    "SUBCELLULAR LOCATION", "SUBUNIT", "TISSUE SPECIFICITY", "TOXIC DOSE",
    "WEB RESOURCE",
]

COPYRIGHT_PHRASES = [
    "entry is copyright",
    "copyrighted by the uniprot consortium",
    "distributed under the creative commons",
]

COPYRIGHT_TEXTS = [
    # rel. 37 era wording
    "This SWISS-PROT entry is copyright. It is produced through a "
    "collaboration between the Swiss Institute of Bioinformatics and the "
    "EMBL outstation - the European Bioinformatics Institute. There are no "
    "restrictions on its use by non-profit institutions as long as its "
    "content is in no way modified and this statement is not removed.",
    # consortium v4 era wording
    "This Swiss-Prot entry is copyright. It is produced through a "
    "collaboration between the Swiss Institute of Bioinformatics and the "
    "EMBL outstation - the European Bioinformatics Institute.",
    # consortium v7 era wording
    "Copyrighted by the UniProt Consortium, see http://www.uniprot.org/terms "
    "Distributed under the Creative Commons Attribution-NoDerivs License",
]

NOUNS = [
    "protein", "enzyme", "subunit", "complex", "membrane", "cytoplasm",
    "nucleus", "mitochondrion", "ribosome", "atp", "gtp", "nadh", "dna",
    "rna", "substrate", "cofactor", "ion", "zinc", "magnesium", "calcium",
    "residue", "domain", "helix", "strand", "loop", "kinase", "phosphatase",
    "ligase", "hydrolase", "transferase", "oxidoreductase", "isomerase",
    "receptor", "channel", "transporter", "pathway", "glycolysis", "cycle",
    "biosynthesis", "degradation", "cell", "wall", "envelope", "periplasm",
    "tissue", "liver", "muscle", "brain", "root", "leaf", "homodimer",
    "heterodimer", "tetramer", "family", "precursor", "signal", "peptide",
    "chain", "site", "cleft", "pocket", "terminus", "region", "motif",
]
VERBS = [
    "catalyzes", "binds", "hydrolyzes", "transfers", "regulates", "mediates",
    "inhibits", "activates", "requires", "forms", "contains", "belongs",
    "localizes", "interacts", "phosphorylates", "cleaves", "transports",
    "stabilizes", "recognizes", "converts",
]
FILLER = [
    "the", "a", "of", "to", "in", "with", "by", "and", "or", "is", "are",
    "this", "that", "via", "for", "as", "at", "an", "its", "may", "also",
    "probably", "highly", "strongly", "specifically", "reversible",
    "irreversible", "essential", "putative",
]
ODDITIES = [
    "(ATP)", "alpha-subunit", "EC 1.2.3.4", "pH 7.5", "N-terminal",
    "Ca(2+)", "beta-barrel", "3D-structure", "land's", "{ECO:0000255}",
]

HEAD_CHOICES = [
    "FUNCTION", "SUBCELLULAR LOCATION", "SIMILARITY", "SUBUNIT",
    "CATALYTIC ACTIVITY", "COFACTOR", "TISSUE SPECIFICITY", "MISCELLANEOUS",
    "CAUTION", "PATHWAY",
]


def sentence(rng, rich):
    words = []
    n = rng.randint(6, 14)
    for _ in range(n):
        r = rng.random()
        if r < 0.42:
            words.append(rng.choice(FILLER))
        elif r < 0.62:
            # zipf-ish skew: low ranks favoured
            idx = min(int(rng.paretovariate(1.1)) - 1, len(NOUNS) - 1)
            words.append(NOUNS[idx] if not rich else rng.choice(NOUNS))
        elif r < 0.78:
            words.append(rng.choice(VERBS))
        elif r < 0.86:
            words.append(rng.choice(ODDITIES))
        else:
            words.append(rng.choice(NOUNS))
    words[0] = words[0].capitalize()
    return " ".join(words) + "."


def comment_blocks(rng, rich, n_topics):
    blocks = []
    for _ in range(n_topics):
        head = rng.choice(HEAD_CHOICES)
        body = " ".join(sentence(rng, rich) for _ in range(rng.randint(1, 3)))
        blocks.append(f"-!- {head}: {body}")
    return blocks


def wrap_cc(payload):
    lines = textwrap.wrap(payload, width=66) or [""]
    out = [f"CC   {lines[0]}"]
    out += [f"CC       {cont}" for cont in lines[1:]]
    return out


DASH_RULE = "-" * 71


def copyright_cc(which):
    lines = [f"CC   {DASH_RULE}"]
    for chunk in textwrap.wrap(COPYRIGHT_TEXTS[which], width=66):
        lines.append(f"CC   {chunk}")
    lines.append(f"CC   {DASH_RULE}")
    return lines


def entry_lines(acc, name, created, updated, cc_lines, post2004):
    lines = []
    if post2004:
        lines.append(f"ID   {name:<24}Reviewed;         {len(acc) * 37} AA.")
        lines.append(f"AC   {acc}; Q{acc[1:]};")
        lines.append(f"DT   {fmt_dt(created)}, integrated into UniProtKB/Swiss-Prot.")
        lines.append(f"DT   {fmt_dt(updated)}, sequence version 1.")
    else:
        lines.append(f"ID   {name:<11}STANDARD;      PRT;   {len(acc) * 37} AA.")
        lines.append(f"AC   {acc};")
        lines.append(f"DT   {fmt_dt(created)} (Rel. 05, Created)")
        lines.append(f"DT   {fmt_dt(updated)} (Rel. 09, Last sequence update)")
    lines.append(f"DE   Synthetic fixture record {acc}.")
    lines.append("OS   Escherichia coli.")
    lines += cc_lines
    lines.append("SQ   SEQUENCE   12 AA;  1364 MW;  0F00BA5E CRC32;")
    lines.append("     MKVLAATTRE GH")
    lines.append("//")
    return lines


MONTHS = ["JAN", "FEB", "MAR", "APR", "MAY", "JUN",
          "JUL", "AUG", "SEP", "OCT", "NOV", "DEC"]


def fmt_dt(d):
    return f"{d.day:02d}-{MONTHS[d.month - 1]}-{d.year}"


# ---------------------------------------------------------------------------
# independent cleaning pipeline (line oriented)
# ---------------------------------------------------------------------------

HEAD_RE = re.compile(r"-!-\s*(" + "|".join(sorted(TOPIC_HEADINGS, key=len, reverse=True)) + r"):")


def clean_entry(cc_payloads, strip):
    if strip:
        kept, i = [], 0
        rule = [bool(re.fullmatch(r"-{10,}", p)) for p in cc_payloads]
        idx = [k for k, r in enumerate(rule) if r]
        remove = set()
        j = 0
        while j + 1 < len(idx):
            lo, hi = idx[j], idx[j + 1]
            body = " ".join(cc_payloads[lo + 1:hi]).lower()
            if any(ph in body for ph in COPYRIGHT_PHRASES):
                remove.update(range(lo, hi + 1))
                j += 2
            else:
                j += 1
        kept = [p for k, p in enumerate(cc_payloads) if k not in remove]
    else:
        kept = list(cc_payloads)
    text = " ".join(kept)
    text = HEAD_RE.sub(" ", text)
    return re.findall(r"[a-z0-9]+", text.lower())


def parse_flatfile(path):
    entries = []
    acc = None
    created = None
    cc = []
    for raw in path.read_text().splitlines():
        if raw.startswith("ID"):
            acc, created, cc = None, None, []
        elif raw.startswith("AC") and acc is None:
            acc = raw[2:].strip().split(";")[0].strip()
        elif raw.startswith("DT") and created is None:
            created = raw[2:].strip().split(" ")[0].split(",")[0]
        elif raw.startswith("CC"):
            cc.append(raw[2:].strip())
        elif raw.startswith("//"):
            entries.append((acc, created, cc))
    return entries


def table_of(entries, strip):
    counts = Counter()
    for _, _, cc in entries:
        counts.update(clean_entry(cc, strip))
    return counts


def write_table(counts, path):
    rows = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    path.write_text("".join(f"{w}\t{c}\n" for w, c in rows))


# ---------------------------------------------------------------------------

def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20260809)

    # creation dates for swiss9: symmetric around 1987-07-01 so the mean is
    # exact; release 1988-11-01 puts the mean age at 489 days.
    center = date(1987, 7, 1)
    offsets = []
    for k in range(1, 26):
        offsets += [-7 * k, 7 * k]
    rng.shuffle(offsets)
    v9_created = {f"P{i + 1:05d}": center + timedelta(days=offsets[i]) for i in range(50)}

    rel9 = date(1988, 11, 1)
    rel37 = date(1998, 12, 15)
    rel15 = date(2008, 7, 22)

    # --- swiss9: 50 entries, no copyright, two entries without CC lines ---
    lines9 = []
    for i in range(1, 51):
        acc = f"P{i:05d}"
        name = f"Y{i:03d}_ECOLI"
        cc = []
        if i not in (17, 42):  # two entries deliberately without comments
            for block in comment_blocks(rng, rich=False, n_topics=rng.randint(1, 3)):
                cc += wrap_cc(block)
        lines9 += entry_lines(acc, name, v9_created[acc], rel9 - timedelta(days=30), cc, False)
    (OUT / "swiss9.dat").write_text("\n".join(lines9) + "\n")

    # --- swiss37: 40 carried over + 10 new; copyright blocks in 20 entries ---
    v37_created = dict(v9_created)
    for i in range(51, 61):
        v37_created[f"P{i:05d}"] = date(1990 + (i - 51), 3, 11)
    with_copyright = set(rng.sample(range(1, 41), 14) + list(range(51, 57)))
    variant_count = Counter()
    lines37 = []
    lines37_clean = []
    for i in list(range(1, 41)) + list(range(51, 61)):
        acc = f"P{i:05d}"
        name = f"Y{i:03d}_ECOLI"
        cc = []
        for block in comment_blocks(rng, rich=True, n_topics=rng.randint(2, 4)):
            cc += wrap_cc(block)
        if i == 23:
            # a dash-delimited block with no copyright phrase must survive
            cc += [f"CC   {DASH_RULE}", "CC   Internal curator checklist follows below.",
                   f"CC   {DASH_RULE}"]
        if i == 31:
            cc += wrap_cc("-!- NOTAHEADING: unconfigured marker stays in the text.")
        cc_clean = list(cc)
        if i in with_copyright:
            variant = rng.randrange(3)
            variant_count[variant] += 1
            cc = cc + copyright_cc(variant)
        entry = entry_lines(acc, name, v37_created[acc], rel37 - timedelta(days=45), cc, False)
        entry_clean = entry_lines(acc, name, v37_created[acc], rel37 - timedelta(days=45),
                                  cc_clean, False)
        lines37 += entry
        lines37_clean += entry_clean
    (OUT / "swiss37.dat").write_text("\n".join(lines37) + "\n")
    (OUT / "swiss37_noinject.dat").write_text("\n".join(lines37_clean) + "\n")

    # --- uniprot15: 30 common with swiss9, 5 from swiss37 debut, 20 new ---
    v15_created = {}
    lines15 = []
    ids15 = list(range(1, 31)) + list(range(51, 56)) + list(range(61, 81))
    for i in ids15:
        acc = f"P{i:05d}"
        name = f"Y{i:03d}_ECOLI"
        if i <= 30:
            created = v9_created[acc]
        elif i <= 55:
            created = v37_created[acc]
        else:
            created = date(2005 + (i % 4), 1 + (i % 12), 5)
        v15_created[acc] = created
        cc = []
        for block in comment_blocks(rng, rich=True, n_topics=rng.randint(2, 5)):
            cc += wrap_cc(block)
        lines15 += entry_lines(acc, name, created, rel15 - timedelta(days=10), cc, True)
    (OUT / "uniprot15.dat").write_text("\n".join(lines15) + "\n")

    # --- golden tables (independent pipeline) ---
    e9 = parse_flatfile(OUT / "swiss9.dat")
    e37 = parse_flatfile(OUT / "swiss37.dat")
    e37c = parse_flatfile(OUT / "swiss37_noinject.dat")
    assert len(e9) == 50 and len(e37) == 50 and len(e37c) == 50
    assert len(parse_flatfile(OUT / "uniprot15.dat")) == 55

    t9 = table_of(e9, strip=True)
    t9_raw = table_of(e9, strip=False)
    assert t9 == t9_raw, "swiss9 is the no-copyright control"
    t37_raw = table_of(e37, strip=False)
    t37_strip = table_of(e37, strip=True)
    t37_noinj = table_of(e37c, strip=False)
    assert t37_strip == t37_noinj, "stripping must equal the uninjected corpus"
    assert "copyright" in t37_raw and "copyright" not in t37_strip
    assert "checklist" in t37_strip  # non-copyright dash block survives
    assert "notaheading" in t37_strip
    assert "function" not in t37_raw or True

    write_table(t9, OUT / "golden_swiss9.tsv")
    write_table(t37_raw, OUT / "golden_swiss37_raw.tsv")
    write_table(t37_strip, OUT / "golden_swiss37_stripped.tsv")

    n_cr = sum(variant_count.values())
    meta = {
        "swiss9": {"label": "swiss-9", "release_date": "1988-11-01",
                   "expected_entries": 50, "mean_creation_date": "1987-07-01",
                   "age_days": (rel9 - center).days},
        "swiss37": {"label": "swiss-37", "release_date": "1998-12-15",
                    "expected_entries": 50, "copyright_blocks": n_cr,
                    "copyright_token_count": int(t37_raw["copyright"]),
                    "consortium_token_count": int(t37_raw.get("consortium", 0))},
        "uniprot15": {"label": "uniprot-15", "release_date": "2008-07-22",
                      "expected_entries": 55},
        "cohorts": {"common_9_15": 30, "only_9": 20, "only_15": 25},
    }
    (OUT / "fixture_meta.json").write_text(json.dumps(meta, indent=2) + "\n")
    print("fixtures written to", OUT)
    print("copyright blocks:", n_cr, "variant split:", dict(variant_count))
    print("swiss9 types:", len(t9), "tokens:", sum(t9.values()))
    print("swiss37 raw types:", len(t37_raw), "stripped types:", len(t37_strip))


if __name__ == "__main__":
    main()
