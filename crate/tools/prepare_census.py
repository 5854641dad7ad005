#!/usr/bin/env python3
"""Prepare the bundled knot-census CSV files from a KnotInfo database export.

Input: the pipe-separated ``knotinfo_data_complete.csv`` shipped with the
``database_knotinfo`` PyPI package (https://pypi.org/project/database-knotinfo/,
data CC-BY 4.0, courtesy of C. Livingston and A. H. Moore, KnotInfo).

Output: two comma-separated files under data/:

  knotinfo_le11.csv             all tabulated prime knots with <= 11 crossings
                                (including the unknot 0_1), 802 rows
  knotinfo_alternating_le11.csv the alternating subset, 564 rows

Columns keep their KnotInfo names where the data is taken verbatim.  One
derived column is added:

  lspace_cover  'Y' when the branched double cover is certified an L-space by
                catalog data: the knot is alternating or quasi-alternating
                (Ozsvath-Szabo), or it is one of 8_19, 10_124 (covers are
                elliptic Brieskorn spheres Sigma(2,3,4), Sigma(2,3,5)) or
                9_46, 10_140 (Khovanov-thin over Z/2, Greene).  Blank means
                "no certificate", not "known non-L-space".

Two cleanups are applied to the unknot row 0_1, whose KnotInfo entry uses
placeholder values: determinant 0 -> 1 (= |Delta(-1)|) and fibered '' -> 'Y'
(the unknot fibers with disk fiber).

Usage: prepare_census.py /path/to/knotinfo_data_complete.csv [outdir]
"""

import csv
import sys
from pathlib import Path

OUT_COLUMNS = [
    "name",
    "crossing_number",
    "alternating",
    "three_genus",
    "bridge_index",
    "fibered",
    "determinant",
    "alexander_polynomial",
    "seifert_matrix",
    "quasi_alternating",
    "positive",
    "lspace_cover",
]

# Non-quasi-alternating knots with <= 11 crossings whose branched double
# cover is nevertheless known to be an L-space (see module docstring).
EXTRA_LSPACE = {"8_19", "9_46", "10_124", "10_140"}


def prepare(source: Path, outdir: Path) -> None:
    with source.open(newline="") as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        idx = {c: i for i, c in enumerate(header)}
        rows = []
        for row in reader:
            try:
                crossings = int(row[idx["crossing_number"]])
            except ValueError:
                continue  # the second header line carries display names
            if crossings > 11:
                continue
            rows.append(row)

    def field(row, col):
        return row[idx[col]].strip()

    prepared = []
    for row in rows:
        name = field(row, "name")
        out = {c: field(row, c) for c in OUT_COLUMNS if c != "lspace_cover"}
        if name == "0_1":
            out["determinant"] = "1"
            out["fibered"] = "Y"
        cover = (
            out["alternating"] == "Y"
            or out["quasi_alternating"] == "Y"
            or name in EXTRA_LSPACE
        )
        out["lspace_cover"] = "Y" if cover else ""
        prepared.append(out)

    prepared.sort(key=lambda r: (int(r["crossing_number"]), r["name"]))

    outdir.mkdir(parents=True, exist_ok=True)
    targets = [
        (outdir / "knotinfo_le11.csv", prepared),
        (
            outdir / "knotinfo_alternating_le11.csv",
            [r for r in prepared if r["alternating"] == "Y"],
        ),
    ]
    for path, subset in targets:
        with path.open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=OUT_COLUMNS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(subset)
        print(f"wrote {path} ({len(subset)} rows)")


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    src = Path(sys.argv[1])
    out = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(__file__).parent.parent / "data"
    prepare(src, out)
