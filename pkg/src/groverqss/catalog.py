"""The 64-entry initial-state catalog and the published result tables.

The catalog ordering is irregular (there is no closed-form rule), so it is
embedded verbatim and also shipped as ``data/catalog.txt`` for auditing.
Reference copies of the published tables are embedded for diffing; the
build never silently trusts them, disagreements are reported as findings.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from importlib import resources

from .grover import argmax_labels, collective_op, decode_phase1, decode_phase2, encode
from .statevec import EigenAxis, StateVector, eigen_vector, tensor

# One line per k: "k axis1 axis2 axis3".  k=1 is (+,+,+), k=64 is (-i,-,-i).
_CATALOG_TEXT = """\
1 + + +
2 + + -
3 - + +
4 + - +
5 + - -
6 - + -
7 - - +
8 - - -
9 +i +i +i
10 +i +i -i
11 -i +i +i
12 +i -i +i
13 +i -i -i
14 -i +i -i
15 -i -i +i
16 -i -i -i
17 + + +i
18 + + -i
19 - - +i
20 - - -i
21 + - +i
22 + - -i
23 + +i -
24 + -i -
25 - + +i
26 - + -i
27 - +i +
28 - -i +
29 +i + +i
30 +i - +
31 -i + -
32 -i - +
33 +i +i +
34 +i +i -
35 -i -i +
36 -i -i -
37 + +i -i
38 + -i +i
39 - +i -i
40 - -i +i
41 +i + -i
42 +i - -i
43 +i -i +
44 +i -i -
45 -i + +i
46 -i - +i
47 -i +i +
48 -i +i -
49 + +i +i
50 + +i +
51 + -i -i
52 + -i +
53 - +i +i
54 - +i -
55 - -i -i
56 - -i -
57 +i + +
58 +i + -
59 +i - -
60 +i - +i
61 -i + +
62 -i + -i
63 -i - -
64 -i - -i
"""

#: Marked states carrying secret shares.
MESSAGE_MARKS = frozenset({"110", "011", "101"})
#: Marked states used only to expose tampering.
CHEAT_DETECT_MARKS = frozenset({"000", "001", "010", "100", "111"})

#: Rows of the published first table whose mark choice deviates from the
#: lexicographic tie-break (the publication never states its rule).
PUBLISHED_M_OVERRIDES = {7: "001", 8: "011"}


@dataclass(frozen=True)
class InitialStateSpec:
    """Catalog entry: index k and the ordered eigenstate triple."""

    k: int
    axes: tuple[EigenAxis, EigenAxis, EigenAxis]


@dataclass(frozen=True)
class MarkedStateSets:
    """Partition of the 8 basis labels into message and cheat-detect marks."""

    message: frozenset[str] = MESSAGE_MARKS
    cheat_detect: frozenset[str] = CHEAT_DETECT_MARKS

    def __post_init__(self):
        if self.message & self.cheat_detect:
            raise ValueError("message and cheat-detect sets overlap")
        if self.message | self.cheat_detect != frozenset(
            format(i, "03b") for i in range(8)
        ):
            raise ValueError("message and cheat-detect sets must cover all 8 labels")


def _parse_catalog(text: str) -> tuple[InitialStateSpec, ...]:
    specs = []
    for line in text.strip().splitlines():
        k, *syms = line.split()
        axes = tuple(EigenAxis(s) for s in syms)
        specs.append(InitialStateSpec(int(k), axes))
    if len(specs) != 64 or {s.k for s in specs} != set(range(1, 65)):
        raise ValueError("catalog must contain k = 1..64")
    if len({s.axes for s in specs}) != 64:
        raise ValueError("catalog axis triples must be distinct")
    return tuple(specs)


CATALOG: tuple[InitialStateSpec, ...] = _parse_catalog(_CATALOG_TEXT)


def catalog_entry(k: int) -> InitialStateSpec:
    if not 1 <= k <= 64:
        raise ValueError(f"catalog index k must be 1..64, got {k}")
    return CATALOG[k - 1]


def build_state(spec: InitialStateSpec) -> StateVector:
    """Three-qubit product state for a catalog entry."""
    a, b, c = (eigen_vector(ax) for ax in spec.axes)
    return tensor(tensor(a, b), c)


def initial_state(k: int) -> StateVector:
    return build_state(catalog_entry(k))


def load_catalog_file() -> tuple[InitialStateSpec, ...]:
    """Parse the shipped data file; must agree with the embedded catalog."""
    text = resources.files("groverqss").joinpath("data/catalog.txt").read_text()
    return _parse_catalog(text)


def round3(x: float) -> float:
    """Half-up rounding to 3 decimals, matching the published table style."""
    return float(Decimal(repr(float(x))).quantize(Decimal("0.001"), ROUND_HALF_UP))


@dataclass(frozen=True)
class TableRow:
    """One row of a generated or published result table.

    Phase-1 fields are None for rows of the second table, which only lists
    the final outcome sets of the full pipeline with a forced mark.
    """

    k: int
    phase1_outcomes: frozenset[str] | None
    phase1_prob: float | None
    chosen_M: str | None
    final_outcomes: frozenset[str]
    final_prob: float


def generate_table1(
    enc_k: int = 1,
    m: str = "110",
    overrides: dict[int, str] | None = None,
) -> list[TableRow]:
    """Decode the encoded state with every catalog state and tabulate.

    ``overrides`` forces the intermediate mark on specific rows; for the
    published configuration (enc_k=1, m="110") it defaults to the two rows
    where the publication deviates from the lexicographic tie-break.
    """
    if overrides is None:
        overrides = PUBLISHED_M_OVERRIDES if (enc_k, m) == (1, "110") else {}
    encoded = encode(initial_state(enc_k), m)
    rows = []
    for k in range(1, 65):
        sk = initial_state(k)
        p1 = decode_phase1(encoded, sk, choose=overrides.get(k))
        _, fdist = decode_phase2(p1.state, p1.chosen_M, sk)
        fset = argmax_labels(fdist, 3)
        rows.append(
            TableRow(
                k=k,
                phase1_outcomes=p1.argmax_set,
                phase1_prob=round3(p1.max_prob),
                chosen_M=p1.chosen_M,
                final_outcomes=frozenset(fset),
                final_prob=round3(float(fdist.max())),
            )
        )
    return rows


def generate_table2(enc_k: int = 1, m: str = "110", M: str = "110") -> list[TableRow]:
    """Full pipeline for every catalog state with a forced intermediate mark."""
    encoded = encode(initial_state(enc_k), m)
    rows = []
    for k in range(1, 65):
        sk = initial_state(k)
        p1 = decode_phase1(encoded, sk)
        _, fdist = decode_phase2(p1.state, M, sk)
        fset = argmax_labels(fdist, 3)
        rows.append(
            TableRow(
                k=k,
                phase1_outcomes=None,
                phase1_prob=None,
                chosen_M=M,
                final_outcomes=frozenset(fset),
                final_prob=round3(float(fdist.max())),
            )
        )
    return rows


# Published tables, embedded verbatim for diffing.  Table 1 columns:
# k | phase-1 outcomes | P | M | final outcomes | P.  Table 2: k | outcomes | P.
_PUBLISHED_TABLE1_TEXT = """\
1|110|0.781|110|110|0.945
2|000,010,100|0.281|000|010,100|0.383
3|100,101,111|0.281|100|101,111|0.383
4|010,011,111|0.281|010|011,111|0.383
5|001,010,101|0.281|001|010,101|0.383
6|001,011,100|0.281|001|011,100|0.383
7|000,001,111|0.281|001|000,111|0.383
8|000,011,101|0.281|011|000,101|0.383
9|111|0.281|111|000,011,101,110,111|0.195
10|001|0.406|001|001|0.477
11|100|0.281|100|000,011,100,101,110|0.195
12|010|0.281|010|000,010,011,101,110|0.195
13|100|0.281|100|000,011,100,101,110|0.195
14|010|0.281|010|000,010,011,101,110|0.195
15|001|0.406|001|001|0.477
16|111|0.281|111|000,011,101,110,111|0.195
17|110|0.406|110|110|0.477
18|110|0.406|110|110|0.477
19|000|0.281|000|000,001,011,101,111|0.195
20|000|0.281|000|000,001,011,101,111|0.195
21|010|0.281|010|001,010,011,101,111|0.195
22|010|0.281|010|001,010,011,101,111|0.195
23|010|0.281|010|000,001,010,100,101|0.195
24|010|0.281|010|000,001,010,100,101|0.195
25|100|0.281|100|001,011,100,101,111|0.195
26|100|0.281|100|001,011,100,101,111|0.195
27|111|0.281|111|000,001,100,101,111|0.195
28|111|0.281|111|000,001,100,101,111|0.195
29|110|0.281|110|000,010,101,110,111|0.195
30|111|0.281|111|000,001,010,011,111|0.195
31|100|0.281|100|000,001,010,011,100|0.195
32|111|0.281|111|000,001,010,011,111|0.195
33|111|0.406|111|111|0.477
34|001|0.281|001|001,010,011,100,101|0.195
35|111|0.406|111|111|0.477
36|001|0.281|001|001,010,011,100,101|0.195
37|010|0.406|010|010|0.477
38|010|0.406|010|010|0.477
39|001|0.281|001|000,001,011,100,111|0.195
40|001|0.281|001|000,001,011,100,111|0.195
41|100|0.406|100|100|0.477
42|001|0.281|001|000,001,010,101,111|0.195
43|110|0.281|110|010,011,100,101,110|0.195
44|000|0.281|000|000,010,011,100,101|0.195
45|100|0.406|100|100|0.477
46|001|0.281|001|000,001,010,101,111|0.195
47|110|0.281|110|010,011,100,101,110|0.195
48|000|0.281|000|000,010,011,100,101|0.195
49|110|0.281|110|000,011,100,110,111|0.195
50|110|0.406|110|110|0.477
51|110|0.281|110|000,011,100,110,111|0.195
52|110|0.406|110|110|0.477
53|101|0.281|101|000,011,100,101,111|0.195
54|011|0.281|011|000,001,011,100,101|0.195
55|101|0.281|101|000,011,100,101,111|0.195
56|011|0.281|011|000,001,011,100,101|0.195
57|110|0.406|110|110|0.477
58|100|0.281|100|000,001,010,011,100|0.195
59|101|0.281|101|000,001,010,011,101|0.195
60|011|0.281|011|000,010,011,101,111|0.195
61|110|0.406|110|110|0.477
62|110|0.281|110|000,010,101,110,111|0.195
63|101|0.281|101|000,001,010,011,101|0.195
64|011|0.281|011|000,010,011,101,111|0.195
"""

_PUBLISHED_TABLE2_TEXT = """\
1|110|0.945
2|001,011,101,111|0.195
3|000,001,010,011|0.195
4|000,001,100,101|0.195
5|000,011,100,111|0.195
6|000,010,101,111|0.195
7|010,011,100,101|0.195
8|001,010,100,111|0.195
9|000|0.289
10|001,110|0.195
11|011|0.289
12|101|0.289
13|011|0.289
14|101|0.289
15|001,110|0.195
16|000|0.289
17|110|0.477
18|110|0.477
19|010,100|0.195
20|010,100|0.195
21|000,100|0.195
22|000,100|0.195
23|011,111|0.195
24|011,111|0.195
25|000,010|0.195
26|000,010|0.195
27|010,011|0.195
28|010,011|0.195
29|000,010,101,110,111|0.195
30|100,101|0.195
31|101,111|0.195
32|100,101|0.195
33|110|0.289
34|000,111|0.195
35|110|0.289
36|000,111|0.195
37|110|0.289
38|110|0.289
39|010,101|0.195
40|010,101|0.195
41|110|0.289
42|011,100|0.195
43|010,011,100,101,110|0.195
44|001,111|0.195
45|110|0.289
46|011,101|0.195
47|010,011,100,101,110|0.195
48|001,111|0.195
49|000,011,100,110,111|0.195
50|110|0.477
51|000,011,100,110,111|0.195
52|110|0.477
53|001,010|0.195
54|010,111|0.195
55|001,010|0.195
56|010,111|0.195
57|110|0.477
58|101,111|0.195
59|100,111|0.195
60|001,100|0.195
61|110|0.477
62|000,010,101,110,111|0.195
63|100,111|0.195
64|001,100|0.195
"""


def published_table1() -> list[TableRow]:
    rows = []
    for line in _PUBLISHED_TABLE1_TEXT.strip().splitlines():
        k, p1set, p1, m, fset, fp = line.split("|")
        rows.append(
            TableRow(
                k=int(k),
                phase1_outcomes=frozenset(p1set.split(",")),
                phase1_prob=float(p1),
                chosen_M=m,
                final_outcomes=frozenset(fset.split(",")),
                final_prob=float(fp),
            )
        )
    return rows


def published_table2() -> list[TableRow]:
    rows = []
    for line in _PUBLISHED_TABLE2_TEXT.strip().splitlines():
        k, fset, fp = line.split("|")
        rows.append(
            TableRow(
                k=int(k),
                phase1_outcomes=None,
                phase1_prob=None,
                chosen_M=None,
                final_outcomes=frozenset(fset.split(",")),
                final_prob=float(fp),
            )
        )
    return rows


def diff_table(computed: list[TableRow], reference: list[TableRow]) -> list[dict]:
    """Rows where the two tables disagree, field by field.

    An empty diff means exact reproduction.  Non-empty entries are findings
    (published tables may contain typos), not assertion failures.
    """
    if len(computed) != len(reference):
        raise ValueError("tables have different lengths")
    diffs = []
    for got, ref in zip(computed, reference):
        fields = {}
        for name in ("phase1_outcomes", "phase1_prob", "chosen_M", "final_outcomes", "final_prob"):
            g, r = getattr(got, name), getattr(ref, name)
            if r is None:
                continue
            if g != r:
                fields[name] = {"computed": _plain(g), "reference": _plain(r)}
        if fields:
            diffs.append({"k": got.k, "fields": fields})
    return diffs


def _plain(value):
    if isinstance(value, frozenset):
        return sorted(value)
    return value


def _row_dict(row: TableRow) -> dict:
    return {
        "k": row.k,
        "phase1_outcomes": sorted(row.phase1_outcomes) if row.phase1_outcomes else None,
        "phase1_p": row.phase1_prob,
        "M": row.chosen_M,
        "final_outcomes": sorted(row.final_outcomes),
        "final_p": row.final_prob,
    }


def render_table(rows: list[TableRow], fmt: str) -> str:
    """Serialize table rows as csv, json or aligned markdown."""
    dicts = [_row_dict(r) for r in rows]
    if fmt == "json":
        return json.dumps(dicts, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "phase1_outcomes", "phase1_p", "M", "final_outcomes", "final_p"])
        for d in dicts:
            writer.writerow(
                [
                    d["k"],
                    " ".join(d["phase1_outcomes"]) if d["phase1_outcomes"] else "",
                    "" if d["phase1_p"] is None else f"{d['phase1_p']:.3f}",
                    d["M"] or "",
                    " ".join(d["final_outcomes"]),
                    f"{d['final_p']:.3f}",
                ]
            )
        return buf.getvalue()
    if fmt == "markdown":
        headers = ["k", "phase1_outcomes", "phase1_p", "M", "final_outcomes", "final_p"]
        cells = [
            [
                str(d["k"]),
                " ".join(d["phase1_outcomes"]) if d["phase1_outcomes"] else "-",
                "-" if d["phase1_p"] is None else f"{d['phase1_p']:.3f}",
                d["M"] or "-",
                " ".join(d["final_outcomes"]),
                f"{d['final_p']:.3f}",
            ]
            for d in dicts
        ]
        widths = [max(len(h), *(len(row[i]) for row in cells)) for i, h in enumerate(headers)]
        lines = [
            "| " + " | ".join(h.ljust(w) for h, w in zip(headers, widths)) + " |",
            "| " + " | ".join("-" * w for w in widths) + " |",
        ]
        for row in cells:
            lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
