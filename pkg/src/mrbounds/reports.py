"""Whole-corpus verification and report plumbing.

Everything here treats one graph as one row: compute all parameters, check
the inequality chain between them, and serialize.  Corpus sweeps enumerate
every labeled graph (no isomorphism reduction, by design: redundant but
independently auditable) and recompute each side of every identity with
unrelated algorithms, so an equality in the chain is evidence, not an echo.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .certificates import m_sandwich
from .core import Graph, _component_masks, _edge_count, classify
from .deletion import _delta_values, _t_values, delta, delta_plus, t_minus, t_plus
from .forcing import _z_value, zero_forcing_number
from .pathcover import BRUTE_INDUCED_COVER_MAX_N, induced_path_cover_bruteforce

__all__ = [
    "ParameterReport",
    "REPORT_CSV_HEADER",
    "check_chain",
    "compute_report",
    "emit_report",
    "enumerate_small_graphs",
    "load_reports_csv",
    "load_reports_json",
    "survey_open_questions",
    "verify_chain_corpus",
]

ENUMERATION_MAX_N = 7

REPORT_CSV_HEADER = (
    "graph6,n,m,is_forest,t_minus,delta,p_bruteforce,z,t_plus,delta_plus,"
    "m_lower_numeric,m_exact,chain_ok,"
    "witness_t_minus,witness_t_plus,witness_delta,witness_delta_plus,witness_z"
)

_WITNESS_KEYS = ("t_minus", "t_plus", "delta", "delta_plus", "z")


@dataclass(frozen=True)
class ParameterReport:
    """All computed parameters of one graph, plus the chain verdict.

    ``witnesses`` maps parameter name to a sorted vertex tuple (the deletion
    set, or the forcing set for "z"); may be empty for bulk sweeps.
    ``p_bruteforce`` is the brute-force induced path cover number, absent
    above its size cap; the numeric fields are absent unless requested.
    ``chain_ok`` records t_minus = delta <= z <= t_plus <= delta_plus <= n.
    """

    graph6: str
    n: int
    m: int
    is_forest: bool
    t_minus: int
    delta: int
    z: int
    t_plus: int
    delta_plus: int
    chain_ok: bool
    p_bruteforce: int | None = None
    m_lower_numeric: int | None = None
    m_exact: int | None = None
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "is_forest": self.is_forest,
            "t_minus": self.t_minus,
            "delta": self.delta,
            "p_bruteforce": self.p_bruteforce,
            "z": self.z,
            "t_plus": self.t_plus,
            "delta_plus": self.delta_plus,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "m_lower_numeric": self.m_lower_numeric,
            "m_exact": self.m_exact,
            "chain_ok": self.chain_ok,
        }

    @staticmethod
    def from_dict(d: dict) -> "ParameterReport":
        return ParameterReport(
            graph6=d["graph6"],
            n=d["n"],
            m=d["m"],
            is_forest=bool(d["is_forest"]),
            t_minus=d["t_minus"],
            delta=d["delta"],
            z=d["z"],
            t_plus=d["t_plus"],
            delta_plus=d["delta_plus"],
            chain_ok=bool(d["chain_ok"]),
            p_bruteforce=d.get("p_bruteforce"),
            m_lower_numeric=d.get("m_lower_numeric"),
            m_exact=d.get("m_exact"),
            witnesses={k: tuple(v) for k, v in d.get("witnesses", {}).items()},
        )


def _chain_holds(tm: int, d: int, z: int, tp: int, dp: int, n: int) -> bool:
    return tm == d and tm <= z <= tp <= dp <= n


# ---------------------------------------------------------------------------
# corpus enumeration

def enumerate_small_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labeled graphs on exactly n vertices, ascending by edge bitmask.

    Capped at n = 7 (2^21 graphs); no isomorphism reduction.
    """
    if not 0 <= n <= ENUMERATION_MAX_N:
        raise ValueError(f"labeled enumeration supports 0 <= n <= {ENUMERATION_MAX_N}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        g = Graph(n, frozenset(edges))
        if connected_only and n > 0 and len(_component_masks(g.adj, full)) != 1:
            continue
        yield g


# ---------------------------------------------------------------------------
# reports

def compute_report(g: Graph, *, with_numeric: bool = False, seed: int = 0) -> ParameterReport:
    """Full parameter report for one graph.

    The delta witness comes from the t_minus upgrade (the two values agree by
    theorem); corpus verification recomputes delta independently instead.
    Numeric certificate search runs only when ``with_numeric`` is set.
    """
    tm_w = t_minus(g)
    tp_w = t_plus(g)
    d_w = delta(g)
    dp_w = delta_plus(g)
    z_val, z_wit = zero_forcing_number(g)
    p = None
    if g.n <= BRUTE_INDUCED_COVER_MAX_N:
        p = induced_path_cover_bruteforce(g).size
    sw = m_sandwich(g, numeric=with_numeric, seed=seed)
    witnesses = {
        "t_minus": tuple(sorted(tm_w.s)),
        "t_plus": tuple(sorted(tp_w.s)),
        "delta": tuple(sorted(d_w.s)),
        "delta_plus": tuple(sorted(dp_w.s)),
        "z": tuple(sorted(z_wit)),
    }
    return ParameterReport(
        graph6=g.graph6(),
        n=g.n,
        m=g.m,
        is_forest=classify(g).is_forest,
        t_minus=tm_w.value,
        delta=d_w.value,
        z=z_val,
        t_plus=tp_w.value,
        delta_plus=dp_w.value,
        chain_ok=_chain_holds(tm_w.value, d_w.value, z_val, tp_w.value, dp_w.value, g.n),
        p_bruteforce=p,
        m_lower_numeric=sw.numeric_lower,
        m_exact=sw.m_exact,
        witnesses=witnesses,
    )


def _light_report(g: Graph) -> ParameterReport:
    """Values-only report for corpus sweeps; delta comes from its own
    kept-set search rather than the t_minus shortcut."""
    adj = g.adj
    full = (1 << g.n) - 1
    tm, tp = _t_values(adj, g.n)
    d, dp = _delta_values(adj, g.n)
    z = _z_value(adj, g.n)
    p = None
    if g.n <= BRUTE_INDUCED_COVER_MAX_N:
        p = induced_path_cover_bruteforce(g).size
    comps = _component_masks(adj, full)
    is_forest = _edge_count(adj, full) == g.n - len(comps)
    return ParameterReport(
        graph6=g.graph6(),
        n=g.n,
        m=g.m,
        is_forest=is_forest,
        t_minus=tm,
        delta=d,
        z=z,
        t_plus=tp,
        delta_plus=dp,
        chain_ok=_chain_holds(tm, d, z, tp, dp, g.n),
        p_bruteforce=p,
    )


def check_chain(report: ParameterReport) -> list[dict]:
    """Violations of the parameter chain within one report.

    Each record carries the graph6 string, the failed comparison, and the
    two offending values.
    """
    r = report
    checks = [
        ("t_minus == delta", r.t_minus == r.delta, (r.t_minus, r.delta)),
        ("t_minus <= z", r.t_minus <= r.z, (r.t_minus, r.z)),
        ("z <= t_plus", r.z <= r.t_plus, (r.z, r.t_plus)),
        ("t_plus <= delta_plus", r.t_plus <= r.delta_plus, (r.t_plus, r.delta_plus)),
        ("delta_plus <= n", r.delta_plus <= r.n, (r.delta_plus, r.n)),
    ]
    if r.p_bruteforce is not None:
        checks.append(
            ("p_bruteforce <= t_plus", r.p_bruteforce <= r.t_plus, (r.p_bruteforce, r.t_plus))
        )
    return [
        {"graph6": r.graph6, "check": name, "values": values}
        for name, ok, values in checks
        if not ok
    ]


def verify_chain_corpus(
    max_n: int,
    connected_only: bool = False,
    *,
    long_run: bool = False,
    progress: bool = False,
) -> list[dict]:
    """Check the chain on every labeled graph with 1 <= n <= max_n.

    Returns all violation records (expected: none).  max_n = 7 costs a
    2^21 sweep and is allowed only with ``long_run``.
    """
    if max_n > ENUMERATION_MAX_N or (max_n > 6 and not long_run):
        raise ValueError("max_n <= 6 unless long_run is set (then <= 7)")
    violations = []
    for n in range(1, max_n + 1):
        for i, g in enumerate(enumerate_small_graphs(n, connected_only)):
            violations.extend(check_chain(_light_report(g)))
            if progress and n >= 7 and i % 100000 == 0:
                print(f"n={n}: {i} graphs checked", file=sys.stderr)
    return violations


# ---------------------------------------------------------------------------
# open-question surveys

_SURVEY_CLASSES = ("t_minus_eq_t_plus", "z_eq_t_plus", "p_eq_t_plus", "delta_eq_delta_plus")


def survey_open_questions(max_n: int, extra_graphs: Iterable[Graph] = ()) -> dict:
    """Empirical equality classes over the labeled corpus with n <= max_n.

    For each of the four comparisons (t_minus vs t_plus, z vs t_plus, p vs
    t_plus, delta vs delta_plus) the summary holds the graph6 lists where
    equality holds and where it is strict, with counts.  These are lists,
    not characterizations.  ``extra_graphs`` join the sweep after the corpus
    (duplicates skipped), so reference graphs beyond max_n can be placed.
    """
    if max_n > 6:
        raise ValueError("survey capped at max_n <= 6")
    summary: dict = {"max_n": max_n, "classes": {}}
    for name in _SURVEY_CLASSES:
        summary["classes"][name] = {
            "equal": [],
            "strict": [],
            "equal_count": 0,
            "strict_count": 0,
        }

    def graphs() -> Iterator[Graph]:
        for n in range(1, max_n + 1):
            yield from enumerate_small_graphs(n)
        yield from extra_graphs

    seen: set[str] = set()
    for g in graphs():
        key = g.graph6()
        if key in seen:
            continue
        seen.add(key)
        adj = g.adj
        tm, tp = _t_values(adj, g.n)
        d, dp = _delta_values(adj, g.n)
        z = _z_value(adj, g.n)
        p = induced_path_cover_bruteforce(g).size
        for name, equal in (
            ("t_minus_eq_t_plus", tm == tp),
            ("z_eq_t_plus", z == tp),
            ("p_eq_t_plus", p == tp),
            ("delta_eq_delta_plus", d == dp),
        ):
            bucket = summary["classes"][name]
            bucket["equal" if equal else "strict"].append(key)
    for name in _SURVEY_CLASSES:
        bucket = summary["classes"][name]
        bucket["equal_count"] = len(bucket["equal"])
        bucket["strict_count"] = len(bucket["strict"])
    return summary


# ---------------------------------------------------------------------------
# serialization

def _witness_cell(report: ParameterReport, key: str) -> str:
    w = report.witnesses.get(key)
    if w is None:
        return ""
    if not w:
        return "-"  # present but empty, distinct from absent
    return ";".join(str(v) for v in w)


def _csv_row(r: ParameterReport) -> list[str]:
    def opt(x) -> str:
        return "" if x is None else str(x)

    return [
        r.graph6,
        str(r.n),
        str(r.m),
        "true" if r.is_forest else "false",
        str(r.t_minus),
        str(r.delta),
        opt(r.p_bruteforce),
        str(r.z),
        str(r.t_plus),
        str(r.delta_plus),
        opt(r.m_lower_numeric),
        opt(r.m_exact),
        "true" if r.chain_ok else "false",
        _witness_cell(r, "t_minus"),
        _witness_cell(r, "t_plus"),
        _witness_cell(r, "delta"),
        _witness_cell(r, "delta_plus"),
        _witness_cell(r, "z"),
    ]


def emit_report(reports: Iterable[ParameterReport], format: str = "json", destination=None) -> None:
    """Write reports as a JSON array or CSV table.

    ``destination`` is a path or an open text stream (default: stdout).
    CSV rows follow REPORT_CSV_HEADER; witness cells are semicolon-joined
    vertex lists ("-" for a recorded empty set), absent optionals are empty
    cells.
    """
    reports = list(reports)
    if format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    elif format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_CSV_HEADER.split(","))
        for r in reports:
            writer.writerow(_csv_row(r))
        text = buf.getvalue()
    else:
        raise ValueError(f"unknown report format {format!r}")
    if destination is None:
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="ascii") as fh:
            fh.write(text)


def load_reports_json(source) -> list[ParameterReport]:
    """Read back a JSON report array from a path or stream."""
    if hasattr(source, "read"):
        data = json.load(source)
    else:
        with open(source, "r", encoding="ascii") as fh:
            data = json.load(fh)
    return [ParameterReport.from_dict(d) for d in data]


def load_reports_csv(source) -> list[ParameterReport]:
    """Read back a CSV report table from a path or stream."""
    if hasattr(source, "read"):
        rows = list(csv.reader(source))
    else:
        with open(source, "r", encoding="ascii", newline="") as fh:
            rows = list(csv.reader(fh))
    if not rows or rows[0] != REPORT_CSV_HEADER.split(","):
        raise ValueError("missing or wrong CSV header")

    def opt_int(cell: str) -> int | None:
        return None if cell == "" else int(cell)

    def witness(cell: str) -> tuple[int, ...]:
        if cell == "-":
            return ()
        return tuple(int(tok) for tok in cell.split(";"))

    out = []
    for row in rows[1:]:
        if not row:
            continue
        witnesses = {
            key: witness(cell)
            for key, cell in zip(_WITNESS_KEYS, [row[13], row[14], row[15], row[16], row[17]])
            if cell != ""
        }
        out.append(
            ParameterReport(
                graph6=row[0],
                n=int(row[1]),
                m=int(row[2]),
                is_forest=row[3] == "true",
                t_minus=int(row[4]),
                delta=int(row[5]),
                z=int(row[7]),
                t_plus=int(row[8]),
                delta_plus=int(row[9]),
                chain_ok=row[12] == "true",
                p_bruteforce=opt_int(row[6]),
                m_lower_numeric=opt_int(row[10]),
                m_exact=opt_int(row[11]),
                witnesses=witnesses,
            )
        )
    return out
