"""Numerical minimum-rank certificates by alternating projections.

A symmetric matrix whose off-diagonal support is exactly the edge set of G
and whose rank is at most r certifies that the maximum eigenvalue
multiplicity of G is at least n - r.  The search alternates between the
nearest rank-r matrix (spectral truncation) and the pattern set (zeroing
non-edges, clamping edge entries away from zero), restarting from fresh
random samples.  Certificates are numerical claims with an explicit
tolerance, never proofs; m_sandwich combines them with the exact
combinatorial bounds and refuses to let the numerics override those.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import Graph, classify, parse_graph6
from .deletion import delta_plus as _delta_plus_op
from .deletion import t_minus as _t_minus_op
from .deletion import t_plus as _t_plus_op
from .forcing import zero_forcing_number

__all__ = [
    "CertificateError",
    "DELTA_DEFAULT",
    "MAX_ITER_DEFAULT",
    "MSandwich",
    "PatternMatrix",
    "RESTARTS_DEFAULT",
    "RankCertificate",
    "TOL_DEFAULT",
    "certificate_from_json",
    "certificate_search",
    "certificate_to_json",
    "m_sandwich",
    "project_pattern",
    "project_rank",
    "read_certificate",
    "sample_pattern",
    "verify_certificate",
    "write_certificate",
]

DELTA_DEFAULT = 1e-3
TOL_DEFAULT = 1e-8
MAX_ITER_DEFAULT = 5000
RESTARTS_DEFAULT = 20


class CertificateError(ValueError):
    """Pattern violations, bad parameters, or numeric/combinatorial conflict."""


@dataclass(frozen=True)
class PatternMatrix:
    """A symmetric matrix constrained to the support pattern of a graph.

    Off-diagonal entries are exactly zero on non-edges and at least ``delta``
    in magnitude on edges; the diagonal is free.  ``entries`` is read-only.
    """

    entries: np.ndarray
    graph: Graph
    delta: float

    def validate(self) -> None:
        a = self.entries
        n = self.graph.n
        if self.delta <= 0:
            raise CertificateError("delta must be positive")
        if a.shape != (n, n):
            raise CertificateError(f"entries shape {a.shape} does not match n={n}")
        if not np.array_equal(a, a.T):
            raise CertificateError("entries are not exactly symmetric")
        for i in range(n):
            for j in range(i + 1, n):
                if self.graph.has_edge(i, j):
                    if abs(a[i, j]) < self.delta:
                        raise CertificateError(
                            f"edge entry ({i},{j}) = {a[i, j]} under magnitude {self.delta}"
                        )
                elif a[i, j] != 0.0:
                    raise CertificateError(f"non-edge entry ({i},{j}) = {a[i, j]} is nonzero")


@dataclass(frozen=True)
class RankCertificate:
    """Outcome of one rank-r pattern search.

    ``sigma`` holds the singular values (eigenvalue magnitudes, descending)
    of ``matrix``; ``converged`` means sigma[r] <= tol * sigma[0] held, so
    the matrix has numerical rank <= r and the graph has maximum nullity at
    least ``m_lower``.  ``iterations`` is the projection-round index of the
    reported iterate within its restart.
    """

    matrix: PatternMatrix
    r: int
    sigma: tuple[float, ...]
    tol: float
    converged: bool
    iterations: int

    @property
    def m_lower(self) -> int:
        return self.matrix.graph.n - self.r


def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    es = sorted(g.edges)
    rows = np.fromiter((u for u, _ in es), dtype=np.intp, count=len(es))
    cols = np.fromiter((v for _, v in es), dtype=np.intp, count=len(es))
    return rows, cols


def _apply_pattern(m: np.ndarray, n: int, rows, cols, delta: float) -> np.ndarray:
    out = np.zeros((n, n))
    np.fill_diagonal(out, np.diagonal(m))
    if rows.size:
        vals = 0.5 * (m[rows, cols] + m[cols, rows])
        clamped = np.where(np.abs(vals) < delta, np.where(vals >= 0, delta, -delta), vals)
        out[rows, cols] = clamped
        out[cols, rows] = clamped
    return out


def sample_pattern(g: Graph, seed: int, delta: float = DELTA_DEFAULT) -> PatternMatrix:
    """Random pattern member: edge entries uniform over +-[delta, 1],
    diagonal uniform over [-1, 1].  Deterministic for a fixed seed; draws
    happen in vertex order for the diagonal, then sorted edge order."""
    if delta <= 0:
        raise CertificateError("delta must be positive")
    rng = np.random.default_rng(seed)
    a = np.zeros((g.n, g.n))
    np.fill_diagonal(a, rng.uniform(-1.0, 1.0, g.n))
    for u, v in sorted(g.edges):
        mag = rng.uniform(delta, 1.0)
        sign = 1.0 if rng.integers(0, 2) else -1.0
        a[u, v] = a[v, u] = sign * mag
    a.setflags(write=False)
    return PatternMatrix(a, g, delta)


def project_pattern(m: np.ndarray, g: Graph, delta: float = DELTA_DEFAULT) -> PatternMatrix:
    """Nearest pattern member: zero the non-edges, clamp small edge entries
    to sign * delta (sign of zero taken positive), keep the diagonal."""
    if delta <= 0:
        raise CertificateError("delta must be positive")
    m = np.asarray(m, dtype=float)
    rows, cols = _edge_arrays(g)
    out = _apply_pattern(m, g.n, rows, cols, delta)
    out.setflags(write=False)
    return PatternMatrix(out, g, delta)


def project_rank(m: np.ndarray, r: int) -> np.ndarray:
    """Nearest (Frobenius) symmetric matrix of rank <= r: spectral
    truncation keeping the r eigenvalues of largest magnitude."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if not 0 <= r <= n:
        raise CertificateError(f"rank target {r} outside 0..{n}")
    if r == n:
        return m.copy()
    lam, q = np.linalg.eigh(m)
    keep = np.argsort(-np.abs(lam), kind="stable")[:r]
    out = (q[:, keep] * lam[keep]) @ q[:, keep].T
    return 0.5 * (out + out.T)


def certificate_search(
    g: Graph,
    r: int,
    *,
    delta: float = DELTA_DEFAULT,
    tol: float = TOL_DEFAULT,
    max_iter: int = MAX_ITER_DEFAULT,
    restarts: int = RESTARTS_DEFAULT,
    seed: int = 0,
) -> RankCertificate:
    """Alternating-projection search for a pattern matrix of numerical rank r.

    Restart i samples with seed + i; restarts run in order and the first
    converged iterate wins.  Convergence is judged on the pattern-feasible
    iterate: sigma[r] <= tol * sigma[0].  Without convergence the
    certificate carries the best-residual iterate seen anywhere.
    """
    n = g.n
    if not 0 <= r <= n:
        raise CertificateError(f"rank target {r} outside 0..{n}")
    if restarts < 1 or max_iter < 0:
        raise CertificateError("need restarts >= 1 and max_iter >= 0")
    rows, cols = _edge_arrays(g)
    best_rel = np.inf
    best: tuple[np.ndarray, tuple[float, ...], int] | None = None
    converged = False
    for attempt in range(restarts):
        a = np.array(sample_pattern(g, seed + attempt, delta).entries)
        for rounds in range(max_iter + 1):
            lam, q = np.linalg.eigh(a)
            order = np.argsort(-np.abs(lam), kind="stable")
            sig = np.abs(lam)[order]
            s1 = float(sig[0]) if n else 0.0
            tail = float(sig[r]) if r < n else 0.0
            if s1 > 0:
                rel = tail / s1
            else:
                rel = 0.0 if tail == 0.0 else np.inf
            if rel < best_rel:
                best_rel = rel
                best = (a.copy(), tuple(float(x) for x in sig), rounds)
            if rel <= tol:
                converged = True
                break
            if rounds == max_iter:
                break
            keep = order[:r]
            low = (q[:, keep] * lam[keep]) @ q[:, keep].T
            a = _apply_pattern(low, n, rows, cols, delta)
        if converged:
            break
    assert best is not None
    entries, sigma, iterations = best
    entries.setflags(write=False)
    return RankCertificate(PatternMatrix(entries, g, delta), r, sigma, tol, converged, iterations)


def verify_certificate(c: RankCertificate) -> bool:
    """Independent check: exact pattern membership plus the tolerance test
    on a freshly computed spectrum.  True only if both hold."""
    try:
        c.matrix.validate()
    except CertificateError:
        return False
    n = c.matrix.graph.n
    if not 0 <= c.r <= n:
        return False
    if c.r >= n:
        return True
    sig = np.sort(np.abs(np.linalg.eigvalsh(c.matrix.entries)))[::-1]
    s1 = float(sig[0]) if n else 0.0
    tail = float(sig[c.r])
    if s1 == 0.0:
        return tail == 0.0
    return tail <= c.tol * s1


# ---------------------------------------------------------------------------
# sandwich report

@dataclass(frozen=True)
class MSandwich:
    """Bounds on the maximum eigenvalue multiplicity of one graph.

    Exact bounds: t_minus from below, z and t_plus from above.  The numeric
    lower bound comes from converged rank certificates and is a claim at the
    search tolerance.  ``m_exact`` is set only when lower meets upper.
    """

    t_minus: int
    numeric_lower: int | None
    z: int
    t_plus: int
    delta_plus: int
    m_exact: int | None

    @property
    def lower(self) -> int:
        if self.numeric_lower is None:
            return self.t_minus
        return max(self.t_minus, self.numeric_lower)

    @property
    def upper(self) -> int:
        return min(self.z, self.t_plus)


def m_sandwich(
    g: Graph,
    *,
    numeric: bool = True,
    delta: float = DELTA_DEFAULT,
    tol: float = TOL_DEFAULT,
    max_iter: int = MAX_ITER_DEFAULT,
    restarts: int = RESTARTS_DEFAULT,
    seed: int = 0,
) -> MSandwich:
    """Pin the maximum multiplicity between combinatorial and numeric bounds.

    Forests need no numerics (the bounds collapse).  Otherwise, when the
    exact bounds leave a gap and ``numeric`` is on, rank certificates are
    tried at descending nullity targets from the upper bound down to just
    above t_minus; the first verified convergence sets numeric_lower.  A
    numeric claim exceeding the exact upper bound is a contradiction and
    raises instead of being reported.
    """
    tm = _t_minus_op(g).value
    tp = _t_plus_op(g).value
    dp = _delta_plus_op(g).value
    z, _ = zero_forcing_number(g)
    upper = min(z, tp)
    numeric_lower: int | None = None
    if classify(g).is_forest:
        if tm != upper:
            raise CertificateError(
                f"forest bounds disagree: t_minus={tm}, z={z}, t_plus={tp}"
            )
        m_exact: int | None = tm
    elif tm == upper:
        m_exact = tm
    else:
        if numeric:
            for k in range(min(upper, g.n), max(tm, 0), -1):
                cert = certificate_search(
                    g, g.n - k, delta=delta, tol=tol,
                    max_iter=max_iter, restarts=restarts, seed=seed,
                )
                if cert.converged and verify_certificate(cert):
                    numeric_lower = k
                    break
        if numeric_lower is not None and numeric_lower > upper:
            raise CertificateError(
                f"numeric lower bound {numeric_lower} exceeds exact upper bound {upper}"
            )
        m_exact = upper if numeric_lower == upper else None
    return MSandwich(tm, numeric_lower, z, tp, dp, m_exact)


# ---------------------------------------------------------------------------
# serialization

def certificate_to_json(c: RankCertificate) -> str:
    g = c.matrix.graph
    payload = {
        "n": g.n,
        "graph6": g.graph6(),
        "r": c.r,
        "entries": [float(x) for x in c.matrix.entries.reshape(-1)],
        "delta": c.matrix.delta,
        "tol": c.tol,
        "sigma": list(c.sigma),
        "converged": c.converged,
        "iterations": c.iterations,
    }
    return json.dumps(payload, indent=2)


def certificate_from_json(text: str) -> RankCertificate:
    d = json.loads(text)
    g = parse_graph6(d["graph6"])
    if g.n != d["n"]:
        raise CertificateError(f"graph6 has n={g.n} but record says n={d['n']}")
    entries = np.array(d["entries"], dtype=float).reshape(g.n, g.n)
    entries.setflags(write=False)
    matrix = PatternMatrix(entries, g, float(d["delta"]))
    return RankCertificate(
        matrix,
        int(d["r"]),
        tuple(float(x) for x in d["sigma"]),
        float(d["tol"]),
        bool(d["converged"]),
        int(d["iterations"]),
    )


def write_certificate(c: RankCertificate, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(certificate_to_json(c))
        fh.write("\n")


def read_certificate(path) -> RankCertificate:
    with open(path, "r", encoding="ascii") as fh:
        return certificate_from_json(fh.read())
