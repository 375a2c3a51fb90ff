"""Bulk verification driver: enumerate or stream graphs, check every theorem.

Sources are exhaustive labeled enumeration (n <= 7), seeded random
sampling, or graph6 files.  Each surviving graph becomes one ReportRow
(invariants, spectra, oracle profile, one verdict per query); rows are
written as CSV or JSON lines with reals at 12 significant digits, and
runs are deterministic: identical configuration gives byte-identical
reports regardless of worker count.
"""

import json
import multiprocessing
import sys
from dataclasses import dataclass, replace
from itertools import islice
from random import Random
from typing import Optional

from .graph6 import Graph6Error, graph6_str, parse_graph6
from .graphs import MAX_VERTICES, Graph, complete_bipartite
from .hamilton import HamiltonianProfile
from .invariants import is_connected
from .theorems import (
    GraphAnalysis,
    PROPERTY_BY_S,
    TheoremQuery,
    TheoremVerdict,
    VALID_S,
    default_queries,
    evaluate_query,
)
from .tolerance import resolve_eps

ENUMERATION_LIMIT = 7

CSV_COLUMNS = (
    "graph6", "n", "delta", "kappa", "alpha", "lambda1", "lambda_n", "mu1",
    "traceable", "hamiltonian", "homogeneously_traceable",
    "hamiltonian_connected", "verdicts",
)

ENUMERATION = "enumeration"
SAMPLE = "sample"


class HarnessError(RuntimeError):
    """Bad run configuration or malformed stream input."""


@dataclass(frozen=True)
class ReportRow:
    """One graph's full record: invariants, spectra, profile, verdicts."""

    graph6: str
    n: int
    delta: int
    kappa: int
    alpha: int
    lambda1: float
    lambda_n: float
    mu1: float
    profile: HamiltonianProfile
    verdicts: tuple


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    theorem_id: str
    s: Optional[int]
    verdict: TheoremVerdict


@dataclass(frozen=True)
class VerificationRun:
    """Configuration and, once completed, counters and counterexamples.

    source is "enumeration", "sample", or a graph6 file path.  scanned
    counts the graphs that passed the n/kappa filters and were
    evaluated; the remaining counters tally individual verdicts.
    """

    source: str = ENUMERATION
    n_min: int = 1
    n_max: Optional[int] = None
    min_kappa: int = 0
    theorems: tuple = ()
    eps: Optional[float] = None
    workers: int = 1
    skip_bad: bool = False
    sample_n: int = 0
    sample_count: int = 0
    sample_seed: int = 0
    scanned: int = 0
    applicable: int = 0
    predicted: int = 0
    boundary: int = 0
    inconsistent: int = 0
    counterexamples: tuple = ()
    completed: bool = False


def enumerate_graphs(n):
    """Every labeled simple graph on n vertices, edge bits ascending."""
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise HarnessError(
            f"exhaustive enumeration supports 1 <= n <= {ENUMERATION_LIMIT}; "
            f"got n={n} (supply a graph6 file instead)")
    for bits in range(1 << (n * (n - 1) // 2)):
        yield Graph(n, bits)


def enumerate_connected_graphs(n):
    """Every connected labeled graph on n vertices, deterministic order."""
    for g in enumerate_graphs(n):
        if is_connected(g):
            yield g


def sample_graphs(n, count, seed):
    """count uniform random graphs on n vertices, edge probability 1/2."""
    if not 1 <= n <= MAX_VERTICES:
        raise HarnessError(f"sample n must be in 1..{MAX_VERTICES}, got {n}")
    if count < 0:
        raise HarnessError("sample count must be nonnegative")
    rng = Random(seed)
    nbits = n * (n - 1) // 2
    for _ in range(count):
        yield Graph(n, rng.getrandbits(nbits))


def stream_graph6_file(path, skip_bad=False):
    """Graphs from a graph6 file, one record per line, LF-terminated."""
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line)
            except Graph6Error as exc:
                if skip_bad:
                    print(f"{path}:{lineno}: skipped: {exc}", file=sys.stderr)
                    continue
                raise HarnessError(f"{path}:{lineno}: {exc}") from exc


def evaluate_graph(g, queries=None, eps=None, analysis=None):
    """Full ReportRow for one graph under the given queries."""
    queries = default_queries() if queries is None else tuple(queries)
    ctx = analysis if analysis is not None else GraphAnalysis(g, eps)
    verdicts = tuple(evaluate_query(g, q, ctx) for q in queries)
    inv = ctx.invariants
    summary = ctx.summary
    return ReportRow(
        graph6=graph6_str(g),
        n=g.n,
        delta=inv.min_degree,
        kappa=inv.connectivity,
        alpha=inv.independence_number,
        lambda1=summary.lambda1,
        lambda_n=summary.lambda_n,
        mu1=summary.mu1,
        profile=ctx.profile,
        verdicts=verdicts,
    )


def parse_theorem_list(text):
    """Parse "id,id:s,..." into TheoremQuery tuples; "all" or "" = battery.

    A bare theorem id expands to every s it accepts; "id:s" pins one.
    """
    text = (text or "").strip()
    if text in ("", "all"):
        return default_queries()
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        tid, _, stext = token.partition(":")
        if tid not in VALID_S:
            raise HarnessError(f"unknown theorem id {tid!r}")
        if stext:
            try:
                s = int(stext)
            except ValueError:
                raise HarnessError(f"bad s value {stext!r} in {token!r}") from None
            out.append(TheoremQuery(tid, s))
        else:
            out.extend(TheoremQuery(tid, s) for s in VALID_S[tid])
    if not out:
        raise HarnessError("empty theorem list")
    return tuple(out)


def _fmt_real(x):
    return f"{x:.12g}"


def _json_real(x):
    return None if x != x else float(_fmt_real(x))


def verdict_to_obj(v):
    return {
        "theorem_id": v.theorem_id,
        "s": v.s,
        "k": v.k,
        "property": v.property_name,
        "hypothesis": v.hypothesis,
        "bound_value": _json_real(v.bound_value),
        "observed_value": _json_real(v.observed_value),
        "excluded_extremal": v.excluded_extremal,
        "applicability": v.applicability,
        "predicted": v.predicted,
        "oracle_truth": v.oracle_truth,
        "consistent": v.consistent,
    }


def row_to_obj(row):
    """ReportRow as a JSON-ready dict (12 significant digits on reals)."""
    return {
        "graph6": row.graph6,
        "n": row.n,
        "delta": row.delta,
        "kappa": row.kappa,
        "alpha": row.alpha,
        "lambda1": _json_real(row.lambda1),
        "lambda_n": _json_real(row.lambda_n),
        "mu1": _json_real(row.mu1),
        "profile": {
            "traceable": row.profile.traceable,
            "hamiltonian": row.profile.hamiltonian,
            "homogeneously_traceable": row.profile.homogeneously_traceable,
            "hamiltonian_connected": row.profile.hamiltonian_connected,
        },
        "verdicts": [verdict_to_obj(v) for v in row.verdicts],
    }


def _bool_str(b):
    return "true" if b else "false"


def row_to_csv_fields(row):
    return (
        row.graph6,
        str(row.n),
        str(row.delta),
        str(row.kappa),
        str(row.alpha),
        _fmt_real(row.lambda1),
        _fmt_real(row.lambda_n),
        _fmt_real(row.mu1),
        _bool_str(row.profile.traceable),
        _bool_str(row.profile.hamiltonian),
        _bool_str(row.profile.homogeneously_traceable),
        _bool_str(row.profile.hamiltonian_connected),
        json.dumps([verdict_to_obj(v) for v in row.verdicts], separators=(",", ":")),
    )


class ReportWriter:
    """Streams rows to a CSV or JSON-lines file; no-op when path is None."""

    def __init__(self, path, fmt="csv"):
        if fmt not in ("csv", "jsonl"):
            raise HarnessError(f"unknown report format {fmt!r}")
        self.fmt = fmt
        self._fh = None
        self._csv = None
        if path is not None:
            import csv as _csvmod

            self._fh = open(path, "w", newline="")
            if fmt == "csv":
                self._csv = _csvmod.writer(self._fh, lineterminator="\n")
                self._csv.writerow(CSV_COLUMNS)

    def write(self, row):
        if self._fh is None:
            return
        if self.fmt == "csv":
            self._csv.writerow(row_to_csv_fields(row))
        else:
            self._fh.write(json.dumps(row_to_obj(row), separators=(",", ":")) + "\n")

    def close(self):
        if self._fh is not None:
            self._fh.close()
            self._fh = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False


def _source_graphs(run):
    if run.source == ENUMERATION:
        if run.n_max is None:
            raise HarnessError("enumeration needs n_max")
        if run.n_max > ENUMERATION_LIMIT:
            raise HarnessError(
                f"exhaustive enumeration supports 1 <= n <= {ENUMERATION_LIMIT}; "
                f"got n={run.n_max} (supply a graph6 file instead)")
        lo = max(1, run.n_min)
        for n in range(lo, run.n_max + 1):
            yield from enumerate_connected_graphs(n)
    elif run.source == SAMPLE:
        yield from sample_graphs(run.sample_n, run.sample_count, run.sample_seed)
    else:
        yield from stream_graph6_file(run.source, run.skip_bad)


def _evaluate_chunk(payload):
    """Worker entry: evaluate a chunk of (n, bits) graphs, filters applied."""
    graphs, queries, eps, n_min, n_max, min_kappa = payload
    rows = []
    for n, bits in graphs:
        g = Graph(n, bits)
        if g.n < n_min or (n_max is not None and g.n > n_max):
            continue
        ctx = GraphAnalysis(g, eps)
        if ctx.invariants.connectivity < min_kappa:
            continue
        rows.append(evaluate_graph(g, queries, analysis=ctx))
    return rows


def _chunks(iterable, size):
    it = iter(iterable)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def _row_stream(run, queries, chunk_size=256):
    """Rows in source order, optionally fanned out to worker processes."""
    payloads = (
        ([(g.n, g.bits) for g in chunk], queries, run.eps,
         run.n_min, run.n_max if run.source != ENUMERATION else None, run.min_kappa)
        for chunk in _chunks(_source_graphs(run), chunk_size)
    )
    if run.workers <= 1:
        for payload in payloads:
            yield from _evaluate_chunk(payload)
        return
    with multiprocessing.Pool(run.workers) as pool:
        for rows in pool.imap(_evaluate_chunk, payloads):
            yield from rows


def verify(run, out=None, fmt="csv"):
    """Execute a run; write rows if out is given; return the completed run.

    A verdict with predicted true and oracle false becomes a
    counterexample; each counterexample is replayed from its graph6
    string before returning.
    """
    queries = tuple(run.theorems) if run.theorems else default_queries()
    scanned = applicable = predicted = boundary = inconsistent = 0
    counterexamples = []
    with ReportWriter(out, fmt) as writer:
        for row in _row_stream(run, queries):
            scanned += 1
            for v in row.verdicts:
                applicable += v.applicability
                predicted += v.predicted is True
                boundary += v.hypothesis == "boundary"
                if not v.consistent:
                    inconsistent += 1
                    counterexamples.append(
                        Counterexample(row.graph6, v.theorem_id, v.s, v))
            writer.write(row)
    _replay_counterexamples(counterexamples, run.eps)
    return replace(
        run,
        theorems=queries,
        scanned=scanned,
        applicable=applicable,
        predicted=predicted,
        boundary=boundary,
        inconsistent=inconsistent,
        counterexamples=tuple(counterexamples),
        completed=True,
    )


def _replay_counterexamples(counterexamples, eps):
    for cx in counterexamples:
        g = parse_graph6(cx.graph6)
        again = evaluate_query(g, TheoremQuery(cx.theorem_id, cx.s, cx.verdict.k), eps=eps)
        if again != cx.verdict:
            raise HarnessError(
                f"counterexample {cx.graph6} did not replay: {again} != {cx.verdict}")


def extremal_report(k, s, eps=None):
    """Row for the boundary graph K_{k,k-s+1} with its equalities asserted.

    Asserts mu_1 = 2k-s+1 = n, exact equality on the strict Laplacian
    bound (hypothesis boundary), and that the s-property is false.  The
    property assertion is skipped below n = 3, where K_{1,1} is trivially
    Hamiltonian-connected and outside every theorem's domain.
    """
    if not 1 <= k <= 6:
        raise HarnessError(f"k must be in 1..6, got {k}")
    if s not in (1, 0, -1):
        raise HarnessError(f"s must be in {{1, 0, -1}}, got {s}")
    eps_val = resolve_eps(eps)
    g = complete_bipartite(k, k - s + 1)
    row = evaluate_graph(g, eps=eps)
    n, delta = row.n, row.delta
    mu1 = row.mu1
    expected = 2 * k - s + 1
    if abs(mu1 - expected) > eps_val:
        raise HarnessError(f"mu1(K_{{{k},{k - s + 1}}}) = {mu1!r}, expected {expected}")
    if abs(mu1 * (n - k + s - 1) - n * delta) > eps_val * n:
        raise HarnessError(f"K_{{{k},{k - s + 1}}} misses the Laplacian bound equality")
    main3 = [v for v in row.verdicts
             if v.theorem_id == "main3_laplacian" and v.s == s]
    if main3 and main3[0].applicability and main3[0].hypothesis != "boundary":
        raise HarnessError(
            f"K_{{{k},{k - s + 1}}} not on the s={s} bound: {main3[0].hypothesis}")
    if n >= 3:
        if getattr(row.profile, PROPERTY_BY_S[s]):
            raise HarnessError(
                f"K_{{{k},{k - s + 1}}} unexpectedly has property {PROPERTY_BY_S[s]}")
    return row
