"""Exhaustive enumeration of small signed graphs up to switching.

Underlying simple graphs are enumerated one vertex at a time: every graph
on k vertices extends a graph on k-1 vertices by one new vertex with an
arbitrary neighborhood, so extending all representatives by all 2^(k-1)
neighborhoods and deduplicating by canonical form yields every isomorphism
class.  Canonical forms are brute force: the minimum relabeled edge list
over all permutations compatible with iterated degree refinement.

For a fixed underlying graph, switching classes are enumerated by pinning
a spanning forest to all-positive and ranging the cotree edges over all
sign patterns: a connected graph with m edges and n vertices has exactly
2^(m-n+1) switching classes, one per pattern.

``verify_max_index`` runs the full census for one order: every switching
class of every underlying graph is filtered to the unbalanced ones with no
negative 4-cycle, the maximum index over the survivors is recorded, and
the report's verdict states whether that maximum is attained exactly by
the extremal family (up to switching isomorphism).
"""

from __future__ import annotations

import json
import math
import os
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .core import SignedGraph
from .cycles import is_ck_negative_free
from .families import extremal_graph
from .polynomial import largest_real_root_interval
from .spectra import c4free_bound_check, char_poly_exact, eigenvalues_sym, index
from .switching import forest_normal_form, is_balanced, switching_isomorphic

__all__ = [
    "enumerate_underlying",
    "switching_classes",
    "CensusReport",
    "verify_max_index",
    "verify_c4free_bounds",
    "ingest_graph_list",
    "GraphListError",
    "decode_graph6",
    "encode_graph6",
    "has_c4",
]

MAX_BUILTIN_ORDER = 7
_UNDERLYING_CACHE: dict[int, tuple[SignedGraph, ...]] = {}


# -- canonical forms -----------------------------------------------------------


def _refined_colors(n: int, adj: list[list[int]]) -> list[int]:
    colors = [len(adj[v]) for v in range(n)]
    for _ in range(n):
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def _canonical_edges(n: int, edges: frozenset[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Minimum relabeled edge list over refinement-compatible permutations."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    colors = _refined_colors(n, adj)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    # vertices of class i may only take the positions reserved for class i
    offsets = []
    pos = 0
    for cls in ordered:
        offsets.append(range(pos, pos + len(cls)))
        pos += len(cls)
    best: tuple[tuple[int, int], ...] | None = None
    perm = [0] * n
    for assignment in product(*(permutations(off) for off in offsets)):
        for cls, places in zip(ordered, assignment):
            for v, p in zip(cls, places):
                perm[v] = p
        relabeled = tuple(
            sorted(
                (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                for u, v in edges
            )
        )
        if best is None or relabeled < best:
            best = relabeled
    return best if best is not None else ()


def enumerate_underlying(n: int) -> list[SignedGraph]:
    """All non-isomorphic simple graphs on n vertices, as all-positive graphs.

    Deterministic order: ascending edge count, then canonical edge list.
    Built-in enumeration is capped at n = 7 (1044 graphs); larger orders
    must come from :func:`ingest_graph_list`.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > MAX_BUILTIN_ORDER:
        raise ValueError(
            f"built-in enumeration is capped at n = {MAX_BUILTIN_ORDER}; "
            "ingest an external graph list for larger orders"
        )
    if n in _UNDERLYING_CACHE:
        return [g for g in _UNDERLYING_CACHE[n]]
    reps: dict[tuple, frozenset] = {(): frozenset()}  # n = 1
    for k in range(2, n + 1):
        nxt: dict[tuple, frozenset] = {}
        for edges in reps.values():
            for mask in range(1 << (k - 1)):
                new_edges = set(edges)
                for u in range(k - 1):
                    if (mask >> u) & 1:
                        new_edges.add((u, k - 1))
                key = _canonical_edges(k, frozenset(new_edges))
                if key not in nxt:
                    nxt[key] = frozenset(key)
        reps = nxt
    keys = sorted(reps, key=lambda t: (len(t), t))
    out = tuple(SignedGraph(n, {e: 1 for e in key}) for key in keys)
    _UNDERLYING_CACHE[n] = out
    return list(out)


# -- switching classes ---------------------------------------------------------


def switching_classes(g: SignedGraph) -> list[SignedGraph]:
    """One representative per switching class of the underlying graph of g.

    The canonical spanning forest is pinned all-positive and the cotree
    edges range over every sign pattern, in binary counting order (pattern
    0 is the all-positive, balanced class).
    """
    underlying = SignedGraph(g.n, {e: 1 for e in g.edge_set()})
    forest = set(forest_normal_form(underlying).forest)
    all_edges = sorted(underlying.edge_set())
    cotree = [e for e in all_edges if e not in forest]
    base = {e: 1 for e in all_edges}
    out = []
    for bits in range(1 << len(cotree)):
        table = dict(base)
        for i, e in enumerate(cotree):
            if (bits >> i) & 1:
                table[e] = -1
        out.append(SignedGraph(g.n, table))
    return out


# -- the census ----------------------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    """Outcome of one full-order census.

    ``max_lambda1`` is the maximum index over all unbalanced switching
    classes with no negative 4-cycle; ``witnesses`` are all classes
    attaining it within ``tol``; the verdict is True when that maximum
    agrees with the extremal graph's index and every witness is switching
    isomorphic to the extremal graph.
    """

    n: int
    underlying_count: int
    class_count: int
    eligible_count: int
    max_lambda1: float
    reference_lambda1: float
    witnesses: tuple[SignedGraph, ...]
    verdict: bool
    seconds: float
    tol: float = 1e-9

    def witness_sg(self) -> list[str]:
        return [w.to_sg() for w in self.witnesses]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "underlying_count": self.underlying_count,
            "class_count": self.class_count,
            "eligible_count": self.eligible_count,
            "max_lambda1": self.max_lambda1,
            "reference_lambda1": self.reference_lambda1,
            "witness_sg": self.witness_sg(),
            "verdict": self.verdict,
            "seconds": self.seconds,
            "tol": self.tol,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _census_one_graph(args: tuple[int, tuple[tuple[int, int], ...], float]):
    """Census of a single underlying graph; used by the worker pool."""
    n, edges, tol = args
    g = SignedGraph(n, {e: 1 for e in edges})
    classes = 0
    eligible = 0
    best = -math.inf
    keep: list[tuple[float, str]] = []
    for h in switching_classes(g):
        classes += 1
        if is_balanced(h).balanced:
            continue
        if not is_ck_negative_free(h, 4):
            continue
        eligible += 1
        lam = eigenvalues_sym(h.adjacency_matrix()).lambda1
        if lam > best:
            best = lam
            keep = [(l, s) for (l, s) in keep if l >= best - tol]
        if lam >= best - tol:
            keep.append((lam, h.to_sg()))
    return classes, eligible, best, keep


def _exact_tiebreak(witnesses: list[tuple[float, SignedGraph]]):
    """Drop numerically tied classes whose exact index is strictly smaller.

    Each candidate's exact characteristic polynomial has its largest real
    root bracketed to width 1e-15 by rational bisection; a candidate
    survives only when its bracket reaches the best lower bound.
    """
    width = Fraction(1, 10**15)
    brackets: dict[tuple, tuple[Fraction, Fraction]] = {}
    intervals = []
    for _, g in witnesses:
        p = char_poly_exact(g)
        if p.coeffs not in brackets:
            brackets[p.coeffs] = largest_real_root_interval(p, width)
        intervals.append(brackets[p.coeffs])
    best_lo = max(lo for lo, _ in intervals)
    return [w for w, (_, hi) in zip(witnesses, intervals) if hi >= best_lo]


def verify_max_index(
    n: int,
    tol: float = 1e-9,
    jobs: int = 1,
    graphs: list[SignedGraph] | None = None,
    checkpoint: str | None = None,
    progress: bool = False,
    long_run: bool = False,
) -> CensusReport:
    """Census all switching classes of order n and locate the maximum index.

    Filters each class to unbalanced with no negative 4-cycle, maximizes
    the index over the survivors, re-tests numerical ties with exact
    characteristic polynomials, and checks every maximizer against the
    extremal graph.  ``graphs`` overrides the built-in underlying-graph
    enumeration (required beyond n = 7); ``jobs`` > 1 fans the per-graph
    work over a process pool with a deterministic merge; ``checkpoint``
    names a JSON-lines file used to resume interrupted runs.  Orders past
    6 iterate very many classes and must opt in with ``long_run``.
    """
    if n < 5:
        raise ValueError(f"the census needs n >= 5, got {n}")
    if n > 6 and not long_run:
        raise ValueError(
            f"the census at n = {n} is long-running; pass long_run=True "
            "(checkpointing recommended)"
        )
    t0 = time.perf_counter()
    underlying = graphs if graphs is not None else enumerate_underlying(n)
    for g in underlying:
        if g.n != n:
            raise ValueError(f"graph of order {g.n} in a census of order {n}")
    tasks = [(n, tuple(sorted(g.edge_set())), tol) for g in underlying]

    header = {"census_n": n, "tasks": len(tasks), "tol": tol}
    done: dict[int, tuple] = {}
    fresh_checkpoint = True
    if checkpoint and os.path.exists(checkpoint) and os.path.getsize(checkpoint):
        fresh_checkpoint = False
        with open(checkpoint, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh):
                if not line.strip():
                    continue
                rec = json.loads(line)
                if lineno == 0:
                    if rec != header:
                        raise ValueError(
                            f"checkpoint {checkpoint} belongs to a different census: "
                            f"{rec} != {header}"
                        )
                    continue
                done[rec["i"]] = (
                    rec["classes"],
                    rec["eligible"],
                    rec["best"],
                    [(l, s) for l, s in rec["keep"]],
                )

    pending = [i for i in range(len(tasks)) if i not in done]
    results: dict[int, tuple] = dict(done)
    processed = sum(r[0] for r in done.values())
    next_mark = (processed // 100000 + 1) * 100000
    ckpt_fh = open(checkpoint, "a", encoding="utf-8") if checkpoint else None
    if ckpt_fh and fresh_checkpoint:
        ckpt_fh.write(json.dumps(header) + "\n")
        ckpt_fh.flush()

    def note(i: int, res: tuple) -> None:
        nonlocal processed, next_mark
        results[i] = res
        _record(ckpt_fh, i, res)
        processed += res[0]
        if progress and processed >= next_mark:
            print(
                f"census n={n}: {processed} classes processed "
                f"({len(results)}/{len(tasks)} graphs)",
                flush=True,
            )
            while next_mark <= processed:
                next_mark += 100000

    try:
        if jobs > 1 and pending:
            import multiprocessing as mp

            with mp.Pool(jobs) as pool:
                for i, res in zip(
                    pending,
                    pool.imap(_census_one_graph, [tasks[i] for i in pending], chunksize=8),
                ):
                    note(i, res)
        else:
            for i in pending:
                note(i, _census_one_graph(tasks[i]))
    finally:
        if ckpt_fh:
            ckpt_fh.close()

    class_count = 0
    eligible_count = 0
    best = -math.inf
    keep: list[tuple[float, SignedGraph]] = []
    for i in range(len(tasks)):
        classes, eligible, g_best, g_keep = results[i]
        class_count += classes
        eligible_count += eligible
        if g_best > best:
            best = g_best
            keep = [(l, h) for (l, h) in keep if l >= best - tol]
        for lam, sg_text in g_keep:
            if lam >= best - tol:
                keep.append((lam, SignedGraph.from_sg(sg_text)))

    reference = index(extremal_graph(n))
    survivors = _exact_tiebreak(keep) if keep else []
    witnesses = tuple(g for _, g in survivors)
    verdict = (
        bool(witnesses)
        and abs(best - reference) <= tol
        and all(switching_isomorphic(w, extremal_graph(n))[0] for w in witnesses)
    )
    return CensusReport(
        n=n,
        underlying_count=len(underlying),
        class_count=class_count,
        eligible_count=eligible_count,
        max_lambda1=best,
        reference_lambda1=reference,
        witnesses=witnesses,
        verdict=verdict,
        seconds=time.perf_counter() - t0,
        tol=tol,
    )


def _record(fh, i: int, res: tuple) -> None:
    if fh is None:
        return
    classes, eligible, best, keep = res
    fh.write(
        json.dumps(
            {"i": i, "classes": classes, "eligible": eligible, "best": best, "keep": keep}
        )
        + "\n"
    )
    fh.flush()


# -- unsigned C4-free spectral bounds -------------------------------------------


def has_c4(g: SignedGraph) -> bool:
    """True iff the underlying graph contains a 4-cycle (signs ignored)."""
    adj = [set(row) for row in g.adjacency_lists()]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(adj[u] & adj[v]) >= 2:
                return True
    return False


def verify_c4free_bounds(n: int) -> bool:
    """Check the parity spectral bound on every C4-free graph of order n."""
    ok = True
    for g in enumerate_underlying(n):
        if has_c4(g):
            continue
        lam = eigenvalues_sym(g.adjacency_matrix()).lambda1
        _, _, applicable = c4free_bound_check(g, lam)
        ok = ok and applicable
    return ok


# -- graph catalog ingestion -----------------------------------------------------


class GraphListError(ValueError):
    """Malformed graph catalog input; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def decode_graph6(record: str, lineno: int = 1) -> SignedGraph:
    """Decode one graph6 record into an all-positive signed graph.

    Bit-exact format: every byte stores the value byte - 63 in 6 bits.
    The order n is one byte for n <= 62; a leading '~' marks a three-byte
    (18-bit, big-endian) order.  The upper triangle bits x(0,1), x(0,2),
    x(1,2), x(0,3), ... follow in column-major order, packed big-endian
    six per byte and zero-padded to a byte boundary.
    """
    s = record.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphListError(lineno, "empty graph6 record")
    data = []
    for ch in s:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise GraphListError(lineno, f"byte {b} out of graph6 range 63..126")
        data.append(b - 63)
    if data[0] <= 62:
        n = data[0]
        bits_at = 1
    elif len(data) >= 4 and data[0] == 63 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        bits_at = 4
    else:
        raise GraphListError(lineno, "unsupported graph6 order encoding")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = data[bits_at:]
    if len(body) != need:
        raise GraphListError(
            lineno, f"graph6 body for n={n} needs {need} bytes, found {len(body)}"
        )
    table = {}
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[idx // 6]
            bit = (byte >> (5 - idx % 6)) & 1
            if bit:
                table[(u, v)] = 1
            idx += 1
    # padding bits must be zero
    if npairs % 6:
        tail = body[-1] & ((1 << (6 - npairs % 6)) - 1)
        if tail:
            raise GraphListError(lineno, "nonzero padding bits in graph6 record")
    return SignedGraph(n, table)


def encode_graph6(g: SignedGraph) -> str:
    """Encode the underlying graph of g as a graph6 record."""
    n = g.n
    if n > 258047:
        raise ValueError("graph too large for the supported graph6 encodings")
    head = [n] if n <= 62 else [63, n >> 12, (n >> 6) & 63, n & 63]
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        body.append(val)
    return "".join(chr(63 + x) for x in head + body)


def ingest_graph_list(path) -> list[SignedGraph]:
    """Parse a catalog of unsigned graphs, order preserved.

    Accepts either graph6 (one record per line) or sign-less ``.sg``
    records (header ``n m`` followed by m lines ``u v``, 1-based, possibly
    repeated for several graphs).  Blank lines and ``#`` comments are
    skipped.  Malformed records raise GraphListError with the line number.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    content = [
        (i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip() and not ln.strip().startswith("#")
    ]
    if not content:
        return []
    first = content[0][1]
    parts = first.split()
    sg_mode = len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    out: list[SignedGraph] = []
    if not sg_mode:
        for lineno, ln in content:
            out.append(decode_graph6(ln, lineno))
        return out
    i = 0
    while i < len(content):
        lineno, ln = content[i]
        parts = ln.split()
        if len(parts) != 2:
            raise GraphListError(lineno, f"expected header 'n m', got {ln!r}")
        try:
            gn, gm = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphListError(lineno, f"non-integer header {ln!r}") from None
        if gn < 0 or gm < 0:
            raise GraphListError(lineno, f"negative counts in header {ln!r}")
        i += 1
        table = {}
        for k in range(gm):
            if i >= len(content):
                raise GraphListError(
                    lineno, f"record declares {gm} edges, file ends after {k}"
                )
            elineno, eln = content[i]
            eparts = eln.split()
            if len(eparts) not in (2, 3):
                raise GraphListError(elineno, f"expected 'u v', got {eln!r}")
            try:
                u1, v1 = int(eparts[0]), int(eparts[1])
            except ValueError:
                raise GraphListError(elineno, f"non-integer endpoints in {eln!r}") from None
            if not (1 <= u1 < v1 <= gn):
                raise GraphListError(elineno, f"need 1 <= u < v <= {gn}, got {eln!r}")
            if (u1 - 1, v1 - 1) in table:
                raise GraphListError(elineno, f"duplicate edge {u1} {v1}")
            table[(u1 - 1, v1 - 1)] = 1
            i += 1
        out.append(SignedGraph(gn, table))
    return out
