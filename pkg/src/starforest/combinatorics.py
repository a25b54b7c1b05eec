"""Integer partitions, integer-vector sumsets, and the dominating-set matching.

The sumset is the workhorse of the treewidth DP's join step.  Vectors are
encoded base (2n+1) into exponents of a 0/1 polynomial and multiplied with a
number-theoretic transform, which keeps all arithmetic exact; a naive double
loop is kept both as the overflow fallback and as a cross-check target.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import PreconditionError, ResourceLimitError
from .graph import Graph, StarForest

log = logging.getLogger(__name__)

Partition = tuple[int, ...]  # parts sorted non-increasing


def enum_partitions(h: int) -> list[Partition]:
    """All partitions of h, each exactly once.

    Recursive scheme: grow parts non-decreasingly, close each branch with the
    remainder; output is reversed into non-increasing order.
    """
    if h < 0:
        raise PreconditionError("h must be non-negative")
    if h == 0:
        return [()]
    out: list[Partition] = []

    def rec(prefix: list[int], total: int):
        rem = h - total
        out.append(tuple(reversed(prefix + [rem])))
        lo = prefix[-1] if prefix else 1
        for part in range(lo, rem // 2 + 1):
            rec(prefix + [part], total + part)

    rec([], 0)
    return out


def enum_star_partitions(h: int) -> list[StarForest]:
    """Partitions of h with every part >= 2, i.e. the star forests on h vertices."""
    if h < 0:
        raise PreconditionError("h must be non-negative")
    if h == 0:
        return [StarForest(())]
    out: list[StarForest] = []

    def rec(prefix: list[int], total: int):
        rem = h - total
        out.append(StarForest(tuple(prefix + [rem])))
        lo = prefix[-1] if prefix else 2
        for part in range(lo, rem // 2 + 1):
            rec(prefix + [part], total + part)

    if h >= 2:
        rec([], 0)
    return out


# ---------------------------------------------------------------------------
# sumsets of bounded integer vectors

_NTT_MOD = 998244353  # 119 * 2^23 + 1
_NTT_ROOT = 3
_NTT_MAX_LEN = 1 << 22  # padded transform length budget


@dataclass(frozen=True)
class IntVectorSet:
    """A set of d-dimensional integer vectors with coordinates in [0, bound]."""

    dimension: int
    bound: int
    members: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if self.dimension < 1 or self.bound < 1:
            raise PreconditionError("dimension and bound must be positive")
        for vec in self.members:
            if len(vec) != self.dimension:
                raise PreconditionError(f"vector {vec} has dimension != {self.dimension}")
            if any(c < 0 or c > self.bound for c in vec):
                raise PreconditionError(f"vector {vec} outside [0, {self.bound}]")

    @staticmethod
    def of(members: Iterable[tuple[int, ...]], dimension: int, bound: int) -> "IntVectorSet":
        return IntVectorSet(dimension, bound, frozenset(tuple(v) for v in members))


def sumset(a: IntVectorSet, b: IntVectorSet, method: str = "auto") -> IntVectorSet:
    """Componentwise sumset {x + y | x in A, y in B}; output bound doubles.

    method: "auto" picks the NTT route for large inputs and the double loop
    for small ones (or when the encoded exponent range exceeds the transform
    budget); "fft" / "naive" force one route.
    """
    if a.dimension != b.dimension:
        raise PreconditionError(
            f"dimension mismatch: {a.dimension} vs {b.dimension}"
        )
    n = max(a.bound, b.bound)
    d = a.dimension
    if method not in ("auto", "fft", "naive"):
        raise PreconditionError(f"unknown sumset method {method!r}")
    span = (2 * n + 1) ** d
    if method == "auto":
        if 2 * span > _NTT_MAX_LEN:
            log.info(
                "sumset: exponent range %d exceeds transform budget; using naive route",
                span,
            )
            method = "naive"
        elif len(a.members) * len(b.members) <= 4096:
            method = "naive"
        else:
            method = "fft"
    elif method == "fft" and 2 * span > _NTT_MAX_LEN:
        raise ResourceLimitError(f"encoded exponent range {span} exceeds transform budget")

    if method == "naive":
        sums = _sumset_naive(a.members, b.members)
    else:
        sums = _sumset_ntt(a.members, b.members, n, d)
    return IntVectorSet(d, 2 * n, frozenset(sums))


def _sumset_naive(amems: Iterable[tuple[int, ...]], bmems: Iterable[tuple[int, ...]]):
    return {tuple(x + y for x, y in zip(va, vb)) for va in amems for vb in bmems}


def _encode(vecs: Iterable[tuple[int, ...]], base: int, d: int) -> np.ndarray:
    weights = base ** np.arange(d, dtype=np.int64)
    arr = np.asarray(sorted(vecs), dtype=np.int64).reshape(-1, d)
    return arr @ weights


def _sumset_ntt(amems, bmems, n: int, d: int):
    if not amems or not bmems:
        return set()
    base = 2 * n + 1
    span = base**d
    pa = np.zeros(span, dtype=np.int64)
    pb = np.zeros(span, dtype=np.int64)
    pa[_encode(amems, base, d)] = 1
    pb[_encode(bmems, base, d)] = 1
    prod = _convolve_mod(pa, pb)
    exps = np.nonzero(prod)[0]
    out = set()
    for e in exps.tolist():
        vec = []
        for _ in range(d):
            vec.append(e % base)
            e //= base
        out.add(tuple(vec))
    return out


def _convolve_mod(pa: np.ndarray, pb: np.ndarray) -> np.ndarray:
    """0/1-polynomial product over Z via NTT mod a Fourier-friendly prime.

    Coefficients of the product are bounded by min(|A|, |B|) < modulus, so the
    modular result equals the integer result.
    """
    need = len(pa) + len(pb) - 1
    size = 1
    while size < need:
        size *= 2
    fa = np.zeros(size, dtype=np.int64)
    fb = np.zeros(size, dtype=np.int64)
    fa[: len(pa)] = pa
    fb[: len(pb)] = pb
    fa = _ntt(fa, invert=False)
    fb = _ntt(fb, invert=False)
    fc = (fa * fb) % _NTT_MOD
    return _ntt(fc, invert=True)[:need]


def _ntt(a: np.ndarray, invert: bool) -> np.ndarray:
    size = len(a)
    if size == 1:
        return a.copy()
    # bit-reversal permutation, built by doubling
    rev = np.zeros(1, dtype=np.int64)
    while len(rev) < size:
        rev = np.concatenate([2 * rev, 2 * rev + 1])
    a = a[rev].copy()
    length = 2
    while length <= size:
        root = pow(_NTT_ROOT, (_NTT_MOD - 1) // length, _NTT_MOD)
        if invert:
            root = pow(root, _NTT_MOD - 2, _NTT_MOD)
        half = length // 2
        ws = _power_array(root, half)
        blocks = a.reshape(size // length, length)
        lo = blocks[:, :half].copy()
        hi = (blocks[:, half:] * ws) % _NTT_MOD
        blocks[:, :half] = (lo + hi) % _NTT_MOD
        blocks[:, half:] = (lo - hi) % _NTT_MOD
        length *= 2
    if invert:
        inv_size = pow(size, _NTT_MOD - 2, _NTT_MOD)
        a = (a * inv_size) % _NTT_MOD
    return a


def _power_array(w: int, length: int) -> np.ndarray:
    """[w^0, w^1, ..., w^(length-1)] mod the NTT prime, built by doubling."""
    ws = np.ones(1, dtype=np.int64)
    cur = w
    while len(ws) < length:
        ws = np.concatenate([ws, (ws * cur) % _NTT_MOD])
        cur = cur * cur % _NTT_MOD
    return ws[:length]


# ---------------------------------------------------------------------------
# matching a dominating set across the cut


def dominating_matching(g: Graph, dom: Iterable[int]) -> set[tuple[int, int]]:
    """A matching of size |D| whose edges all join D to V \\ D.

    Exists whenever D is a minimum dominating set of an isolated-vertex-free
    graph (via Kőnig on the bipartite cut graph); raises if no such matching
    does, which means the caller's precondition was violated.
    """
    dset = set(dom)
    if g.isolated_vertices():
        raise PreconditionError("graph has isolated vertices")
    if not all(0 <= v < g.n for v in dset):
        raise PreconditionError("dominating set contains out-of-range vertices")
    left = sorted(dset)
    right = [v for v in range(g.n) if v not in dset]
    rpos = {v: i for i, v in enumerate(right)}
    adj = [[rpos[w] for w in g.adjacency[v] if w in rpos] for v in left]
    match_l, match_r = _hopcroft_karp(len(left), len(right), adj)
    size = sum(1 for m in match_l if m != -1)
    if size < len(left):
        raise PreconditionError("D not a minimum dominating set")
    return {(left[i], right[match_l[i]]) for i in range(len(left))}


def _hopcroft_karp(nl: int, nr: int, adj: list[list[int]]) -> tuple[list[int], list[int]]:
    INF = float("inf")
    match_l = [-1] * nl
    match_r = [-1] * nr
    while True:
        dist = [INF] * nl
        queue = [u for u in range(nl) if match_l[u] == -1]
        for u in queue:
            dist[u] = 0
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] is INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            break

        def try_augment(u: int) -> bool:
            for v in adj[u]:
                w = match_r[v]
                if w == -1 or (dist[w] == dist[u] + 1 and try_augment(w)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = INF
            return False

        for u in range(nl):
            if match_l[u] == -1:
                try_augment(u)
    return match_l, match_r
