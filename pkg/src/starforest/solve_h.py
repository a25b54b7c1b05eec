"""Decision procedure parameterized by the target size h.

Strategy: answer yes immediately when both graphs carry a ceil(h/2)-edge
matching (a matching is itself a star forest); otherwise walk the star
partitions of exactly h vertices and look for one embedding in both graphs.
Forest embedding runs either as exact backtracking or as randomized color
coding with one-sided error.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .combinatorics import enum_star_partitions
from .errors import PreconditionError
from .graph import Embedding, Graph, Instance, StarForest, max_matching, verify_embedding

EXACT_MODE_MAX_H = 12  # exact backtracking is fast at desk scale up to here


@dataclass(frozen=True)
class ColorCodingConfig:
    trials: int | None = None  # None = auto from failure_probability
    failure_probability: float = 0.01
    rng_seed: int = 0

    def __post_init__(self):
        if self.trials is not None and self.trials < 1:
            raise PreconditionError("trials must be >= 1")
        if not 0 < self.failure_probability < 1:
            raise PreconditionError("failure_probability must lie in (0,1)")

    def trial_count(self, h: int) -> int:
        if self.trials is not None:
            return self.trials
        # a fixed h-set is colorful with prob ~ e^-h per trial
        return max(1, math.ceil(math.e**h * math.log(1 / self.failure_probability)))


def solve_h(
    inst: Instance,
    cfg: ColorCodingConfig = ColorCodingConfig(),
    mode: str = "auto",
) -> tuple[bool, tuple[StarForest, Embedding, Embedding] | None]:
    """Decide whether a common star forest of >= h vertices exists.

    Every yes comes with a verified certificate.  A no is exact in exact
    mode; under randomized embedding it carries the configured one-sided
    failure probability.
    """
    h = inst.h
    if h < 0:
        raise PreconditionError("h must be non-negative")
    if h == 0:
        return True, (StarForest(()), Embedding(()), Embedding(()))
    if inst.trivially_no():
        return False, None
    if mode == "auto":
        mode = "exact" if h <= EXACT_MODE_MAX_H else "randomized"

    need = (h + 1) // 2
    m1 = sorted(max_matching(inst.g1))
    m2 = sorted(max_matching(inst.g2))
    if len(m1) >= need and len(m2) >= need:
        forest = StarForest((2,) * need)
        emb1 = Embedding(tuple(m1[:need]))
        emb2 = Embedding(tuple(m2[:need]))
        assert verify_embedding(inst.g1, forest, emb1)
        assert verify_embedding(inst.g2, forest, emb2)
        return True, (forest, emb1, emb2)

    # lexicographically decreasing part order; first success wins
    for forest in sorted(enum_star_partitions(h), key=lambda f: f.star_sizes, reverse=True):
        emb1 = embeds_star_forest(inst.g1, forest, mode, cfg)
        if emb1 is None:
            continue
        emb2 = embeds_star_forest(inst.g2, forest, mode, cfg)
        if emb2 is None:
            continue
        assert verify_embedding(inst.g1, forest, emb1)
        assert verify_embedding(inst.g2, forest, emb2)
        return True, (forest, emb1, emb2)
    return False, None


def embeds_star_forest(
    g: Graph,
    forest: StarForest,
    mode: str = "exact",
    cfg: ColorCodingConfig = ColorCodingConfig(),
) -> Embedding | None:
    """One embedding of the star forest into g, or None.

    Exact mode backtracks over centres in non-increasing star-size order.
    Randomized mode is classic color coding: color vertices with
    total_vertices colors uniformly, search for a colorful copy, repeat;
    a None may be a false negative with the configured probability.
    """
    if not forest.star_sizes:
        return Embedding(())
    if forest.total_vertices > g.n:
        return None
    if mode == "exact":
        return _embed_exact(g, forest)
    if mode == "randomized":
        return _embed_color_coding(g, forest, cfg)
    raise PreconditionError(f"unknown embedding mode {mode!r}")


def _embed_exact(g: Graph, forest: StarForest) -> Embedding | None:
    sizes = forest.star_sizes  # already non-increasing
    stars: list[tuple[int, ...]] = []

    def place(idx: int, used: int, min_centre: int) -> bool:
        if idx == len(sizes):
            return True
        d = sizes[idx]
        start = min_centre if idx > 0 and sizes[idx - 1] == d else 0
        for centre in range(start, g.n):
            if used >> centre & 1 or g.degree(centre) < d - 1:
                continue
            free = [w for w in g.adjacency[centre] if not used >> w & 1]
            if len(free) < d - 1:
                continue
            for leaves in combinations(free, d - 1):
                mask = used | 1 << centre
                for w in leaves:
                    mask |= 1 << w
                stars.append((centre,) + leaves)
                if place(idx + 1, mask, centre + 1):
                    return True
                stars.pop()
        return False

    if place(0, 0, 0):
        return Embedding(tuple(stars))
    return None


def _trial_seed(seed: int, trial: int) -> int:
    return (seed * 0x9E3779B97F4A7C15 + trial * 0xBF58476D1CE4E5B9 + 1) % (1 << 63)


def _embed_color_coding(g: Graph, forest: StarForest, cfg: ColorCodingConfig) -> Embedding | None:
    h = forest.total_vertices
    for trial in range(cfg.trial_count(h)):
        rng = random.Random(_trial_seed(cfg.rng_seed, trial))
        colors = [rng.randrange(h) for _ in range(g.n)]
        emb = _colorful_embedding(g, forest, colors, h)
        if emb is not None:
            return emb
    return None


def _colorful_embedding(
    g: Graph, forest: StarForest, colors: list[int], h: int
) -> Embedding | None:
    # per star size: every color set {c(v)} + (d-1 colors among N(v)), as bitmasks
    full = (1 << h) - 1
    feasible: dict[int, set[int]] = {}
    for d in set(forest.star_sizes):
        masks: set[int] = set()
        for v in range(g.n):
            if g.degree(v) < d - 1:
                continue
            neigh_colors = {colors[w] for w in g.adjacency[v]} - {colors[v]}
            if len(neigh_colors) < d - 1:
                continue
            for pick in combinations(sorted(neigh_colors), d - 1):
                m = 1 << colors[v]
                for c in pick:
                    m |= 1 << c
                masks.add(m)
        if not masks:
            return None
        feasible[d] = masks

    # subset convolution over disjoint color sets, star by star
    reachable: dict[int, tuple] = {0: ()}  # union mask -> chosen star masks
    for d in forest.star_sizes:
        nxt: dict[int, tuple] = {}
        for got, picks in reachable.items():
            for m in feasible[d]:
                if got & m:
                    continue
                u = got | m
                if u not in nxt:
                    nxt[u] = picks + (m,)
        reachable = nxt
        if not reachable:
            return None
    if full not in reachable:
        return None

    # realize each chosen color mask as an actual star
    stars: list[tuple[int, ...]] = []
    for d, m in zip(forest.star_sizes, reachable[full]):
        stars.append(_realize_star(g, colors, d, m))
    return Embedding(tuple(stars))


def _realize_star(g: Graph, colors: list[int], d: int, mask: int) -> tuple[int, ...]:
    want = {c for c in range(mask.bit_length()) if mask >> c & 1}
    for v in range(g.n):
        if colors[v] not in want:
            continue
        rest = want - {colors[v]}
        by_color: dict[int, int] = {}
        for w in g.adjacency[v]:
            if colors[w] in rest and colors[w] not in by_color:
                by_color[colors[w]] = w
        if len(by_color) == len(rest) and len(rest) == d - 1:
            return (v,) + tuple(by_color[c] for c in sorted(rest))
    raise AssertionError("feasible color mask must be realizable")
