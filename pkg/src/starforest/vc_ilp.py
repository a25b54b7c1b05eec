"""Exact algorithm parameterized by the vertex cover sizes of both graphs.

For each graph: fix a minimum vertex cover, bucket the independent-set
vertices into twin classes by exact neighbourhood, then guess the shape of
the solution's stars anchored on the cover: how many stars, which cover
vertices centre them, which cover vertices serve as leaves, and the full
(class, leaf-set) description of stars centred outside the cover.  A guess
pair plus a star-matching bijection yields one small integer program; the
answer is the best optimum over all guesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator

from . import bip
from .errors import PreconditionError
from .graph import Graph, min_vertex_cover

Role = tuple  # ("centre", i) | ("leaf1", i) | ("leaf2", j) | ("unused",)


@dataclass(frozen=True)
class TwinClasses:
    cover: tuple[int, ...]
    classes: dict[frozenset[int], tuple[int, ...]]  # exact neighbourhood -> members

    @property
    def n(self) -> int:
        return len(self.cover) + sum(len(m) for m in self.classes.values())

    def class_size(self, key: frozenset[int]) -> int:
        return len(self.classes.get(key, ()))


def twin_classes(g: Graph, cover) -> TwinClasses:
    cset = set(cover)
    for u, v in g.edges():
        if u not in cset and v not in cset:
            raise PreconditionError(f"not a vertex cover: edge ({u},{v}) uncovered")
    buckets: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        if v in cset:
            continue
        buckets.setdefault(frozenset(g.adjacency[v]), []).append(v)
    ordered = {
        key: tuple(buckets[key])
        for key in sorted(buckets, key=lambda k: tuple(sorted(k)))
    }
    return TwinClasses(tuple(sorted(cset)), ordered)


@dataclass(frozen=True)
class SideGuess:
    """One graph's half of a guess; star indices run type-I first, then type-II."""

    type1_centres: tuple[int, ...]
    type2_stars: tuple[tuple[frozenset[int], frozenset[int]], ...]  # (class key, leaves)
    cover_roles: dict[int, Role]
    beta: tuple[int, ...]  # per type-I star: cover vertices it contains, centre included
    alpha_const: tuple[int, ...]  # per type-II star: its (fixed) size

    @property
    def p(self) -> int:
        return len(self.type1_centres)

    @property
    def q(self) -> int:
        return len(self.type2_stars)

    @property
    def stars(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class GuessPair:
    side1: SideGuess
    side2: SideGuess
    pi: tuple[int, ...]  # star i on side 1 pairs with star pi[i] on side 2


def _canon_key(key: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(key))


def enumerate_side_guesses(g: Graph, tc: TwinClasses) -> Iterator[SideGuess]:
    cover = tc.cover
    a = len(cover)
    for p in range(a + 1):
        for centres in combinations(cover, p):
            cset = set(centres)
            # all possible type-II stars: a twin class to anchor the centre in,
            # plus a nonempty leaf set inside its key, avoiding the centres
            cands: list[tuple[frozenset[int], frozenset[int]]] = []
            for key in tc.classes:
                avail = sorted(key - cset)
                for size in range(1, len(avail) + 1):
                    for leaves in combinations(avail, size):
                        cands.append((key, frozenset(leaves)))
            cands.sort(key=lambda c: (_canon_key(c[0]), _canon_key(c[1])))
            for q in range(a - p + 1):
                for chosen in combinations(range(len(cands)), q):
                    stars = [cands[i] for i in chosen]
                    taken: set[int] = set()
                    per_key: dict[frozenset[int], int] = {}
                    ok = True
                    for key, leaves in stars:
                        if leaves & taken:
                            ok = False
                            break
                        taken |= leaves
                        per_key[key] = per_key.get(key, 0) + 1
                        if per_key[key] > tc.class_size(key):
                            ok = False
                            break
                    if not ok:
                        continue
                    yield from _assign_cover_roles(g, tc, centres, tuple(stars), taken)


def _assign_cover_roles(
    g: Graph,
    tc: TwinClasses,
    centres: tuple[int, ...],
    type2: tuple[tuple[frozenset[int], frozenset[int]], ...],
    type2_leaves: set[int],
) -> Iterator[SideGuess]:
    roles: dict[int, Role] = {c: ("centre", i) for i, c in enumerate(centres)}
    for j, (_, leaves) in enumerate(type2):
        for w in leaves:
            roles[w] = ("leaf2", j)
    rest = [w for w in tc.cover if w not in roles]
    # a leftover cover vertex may hang off an adjacent type-I centre, or sit out
    choice_lists = [
        [("unused",)]
        + [("leaf1", i) for i, c in enumerate(centres) if g.has_edge(w, c)]
        for w in rest
    ]
    alpha_const = tuple(1 + len(leaves) for _, leaves in type2)
    for picks in product(*choice_lists):
        full = dict(roles)
        beta = [1] * len(centres)
        for w, role in zip(rest, picks):
            full[w] = role
            if role[0] == "leaf1":
                beta[role[1]] += 1
        yield SideGuess(centres, type2, full, tuple(beta), alpha_const)


def enumerate_guesses(
    g1: Graph, g2: Graph, cover1, cover2
) -> Iterator[GuessPair]:
    """Every consistent guess pair exactly once (canonical star order per side)."""
    tc1 = twin_classes(g1, cover1)
    tc2 = twin_classes(g2, cover2)
    by_count1: dict[int, list[SideGuess]] = {}
    for s in enumerate_side_guesses(g1, tc1):
        by_count1.setdefault(s.stars, []).append(s)
    by_count2: dict[int, list[SideGuess]] = {}
    for s in enumerate_side_guesses(g2, tc2):
        by_count2.setdefault(s.stars, []).append(s)
    for t, sides1 in by_count1.items():
        for s1 in sides1:
            for s2 in by_count2.get(t, ()):
                for pi in permutations(range(t)):
                    if _pi_consistent(s1, s2, pi):
                        yield GuessPair(s1, s2, pi)


def _pi_consistent(s1: SideGuess, s2: SideGuess, pi: tuple[int, ...]) -> bool:
    """Matched type-II pairs must agree on their constant sizes."""
    for i in range(s1.stars):
        j = pi[i]
        if i >= s1.p and j >= s2.p:
            if s1.alpha_const[i - s1.p] != s2.alpha_const[j - s2.p]:
                return False
    return True


def _capacities(side: SideGuess, tc: TwinClasses) -> dict[frozenset[int], int]:
    """Per-class budget of independent-set vertices usable as type-I leaves."""
    anchored: dict[frozenset[int], int] = {}
    for key, _ in side.type2_stars:
        anchored[key] = anchored.get(key, 0) + 1
    return {key: tc.class_size(key) - anchored.get(key, 0) for key in tc.classes}


def _size_ranges(side: SideGuess, tc: TwinClasses) -> list[tuple[int, int]]:
    """Attainable [lo, hi] per star, ignoring cross-star capacity sharing."""
    caps = _capacities(side, tc)
    out = []
    for i, c in enumerate(side.type1_centres):
        room = sum(cap for key, cap in caps.items() if c in key)
        out.append((max(2, side.beta[i]), side.beta[i] + room))
    for size in side.alpha_const:
        out.append((size, size))
    return out


def build_vc_model(pair: GuessPair, tc1: TwinClasses, tc2: TwinClasses) -> bip.BipModel:
    s1, s2 = pair.side1, pair.side2
    caps1 = _capacities(s1, tc1)
    caps2 = _capacities(s2, tc2)
    model = bip.BipModel()
    key_names1 = {key: f"_c{idx}" for idx, key in enumerate(caps1)}
    key_names2 = {key: f"_c{idx}" for idx, key in enumerate(caps2)}

    for i in range(s1.p):
        model.add_var(f"alpha_{i}", 2, tc1.n)  # stars are non-trivial: floor of 2
    for j in range(s2.p):
        model.add_var(f"gamma_{j}", 2, tc2.n)
    for i in range(s1.p):
        for key, cap in caps1.items():
            model.add_var(f"x_{i}{key_names1[key]}", 0, max(cap, 0))
    for j in range(s2.p):
        for key, cap in caps2.items():
            model.add_var(f"y_{j}{key_names2[key]}", 0, max(cap, 0))

    for key, cap in caps1.items():
        model.add_constraint(
            {f"x_{i}{key_names1[key]}": 1 for i in range(s1.p)}, bip.LE, cap
        )
    for key, cap in caps2.items():
        model.add_constraint(
            {f"y_{j}{key_names2[key]}": 1 for j in range(s2.p)}, bip.LE, cap
        )
    for i, c in enumerate(s1.type1_centres):
        for key in caps1:
            if c not in key:  # class members are not adjacent to this centre
                model.add_constraint({f"x_{i}{key_names1[key]}": 1}, bip.EQ, 0)
    for j, d in enumerate(s2.type1_centres):
        for key in caps2:
            if d not in key:
                model.add_constraint({f"y_{j}{key_names2[key]}": 1}, bip.EQ, 0)
    for i in range(s1.p):
        coeffs = {f"alpha_{i}": 1}
        coeffs.update({f"x_{i}{key_names1[key]}": -1 for key in caps1})
        model.add_constraint(coeffs, bip.EQ, s1.beta[i])
    for j in range(s2.p):
        coeffs = {f"gamma_{j}": 1}
        coeffs.update({f"y_{j}{key_names2[key]}": -1 for key in caps2})
        model.add_constraint(coeffs, bip.EQ, s2.beta[j])

    # matched stars have equal sizes
    for i in range(s1.stars):
        j = pair.pi[i]
        i_var = f"alpha_{i}" if i < s1.p else None
        j_var = f"gamma_{j}" if j < s2.p else None
        if i_var and j_var:
            model.add_constraint({i_var: 1, j_var: -1}, bip.EQ, 0)
        elif i_var:
            model.add_constraint({i_var: 1}, bip.EQ, s2.alpha_const[j - s2.p])
        elif j_var:
            model.add_constraint({j_var: 1}, bip.EQ, s1.alpha_const[i - s1.p])
        elif s1.alpha_const[i - s1.p] != s2.alpha_const[j - s2.p]:
            model.add_constraint({}, bip.EQ, 1)  # unsatisfiable marker

    model.set_objective({f"alpha_{i}": 1 for i in range(s1.p)})
    return model


def solve_vc(g1: Graph, g2: Graph, k: int, node_budget: int = 2_000_000) -> int:
    """Largest common star forest size, given both covers are within k."""
    cover1 = min_vertex_cover(g1, k)
    cover2 = min_vertex_cover(g2, k)
    for g, cover, tag in ((g1, cover1, "first"), (g2, cover2, "second")):
        if cover is None:
            actual = len(min_vertex_cover(g, g.n))
            raise PreconditionError(
                f"{tag} graph has minimum vertex cover {actual} > k={k}"
            )
    tc1 = twin_classes(g1, cover1)
    tc2 = twin_classes(g2, cover2)
    ceiling = min(g1.n, g2.n)
    best = 0
    for pair in enumerate_guesses(g1, g2, cover1, cover2):
        if best >= ceiling:
            break
        if not _ranges_compatible(pair, tc1, tc2):
            continue
        sol = bip.solve(build_vc_model(pair, tc1, tc2), node_budget)
        if sol.status == "optimal":
            total = sol.objective_value + sum(pair.side1.alpha_const)
            if total > best:
                best = total
    return best


def _ranges_compatible(pair: GuessPair, tc1: TwinClasses, tc2: TwinClasses) -> bool:
    """Cheap necessary condition: matched size ranges must intersect."""
    r1 = _size_ranges(pair.side1, tc1)
    r2 = _size_ranges(pair.side2, tc2)
    for i in range(pair.side1.stars):
        lo1, hi1 = r1[i]
        lo2, hi2 = r2[pair.pi[i]]
        if max(lo1, lo2) > min(hi1, hi2):
            return False
    return True
