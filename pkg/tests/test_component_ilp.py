import itertools
import random

import pytest

from starforest import bip
from starforest.component_ilp import (
    build_cc_model,
    canonical_form,
    catalog_components,
    realisation_table,
    solve_cc,
    solve_td_deg,
)
from starforest.errors import PreconditionError, ResourceLimitError
from starforest.graph import Graph
from starforest.oracle import opt_common_vector

from conftest import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    random_graph,
    star_graph,
)


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    e2 = set(g2.edges())
    for perm in itertools.permutations(range(g1.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in e2 for u, v in g1.edges()):
            return True
    return False


def signatures_by_edge_subsets(g: Graph, k: int) -> set[tuple[int, ...]]:
    """Independent oracle: try every edge subset, keep the star-forest ones."""
    edges = list(g.edges())
    out = set()
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            deg = {}
            for u, v in subset:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            # a star forest: every edge has an endpoint of degree 1 and
            # components have diameter <= 2, i.e. no edge joins two deg>=2 ends
            if any(deg[u] > 1 and deg[v] > 1 for u, v in subset):
                continue
            sig = [0] * k
            counted = set()
            ok = True
            for u, v in subset:
                centre = u if deg[u] > 1 else v if deg[v] > 1 else min(u, v)
                if centre in counted:
                    continue
                counted.add(centre)
                leaves = deg[centre]
                if leaves > k:
                    ok = False
                    break
                sig[leaves - 1] += 1
            if ok:
                out.add(tuple(sig))
    return out


class TestCanonicalForm:
    def test_matches_brute_isomorphism(self):
        rng = random.Random(71)
        graphs = [random_graph(rng, rng.randint(1, 6), rng.choice([0.3, 0.6])) for _ in range(25)]
        for a in graphs:
            for b in graphs:
                assert (canonical_form(a) == canonical_form(b)) == brute_isomorphic(a, b)


class TestCatalog:
    def test_shared_shape(self):
        k2 = Graph.from_edges(2, [(0, 1)])
        cat = catalog_components(disjoint_union(k2, k2), k2, 2)
        assert len(cat.shapes) == 1 and cat.counts1 == (2,) and cat.counts2 == (1,)

    def test_three_shapes(self):
        cat = catalog_components(
            disjoint_union(path_graph(3), Graph.from_edges(2, [(0, 1)])),
            complete_graph(3),
            3,
        )
        assert len(cat.shapes) == 3
        assert sorted(cat.counts1) == [0, 1, 1] and sorted(cat.counts2) == [0, 0, 1]

    def test_oversized_component(self):
        with pytest.raises(PreconditionError, match="4 vertices"):
            catalog_components(path_graph(4), path_graph(3), 3)

    def test_budget(self):
        with pytest.raises(ResourceLimitError):
            catalog_components(path_graph(3), path_graph(3), 9)


class TestRealisations:
    @pytest.mark.parametrize(
        "graph,k,expected",
        [
            (Graph.from_edges(2, [(0, 1)]), 2, {(0, 0), (1, 0)}),
            (path_graph(3), 3, {(0, 0, 0), (1, 0, 0), (0, 1, 0)}),
            (complete_graph(3), 3, {(0, 0, 0), (1, 0, 0), (0, 1, 0)}),
        ],
    )
    def test_small_shapes(self, graph, k, expected):
        cat = catalog_components(graph, graph, k)
        assert realisation_table(cat)[0] == expected

    def test_matches_edge_subset_oracle(self):
        rng = random.Random(72)
        for _ in range(20):
            n = rng.randint(1, 5)
            g = random_graph(rng, n, 0.6)
            comp0 = g.components()[0]
            sub, _ = g.induced(comp0)
            k = max(2, sub.n)
            cat = catalog_components(sub, sub, k)
            assert realisation_table(cat)[0] == signatures_by_edge_subsets(sub, k)

    def test_downward_closure(self):
        cat = catalog_components(cycle_graph(5), cycle_graph(5), 5)
        sigs = realisation_table(cat)[0]
        assert (0,) * 5 in sigs
        for sig in sigs:
            for j in range(5):
                if sig[j] == 0:
                    continue
                dropped = list(sig)
                dropped[j] -= 1
                assert tuple(dropped) in sigs
                if j > 0:
                    shrunk = list(sig)
                    shrunk[j] -= 1
                    shrunk[j - 1] += 1
                    assert tuple(shrunk) in sigs


class TestSolve:
    def test_examples(self):
        k2 = Graph.from_edges(2, [(0, 1)])
        assert solve_cc(disjoint_union(k2, k2, k2), disjoint_union(k2, k2), 2) == 4
        assert (
            solve_cc(
                disjoint_union(complete_graph(3), k2),
                disjoint_union(path_graph(3), path_graph(3)),
                3,
            )
            == 5
        )
        assert solve_cc(Graph.from_edges(3, []), Graph.from_edges(3, []), 3) == 0

    def test_td_deg_examples(self):
        k2 = Graph.from_edges(2, [(0, 1)])
        assert solve_td_deg(star_graph(2), star_graph(2)) == 3
        assert solve_td_deg(disjoint_union(k2, k2), disjoint_union(k2, k2)) == 4
        with pytest.raises(ResourceLimitError):
            solve_td_deg(path_graph(9), path_graph(9))

    def test_star_count_balance(self):
        g1 = disjoint_union(complete_graph(3), Graph.from_edges(2, [(0, 1)]))
        g2 = disjoint_union(path_graph(3), path_graph(3))
        cat = catalog_components(g1, g2, 3)
        table = realisation_table(cat)
        model, names = build_cc_model(cat, table)
        sol = bip.solve(model)
        per_j = [0] * cat.k
        for var, value in sol.assignment.items():
            i, sig = names[var]
            sign = 1 if var.startswith("x") else -1
            for j in range(cat.k):
                per_j[j] += sign * sig[j] * value
        assert per_j == [0] * cat.k

    def test_oracle_equivalence_small_components(self):
        rng = random.Random(73)
        for _ in range(30):
            def build():
                parts = []
                total = 0
                while total < rng.randint(4, 10):
                    s = rng.randint(1, 5)
                    parts.append(random_graph(rng, s, 0.6))
                    total += s
                return disjoint_union(*parts)

            g1, g2 = build(), build()
            if g1.n > 12 or g2.n > 12:
                continue
            assert solve_cc(g1, g2, 5) == opt_common_vector(g1, g2)[0]
