"""Graphs, chordality certificates, quasi-trees, and vertex relabeling.

The central pipeline here: a quadratic squarefree monomial ideal is the
edge ideal of a graph G; it has a linear resolution over every field
exactly when the complement of G is chordal.  Chordal graphs are the
1-skeletons of quasi-trees (simplicial complexes built leaf by leaf),
and peeling a leaf order of the clique complex backwards produces a
vertex relabeling under which the ideal satisfies the upward pair
condition checked by ``check_star``.

Chordality is decided by maximum cardinality search plus perfect
elimination order verification; every verdict carries a certificate
(a PEO, or a chordless cycle of length >= 4).
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import Falsification, InputError, PreconditionError
from .monomials import Monomial, MonomialIdeal, monomial_from_support


@dataclass(frozen=True)
class Graph:
    """Finite graph on vertices 1..n; loops only when allow_loops is set."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    loops: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"need n >= 0, got {self.n}")
        norm = set()
        for e in self.edges:
            try:
                i, j = e
            except (TypeError, ValueError):
                raise InputError(f"edge {e!r} is not a pair") from None
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InputError(f"edge {e} out of vertex range 1..{self.n}")
            if i == j:
                raise InputError(f"loop {e} must be passed via loops=, not edges=")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))
        loops = frozenset(self.loops)
        for v in loops:
            if not 1 <= v <= self.n:
                raise InputError(f"loop at {v} out of vertex range 1..{self.n}")
        object.__setattr__(self, "loops", loops)

    @property
    def has_loops(self) -> bool:
        return bool(self.loops)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return i in self.loops
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        """Neighbors through simple edges (a loop does not make v its own neighbor)."""
        return frozenset(j if i == v else i for i, j in self.edges if v in (i, j))

    def simple(self) -> "Graph":
        return Graph(self.n, self.edges) if self.loops else self

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def graph_from_json(obj: str | bytes | dict) -> Graph:
    """Build a graph from {"n": ..., "edges": [[i, j], ...], "loops": [i, ...]}.

    Accepts the dict directly or a JSON string.  Vertex range and edge shape
    errors surface as InputError.
    """
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad graph JSON: {exc}") from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int):
        raise InputError('graph JSON needs an integer "n"')
    edges = obj.get("edges", [])
    loops = obj.get("loops", [])
    if not isinstance(edges, list) or not isinstance(loops, list):
        raise InputError('"edges" and "loops" must be lists')
    pairs = set()
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2
                and all(isinstance(v, int) for v in e)):
            raise InputError(f"edge {e!r} is not a pair of integers")
        pairs.add((e[0], e[1]))
    if not all(isinstance(v, int) for v in loops):
        raise InputError("loops must be integers")
    return Graph(obj["n"], frozenset(pairs), frozenset(loops))


def graph_to_json(graph: Graph) -> dict:
    return {"n": graph.n,
            "edges": [[a, b] for a, b in graph.sorted_edges()],
            "loops": sorted(graph.loops)}


def graph_of_ideal(ideal: MonomialIdeal) -> Graph:
    """The graph with an edge {i,j} per generator x_i x_j, loops for squares."""
    ideal._require_degree_two()
    edges = set()
    loops = set()
    for g in ideal.gens:
        sup = g.support
        if len(sup) == 2:
            edges.add(sup)
        else:
            loops.add(sup[0])
    return Graph(ideal.n, frozenset(edges), frozenset(loops))


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """Inverse of graph_of_ideal: x_i x_j per edge, x_i^2 per loop."""
    gens = [monomial_from_support(graph.n, e) for e in graph.edges]
    gens += [monomial_from_support(graph.n, (v, v)) for v in graph.loops]
    return MonomialIdeal(graph.n, tuple(gens))


def complement(graph: Graph) -> Graph:
    """Complement on the same vertex set.  Defined for simple graphs only."""
    if graph.has_loops:
        raise InputError("complement of a graph with loops is undefined here; strip loops first")
    all_pairs = {(i, j) for i in range(1, graph.n + 1) for j in range(i + 1, graph.n + 1)}
    return Graph(graph.n, frozenset(all_pairs - graph.edges))


# ---------------------------------------------------------------------------
# chordality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chordality:
    """Chordality verdict with certificate.

    Exactly one of ``peo`` (a perfect elimination order, listed in
    elimination order) and ``chordless_cycle`` (an induced cycle of
    length >= 4, listed in cyclic order) is set.
    """

    is_chordal: bool
    peo: tuple[int, ...] | None = None
    chordless_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.is_chordal


def _mcs_order(graph: Graph) -> list[int]:
    """Maximum cardinality search; returns a candidate elimination order."""
    weight = {v: 0 for v in range(1, graph.n + 1)}
    unnumbered = set(weight)
    picked: list[int] = []
    while unnumbered:
        # deterministic tie break: smallest vertex among max-weight ones
        v = min(unnumbered, key=lambda u: (-weight[u], u))
        picked.append(v)
        unnumbered.discard(v)
        for u in graph.neighbors(v):
            if u in unnumbered:
                weight[u] += 1
    picked.reverse()
    return picked


def verify_peo(graph: Graph, order) -> tuple[int, int, int] | None:
    """Check a perfect elimination order; return a failing triple or None.

    On failure the triple (v, u, w) has u, w later neighbors of v with
    u earliest, and {u, w} not an edge.
    """
    order = list(order)
    if sorted(order) != list(range(1, graph.n + 1)):
        raise InputError(f"{order} is not an ordering of 1..{graph.n}")
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [u for u in graph.neighbors(v) if pos[u] > i]
        if not later:
            continue
        u0 = min(later, key=pos.__getitem__)
        for w in later:
            if w != u0 and not graph.has_edge(u0, w):
                return (v, u0, w)
    return None


def find_chordless_cycle(graph: Graph) -> tuple[int, ...] | None:
    """Some chordless cycle of length >= 4, or None if the graph has none.

    For each vertex v and non-adjacent neighbor pair {u, w}, search for a
    shortest u-w path avoiding v and all other neighbors of v.  A shortest
    path in that reduced graph is induced, so closing it through v gives a
    chordless cycle; every chordless cycle arises this way from any of its
    vertices.
    """
    for v in range(1, graph.n + 1):
        nb = sorted(graph.neighbors(v))
        for u, w in itertools.combinations(nb, 2):
            if graph.has_edge(u, w):
                continue
            banned = (set(nb) | {v}) - {u, w}
            path = _shortest_path(graph, u, w, banned)
            if path is not None:
                return (v, *path)
    return None


def _shortest_path(graph: Graph, src: int, dst: int, banned: set[int]) -> tuple[int, ...] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            out = []
            while x is not None:
                out.append(x)
                x = prev[x]
            return tuple(reversed(out))
        for y in sorted(graph.neighbors(x)):
            if y not in prev and y not in banned:
                prev[y] = x
                queue.append(y)
    return None


def is_chordal(graph: Graph) -> Chordality:
    """Chordality with certificate.  Loops are irrelevant and ignored."""
    g = graph.simple()
    order = _mcs_order(g)
    if verify_peo(g, order) is None:
        return Chordality(True, peo=tuple(order))
    cycle = find_chordless_cycle(g)
    if cycle is None:
        raise Falsification("MCS order failed PEO check but no chordless cycle was found")
    return Chordality(False, chordless_cycle=cycle)


# ---------------------------------------------------------------------------
# simplicial complexes, leaves, quasi-trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets (inclusion-maximal faces) on 1..n."""

    n: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        facets = [frozenset(f) for f in self.facets]
        for f in facets:
            if not f:
                raise InputError("empty facet")
            if any(not 1 <= v <= self.n for v in f):
                raise InputError(f"facet {sorted(f)} out of vertex range 1..{self.n}")
        maximal = [f for f in facets if not any(f < g for g in facets)]
        seen = set()
        canon = []
        for f in sorted(maximal, key=lambda f: sorted(f)):
            if f not in seen:
                seen.add(f)
                canon.append(f)
        object.__setattr__(self, "facets", tuple(canon))

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    def one_skeleton(self) -> Graph:
        edges = set()
        for f in self.facets:
            edges.update(itertools.combinations(sorted(f), 2))
        return Graph(self.n, frozenset(edges))


def maximal_cliques(graph: Graph) -> list[frozenset[int]]:
    """All maximal cliques, via Bron-Kerbosch with pivoting.  Simple graphs."""
    g = graph.simple()
    if g.n == 0:
        return []
    out: list[frozenset[int]] = []

    def bk(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: (len(g.neighbors(v) & p), -v))
        for v in sorted(p - g.neighbors(pivot)):
            nv = g.neighbors(v)
            bk(r | {v}, p & nv, x & nv)
            p.discard(v)
            x.add(v)

    bk(set(), set(range(1, g.n + 1)), set())
    return sorted(out, key=lambda f: sorted(f))


def clique_complex(graph: Graph, peo=None) -> SimplicialComplex:
    """The complex of cliques of a graph, presented by its maximal cliques.

    With a perfect elimination order supplied, the facets are read off as
    the maximal sets v + later-neighbors(v); the order is validated first.
    Without one, maximal cliques are enumerated directly, which works for
    arbitrary (not necessarily chordal) graphs.
    """
    g = graph.simple()
    if peo is None:
        cliques = maximal_cliques(g)
    else:
        bad = verify_peo(g, peo)
        if bad is not None:
            raise InputError(f"not a perfect elimination order, witness {bad}")
        pos = {v: i for i, v in enumerate(peo)}
        candidates = [
            frozenset({v} | {u for u in g.neighbors(v) if pos[u] > pos[v]})
            for v in peo
        ]
        cliques = candidates  # constructor drops non-maximal ones
    return SimplicialComplex(g.n, tuple(cliques))


def is_leaf(complex_: SimplicialComplex, facet_index: int, among=None) -> bool:
    """Is facets[facet_index] a leaf: some branch facet contains every
    intersection of the others with it?  A sole facet is a leaf."""
    facets = complex_.facets
    if among is None:
        among = range(len(facets))
    f = facets[facet_index]
    others = [facets[i] for i in among if i != facet_index]
    if not others:
        return True
    inters = [h & f for h in others]
    for g in others:
        gf = g & f
        if all(it <= gf for it in inters):
            return True
    return False


def free_vertices(complex_: SimplicialComplex, facet_index: int, among=None) -> frozenset[int]:
    """Vertices of the chosen facet that belong to no other facet."""
    facets = complex_.facets
    if among is None:
        among = range(len(facets))
    f = facets[facet_index]
    out = set(f)
    for i in among:
        if i != facet_index:
            out -= facets[i]
    return frozenset(out)


def leaf_order(complex_: SimplicialComplex) -> tuple[int, ...] | None:
    """A facet order F_1..F_m with each F_i a leaf of <F_1..F_i>, or None.

    Greedy: repeatedly remove a leaf of what remains (first in canonical
    facet order, for determinism).  Removing a leaf of a quasi-tree leaves
    a quasi-tree, so the greedy choice never needs to be revisited; the
    test suite validates this against an exhaustive search on small cases.
    """
    remaining = list(range(len(complex_.facets)))
    reversed_order: list[int] = []
    while remaining:
        pick = None
        for idx in remaining:
            if is_leaf(complex_, idx, among=remaining):
                pick = idx
                break
        if pick is None:
            return None
        remaining.remove(pick)
        reversed_order.append(pick)
    return tuple(reversed(reversed_order))


def is_quasi_tree(complex_: SimplicialComplex) -> bool:
    return leaf_order(complex_) is not None


# ---------------------------------------------------------------------------
# quasi-tree vertex relabeling
# ---------------------------------------------------------------------------

def dirac_labeling(graph: Graph, squares: Iterable[int] = ()) -> tuple[int, ...]:
    """Relabel vertices so the edge ideal of *graph* satisfies check_star.

    The input is the graph of the ideal (no loops; strip squares first).
    Requires the complement to be chordal; otherwise a PreconditionError
    carrying the chordless cycle is raised.  The labeling is read off a
    leaf order of the clique complex of the complement, peeled backwards:
    the free vertices of the last facet get the highest labels, then the
    free vertices of the next prefix, and so on.

    ``squares`` lists vertices i whose square x_i^2 is a generator of the
    ideal under study.  Ties inside a block are broken by pushing those
    vertices to the top of the block and sorting ascending otherwise.
    The placement matters: a square vertex labeled below one of its
    complement-neighbors can put a lead of x-degree 2 into the reduced
    Rees basis even when both generator conditions hold, so every
    complement-neighbor of a square vertex must end up with a smaller
    label.  Peeling guarantees that for its facet-mates; the top slot
    settles the free vertices sharing its block.

    Returns the permutation as a tuple: old vertex i gets new label
    ``labeling[i-1]``.
    """
    if graph.has_loops:
        raise InputError("dirac_labeling takes the squarefree part's graph; strip loops first")
    squares = frozenset(squares)
    if any(not isinstance(v, int) or not 1 <= v <= graph.n for v in squares):
        raise InputError(f"square vertices {sorted(squares)} out of range 1..{graph.n}")
    comp = complement(graph)
    cert = is_chordal(comp)
    if not cert:
        raise PreconditionError(
            f"complement is not chordal; chordless cycle {cert.chordless_cycle}",
            witness=cert.chordless_cycle,
        )
    cx = clique_complex(comp, cert.peo)
    order = leaf_order(cx)
    if order is None:
        raise Falsification("chordal complement's clique complex admits no leaf order")

    labels = [0] * graph.n
    next_label = graph.n
    prefix_sets = []
    acc: set[int] = set()
    for idx in order:
        prefix_sets.append(set(acc))
        acc |= cx.facets[idx]
    for r in range(len(order) - 1, -1, -1):
        facet = cx.facets[order[r]]
        free = sorted(facet - prefix_sets[r], key=lambda v: (v in squares, v))
        base = next_label - len(free)
        for offset, v in enumerate(free, start=1):
            if labels[v - 1]:
                raise Falsification(f"vertex {v} labeled twice during quasi-tree peel")
            labels[v - 1] = base + offset
        next_label = base
    if next_label != 0 or sorted(labels) != list(range(1, graph.n + 1)):
        raise Falsification(f"quasi-tree peel produced a non-permutation {labels}")

    relabeled = edge_ideal(graph).relabel(tuple(labels))
    star = check_star(relabeled)
    if not star.ok:
        raise Falsification(
            f"relabeled edge ideal fails the upward pair condition at {star.witness}"
        )
    return tuple(labels)


# ---------------------------------------------------------------------------
# generator-pattern checks on quadratic ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_star(ideal: MonomialIdeal) -> CheckResult:
    """For every generator x_i x_j (i != j) and every k > i, j: is
    x_i x_k or x_j x_k also a generator?  Witness: first failing (i, j, k)."""
    ideal._require_degree_two()
    pairs = ideal.pair_set()
    for i, j in sorted(pairs):
        for k in range(j + 1, ideal.n + 1):
            if (i, k) in pairs or (j, k) in pairs:
                continue
            return CheckResult(False, (i, j, k))
    return CheckResult(True)


def check_star_star(ideal: MonomialIdeal) -> CheckResult:
    """For every square x_i^2, every j > i carrying some generator x_k x_j
    must force x_i x_j or x_i x_k into the ideal.  Witness: (i, j, k).

    The quantifier runs over each such k, with k = j allowed (then
    x_k x_j means x_j^2)."""
    ideal._require_degree_two()
    pairs = ideal.pair_set()
    squares = sorted(ideal.square_set())

    def member(p: int, q: int) -> bool:
        if p == q:
            return p in squares
        return (min(p, q), max(p, q)) in pairs

    gens2 = [(a, b) for a, b in sorted(pairs)] + [(s, s) for s in squares]
    gens2.sort()
    for i in squares:
        for a, b in gens2:
            # generator x_a x_b read as x_k x_j both ways round
            for j, k in ((b, a), (a, b)) if a != b else ((a, a),):
                if j <= i:
                    continue
                if member(i, j) or member(i, k):
                    continue
                return CheckResult(False, (i, j, k))
    return CheckResult(True)


def check_free_vertex_squares(ideal: MonomialIdeal) -> CheckResult:
    """Squares must sit on free vertices of the complement quasi-tree,
    no two in one facet.

    Splits the ideal as (squares, J), takes the clique complex of the
    complement of J's graph (requires that complement chordal), and
    checks every square index is a free vertex and that no facet holds
    two square indices.  Witnesses: ("not_free", i) or
    ("shared_facet", i, j, facet-as-sorted-tuple)."""
    j_part, squares = ideal.squarefree_part()
    if not squares:
        return CheckResult(True)
    comp = complement(graph_of_ideal(j_part).simple())
    cert = is_chordal(comp)
    if not cert:
        raise PreconditionError(
            f"complement of the squarefree part is not chordal; cycle {cert.chordless_cycle}",
            witness=cert.chordless_cycle,
        )
    cx = clique_complex(comp, cert.peo)
    containing = {i: [f for f in cx.facets if i in f] for i in squares}
    for i in squares:
        if len(containing[i]) != 1:
            return CheckResult(False, ("not_free", i))
    for i, j in itertools.combinations(squares, 2):
        if containing[i][0] == containing[j][0]:
            return CheckResult(False, ("shared_facet", i, j, tuple(sorted(containing[i][0]))))
    return CheckResult(True)
