"""Toric presentation of the Rees algebra of a quadratic monomial ideal.

For I generated in degree 2 in n variables, the Rees algebra is the
monomial subring of the cone graph: vertices 1..n+1, an edge (a, b) for
each generator x_a x_b (a loop when a = b), and a cone edge (i, n+1)
for each ring variable.  The presentation ideal in
T = K[x_1..x_n, y_e : e generator] is the toric ideal of the exponent
matrix whose columns are x_i -> e_i + e_{n+1} and y_(a,b) -> e_a + e_b.

The pipeline: integer kernel of that matrix (a lattice basis, saturated
for free because kernels of integer matrices are pure subgroups), then
saturation by every variable via the reverse-lex trick for homogeneous
ideals, then the reduced Groebner basis under the requested order.

Everything is pure-difference binomial arithmetic on exponent tuples;
no general polynomial type is needed.  Two independent cross-checks
live here as well: elimination (adjoin target variables z and eliminate
them, a slow oracle for tests) and the combinatorial Graver basis via
primitive even closed walks of the cone graph.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .errors import BudgetExhausted, Falsification, InputError
from .monomials import MonomialIdeal


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vmax(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _vmin(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def _divides(a, b):
    """Does x^a divide x^b?"""
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class Binomial:
    """A pure difference x^lead - x^tail, already oriented (lead > tail)."""

    lead: tuple[int, ...]
    tail: tuple[int, ...]

    def vector(self) -> tuple[int, ...]:
        return _vsub(self.lead, self.tail)

    def x_degree(self, n: int) -> int:
        """Largest total degree in the first n variables on either side."""
        return max(sum(self.lead[:n]), sum(self.tail[:n]))

    def coprime_sides(self) -> bool:
        return all(min(x, y) == 0 for x, y in zip(self.lead, self.tail))


def _norm_pair(u: tuple[int, ...], v: tuple[int, ...]):
    """Orientation-free form of a binomial, for set membership up to sign."""
    return (u, v) if u >= v else (v, u)


def binomial_from_vector(w) -> Binomial | None:
    plus = tuple(max(x, 0) for x in w)
    minus = tuple(-min(x, 0) for x in w)
    if plus == minus:
        return None
    return Binomial(plus, minus)


# ---------------------------------------------------------------------------
# term orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """A lex or graded-reverse-lex order over a fixed variable ranking.

    ``ranking`` lists variable indices from most to least significant.
    key(a) sorts ascending in the order, so key(a) > key(b) iff a > b.
    """

    name: str
    ranking: tuple[int, ...]
    graded: bool

    def key(self, exps):
        if self.graded:
            return (sum(exps), tuple(-exps[r] for r in reversed(self.ranking)))
        return tuple(exps[r] for r in self.ranking)

    def gt(self, a, b) -> bool:
        return self.key(a) > self.key(b)


@dataclass(frozen=True)
class ReesRing:
    """Variable bookkeeping for T = K[x_1..x_n, y_e].

    Variables 0..n-1 are x_1..x_n; variable n+e is the e-th generator
    edge in ascending (a, b) order, a <= b.  The apex vertex of the cone
    graph is n+1.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "ReesRing":
        # the zero ideal is allowed: no y-variables, P = 0
        if not ideal.is_zero() and ideal.degree != 2:
            raise InputError("Rees presentation implemented for ideals generated in degree 2")
        edges = []
        for g in ideal.gens:
            s = g.support
            edges.append((s[0], s[-1]) if len(s) == 2 else (s[0], s[0]))
        return cls(ideal.n, tuple(sorted(edges)))

    @property
    def num_vars(self) -> int:
        return self.n + len(self.edges)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(
            [f"x{i}" for i in range(1, self.n + 1)]
            + [f"y[{a},{b}]" for a, b in self.edges]
        )

    def columns(self) -> list[tuple[int, ...]]:
        """Exponent matrix columns, one per variable, rows 1..n+1."""
        cols = []
        for i in range(1, self.n + 1):
            col = [0] * (self.n + 1)
            col[i - 1] = 1
            col[self.n] = 1
            cols.append(tuple(col))
        for a, b in self.edges:
            col = [0] * (self.n + 1)
            col[a - 1] += 1
            col[b - 1] += 1
            cols.append(tuple(col))
        return cols

    def edge_lex(self) -> TermOrder:
        """Lex with y-variables first (ascending edge), then x_1..x_n."""
        ranking = tuple(range(self.n, self.num_vars)) + tuple(range(self.n))
        return TermOrder("edge-lex", ranking, graded=False)

    def grevlex_last(self, v: int) -> TermOrder:
        """Graded reverse lex with variable v cheapest (used for saturation)."""
        ranking = tuple(j for j in range(self.num_vars) if j != v) + (v,)
        return TermOrder(f"grevlex-last-{v}", ranking, graded=True)


def format_monomial_t(exps, names) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_binomial(b: Binomial, names) -> str:
    return f"{format_monomial_t(b.lead, names)} - {format_monomial_t(b.tail, names)}"


# ---------------------------------------------------------------------------
# integer kernel
# ---------------------------------------------------------------------------

def integer_kernel(rows: list[list[int]]) -> list[tuple[int, ...]]:
    """Basis of the integer kernel lattice of a matrix (rows of ints).

    Column reduction by unimodular operations, tracking the transform;
    the columns of the transform that hit zero columns of the reduced
    matrix form a basis.  The kernel of a map into a torsion-free group
    is a pure subgroup, so this basis generates all integer solutions.
    """
    if not rows:
        return []
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    def addmul(i, j, q):
        # column_i -= q * column_j
        for row in m:
            row[i] -= q * row[j]
        for row in u:
            row[i] -= q * row[j]

    front = 0
    for r in range(nrows):
        if front == ncols:
            break
        while True:
            nz = [j for j in range(front, ncols) if m[r][j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: (abs(m[r][j]), j))
            if j0 != front:
                swap(j0, front)
            clean = True
            for j in range(front + 1, ncols):
                if m[r][j] != 0:
                    q = m[r][j] // m[r][front]
                    addmul(j, front, q)
                    if m[r][j] != 0:
                        clean = False
            if clean:
                break
        if m[r][front] != 0:
            front += 1
    return [tuple(u[i][j] for i in range(ncols)) for j in range(front, ncols)]


# ---------------------------------------------------------------------------
# binomial Buchberger
# ---------------------------------------------------------------------------

def _orient(u, t, order: TermOrder) -> Binomial | None:
    if u == t:
        return None
    return Binomial(u, t) if order.gt(u, t) else Binomial(t, u)


class _Budget:
    def __init__(self, limit: int, what: str):
        self.limit = limit
        self.spent = 0
        self.what = what

    def tick(self, cost: int = 1):
        self.spent += cost
        if self.spent > self.limit:
            raise BudgetExhausted(f"{self.what}: exceeded {self.limit} steps")


def _top_reduce(f: Binomial | None, basis, order, budget) -> Binomial | None:
    """Reduce the lead until no basis lead divides it.  None means zero."""
    while f is not None:
        for g in basis:
            if _divides(g.lead, f.lead):
                budget.tick()
                shift = _vsub(f.lead, g.lead)
                f = _orient(_vadd(shift, g.tail), f.tail, order)
                break
        else:
            return f
    return None


def buchberger(gens, order: TermOrder, budget_limit: int = 500_000) -> list[Binomial]:
    """A Groebner basis of the binomial ideal generated by *gens*.

    Normal selection (smallest S-pair lcm first), plus the coprime-lead
    criterion.  All arithmetic stays pure difference; a budget bounds
    the total number of reduction and pair steps.
    """
    budget = _Budget(budget_limit, "buchberger")
    basis: list[Binomial] = []
    seen = set()
    for f in gens:
        g = _orient(f.lead, f.tail, order) if isinstance(f, Binomial) else f
        if g is not None and (g.lead, g.tail) not in seen:
            seen.add((g.lead, g.tail))
            basis.append(g)

    heap: list = []

    def push_pairs(j):
        for i in range(j):
            li, lj = basis[i].lead, basis[j].lead
            if all(min(a, b) == 0 for a, b in zip(li, lj)):
                continue  # coprime leads reduce to zero
            lcm = _vmax(li, lj)
            heapq.heappush(heap, (sum(lcm), lcm, i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, lcm, i, j = heapq.heappop(heap)
        budget.tick()
        fi, fj = basis[i], basis[j]
        if _vmax(fi.lead, fj.lead) != lcm:
            continue  # stale entry
        s = _orient(
            _vadd(_vsub(lcm, fj.lead), fj.tail),
            _vadd(_vsub(lcm, fi.lead), fi.tail),
            order,
        )
        s = _top_reduce(s, basis, order, budget)
        if s is None:
            continue
        if (s.lead, s.tail) in seen:
            continue
        seen.add((s.lead, s.tail))
        basis.append(s)
        push_pairs(len(basis) - 1)
    return basis


def _tail_reduce(f: Binomial, basis, order, budget) -> Binomial:
    t = f.tail
    changed = True
    while changed:
        changed = False
        for g in basis:
            if _divides(g.lead, t):
                budget.tick()
                t = _vadd(_vsub(t, g.lead), g.tail)
                changed = True
                break
    # tails only move down in the order, so they can never meet the lead
    if t == f.lead:
        raise Falsification(f"tail reduction collapsed a binomial: {f}")
    return Binomial(f.lead, t)


def reduced_groebner(gens, order: TermOrder, budget_limit: int = 500_000) -> tuple[Binomial, ...]:
    """The reduced Groebner basis: minimal leads, fully reduced tails.

    Deterministic: output sorted by the order key of the leads.
    """
    basis = buchberger(gens, order, budget_limit)
    budget = _Budget(budget_limit, "interreduction")
    basis.sort(key=lambda g: order.key(g.lead))
    minimal: list[Binomial] = []
    for g in basis:
        if not any(_divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    reduced = [_tail_reduce(g, minimal, order, budget) for g in minimal]
    reduced.sort(key=lambda g: order.key(g.lead))
    return tuple(reduced)


# ---------------------------------------------------------------------------
# saturation and the toric pipeline
# ---------------------------------------------------------------------------

def _saturate_variable(gens, ring: ReesRing, v: int, budget_limit: int):
    """Generators of (gens) : v^infinity, valid for homogeneous ideals.

    Reverse lex with v cheapest makes in(g) carry the lowest v-power of
    g; dividing every reduced basis element by its v-content then spans
    the saturation.
    """
    order = ring.grevlex_last(v)
    out = []
    for g in reduced_groebner(gens, order, budget_limit):
        k = min(g.lead[v], g.tail[v])
        if k:
            drop = tuple(k if j == v else 0 for j in range(ring.num_vars))
            g = Binomial(_vsub(g.lead, drop), _vsub(g.tail, drop))
        out.append(g)
    return out


@dataclass(frozen=True)
class ToricBasis:
    """Reduced Groebner basis of the Rees presentation ideal."""

    ring: ReesRing
    order: TermOrder
    elements: tuple[Binomial, ...]
    hilbert_checked_to: int

    def formatted(self) -> list[str]:
        return [format_binomial(g, self.ring.names) for g in self.elements]

    def to_json(self) -> dict:
        n = self.ring.n
        return {
            "order": self.order.name,
            "elements": [
                {
                    "plus": format_monomial_t(g.lead, self.ring.names),
                    "minus": format_monomial_t(g.tail, self.ring.names),
                    "deg_x": sum(g.lead[:n]),
                    "deg_y": sum(g.lead[n:]),
                }
                for g in self.elements
            ],
        }


def _check_pi_membership(ring: ReesRing, elements) -> None:
    cols = ring.columns()
    for g in elements:
        w = g.vector()
        image = [0] * (ring.n + 1)
        for j, wj in enumerate(w):
            if wj:
                for r in range(ring.n + 1):
                    image[r] += wj * cols[j][r]
        if any(image):
            raise Falsification(
                f"basis element does not vanish under the monomial map: {g}"
            )


def _hilbert_agreement(ring: ReesRing, elements, max_deg: int) -> None:
    """Standard monomials of the initial ideal vs distinct semigroup values.

    The two counts agree in degree d exactly when the computed ideal
    fills the full toric ideal in that degree; a mismatch in either
    direction is an internal failure, not bad input.
    """
    cols = ring.columns()
    leads = [g.lead for g in elements]
    for d in range(1, max_deg + 1):
        std = 0
        images = set()
        for combo in itertools.combinations_with_replacement(range(ring.num_vars), d):
            exps = [0] * ring.num_vars
            image = [0] * (ring.n + 1)
            for j in combo:
                exps[j] += 1
                for r in range(ring.n + 1):
                    image[r] += cols[j][r]
            images.add(tuple(image))
            if not any(_divides(lead, tuple(exps)) for lead in leads):
                std += 1
        if std != len(images):
            raise Falsification(
                f"Hilbert mismatch in degree {d}: {std} standard monomials "
                f"vs {len(images)} semigroup values"
            )


def toric_ideal_basis(
    ideal: MonomialIdeal,
    order: TermOrder | None = None,
    budget_limit: int = 500_000,
    hilbert_degree: int = 2,
) -> ToricBasis:
    """Reduced Groebner basis of the Rees presentation ideal of I.

    Lattice basis from the integer kernel, saturation by every variable
    in turn, reduced basis under *order* (edge-lex by default).  The
    result is certified two ways before being returned: every element
    must vanish under the monomial map, and Hilbert function counts must
    agree up to *hilbert_degree*.  Failures there raise Falsification.
    """
    ring = ReesRing.from_ideal(ideal)
    rows = [
        [col[r] for col in ring.columns()] for r in range(ring.n + 1)
    ]
    gens = [b for w in integer_kernel(rows) if (b := binomial_from_vector(w))]
    for g in gens:
        if sum(g.lead) != sum(g.tail):
            raise Falsification(f"kernel vector is not homogeneous: {g}")
    for v in range(ring.num_vars):
        gens = _saturate_variable(gens, ring, v, budget_limit)
    if order is None:
        order = ring.edge_lex()
    reduced = reduced_groebner(gens, order, budget_limit)
    for g in reduced:
        if not g.coprime_sides():
            raise Falsification(
                f"reduced basis element of a saturated ideal has a common factor: {g}"
            )
    _check_pi_membership(ring, reduced)
    if hilbert_degree:
        _hilbert_agreement(ring, reduced, hilbert_degree)
    return ToricBasis(ring, order, reduced, hilbert_degree)


@dataclass(frozen=True)
class XDegreeReport:
    ok: bool
    max_x_degree: int
    witness: Binomial | None

    def __bool__(self) -> bool:
        return self.ok


def x_degree_check(basis: ToricBasis) -> XDegreeReport:
    """Is every reduced basis element of x-degree at most one?

    When it holds, every power of the ideal has a linear resolution;
    the witness on failure is the first offending binomial.
    """
    worst = 0
    witness = None
    for g in basis.elements:
        d = g.x_degree(basis.ring.n)
        if d > worst:
            worst = d
            if d > 1 and witness is None:
                witness = g
    return XDegreeReport(worst <= 1, worst, witness)


# ---------------------------------------------------------------------------
# elimination oracle (slow, for cross-checks)
# ---------------------------------------------------------------------------

def toric_basis_by_elimination(
    ideal: MonomialIdeal, budget_limit: int = 2_000_000
) -> tuple[Binomial, ...]:
    """Reduced basis of the same ideal, through elimination instead.

    Adjoins one z per cone-graph vertex, takes the relations
    t_j - z^(column j), eliminates the z block with a lex order that
    ranks it first, and restricts.  Exponential; test-scale only.
    """
    ring = ReesRing.from_ideal(ideal)
    k = ring.n + 1
    big_n = k + ring.num_vars
    gens = []
    for j, col in enumerate(ring.columns()):
        lead = tuple(col) + tuple(0 for _ in range(ring.num_vars))
        tail = tuple(0 for _ in range(k)) + tuple(
            1 if i == j else 0 for i in range(ring.num_vars)
        )
        gens.append(Binomial(lead, tail))
    ranking = tuple(range(k)) + tuple(k + r for r in ring.edge_lex().ranking)
    order = TermOrder("elim-lex", ranking, graded=False)
    out = []
    for g in reduced_groebner(gens, order, budget_limit):
        if any(g.lead[:k]) or any(g.tail[:k]):
            continue
        out.append(Binomial(g.lead[k:], g.tail[k:]))
    return tuple(sorted(out, key=lambda g: ring.edge_lex().key(g.lead)))


# ---------------------------------------------------------------------------
# primitive even closed walks (Graver basis of the cone graph)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WalkBinomial:
    walk: tuple[int, ...]  # vertex sequence v_0 .. v_2k (closed)
    binomial: Binomial


def _omega_adjacency(ring: ReesRing):
    """adj[v] = sorted (neighbor, variable index) pairs; loops allowed."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, ring.n + 2)}
    apex = ring.n + 1
    for i in range(1, ring.n + 1):
        adj[i].append((apex, i - 1))
        adj[apex].append((i, i - 1))
    for e, (a, b) in enumerate(ring.edges):
        var = ring.n + e
        if a == b:
            adj[a].append((a, var))
        else:
            adj[a].append((b, var))
            adj[b].append((a, var))
    for v in adj:
        adj[v].sort()
    return adj


def _walk_canonical(edge_seq: tuple[int, ...]) -> tuple[int, ...]:
    """Minimum over all rotations and the reflection, as a dedup key."""
    best = None
    seqs = [edge_seq, tuple(reversed(edge_seq))]
    for s in seqs:
        for shift in range(len(s)):
            rot = s[shift:] + s[:shift]
            if best is None or rot < best:
                best = rot
    return best


def even_closed_walks(ring: ReesRing, bound: int | None = None):
    """All closed even walks of the cone graph up to the length bound.

    Enumeration is restricted to walks whose start is their smallest
    vertex, with every edge used at most twice and every vertex visited
    at most twice (the start may also take its final return).  Primitive
    walks all satisfy these limits, which is what the callers need; the
    default bound of twice the edge count always covers them.
    Deduplicated up to rotation and reversal.
    """
    adj = _omega_adjacency(ring)
    num_edges = ring.n + len(ring.edges)
    if bound is None:
        bound = 2 * num_edges
    found: dict[tuple[int, ...], tuple[int, ...]] = {}

    for start in range(1, ring.n + 2):
        visits = {v: 0 for v in adj}
        visits[start] = 1
        edge_use = [0] * num_edges
        vseq = [start]
        eseq: list[int] = []

        def dfs(v: int):
            if v == start and eseq and len(eseq) % 2 == 0:
                key = _walk_canonical(tuple(eseq))
                if key not in found:
                    found[key] = tuple(vseq)
            if len(eseq) >= bound:
                return
            for u, var in adj[v]:
                if u < start or edge_use[var] >= 2:
                    continue
                cap = 3 if u == start else 2
                if visits[u] >= cap:
                    continue
                visits[u] += 1
                edge_use[var] += 1
                vseq.append(u)
                eseq.append(var)
                dfs(u)
                vseq.pop()
                eseq.pop()
                visits[u] -= 1
                edge_use[var] -= 1

        dfs(start)

    walks = []
    for key in sorted(found):
        vseq = found[key]
        plus = [0] * ring.num_vars
        minus = [0] * ring.num_vars
        for step, var in enumerate(key):
            (plus if step % 2 == 0 else minus)[var] += 1
        u, t = tuple(plus), tuple(minus)
        if u == t:
            continue
        u, t = _norm_pair(u, t)
        walks.append(WalkBinomial(vseq, Binomial(u, t)))
    return walks


def orientation_free(b: Binomial) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical (lead, tail) pair for comparing binomials up to sign."""
    return _norm_pair(b.lead, b.tail)


def walk_to_binomial(ring: ReesRing, walk) -> Binomial:
    """Alternating binomial of a closed even walk, given its vertex sequence.

    The walk is v_0 .. v_L with v_0 = v_L and L even; the step from v_i
    to v_{i+1} must be an edge of the cone graph (a cone step contributes
    an x variable, a loop step stays in place).  Even positions multiply
    into the lead side, odd positions into the tail, so the 4-cycle
    (1, 2, 3, 4, 1) on generator edges gives y(1,2)y(3,4) - y(2,3)y(1,4).
    No reorientation happens here; compare via orientation_free.
    """
    seq = tuple(walk)
    if len(seq) < 3 or seq[0] != seq[-1]:
        raise InputError("walk must be closed and use at least two steps")
    if (len(seq) - 1) % 2:
        raise InputError("walk must have even length")
    lookup: dict[tuple[int, int], int] = {}
    apex = ring.n + 1
    for i in range(1, ring.n + 1):
        lookup[(i, apex)] = lookup[(apex, i)] = i - 1
    for e, (a, b) in enumerate(ring.edges):
        lookup[(a, b)] = lookup[(b, a)] = ring.n + e
    plus = [0] * ring.num_vars
    minus = [0] * ring.num_vars
    for step in range(len(seq) - 1):
        var = lookup.get((seq[step], seq[step + 1]))
        if var is None:
            raise InputError(
                f"step {seq[step]}-{seq[step + 1]} is not an edge of the cone graph"
            )
        (plus if step % 2 == 0 else minus)[var] += 1
    if plus == minus:
        raise InputError("walk binomial vanishes: the two sides coincide")
    return Binomial(tuple(plus), tuple(minus))


def realize_walk(ring: ReesRing, b: Binomial) -> tuple[int, ...] | None:
    """An even closed walk whose alternating binomial is exactly b, or None.

    Searches for an Eulerian-style circuit through the edge multisets of
    the two sides, alternating lead/tail at even/odd steps.  Any binomial
    of the toric ideal with coprime sides and connected support admits
    one (side degrees balance at every vertex, so an alternating circuit
    exists); the search makes no such assumption and simply reports
    failure.  Cost is backtracking over the walk length, which equals
    the total degree of b and stays tiny for reduced-basis elements,
    independent of how dense the cone graph is.
    """
    apex = ring.n + 1

    def ends(var: int) -> tuple[int, int]:
        if var < ring.n:
            return (var + 1, apex)
        return ring.edges[var - ring.n]

    if sum(b.lead) != sum(b.tail):
        return None
    total = sum(b.lead) + sum(b.tail)
    first = min(v for v, e in enumerate(b.lead) if e)
    a0, b0 = ends(first)
    starts = ((a0, b0),) if a0 == b0 else ((a0, b0), (b0, a0))
    for start, second in starts:
        remaining = [list(b.lead), list(b.tail)]
        remaining[0][first] -= 1
        seq = [start, second]
        if _realize_dfs(ends, remaining, seq, start, total):
            return tuple(seq)
    return None


def _realize_dfs(ends, remaining, seq, start, total) -> bool:
    if len(seq) == total + 1:
        return seq[-1] == start
    side = remaining[(len(seq) - 1) % 2]
    v = seq[-1]
    for var, cnt in enumerate(side):
        if not cnt:
            continue
        a, b = ends(var)
        if a == v:
            nxt = b
        elif b == v:
            nxt = a
        else:
            continue
        side[var] -= 1
        seq.append(nxt)
        if _realize_dfs(ends, remaining, seq, start, total):
            return True
        seq.pop()
        side[var] += 1
    return False


def _primitive_pairs(candidates: set[tuple[tuple[int, ...], tuple[int, ...]]]):
    """Drop every pair that another candidate divides side by side."""
    out = set()
    for u, t in candidates:
        dominated = False
        for u2, t2 in candidates:
            if (u2, t2) == (u, t):
                continue
            if (_divides(u2, u) and _divides(t2, t)) or (
                _divides(u2, t) and _divides(t2, u)
            ):
                dominated = True
                break
        if not dominated:
            out.add((u, t))
    return out


def enumerate_primitive_even_walks(ring: ReesRing, bound: int | None = None) -> list[WalkBinomial]:
    """Closed even walks whose binomials are primitive, one walk per binomial.

    Exactly the Graver basis elements whenever the walk bound is at least
    2(n+1); the default bound always is.
    """
    walks = even_closed_walks(ring, bound)
    primitive = _primitive_pairs({(w.binomial.lead, w.binomial.tail) for w in walks})
    out = []
    seen = set()
    for w in walks:
        pair = (w.binomial.lead, w.binomial.tail)
        if pair in primitive and pair not in seen:
            seen.add(pair)
            out.append(w)
    return out


def graver_basis(ring: ReesRing, bound: int | None = None) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Primitive walk binomials, as orientation-free (lead, tail) pairs.

    Exact Graver basis whenever the walk bound is at least 2(n+1); the
    default bound always is.  A binomial survives when no distinct walk
    binomial divides it side by side in either orientation.
    """
    return {(w.binomial.lead, w.binomial.tail)
            for w in enumerate_primitive_even_walks(ring, bound)}


@dataclass(frozen=True)
class WalkCrossCheck:
    covered: bool
    bound: int
    bound_sufficient: bool
    missing: tuple[Binomial, ...]
    realizations: tuple[WalkBinomial, ...] = ()


def groebner_vs_walks(basis: ToricBasis, bound: int | None = None) -> WalkCrossCheck:
    """Verify the reduced basis sits inside the walk binomials.

    Reduced Groebner bases of toric ideals consist of primitive
    binomials, so every element must be the binomial of some (primitive)
    even closed walk.  Each element is realized directly via
    realize_walk rather than by enumerating all walks, which keeps the
    check exact and fast on dense cone graphs where enumeration blows
    up.  A walk's length equals the element's total degree, so elements
    the bounded enumeration could not reach are reported as missing; any
    miss while the bound is sufficient (at least 2(n+1), covering every
    walk with vertex visits at most 2) is a Falsification, while a miss
    under a user-lowered bound only reports itself.
    """
    ring = basis.ring
    num_edges = ring.n + len(ring.edges)
    if bound is None:
        bound = 2 * num_edges
    sufficient = bound >= 2 * (ring.n + 1)
    realized = []
    missing = []
    for g in basis.elements:
        walk = realize_walk(ring, g)
        if walk is not None:
            got = walk_to_binomial(ring, walk)
            assert orientation_free(got) == orientation_free(g)
        if walk is None or len(walk) - 1 > bound:
            missing.append(g)
        else:
            realized.append(WalkBinomial(walk, g))
    if missing and sufficient:
        raise Falsification(
            "reduced basis elements missing from the primitive walk basis: "
            + "; ".join(format_binomial(g, ring.names) for g in missing)
        )
    return WalkCrossCheck(not missing, bound, sufficient, tuple(missing), tuple(realized))
