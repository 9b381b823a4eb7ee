"""Graded Betti numbers of monomial ideals, exactly, over Q or GF(p).

The main path computes beta_{i,j}(I) as homology of the Koszul complex
tensored with I, strand by strand: the strand in a fixed multidegree a
is the chain complex of the simplicial complex

    K_a = { sigma subset of supp(a) : x^(a - sigma) in I },

whose facets are the maximal sets {v : a_v > g_v} over generators g
dividing x^a.  Summing dim H~_{i-1}(K_a) over all multidegrees a of
total degree j gives beta_{i,j}.  Nonzero Betti numbers only occur in
multidegrees bounded by the lcm of the generators, so scanning the box
below that lcm computes the full table with no truncation.

The independent cross-check for squarefree ideals reads the same table
from the other side: beta_{i,j}(I) is the sum over j-element vertex
subsets W of dim H~^{j-i-2} of the induced Stanley-Reisner subcomplex,
assembled here via coboundary (not boundary) matrices so the two routes
share as little code as possible.

All ranks are exact: fraction-free integer elimination over Q, modular
elimination over GF(p).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import Falsification, InconclusiveWindow, InputError, ResourceGuard
from .monomials import Monomial, MonomialIdeal
from .rank import is_prime, rank_mod_p, rank_over_q


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (p None) or a prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise InputError(f"GF({self.p}) is not a field; p must be prime")

    @property
    def label(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        """Accepts Q, GF:p, GF(p), and GFp spellings."""
        t = text.strip()
        if t in ("Q", "QQ", "q"):
            return FieldSpec(None)
        u = t.upper()
        if u.startswith("GF"):
            body = u[2:].strip(":()")
            if body.isdigit():
                return FieldSpec(int(body))
        raise InputError(f"cannot parse field {text!r}; use Q or GF:p")

    def rank(self, rows: list[list[int]]) -> int:
        if self.p is None:
            return rank_over_q(rows)
        return rank_mod_p(rows, self.p)

    def __str__(self) -> str:
        return self.label


QQ = FieldSpec(None)
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} of an ideal (i homological, j internal).

    ``complete`` records whether the computed window provably covers every
    nonzero entry; regularity and linearity refuse to answer otherwise.
    """

    n: int
    field: FieldSpec
    entries: dict[tuple[int, int], int]
    gen_degree: int | None
    window: tuple[int, int]
    complete: bool

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def items_sorted(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.entries.items())

    @property
    def regularity(self) -> int:
        """max(j - i) over nonzero entries.  Requires a complete table."""
        if not self.complete:
            raise InconclusiveWindow(
                f"window {self.window} may truncate the table; regularity inconclusive"
            )
        if not self.entries:
            raise InputError("regularity of the zero module is undefined here")
        return max(j - i for i, j in self.entries)

    @property
    def is_linear(self) -> bool:
        """True iff beta_{i,j} = 0 whenever j != i + d.

        A violation inside the window answers False even when the window
        is incomplete; certifying True needs the complete table.
        """
        if self.gen_degree is None:
            raise InputError("linearity is only defined for equigenerated ideals")
        d = self.gen_degree
        if any(j != i + d for i, j in self.entries):
            return False
        if not self.complete:
            raise InconclusiveWindow(
                f"no violation in window {self.window}, but the table may continue"
            )
        return True

    def to_json(self) -> dict:
        out = {
            "field": self.field.label,
            "entries": [
                {"i": i, "j": j, "beta": b} for (i, j), b in self.items_sorted()
            ],
        }
        if self.complete and self.entries:
            out["regularity"] = self.regularity
            if self.gen_degree is not None:
                out["linear"] = self.is_linear
        elif not self.complete:
            out["inconclusive"] = True
            out["window"] = list(self.window)
        return out


# ---------------------------------------------------------------------------
# reduced simplicial (co)homology of small complexes
# ---------------------------------------------------------------------------

def homology_dims(faces, field: FieldSpec) -> dict[int, int]:
    """Reduced homology dimensions of a complex given as a face list.

    *faces* must be downward closed and include the empty face when the
    complex is nonvoid.  Faces are frozensets of vertices.  Returns only
    the nonzero dims, keyed by homological dimension (-1 allowed).
    """
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    if not by_dim:
        return {}
    for k in by_dim:
        by_dim[k].sort()
    top = max(by_dim)
    ranks: dict[int, int] = {}
    for k in range(0, top + 1):
        # boundary from k-faces to (k-1)-faces
        rows_idx = {f: r for r, f in enumerate(by_dim.get(k - 1, []))}
        cols = by_dim.get(k, [])
        if not cols or not rows_idx:
            ranks[k] = 0
            continue
        mat = [[0] * len(cols) for _ in rows_idx]
        for c, f in enumerate(cols):
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                mat[rows_idx[sub]][c] += -1 if pos % 2 else 1
        ranks[k] = field.rank(mat)
    out: dict[int, int] = {}
    for k in range(-1, top + 1):
        ck = len(by_dim.get(k, []))
        h = ck - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def cohomology_dims(faces, field: FieldSpec) -> dict[int, int]:
    """Reduced cohomology dimensions, assembled through coboundary matrices.

    Over a field these agree with homology_dims; the assembly is kept
    separate on purpose so the two Betti routes do not share it.
    """
    face_set = {frozenset(f) for f in faces}
    by_dim: dict[int, list[frozenset]] = {}
    for f in face_set:
        by_dim.setdefault(len(f) - 1, []).append(f)
    if not by_dim:
        return {}
    for k in by_dim:
        by_dim[k].sort(key=sorted)
    vertices = sorted({v for f in face_set for v in f})
    top = max(by_dim)
    ranks: dict[int, int] = {}
    for k in range(-1, top + 1):
        # coboundary from k-cochains to (k+1)-cochains
        cols_idx = {f: c for c, f in enumerate(by_dim.get(k + 1, []))}
        rows = by_dim.get(k, [])
        if not rows or not cols_idx:
            ranks[k] = 0
            continue
        mat = [[0] * len(cols_idx) for _ in rows]
        for r, f in enumerate(rows):
            for v in vertices:
                if v in f:
                    continue
                g = f | {v}
                if g not in cols_idx:
                    continue
                sign = (-1) ** sum(1 for u in f if u < v)
                mat[r][cols_idx[g]] += sign
        ranks[k] = field.rank(mat)
    out: dict[int, int] = {}
    for k in range(-1, top + 1):
        ck = len(by_dim.get(k, []))
        h = ck - ranks.get(k, 0) - ranks.get(k - 1, 0)
        if h:
            out[k] = h
    return out


def _faces_from_facets(facet_masks: list[int]) -> list[frozenset[int]]:
    """All subsets of the given facets (vertex bitmasks), as frozensets."""
    seen: set[int] = set()
    for mask in facet_masks:
        sub = mask
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return [frozenset(i + 1 for i in range(64) if m >> i & 1) for m in seen]


# ---------------------------------------------------------------------------
# Koszul strand computation
# ---------------------------------------------------------------------------

def _strand_complex_facets(gens_exps: list[tuple[int, ...]], a: tuple[int, ...]) -> list[int] | None:
    """Facet bitmasks of K_a, or None when x^a is not in the ideal."""
    masks = []
    for g in gens_exps:
        if all(ge <= av for ge, av in zip(g, a)):
            mask = 0
            for v, (ge, av) in enumerate(zip(g, a)):
                if av > ge:
                    mask |= 1 << v
            masks.append(mask)
    if not masks:
        return None
    masks = sorted(set(masks))
    maximal = [m for m in masks if not any(m != other and m & other == m for other in masks)]
    return maximal


def koszul_betti(
    ideal: MonomialIdeal,
    field: FieldSpec = QQ,
    window: tuple[int, int] | None = None,
    multidegree_cap: int | None = None,
) -> BettiTable:
    """The graded Betti table of a nonzero monomial ideal.

    Scans every multidegree below the lcm of the generators (the region
    that can carry nonzero Betti numbers) and accumulates strand homology.
    ``window=(lo, hi)`` restricts to internal degrees lo <= j <= hi; the
    resulting table is flagged incomplete unless the window covers the
    whole region.  ``multidegree_cap`` aborts with ResourceGuard when the
    scan box holds more multidegrees than the cap.
    """
    if ideal.is_zero():
        raise InputError("Betti table of the zero ideal is not defined here")
    gens_exps = [g.exps for g in ideal.gens]
    maxvec = tuple(max(g[v] for g in gens_exps) for v in range(ideal.n))
    d_min = min(g.degree for g in ideal.gens)
    full = (d_min, sum(maxvec))
    if window is None:
        lo, hi = full
        complete = True
    else:
        lo, hi = window
        complete = lo <= full[0] and hi >= full[1]

    box = 1
    for e in maxvec:
        box *= e + 1
    if multidegree_cap is not None and box > multidegree_cap:
        raise ResourceGuard(
            f"{box} candidate multidegrees exceed the cap {multidegree_cap}"
        )

    entries: dict[tuple[int, int], int] = {}
    for a in itertools.product(*(range(e + 1) for e in maxvec)):
        j = sum(a)
        if j < lo or j > hi:
            continue
        facets = _strand_complex_facets(gens_exps, a)
        if facets is None:
            continue
        dims = homology_dims(_faces_from_facets(facets), field)
        for k, h in dims.items():
            i = k + 1
            if i >= 0:
                entries[(i, j)] = entries.get((i, j), 0) + h
    return BettiTable(
        n=ideal.n,
        field=field,
        entries=entries,
        gen_degree=ideal.degree,
        window=(lo, hi),
        complete=complete,
    )


# ---------------------------------------------------------------------------
# Hochster-style oracle for squarefree ideals
# ---------------------------------------------------------------------------

def hochster_oracle(ideal: MonomialIdeal, field: FieldSpec = QQ) -> BettiTable:
    """Betti table of a squarefree monomial ideal via induced subcomplexes.

    Runs over all vertex subsets W, takes the induced subcomplex of the
    Stanley-Reisner complex (faces = subsets containing no generator's
    support), and reads beta_{i,|W|} from reduced cohomology in dimension
    |W| - i - 2.  Exponential in n; intended as an independent check of
    koszul_betti at desk scale, not as the production path.
    """
    if ideal.is_zero():
        raise InputError("Betti table of the zero ideal is not defined here")
    if not ideal.is_squarefree():
        raise InputError("this oracle handles squarefree ideals only; polarize first")
    supports = [frozenset(g.support) for g in ideal.gens]
    entries: dict[tuple[int, int], int] = {}
    universe = list(range(1, ideal.n + 1))
    for w_size in range(ideal.n + 1):
        for w in itertools.combinations(universe, w_size):
            faces = [
                frozenset(f)
                for r in range(w_size + 1)
                for f in itertools.combinations(w, r)
                if not any(s <= frozenset(f) for s in supports)
            ]
            if not faces:
                continue
            dims = cohomology_dims(faces, field)
            for k, h in dims.items():
                i = w_size - k - 2
                if i >= 0:
                    entries[(i, w_size)] = entries.get((i, w_size), 0) + h
    return BettiTable(
        n=ideal.n,
        field=field,
        entries=entries,
        gen_degree=ideal.degree,
        window=(0, ideal.n),
        complete=True,
    )


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

def is_linear_resolution(ideal: MonomialIdeal, field: FieldSpec = QQ,
                         multidegree_cap: int | None = None) -> bool:
    """Does the minimal free resolution of I live on a single linear strand?

    Requires a nonzero equigenerated ideal.  For non-squarefree quadratic
    ideals the verdict is computed on the polarization and on the ideal
    itself, and the two full tables are required to agree entry by entry.
    """
    if ideal.is_zero():
        raise InputError("linearity of the zero ideal is not defined")
    if not ideal.is_equigenerated():
        raise InputError("linearity needs all generators in one degree")
    direct = koszul_betti(ideal, field, multidegree_cap=multidegree_cap)
    if ideal.degree == 2 and not ideal.is_squarefree():
        pol = koszul_betti(ideal.polarize(), field, multidegree_cap=multidegree_cap)
        if pol.entries != direct.entries:
            raise Falsification(
                "polarization changed the Betti table: "
                f"{sorted(pol.entries.items())} vs {sorted(direct.entries.items())}"
            )
        return pol.is_linear
    return direct.is_linear


def regularity(ideal: MonomialIdeal, field: FieldSpec = QQ) -> int:
    return koszul_betti(ideal, field).regularity


def powers_linear_report(
    ideal: MonomialIdeal,
    fields=(QQ, GF2),
    max_power: int = 2,
    multidegree_cap: int | None = 2_000_000,
) -> list[dict]:
    """Per-power linearity verdicts for I, I^2, ..., I^max_power.

    Each record carries k, the number of minimal generators, and one
    verdict per field.  The multidegree cap guards the Koszul scan; when
    it trips, the abort is recorded for that power and the remaining
    powers are skipped (they can only be larger).
    """
    import time

    if ideal.is_zero():
        raise InputError("powers of the zero ideal are not informative")
    if max_power < 1:
        raise InputError(f"max_power must be >= 1, got {max_power}")
    out = []
    for k in range(1, max_power + 1):
        power = ideal.power(k)
        record: dict = {"k": k, "num_gens": power.num_gens, "linear": {}}
        t0 = time.perf_counter()
        try:
            for f in fields:
                record["linear"][f.label] = is_linear_resolution(
                    power, f, multidegree_cap=multidegree_cap
                )
        except ResourceGuard as exc:
            record["aborted"] = str(exc)
            record["linear"] = None
            out.append(record)
            break
        record["seconds"] = round(time.perf_counter() - t0, 3)
        out.append(record)
    return out
