"""Exact monomial and monomial-ideal arithmetic.

Monomials are exponent vectors over a fixed ambient variable set
x1..xn.  A MonomialIdeal always stores its unique minimal generating
set in a canonical order (graded degree, then lexicographic on exponent
vectors with variable 1 most significant, largest first), so every
downstream report is reproducible byte for byte.

The zero ideal is representable (no generators); the unit ideal is
rejected, since none of the resolution-theoretic questions asked here
make sense for it.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import InputError


@dataclass(frozen=True, order=False)
class Monomial:
    """A monomial as a tuple of non-negative exponents."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.exps, tuple):
            object.__setattr__(self, "exps", tuple(self.exps))
        if any(not isinstance(e, int) or e < 0 for e in self.exps):
            raise InputError(f"exponents must be non-negative integers, got {self.exps}")

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        """1-based indices of variables appearing in this monomial."""
        return tuple(i + 1 for i, e in enumerate(self.exps) if e > 0)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def _check_same_ring(self, other: "Monomial") -> None:
        if len(self.exps) != len(other.exps):
            raise InputError(
                f"monomials live in different rings: {len(self.exps)} vs {len(other.exps)} variables"
            )

    def divides(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact quotient; raises if *other* does not divide *self*."""
        if not other.divides(self):
            raise InputError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        return format_monomial(self, default_names(self.n))

    def sort_key(self):
        # graded, then exponent-lex with variable 1 most significant;
        # negation puts the lex-largest monomial of each degree first.
        return (self.degree, tuple(-e for e in self.exps))


def monomial_from_support(n: int, indices) -> Monomial:
    """Monomial Π x_i over the given 1-based indices (repeats multiply)."""
    exps = [0] * n
    for i in indices:
        if not 1 <= i <= n:
            raise InputError(f"variable index {i} out of range 1..{n}")
        exps[i - 1] += 1
    return Monomial(tuple(exps))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, held by its minimal generators in canonical order.

    The constructor minimalizes and sorts whatever generators it is
    given, so two ideals are equal as dataclasses iff they are equal as
    ideals.  ``MonomialIdeal(n, ())`` is the zero ideal.
    """

    n: int
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"need n >= 0, got {self.n}")
        gens = tuple(self.gens)
        for g in gens:
            if g.n != self.n:
                raise InputError(f"generator {g.exps} has {g.n} variables, ideal has {self.n}")
            if g.degree == 0:
                raise InputError("unit ideal rejected: generator of degree 0")
        object.__setattr__(self, "gens", _minimalize(gens))

    @property
    def num_gens(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    @property
    def degree(self) -> int | None:
        """Common generator degree, or None for a mixed-degree ideal."""
        degs = {g.degree for g in self.gens}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_equigenerated(self) -> bool:
        return len({g.degree for g in self.gens}) <= 1

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides m."""
        if m.n != self.n:
            raise InputError("monomial lives in a different ring")
        return any(g.divides(m) for g in self.gens)

    def power(self, k: int) -> "MonomialIdeal":
        """I^k via all k-fold products of generators, then minimalization."""
        if k < 1:
            raise InputError(f"power must be a positive integer, got {k}")
        if self.is_zero():
            return self
        prods = set()
        for combo in itertools.combinations_with_replacement(self.gens, k):
            exps = [0] * self.n
            for g in combo:
                for i, e in enumerate(g.exps):
                    exps[i] += e
            prods.add(tuple(exps))
        return MonomialIdeal(self.n, tuple(Monomial(e) for e in prods))

    def squarefree_part(self) -> tuple["MonomialIdeal", tuple[int, ...]]:
        """Split a degree-2 ideal into (squarefree part J, square indices).

        Returns J generated by the squarefree generators, plus the sorted
        1-based indices i with x_i^2 among the generators.
        """
        self._require_degree_two()
        squares = []
        sf = []
        for g in self.gens:
            if g.is_squarefree():
                sf.append(g)
            else:
                squares.append(g.support[0])
        return MonomialIdeal(self.n, tuple(sf)), tuple(sorted(squares))

    def polarize(self) -> "MonomialIdeal":
        """Replace each generator x_i^2 by x_i * y_j with a fresh variable y_j.

        Only defined for ideals generated in degree 2.  The fresh
        variables are appended after x_n, one per square, in ascending
        order of the square's index; squarefree generators are kept as
        they are.  The result is squarefree with the same number of
        generators.
        """
        _, squares = self.squarefree_part()
        n_new = self.n + len(squares)
        slot = {i: self.n + j for j, i in enumerate(squares)}
        new_gens = []
        for g in self.gens:
            exps = list(g.exps) + [0] * len(squares)
            if not g.is_squarefree():
                i = g.support[0]
                exps[i - 1] = 1
                exps[slot[i]] = 1
            new_gens.append(Monomial(tuple(exps)))
        return MonomialIdeal(n_new, tuple(new_gens))

    def relabel(self, labeling: tuple[int, ...]) -> "MonomialIdeal":
        """Apply a variable relabeling: old variable i becomes x_{labeling[i-1]}."""
        if sorted(labeling) != list(range(1, self.n + 1)):
            raise InputError(f"labeling {labeling} is not a permutation of 1..{self.n}")
        new_gens = []
        for g in self.gens:
            exps = [0] * self.n
            for i, e in enumerate(g.exps):
                exps[labeling[i] - 1] = e
            new_gens.append(Monomial(tuple(exps)))
        return MonomialIdeal(self.n, tuple(new_gens))

    def pair_set(self) -> frozenset[tuple[int, int]]:
        """Squarefree degree-2 generators as (i, j) pairs with i < j."""
        pairs = set()
        for g in self.gens:
            if g.degree == 2 and g.is_squarefree():
                i, j = g.support
                pairs.add((i, j))
        return frozenset(pairs)

    def square_set(self) -> frozenset[int]:
        """Indices i with x_i^2 among the generators."""
        return frozenset(g.support[0] for g in self.gens if g.degree == 2 and not g.is_squarefree())

    def _require_degree_two(self) -> None:
        if any(g.degree != 2 for g in self.gens):
            bad = next(g for g in self.gens if g.degree != 2)
            raise InputError(f"operation requires generation in degree 2, found degree {bad.degree}")

    def __str__(self) -> str:
        names = default_names(self.n)
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"


def _minimalize(gens: tuple[Monomial, ...]) -> tuple[Monomial, ...]:
    """Unique minimal generating set, canonically sorted."""
    uniq = sorted(set(gens), key=Monomial.sort_key)
    kept: list[Monomial] = []
    for g in uniq:
        # earlier entries have degree <= deg(g); a same-degree divisor is a duplicate,
        # already removed by the set
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return tuple(kept)


def minimal_generators(n: int, monomials) -> MonomialIdeal:
    """Build the ideal generated by *monomials*, minimalizing them."""
    return MonomialIdeal(n, tuple(monomials))


def ideal_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    return ideal.power(k)


# ---------------------------------------------------------------------------
# parsing and serialization
# ---------------------------------------------------------------------------

def default_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def parse_monomial(s: str, variables: list[str]) -> Monomial:
    """Parse a generator string against a variable list.

    Two syntaxes are accepted: a ``*``-separated factor list where each
    factor is ``name`` or ``name^e`` (works for any variable names), and
    plain juxtaposition of single-letter variables with optional ``^e``
    after a letter (e.g. ``"abd"``, ``"a^2b"``).
    """
    s = s.strip()
    if not s:
        raise InputError("empty generator string")
    index = {name: i for i, name in enumerate(variables)}
    exps = [0] * len(variables)
    if s == "1" and "1" not in index:
        # the unit monomial parses; MonomialIdeal rejects it with a clear message
        return Monomial(tuple(exps))

    def add_factor(factor: str) -> None:
        name, _, power = factor.partition("^")
        name = name.strip()
        if name not in index:
            raise InputError(f"unknown variable {name!r} in generator {s!r}")
        if power:
            try:
                e = int(power)
            except ValueError:
                raise InputError(f"bad exponent {power!r} in generator {s!r}") from None
            if e < 1:
                raise InputError(f"exponent must be >= 1 in generator {s!r}")
        else:
            e = 1
        exps[index[name]] += e

    if "*" in s:
        for factor in s.split("*"):
            add_factor(factor)
    elif all(len(name) == 1 for name in variables):
        pos = 0
        while pos < len(s):
            ch = s[pos]
            pos += 1
            if pos < len(s) and s[pos] == "^":
                pos += 1
                start = pos
                while pos < len(s) and s[pos].isdigit():
                    pos += 1
                if start == pos:
                    raise InputError(f"bad exponent in generator {s!r}")
                add_factor(ch + "^" + s[start:pos])
            else:
                add_factor(ch)
    else:
        add_factor(s)

    return Monomial(tuple(exps))


def format_monomial(m: Monomial, variables: list[str]) -> str:
    if len(variables) != m.n:
        raise InputError("variable list does not match monomial length")
    if m.degree == 0:
        return "1"
    single = all(len(name) == 1 for name in variables)
    parts = []
    for name, e in zip(variables, m.exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "".join(parts) if single else "*".join(parts)


def ideal_from_json(obj) -> tuple[MonomialIdeal, list[str]]:
    """Read ``{"variables": [...], "generators": [...]}`` (dict or JSON text)."""
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise InputError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict) or "variables" not in obj or "generators" not in obj:
        raise InputError('ideal JSON needs keys "variables" and "generators"')
    variables = obj["variables"]
    if (not isinstance(variables, list) or not variables
            or any(not isinstance(v, str) or not v for v in variables)
            or len(set(variables)) != len(variables)):
        raise InputError('"variables" must be a non-empty list of distinct names')
    gens_field = obj["generators"]
    if not isinstance(gens_field, list):
        raise InputError('"generators" must be a list of monomial strings')
    gens = [parse_monomial(s, variables) for s in gens_field]
    return MonomialIdeal(len(variables), tuple(gens)), list(variables)


def ideal_to_json(ideal: MonomialIdeal, variables: list[str] | None = None) -> dict:
    names = variables if variables is not None else default_names(ideal.n)
    if len(names) != ideal.n:
        raise InputError("variable list does not match ideal")
    return {
        "variables": list(names),
        "generators": [format_monomial(g, names) for g in ideal.gens],
    }


def ideal_from_strings(generators, variables) -> MonomialIdeal:
    """Convenience constructor from generator strings and variable names."""
    variables = list(variables)
    return MonomialIdeal(len(variables), tuple(parse_monomial(s, variables) for s in generators))
