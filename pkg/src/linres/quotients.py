"""Linear quotients: checking orders, constructing them, searching for them.

An ordered generating sequence u_1, ..., u_m has linear quotients when
each colon ideal (u_1, ..., u_{i-1}) : u_i is generated by variables.
Two routes check this.  ``has_linear_quotients`` builds each colon ideal
and minimalizes it; ``condition_q`` runs the quantifier form directly
(for every earlier u there is an earlier w with w/gcd(w,v) a variable
dividing u/gcd(u,v)).  The two are provably equivalent, so the second
asserts agreement with the first and raises Falsification on any split.

For quadratic ideals whose generators satisfy the two combinatorial
closure conditions from graphs.check_star and graphs.check_star_star,
``construct_lq_order`` writes down an explicit order with no search:
squarefree generators sorted by the lexicographic order that ranks the
highest variable first, each square slotted directly after its partner
with the smallest cofactor index, leftover squares at the bottom.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import BudgetExhausted, Falsification, InputError, PreconditionError
from .graphs import CheckResult, check_star, check_star_star
from .monomials import Monomial, MonomialIdeal, monomial_from_support


def _validate_order(order: Sequence[Monomial]) -> None:
    if not order:
        raise InputError("empty generator order")
    n = order[0].n
    for u in order:
        if u.n != n:
            raise InputError("generators live in different rings")
    for i, u in enumerate(order):
        for j, v in enumerate(order):
            if i != j and u.divides(v):
                raise InputError(
                    f"{u} divides {v}; linear quotients needs a minimal system"
                )


def has_linear_quotients(order: Sequence[Monomial]) -> CheckResult:
    """Check an explicit order via the colon ideals themselves.

    At each step the quotients u_j / gcd(u_j, u_i), j < i, are minimalized
    as a monomial ideal; the step passes iff every minimal generator has
    degree one.  On failure the witness is the pair of 1-based positions
    (i, j): step i fails and u_j is an earlier generator whose quotient
    is not under any variable of the colon ideal.
    """
    _validate_order(order)
    n = order[0].n
    for i in range(1, len(order)):
        v = order[i]
        quotients = [u / u.gcd(v) for u in order[:i]]
        colon = MonomialIdeal(n, quotients)
        if all(g.degree == 1 for g in colon.gens):
            continue
        for j, q in enumerate(quotients):
            if not any(w.degree == 1 and w.divides(q) for w in quotients):
                return CheckResult(False, (i + 1, j + 1))
        raise Falsification(
            f"colon ideal at step {i + 1} has a non-variable minimal generator "
            "yet every quotient is under a variable"
        )
    return CheckResult(True, None)


def condition_q(order: Sequence[Monomial]) -> CheckResult:
    """Quantifier form of the linear-quotients condition on an order.

    For every v and every earlier u there must be an earlier w such that
    w / gcd(w, v) has degree one and divides u / gcd(u, v).  Witness on
    failure: 1-based positions (i, j) of v and the unwitnessed u.

    Always cross-checked against has_linear_quotients; a disagreement
    between the two routes raises Falsification.
    """
    _validate_order(order)
    result = CheckResult(True, None)
    for i in range(1, len(order)):
        v = order[i]
        ws = [order[k] / order[k].gcd(v) for k in range(i)]
        variables = [w for w in ws if w.degree == 1]
        for j in range(i):
            uq = order[j] / order[j].gcd(v)
            if not any(w.divides(uq) for w in variables):
                result = CheckResult(False, (i + 1, j + 1))
                break
        if not result:
            break
    other = has_linear_quotients(order)
    if bool(result) != bool(other):
        raise Falsification(
            f"condition (q) says {bool(result)} but the colon route says "
            f"{bool(other)} on {[str(u) for u in order]}"
        )
    return result


def isolated_squares(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Square generator indices i with no generator x_k x_i for any k < i."""
    pairs = ideal.pair_set()
    return tuple(
        sorted(
            i
            for i in ideal.square_set()
            if not any((k, i) in pairs for k in range(1, i))
        )
    )


def construct_lq_order(ideal: MonomialIdeal) -> tuple[Monomial, ...]:
    """Explicit linear-quotients order for a quadratic ideal.

    Preconditions (PreconditionError with a witness triple otherwise):
    the generators must pass check_star and check_star_star.  The order:

      1. squarefree generators, descending in the lexicographic order
         with x_n > ... > x_1 (so larger top variable first, then larger
         bottom variable);
      2. each square x_i^2 placed immediately after x_k x_i where k is
         the smallest index below i occurring with i;
      3. squares with no such partner appended at the end, ascending.

    The result is verified by condition_q before being returned; a
    failure there is a Falsification, not an input error.
    """
    if ideal.degree != 2:
        raise InputError("this construction needs an ideal generated in degree 2")
    star = check_star(ideal)
    if not star:
        raise PreconditionError(
            f"closure condition on pairs fails at {star.witness}",
            witness=star.witness,
        )
    star2 = check_star_star(ideal)
    if not star2:
        raise PreconditionError(
            f"closure condition on squares fails at {star2.witness}",
            witness=star2.witness,
        )
    order = [g for g in ideal.gens if g.is_squarefree()]
    order.sort(key=lambda g: tuple(reversed(g.exps)), reverse=True)
    pairs = ideal.pair_set()
    leftovers = []
    for i in sorted(ideal.square_set()):
        square = monomial_from_support(ideal.n, (i, i))
        partners = [k for k in range(1, i) if (k, i) in pairs]
        if partners:
            u = monomial_from_support(ideal.n, (min(partners), i))
            order.insert(order.index(u) + 1, square)
        else:
            leftovers.append(square)
    order.extend(leftovers)
    verdict = condition_q(order)
    if not verdict:
        raise Falsification(
            "constructed order fails linear quotients at positions "
            f"{verdict.witness}: {[str(u) for u in order]}"
        )
    return tuple(order)


def find_lq_order(
    ideal: MonomialIdeal, budget: int = 200_000
) -> tuple[Monomial, ...] | None:
    """Search all generator orders for one with linear quotients.

    Depth-first with two prunes: a generator is only appended when its
    colon by the current prefix is variable-generated, and dead prefix
    SETS are memoized (whether a next generator can extend depends on
    the set of chosen generators, not their order, so one failed set
    need never be revisited).  Each appended node costs one unit of
    budget; BudgetExhausted is raised when it runs out, so None means
    a definitive no.
    """
    gens = list(ideal.gens)
    m = len(gens)
    if m <= 1:
        return tuple(gens)
    nodes = 0
    order: list[Monomial] = []
    chosen = 0  # bitmask over gens
    dead: set[int] = set()

    def can_append(v: Monomial) -> bool:
        quotients = [u / u.gcd(v) for u in order]
        variables = [w for w in quotients if w.degree == 1]
        return all(any(w.divides(q) for w in variables) for q in quotients)

    def dfs() -> bool:
        nonlocal nodes, chosen
        if len(order) == m:
            return True
        if chosen in dead:
            return False
        for idx in range(m):
            bit = 1 << idx
            if chosen & bit:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(
                    f"order search exceeded {budget} nodes on {m} generators"
                )
            if not can_append(gens[idx]):
                continue
            order.append(gens[idx])
            chosen |= bit
            if dfs():
                return True
            chosen &= ~bit
            order.pop()
        dead.add(chosen)
        return False

    return tuple(order) if dfs() else None
