"""The eight acceptance gates, one test and one printed verdict line each.

Criteria 3, 4, 6, 7 and 8 share a single corpus sweep (every simple
graph on up to five vertices with at least one edge, and every square
addition on up to four vertices), computed once per session.  The zero
ideal is excluded: it has no minimal free resolution to compare.
"""

import itertools
import random
import time

import pytest

from corpus import (
    all_graphs,
    square_corpus,
    squarefree_corpus,
    sturmfels_ideal,
    terai_ideal,
)
from linres.betti import GF2, QQ, hochster_oracle, is_linear_resolution, koszul_betti
from linres.errors import Falsification, PreconditionError
from linres.graphs import (
    check_free_vertex_squares,
    check_star,
    check_star_star,
    clique_complex,
    complement,
    dirac_labeling,
    graph_of_ideal,
    is_chordal,
    leaf_order,
)
from linres.quotients import construct_lq_order, find_lq_order
from linres.rees import (
    ReesRing,
    graver_basis,
    groebner_vs_walks,
    orientation_free,
    toric_ideal_basis,
    x_degree_check,
)


@pytest.fixture
def record(request):
    def _record(number: int, claim: str, ok: bool, detail: str = ""):
        line = f"CRITERION {number}: {'PASS' if ok else 'FAIL'} - {claim}"
        if detail:
            line += f" [{detail}]"
        request.config._acceptance_lines.append(line)
        print(line)
        assert ok, line

    return _record


@pytest.fixture(scope="session")
def sweep():
    """Per-ideal facts shared by the property criteria."""
    t_start = time.perf_counter()
    corpus = list(squarefree_corpus(5)) + list(square_corpus(4))
    assert len(corpus) == 1094 + 1023
    records = []
    for ideal in corpus:
        rec = {"tag": str(ideal), "squarefree": ideal.is_squarefree()}
        rec["linear_q"] = is_linear_resolution(ideal, QQ)

        if rec["squarefree"]:
            kq, k2 = koszul_betti(ideal, QQ), koszul_betti(ideal, GF2)
            hq, h2 = hochster_oracle(ideal, QQ), hochster_oracle(ideal, GF2)
            rec["oracles_agree"] = (
                kq.entries == hq.entries and k2.entries == h2.entries
            )
            comp_chordal = is_chordal(complement(graph_of_ideal(ideal))).is_chordal
            rec["froberg_ok"] = kq.is_linear == comp_chordal == k2.is_linear

        rec["lq_found"] = find_lq_order(ideal) is not None

        g_simple = graph_of_ideal(ideal).simple()
        chord = is_chordal(complement(g_simple))
        relabeled = None
        conditions = False
        constructed = False
        if chord.is_chordal:
            labeling = dirac_labeling(g_simple, ideal.square_set())
            relabeled = ideal.relabel(labeling)
            conditions = bool(check_star(relabeled)) and bool(check_star_star(relabeled))
            try:
                construct_lq_order(relabeled)
                constructed = True
            except PreconditionError:
                constructed = False
        rec["conditions"] = conditions
        rec["constructed"] = constructed

        powers_linear = rec["linear_q"]
        for k in (2, 3):
            if not powers_linear:
                break
            powers_linear = is_linear_resolution(ideal.power(k), QQ)
        rec["powers_linear"] = powers_linear

        # walk containment is checked on the instance as presented
        basis = toric_ideal_basis(ideal)
        try:
            rec["walks_covered"] = groebner_vs_walks(basis).covered
        except Falsification:
            rec["walks_covered"] = False

        # the certificate claim is about the relabeled coordinates
        if conditions:
            rbasis = basis if relabeled == ideal else toric_ideal_basis(relabeled)
            rec["xdeg_ok"] = x_degree_check(rbasis).ok
        else:
            rec["xdeg_ok"] = None

        if ideal.square_set() and rec["linear_q"]:
            rec["fv_ok"] = bool(check_free_vertex_squares(ideal))
            rec["cor_ok"] = (
                bool(check_star_star(relabeled)) if relabeled is not None else False
            )
        records.append(rec)
    return {"records": records, "seconds": time.perf_counter() - t_start}


def test_criterion_1_square_of_linear_ideal(record):
    t0 = time.perf_counter()
    ideal = sturmfels_ideal()
    lin_q = is_linear_resolution(ideal, QQ)
    lin_2 = is_linear_resolution(ideal, GF2)
    square = ideal.power(2)
    sq_q = is_linear_resolution(square, QQ)
    sq_2 = is_linear_resolution(square, GF2)
    elapsed = time.perf_counter() - t0
    ok = lin_q and lin_2 and not sq_q and not sq_2 and elapsed < 60
    record(
        1,
        "eight-generator ideal linear over Q and GF(2), square over neither",
        ok,
        f"{elapsed:.1f}s of 60s",
    )


def test_criterion_2_characteristic_sensitivity(record):
    t0 = time.perf_counter()
    ideal = terai_ideal()
    lin_q = is_linear_resolution(ideal, QQ)
    lin_2 = is_linear_resolution(ideal, GF2)
    sq_q = is_linear_resolution(ideal.power(2), QQ)
    elapsed = time.perf_counter() - t0
    ok = lin_q and not lin_2 and not sq_q and elapsed < 120
    record(
        2,
        "ten-generator ideal linear over Q only; square over Q not linear",
        ok,
        f"{elapsed:.1f}s of 120s",
    )


def test_criterion_3_four_route_equivalence(record, sweep):
    bad = [
        r["tag"]
        for r in sweep["records"]
        if not (r["linear_q"] == r["lq_found"] == r["constructed"] == r["powers_linear"])
    ]
    in_budget = sweep["seconds"] < 1800
    record(
        3,
        "linear resolution == searched order == constructed order == "
        "linear powers to k=3, across all 2117 corpus ideals",
        not bad and in_budget,
        f"{len(bad)} discrepancies, sweep {sweep['seconds']:.0f}s of 1800s",
    )


def test_criterion_4_chordal_complement_equivalence(record, sweep):
    squarefree = [r for r in sweep["records"] if r["squarefree"]]
    bad = [r["tag"] for r in squarefree if not r["froberg_ok"]]
    record(
        4,
        "squarefree linearity over Q and GF(2) == complement chordality, "
        f"{len(squarefree)} edge ideals",
        not bad,
        f"{len(bad)} discrepancies",
    )


def test_criterion_5_chordal_vs_leaf_order(record):
    mismatch = 0
    chordal_at_6 = 0
    total = 0
    for n in range(1, 7):
        for g in all_graphs(n):
            total += 1
            chordal = is_chordal(g).is_chordal
            has_order = leaf_order(clique_complex(g)) is not None
            if chordal != has_order:
                mismatch += 1
            if n == 6 and chordal:
                chordal_at_6 += 1
    # external anchor: labeled chordal graphs on six vertices
    ok = mismatch == 0 and chordal_at_6 == 18154 and total == 33867
    record(
        5,
        "chordality == existence of a leaf order of the clique complex, "
        "all graphs on up to six vertices",
        ok,
        f"{total} graphs, {mismatch} mismatches, {chordal_at_6} chordal at n=6",
    )


def test_criterion_6_certificate_after_labeling(record, sweep):
    eligible = [r for r in sweep["records"] if r["conditions"]]
    bad = [r["tag"] for r in eligible if r["xdeg_ok"] is not True]
    record(
        6,
        "both generator conditions after labeling force every reduced "
        "lead to x-degree <= 1",
        not bad,
        f"{len(eligible)} eligible ideals, {len(bad)} violations",
    )


def test_criterion_7_oracle_agreement(record, sweep):
    betti_bad = [
        r["tag"]
        for r in sweep["records"]
        if r["squarefree"] and not r["oracles_agree"]
    ]
    named_ok = True
    for ideal in (sturmfels_ideal(), terai_ideal()):
        for field in (QQ, GF2):
            if koszul_betti(ideal, field).entries != hochster_oracle(ideal, field).entries:
                named_ok = False
    walk_bad = [r["tag"] for r in sweep["records"] if not r["walks_covered"]]

    # realization is additionally cross-checked against brute walk
    # enumeration where that is tractable
    small = [
        i
        for i in itertools.chain(squarefree_corpus(3), square_corpus(3))
        if i.num_gens > 0
    ]
    rng = random.Random(2026)
    pool = [
        i
        for i in itertools.chain(squarefree_corpus(4), square_corpus(4))
        if i.n == 4 and i.num_gens <= 6
    ]
    enum_bad = []
    for ideal in small + rng.sample(pool, 8):
        ring = ReesRing.from_ideal(ideal)
        enumerated = graver_basis(ring)
        basis = toric_ideal_basis(ideal)
        if not {orientation_free(g) for g in basis.elements} <= enumerated:
            enum_bad.append(str(ideal))

    ok = not betti_bad and named_ok and not walk_bad and not enum_bad
    record(
        7,
        "Koszul == Hochster on all squarefree ideals and both "
        "degree-three regression ideals; reduced bases inside walk "
        "binomials corpus-wide",
        ok,
        f"{len(betti_bad)} Betti, {len(walk_bad)} walk, {len(enum_bad)} "
        f"enumeration disagreements",
    )


def test_criterion_8_square_conditions_on_linear_ideals(record, sweep):
    eligible = [r for r in sweep["records"] if "fv_ok" in r]
    bad = [r["tag"] for r in eligible if not (r["fv_ok"] and r["cor_ok"])]
    record(
        8,
        "linear ideals with squares satisfy the free-vertex and "
        "square-neighbor conditions",
        not bad,
        f"{len(eligible)} eligible ideals, {len(bad)} violations",
    )
