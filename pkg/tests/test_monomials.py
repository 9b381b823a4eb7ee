import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import brute_minimalize, ideal_of, sturmfels_ideal, terai_ideal
from linres.errors import InputError
from linres.monomials import (
    Monomial,
    MonomialIdeal,
    default_names,
    format_monomial,
    ideal_from_json,
    ideal_from_strings,
    ideal_to_json,
    minimal_generators,
    monomial_from_support,
    parse_monomial,
)


def m(*exps) -> Monomial:
    return Monomial(tuple(exps))


class TestMonomial:
    def test_degree_support_squarefree(self):
        u = m(1, 0, 2)
        assert u.degree == 3
        assert u.support == (1, 3)
        assert not u.is_squarefree()
        assert m(1, 1, 0).is_squarefree()

    def test_gcd_lcm_divides(self):
        x1x2, x1x3 = m(1, 1, 0), m(1, 0, 1)
        assert x1x2.gcd(x1x3) == m(1, 0, 0)
        assert m(2, 0).lcm(m(1, 1)) == m(2, 1)
        assert m(1, 0).divides(m(2, 0))
        assert not m(2, 0).divides(m(1, 1))

    def test_mul_div(self):
        assert m(1, 1) * m(0, 1) == m(1, 2)
        assert m(1, 2) / m(0, 1) == m(1, 1)
        with pytest.raises(InputError):
            m(1, 2) / m(2, 0)

    def test_ring_mismatch(self):
        with pytest.raises(InputError):
            m(1, 0).divides(m(1, 0, 0))

    def test_negative_exponent_rejected(self):
        with pytest.raises(InputError):
            Monomial((1, -1))

    def test_from_support_repeats_multiply(self):
        assert monomial_from_support(3, (2, 2)) == m(0, 2, 0)
        with pytest.raises(InputError):
            monomial_from_support(2, (3,))


class TestMinimalGenerators:
    def test_dedup(self):
        ideal = minimal_generators(2, [m(1, 1), m(1, 1)])
        assert ideal.gens == (m(1, 1),)

    def test_divisibility_prunes(self):
        ideal = minimal_generators(2, [m(1, 0), m(1, 1)])
        assert ideal.gens == (m(1, 0),)

    def test_terai_generators_already_minimal(self):
        assert terai_ideal().num_gens == 10

    def test_empty_input_is_zero_ideal(self):
        ideal = minimal_generators(3, [])
        assert ideal.is_zero()

    def test_mismatched_lengths_rejected(self):
        with pytest.raises(InputError):
            minimal_generators(2, [m(1, 0, 0)])

    @given(
        st.lists(
            st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
            max_size=6,
        )
    )
    def test_idempotent_and_antichain(self, exps):
        monomials = [Monomial(e) for e in exps if sum(e) > 0]
        ideal = minimal_generators(3, monomials)
        again = minimal_generators(3, list(ideal.gens))
        assert again == ideal
        for a in ideal.gens:
            for b in ideal.gens:
                assert a == b or not a.divides(b)


class TestIdeal:
    def test_unit_ideal_rejected(self):
        with pytest.raises(InputError):
            MonomialIdeal(2, (m(0, 0),))

    def test_zero_ideal(self):
        z = MonomialIdeal(3, ())
        assert z.is_zero() and z.degree is None

    def test_mixed_degree_has_no_common_degree(self):
        ideal = MonomialIdeal(2, (m(1, 0), m(0, 2)))
        assert ideal.degree is None
        assert not ideal.is_equigenerated()

    def test_membership(self):
        ideal = ideal_of(3, (1, 2))
        assert ideal.contains(m(1, 1, 1))
        assert not ideal.contains(m(1, 0, 1))

    def test_canonical_generator_order_is_stable(self):
        a = ideal_of(3, (2, 3), (1, 2), (1, 3))
        b = ideal_of(3, (1, 3), (2, 3), (1, 2))
        assert a == b
        assert a.gens == b.gens


class TestPower:
    def test_square_of_maximal_ideal(self):
        assert MonomialIdeal(2, (m(1, 0), m(0, 1))).power(2) == ideal_of(
            2, (1, 1), (1, 2), (2, 2)
        )

    def test_two_disjoint_edges(self):
        got = ideal_of(4, (1, 2), (3, 4)).power(2)
        assert got == ideal_of(4, (1, 1, 2, 2), (1, 2, 3, 4), (3, 3, 4, 4))

    def test_first_power_is_identity(self):
        ideal = sturmfels_ideal()
        assert ideal.power(1) == ideal

    def test_sturmfels_square_matches_brute_force(self):
        # oracle: all pairwise products, then a naive divisibility sweep
        ideal = sturmfels_ideal()
        products = [u * v for u in ideal.gens for v in ideal.gens]
        expected = brute_minimalize(products)
        got = ideal.power(2)
        assert sorted(g.exps for g in got.gens) == sorted(g.exps for g in expected)

    def test_k_zero_rejected(self):
        with pytest.raises(InputError):
            ideal_of(2, (1, 2)).power(0)

    @given(
        st.lists(
            st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
            min_size=1,
            max_size=4,
        ),
        st.integers(1, 2),
        st.integers(1, 2),
    )
    @settings(max_examples=40, deadline=None)
    def test_power_additivity(self, exps, k1, k2):
        monomials = [Monomial(e) for e in exps if sum(e) > 0]
        if not monomials:
            return
        ideal = minimal_generators(3, monomials)
        lhs = ideal.power(k1 + k2)
        products = [u * v for u in ideal.power(k1).gens for v in ideal.power(k2).gens]
        assert lhs == minimal_generators(3, products)


class TestSquarefreePartAndPolarize:
    def test_split_examples(self):
        j, squares = ideal_of(2, (1, 1), (1, 2)).squarefree_part()
        assert j == ideal_of(2, (1, 2)) and squares == (1,)
        j, squares = ideal_of(3, (1, 2), (2, 3)).squarefree_part()
        assert j == ideal_of(3, (1, 2), (2, 3)) and squares == ()
        j, squares = ideal_of(2, (1, 1), (2, 2)).squarefree_part()
        assert j.is_zero() and squares == (1, 2)

    def test_split_reconstructs(self):
        ideal = ideal_of(3, (1, 1), (1, 2), (3, 3))
        j, squares = ideal.squarefree_part()
        rebuilt = MonomialIdeal(
            3, j.gens + tuple(monomial_from_support(3, (i, i)) for i in squares)
        )
        assert rebuilt == ideal

    def test_polarize_single_square(self):
        assert ideal_of(1, (1, 1)).polarize() == ideal_of(2, (1, 2))

    def test_polarize_mixed(self):
        got = ideal_of(2, (1, 1), (1, 2)).polarize()
        assert got == ideal_of(3, (1, 3), (1, 2))

    def test_polarize_two_squares(self):
        got = ideal_of(2, (1, 1), (2, 2)).polarize()
        assert got == ideal_of(4, (1, 3), (2, 4))

    def test_polarize_is_squarefree_same_size(self):
        for ideal in (
            ideal_of(3, (1, 1), (2, 2), (1, 3)),
            ideal_of(2, (1, 2)),
            terai_ideal(),
        ):
            if ideal.degree != 2:
                continue
            p = ideal.polarize()
            assert p.is_squarefree()
            assert p.num_gens == ideal.num_gens

    def test_degree_three_rejected(self):
        with pytest.raises(InputError):
            terai_ideal().squarefree_part()


class TestRelabel:
    def test_relabel_permutes_variables(self):
        ideal = ideal_of(3, (1, 2))
        assert ideal.relabel((2, 3, 1)) == ideal_of(3, (2, 3))

    def test_relabel_requires_permutation(self):
        with pytest.raises(InputError):
            ideal_of(2, (1, 2)).relabel((1, 1))


class TestParsingAndJson:
    def test_juxtaposed_letters(self):
        assert parse_monomial("abd", list("abcd")) == m(1, 1, 0, 1)

    def test_starred_with_exponent(self):
        names = default_names(3)
        assert parse_monomial("x1*x3^2", names) == m(1, 0, 2)

    def test_caret_on_letters(self):
        assert parse_monomial("a^2", list("ab")) == m(2, 0)

    def test_unknown_variable(self):
        with pytest.raises(InputError):
            parse_monomial("az", list("ab"))

    def test_format_round_trip(self):
        names = default_names(4)
        for u in (m(1, 1, 0, 0), m(0, 2, 0, 1), m(3, 0, 0, 0)):
            assert parse_monomial(format_monomial(u, names), names) == u

    def test_ideal_json_round_trip(self):
        ideal = ideal_of(3, (1, 1), (2, 3))
        blob = json.dumps(ideal_to_json(ideal))
        back, names = ideal_from_json(json.loads(blob))
        assert back == ideal
        assert names == default_names(3)

    def test_from_strings(self):
        got = ideal_from_strings(["ab", "b^2"], list("ab"))
        assert got == ideal_of(2, (1, 2), (2, 2))
