"""Enumeration counts, polynomial expansions, symmetry predicates."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from ctrect import (
    Filling,
    ParseError,
    Polynomial,
    enumerate_ct,
    enumerate_rssyt,
    enumerate_ssyt,
    is_quasisymmetric,
    is_symmetric,
    monomial_qsym_expand,
    monomial_sym_expand,
    parse_polynomial,
    render_polynomial,
    schur_expand,
)


class TestEnumeration:
    def test_ssyt_21_3_has_eight(self):
        tableaux = enumerate_ssyt((2, 1), 3)
        assert len(tableaux) == 8
        expected = {
            Filling([[1, 1], [2]]),
            Filling([[1, 1], [3]]),
            Filling([[2, 2], [3]]),
            Filling([[1, 2], [2]]),
            Filling([[1, 3], [3]]),
            Filling([[2, 3], [3]]),
            Filling([[1, 2], [3]]),
            Filling([[1, 3], [2]]),
        }
        assert set(tableaux) == expected

    def test_ssyt_trivial(self):
        assert enumerate_ssyt((1,), 1) == (Filling([[1]]),)
        assert enumerate_ssyt((2, 2), 2) == (Filling([[1, 1], [2, 2]]),)

    def test_rssyt_count_matches_ssyt_by_reversal(self):
        for shape in [(2, 1), (3,), (2, 2), (3, 1), (1, 1, 1)]:
            for n in (2, 3, 4):
                assert len(enumerate_rssyt(shape, n)) == len(enumerate_ssyt(shape, n))

    def test_rssyt_reversal_bijection(self):
        # v -> n+1-v carries ssyt onto rssyt of the same shape
        n = 3
        reversed_set = {
            Filling([[n + 1 - v for v in row] for row in t.rows])
            for t in enumerate_ssyt((2, 1), n)
        }
        assert reversed_set == set(enumerate_rssyt((2, 1), n))

    def test_ct_rearrangement_counts(self):
        assert len(enumerate_ct((2, 1), 3)) + len(enumerate_ct((1, 2), 3)) == 8

    def test_ct_trivial(self):
        assert enumerate_ct((1,), 1) == (Filling([[1]]),)

    def test_ct_matches_validator_brute_force(self):
        from itertools import product

        from ctrect import violations

        for shape in [(2, 1), (1, 2), (2, 2), (1, 1, 1), (3, 1)]:
            m = sum(shape)
            brute = []
            for values in product(range(1, 4), repeat=m):
                rows, i = [], 0
                for part in shape:
                    rows.append(values[i : i + part])
                    i += part
                f = Filling(rows)
                if violations("ct", f) == []:
                    brute.append(f)
            assert sorted(brute, key=str) == sorted(enumerate_ct(shape, 3), key=str)

    def test_reading_word_order(self):
        words = [tuple(v for _, _, v in t.cells()) for t in enumerate_ssyt((2, 1), 3)]
        assert words == sorted(words)

    def test_bad_shapes_rejected(self):
        with pytest.raises(ValueError):
            enumerate_ssyt((1, 2), 3)
        with pytest.raises(ValueError):
            enumerate_ct((0, 1), 3)


class TestExpansions:
    def test_schur_21_in_three_vars(self):
        p = schur_expand((2, 1), 3)
        assert p.terms == {
            (2, 1, 0): 1,
            (2, 0, 1): 1,
            (0, 2, 1): 1,
            (1, 2, 0): 1,
            (1, 0, 2): 1,
            (0, 1, 2): 1,
            (1, 1, 1): 2,
        }

    def test_schur_trivial(self):
        assert schur_expand((1,), 2).terms == {(1, 0): 1, (0, 1): 1}
        assert schur_expand((2, 1), 2).terms == {(2, 1): 1, (1, 2): 1}

    def test_msym_21(self):
        p = monomial_sym_expand((2, 1), 3)
        assert len(p.terms) == 6
        assert all(coeff == 1 for coeff in p.terms.values())

    def test_msym_trivial(self):
        assert monomial_sym_expand((1,), 1).terms == {(1,): 1}
        assert monomial_sym_expand((1, 1), 3).terms == {
            (1, 1, 0): 1,
            (1, 0, 1): 1,
            (0, 1, 1): 1,
        }

    def test_mqsym_21(self):
        assert monomial_qsym_expand((2, 1), 3).terms == {
            (2, 1, 0): 1,
            (2, 0, 1): 1,
            (0, 2, 1): 1,
        }

    def test_mqsym_edges(self):
        assert monomial_qsym_expand((3,), 2).terms == {(3, 0): 1, (0, 3): 1}
        assert monomial_qsym_expand((1, 2), 2).terms == {(1, 2): 1}

    def test_identities(self):
        s21 = schur_expand((2, 1), 3)
        m21 = monomial_sym_expand((2, 1), 3)
        m111 = monomial_sym_expand((1, 1, 1), 3)
        q21 = monomial_qsym_expand((2, 1), 3)
        q12 = monomial_qsym_expand((1, 2), 3)
        q111 = monomial_qsym_expand((1, 1, 1), 3)
        assert s21 == m21 + 2 * m111
        assert s21 == q21 + q12 + 2 * q111
        assert m21 == q21 + q12


class TestPredicates:
    def test_quasisymmetric_examples(self):
        p = Polynomial(3, {(2, 1, 0): 1, (2, 0, 1): 1, (0, 2, 1): 1})
        assert is_quasisymmetric(p) is True
        assert is_symmetric(p) is False

    def test_not_quasisymmetric(self):
        p = Polynomial(3, {(1, 2, 0): 1, (1, 0, 2): 1})
        assert is_quasisymmetric(p) is False

    def test_single_square_not_quasisymmetric(self):
        assert is_quasisymmetric(Polynomial(2, {(2, 0): 1})) is False

    def test_full_support_monomial_is_quasisymmetric(self):
        assert is_quasisymmetric(Polynomial(3, {(2, 1, 3): 1})) is True

    def test_schur_is_symmetric_and_quasisymmetric(self):
        for shape in [(1,), (2,), (2, 1), (2, 2), (3, 1)]:
            p = schur_expand(shape, 4)
            assert is_symmetric(p)
            assert is_quasisymmetric(p)

    @given(
        st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple),
        st.integers(1, 4),
    )
    def test_mqsym_always_quasisymmetric(self, comp, nvars):
        assert is_quasisymmetric(monomial_qsym_expand(comp, nvars))

    @given(
        st.lists(st.integers(1, 3), min_size=1, max_size=3)
        .map(lambda parts: tuple(sorted(parts, reverse=True))),
        st.integers(1, 4),
    )
    def test_msym_always_symmetric(self, shape, nvars):
        p = monomial_sym_expand(shape, nvars)
        assert is_symmetric(p)
        assert is_quasisymmetric(p)  # Sym is contained in Qsym


class TestPolynomialType:
    def test_zero_coefficients_dropped(self):
        assert Polynomial(2, {(1, 0): 0}).is_zero()

    def test_add_sub(self):
        a = Polynomial(2, {(1, 0): 1})
        b = Polynomial(2, {(1, 0): 2, (0, 1): 1})
        assert (a + b).terms == {(1, 0): 3, (0, 1): 1}
        assert (b - a).terms == {(1, 0): 1, (0, 1): 1}
        assert (a - a).is_zero()

    def test_var_mismatch(self):
        with pytest.raises(ValueError):
            Polynomial(2, {(1, 0): 1}) + Polynomial(3, {(1, 0, 0): 1})

    def test_render_parse_roundtrip(self):
        p = schur_expand((2, 1), 3)
        assert parse_polynomial(render_polynomial(p)) == p

    def test_render_order_is_graded_lex(self):
        p = Polynomial(2, {(0, 1): 1, (2, 0): 1, (1, 0): 1})
        assert render_polynomial(p) == "1: 1,0\n1: 0,1\n1: 2,0"

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            parse_polynomial("nonsense")
        with pytest.raises(ParseError):
            parse_polynomial("1: 1,2\n1: 1")
        with pytest.raises(ParseError):
            parse_polynomial("")
