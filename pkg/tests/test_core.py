"""Algebra construction, Jacobi completion, model operators, involution."""

import random
from itertools import product

import pytest

from vergne.core import (
    JacobiViolation,
    RowVector,
    VergneAlgebra,
    _complete_row,
    _raw_differential,
    differential,
    from_row,
    involution,
    jacobi_holds,
    lowering_operator,
    m0,
    m2,
    parse_row,
    row_of,
    tail_operator,
)
from vergne.exterior import Form, Monomial, basis, parse_form, wedge

from helpers import random_form, random_homogeneous_form


def F(text, n):
    return parse_form(text, n)


# ---------------------------------------------------------------- models


def test_m0_rows():
    assert str(m0(5).row()) == "[0, 0, 0, 0]"
    assert str(row_of(m0(9))) == "[0, 0, 0, 0, 0, 0, 0, 0]"


def test_m2_rows():
    assert str(m2(5).row()) == "[0, 1, 0, 0]"
    assert str(m2(6).row()) == "[0, 1, 1, 0, 0]"
    assert str(m2(8).row()) == "[0, 1, 1, 1, 1, 0, 0]"


def test_minimum_dimension():
    with pytest.raises(ValueError):
        m0(4)
    with pytest.raises(ValueError):
        VergneAlgebra(3, ())


def test_pair_range_validation():
    with pytest.raises(ValueError):
        VergneAlgebra(6, [(1, 3)])
    with pytest.raises(ValueError):
        VergneAlgebra(6, [(2, 5)])  # 2 + 5 > 6


# ---------------------------------------------------------------- rows


def test_row_padding_violations():
    with pytest.raises(JacobiViolation):
        RowVector((1, 0, 0, 0))
    with pytest.raises(JacobiViolation):
        RowVector((0, 1, 1, 0))  # position n-1
    with pytest.raises(JacobiViolation):
        parse_row("[0, 1, 1, 0]")


def test_row_parsing():
    row = parse_row("  [ 0,1 , 1,0, 0 ,0 ]  ")
    assert row == parse_row("0,1,1,0,0,0")
    assert str(row) == "[0, 1, 1, 0, 0, 0]"
    assert row.n == 7
    with pytest.raises(ValueError):
        parse_row("[0, 2, 0, 0]")
    with pytest.raises(ValueError):
        parse_row("[0, 1")
    with pytest.raises(ValueError):
        parse_row("")
    with pytest.raises(ValueError):
        parse_row("[0, 0, 0]")  # dimension 4


def test_from_row_example_c_table():
    g = from_row("[0, 0, 0, 1, 0, 0, 0]")
    assert sorted(g.c) == [(2, 5), (3, 4), (3, 5)]
    assert g.structure_constant(5, 2) == 1  # symmetric lookup
    assert g.structure_constant(4, 4) == 0
    assert g.structure_constant(2, 9) == 0


def test_from_row_jacobi_violation():
    with pytest.raises(JacobiViolation) as exc:
        from_row("[0, 1, 0, 0, 0, 0]")
    assert exc.value.index == 3
    # oracle: the raw differential of the completed table fails d o d = 0
    row = RowVector((0, 1, 0, 0, 0, 0))
    d = _raw_differential(7, _complete_row(row))
    assert any(
        d.apply_masks(d.apply_mask(1 << (k - 1))) for k in range(3, 8)
    )


def test_from_row_dimension_five():
    assert from_row("[0, 1, 0, 0]") == m2(5)
    assert from_row(parse_row("[0, 0, 0, 0]")) == m0(5)


def test_row_of_round_trips():
    row = parse_row("[0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0]")
    assert row_of(from_row(row)) == row
    assert str(row_of(m2(6))) == "[0, 1, 1, 0, 0]"
    for n in range(5, 10):
        for g in (m0(n), m2(n)):
            assert from_row(row_of(g)) == g


# ---------------------------------------------------------------- differential


def test_differential_examples():
    assert differential(m0(5))(F("e5", 5)) == F("e1^e4", 5)
    assert differential(m2(6))(F("e5", 6)) == F("e1^e4 + e2^e3", 6)
    g81 = from_row("[0, 0, 0, 1, 0, 0, 0]")
    assert differential(g81)(F("e7", 8)) == F("e1^e6 + e2^e5 + e3^e4", 8)
    assert differential(m0(5))(F("e1", 5)) == Form.zero(5)
    assert differential(m0(5))(F("e2", 5)) == Form.zero(5)


def test_differential_squares_to_zero_on_basis():
    for n in range(5, 10):
        for g in (m0(n), m2(n)):
            d = differential(g)
            for k in range(n + 1):
                for mono in basis(n, k):
                    assert not d.apply_masks(d.apply_mask(mono.mask)), (g, mono)


def test_differential_preserves_grading():
    for g in (m0(8), m2(8), from_row("[0, 0, 0, 1, 0, 0, 0]")):
        d = differential(g)
        for k in range(g.n + 1):
            for mono in basis(g.n, k):
                for t in d.apply_mask(mono.mask):
                    img = Monomial(t, g.n)
                    assert img.degree == mono.degree
                    assert img.top_degree == mono.top_degree + 1


# ---------------------------------------------------------------- operators


def test_lowering_operator_definitions():
    n = 9
    d1 = lowering_operator(n, 1)
    d2 = lowering_operator(n, 2)
    for i in range(1, n + 1):
        e_i = F(f"e{i}", n)
        assert d1(e_i) == (F(f"e{i-1}", n) if i >= 3 else Form.zero(n))
        assert d2(e_i) == (F(f"e{i-2}", n) if i >= 5 else Form.zero(n))


def test_model_differentials_factor_through_lowerings():
    # d_{m0} = e^1 ^ D_1 and d_{m2} = e^1 ^ D_1 + e^2 ^ D_2 on every monomial
    for n in range(5, 10):
        d0, dm2 = differential(m0(n)), differential(m2(n))
        d1, d2 = lowering_operator(n, 1), lowering_operator(n, 2)
        e1, e2 = F("e1", n), F("e2", n)
        for k in range(n + 1):
            for mono in basis(n, k):
                h = Form.single(mono)
                assert d0(h) == wedge(e1, d1(h))
                assert dm2(h) == wedge(e1, d1(h)) + wedge(e2, d2(h))


def test_lowering_shift_identity_on_random_forms():
    # e^2 ^ D_2(w) = e^2 ^ D_1(D_1(w)) for every form w
    rng = random.Random(2718)
    count = 0
    while count < 500:
        n = rng.randrange(4, 11)
        w = random_form(rng, n)
        e2 = F("e2", n)
        d1 = lowering_operator(n, 1)
        d2 = lowering_operator(n, 2)
        assert wedge(e2, d2(w)) == wedge(e2, d1(d1(w)))
        count += 1


def test_tail_operator_values():
    g = m2(7)
    r = tail_operator(g)
    assert r(F("e5", 7)) == F("e2^e3", 7)
    for i in (1, 2, 3, 4):
        assert r(F(f"e{i}", 7)) == Form.zero(7)
    assert tail_operator(m0(9)).images == {}


def test_tail_operator_is_differential_plus_leading_part():
    for g in (m2(8), from_row("[0, 0, 0, 1, 0, 0, 0]")):
        n = g.n
        r = tail_operator(g)
        d = differential(g)
        d1 = lowering_operator(n, 1)
        e1 = F("e1", n)
        for k in range(n + 1):
            for mono in basis(n, k):
                h = Form.single(mono)
                assert r(h) == d(h) + wedge(e1, d1(h))
                if not (mono.mask & 1):
                    # on arguments free of e^1 the image stays free of e^1
                    assert all(not (t & 1) for t in r(h).terms)


# ---------------------------------------------------------------- involution


def test_involution_worked_example():
    h = F("e1^e6 + e2^e5 + e3^e4", 7)
    assert involution(h) == F("e1^e6 + e3^e4", 7)


def test_involution_fixes_forms_without_e1():
    h = F("e3^e4", 7)
    assert involution(h) == h


def test_involution_is_involutive_random():
    rng = random.Random(404)
    count = 0
    while count < 500:
        n = rng.randrange(5, 11)
        k = rng.randrange(2, n + 1)
        h = random_homogeneous_form(rng, n, k)
        if not h:
            continue
        f_h = involution(h)
        assert {m.bit_count() for m in f_h.terms} <= {k}
        assert {Monomial(m, n).degree for m in f_h.terms} <= {
            Monomial(m, n).degree for m in h.terms
        }
        assert involution(f_h) == h
        count += 1


def test_involution_rejects_bad_degrees():
    assert involution(Form.zero(7)) == Form.zero(7)
    with pytest.raises(ValueError):
        involution(F("e1", 7))  # topological degree 1
    with pytest.raises(ValueError):
        involution(F("e1 + e2^e3", 7))  # mixed degrees


# ---------------------------------------------------------------- jacobi


def test_jacobi_holds_models():
    for n in (5, 8, 12):
        assert jacobi_holds({p: 1 for p in m0(n).c}, n)
        assert jacobi_holds({p: 1 for p in m2(n).c}, n)
    assert jacobi_holds({}, 12)


def test_jacobi_holds_rejects_bad_tables():
    row = RowVector((0, 1, 0, 1, 0, 0))
    assert not jacobi_holds(_complete_row(row), 7)
    assert not jacobi_holds({(3, 3): 1}, 7)
    with pytest.raises(ValueError):
        jacobi_holds({(2, 6): 1}, 7)  # out of range with nonzero value
    with pytest.raises(ValueError):
        jacobi_holds({(2, 3): 2}, 7)


def test_jacobi_holds_matches_differential_square():
    # equivalence of the table constraints and d o d = 0, all rows, n <= 10
    for n in range(5, 11):
        for free in product((0, 1), repeat=n - 4):
            row = RowVector((0,) + free + (0, 0))
            table = _complete_row(row)
            d = _raw_differential(n, table)
            d_squares = all(
                not d.apply_masks(d.apply_mask(1 << (k - 1))) for k in range(3, n + 1)
            )
            assert jacobi_holds(table, n) == d_squares, row


# ---------------------------------------------------------------- value semantics


def test_equality_and_hash():
    assert m0(6) == m0(6)
    assert m0(6) != m2(6)
    assert m0(6) != m0(7)
    assert len({m0(6), m0(6), m2(6)}) == 2
    assert repr(m2(6)) == "VergneAlgebra(n=6, row=[0, 1, 1, 0, 0])"


def test_algebra_immutable():
    g = m0(6)
    with pytest.raises(AttributeError):
        g.n = 7


def test_bracket_index():
    g = m2(6)
    assert g.bracket_index(1, 3) == (1, 4)
    assert g.bracket_index(3, 1) == (1, 4)
    assert g.bracket_index(1, 6) == (0, 0)
    assert g.bracket_index(2, 3) == (1, 5)
    assert g.bracket_index(3, 4) == (0, 0)  # c_{3,4} = 0 in m2(6)
    assert g.bracket_index(4, 4) == (0, 0)
