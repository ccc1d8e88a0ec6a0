"""Central extensions, decomposition, the Betti partner, ideal witness."""

import json
from itertools import combinations

import pytest

from vergne.classify import enumerate_algebras
from vergne.cohomology import betti
from vergne.core import differential, from_row, m0, m2
from vergne.exterior import AmbientMismatch, Form, parse_form
from vergne.extensions import (
    Decomposition,
    ExtensionStep,
    MissingLeadingTerm,
    NotACocycle,
    NotHomogeneousTopDegree,
    admissible_cocycles,
    central_extension,
    decompose,
    has_codim1_abelian_ideal,
    partner,
    reduce,
)


def F(text, n):
    return parse_form(text, n)


# ---------------------------------------------------------- central_extension


def test_central_extension_examples():
    g71 = central_extension(m0(6), F("e1^e6 + e2^e5 + e3^e4", 6))
    assert g71 == from_row("[0, 0, 0, 1, 0, 0]")
    h71 = central_extension(m2(6), F("e1^e6 + e3^e4", 6))
    assert h71 == from_row("[0, 1, 1, 0, 0, 0]")


def test_central_extension_missing_leading_term():
    with pytest.raises(MissingLeadingTerm):
        central_extension(m0(6), F("e2^e5", 6))


def test_central_extension_not_a_cocycle():
    # e1^e6 + e2^e5 alone is not closed for m0(6)
    with pytest.raises(NotACocycle):
        central_extension(m0(6), F("e1^e6 + e2^e5", 6))


def test_central_extension_homogeneity_errors():
    with pytest.raises(NotHomogeneousTopDegree):
        central_extension(m0(6), F("e1^e6 + e5", 6))
    with pytest.raises(NotHomogeneousTopDegree):
        central_extension(m0(6), F("e1^e6 + e1^e2^e4", 6))
    with pytest.raises(NotHomogeneousTopDegree):
        central_extension(m0(6), F("e1^e6 + e1^e4", 6))  # degree 5 term
    with pytest.raises(AmbientMismatch):
        central_extension(m0(6), F("e1^e6", 7))


# ------------------------------------------------------- admissible_cocycles


def brute_force_admissible(g):
    """Oracle: try every subset of the non-leading degree-(n+1) 2-monomials."""
    n = g.n
    d = differential(g)
    lead = F(f"e1^e{n}", n)
    tail = [
        Form(n, [(1 << (i - 1)) | (1 << (j - 1))])
        for i, j in combinations(range(1, n + 1), 2)
        if i + j == n + 1 and (i, j) != (1, n)
    ]
    found = []
    for pick in range(1 << len(tail)):
        omega = lead
        for t, form in enumerate(tail):
            if (pick >> t) & 1:
                omega = omega + form
        if not d(omega):
            found.append(omega)
    return found


def test_admissible_cocycles_m0_6():
    got = admissible_cocycles(m0(6))
    assert [str(w) for w in got] == ["e1^e6", "e1^e6 + e2^e5 + e3^e4"]
    assert set(got) == set(brute_force_admissible(m0(6)))


def test_admissible_cocycles_m0_8():
    assert len(admissible_cocycles(m0(8))) == 2


def test_admissible_cocycles_match_brute_force():
    for n in range(5, 9):
        for g in enumerate_algebras(n):
            assert set(admissible_cocycles(g)) == set(brute_force_admissible(g)), g


def test_admissible_cocycles_satisfy_step_invariants():
    for g in enumerate_algebras(7):
        d = differential(g)
        for omega in admissible_cocycles(g):
            assert not d(omega)
            assert all(m.bit_count() == 2 for m in omega.terms)
            assert all(mo.degree == g.n + 1 for mo in omega.monomials())
            assert (1 | (1 << (g.n - 1))) in omega.terms
            central_extension(g, omega)  # must not raise


# ---------------------------------------------------------------- reduce


def test_reduce_example():
    base, omega = reduce(from_row("[0, 0, 0, 1, 0, 0, 0]"))
    assert base == from_row("[0, 0, 0, 1, 0, 0]")
    assert omega == F("e1^e7 + e3^e5", 7)


def test_reduce_model():
    for n in range(6, 10):
        base, omega = reduce(m0(n))
        assert base == m0(n - 1)
        assert omega == F(f"e1^e{n-1}", n - 1)


def test_reduce_minimum_dimension():
    with pytest.raises(ValueError):
        reduce(m0(5))


def test_reduce_round_trips():
    # reduce o central_extension and central_extension o reduce are inverse
    for n in range(5, 10):
        for g in enumerate_algebras(n):
            for omega in admissible_cocycles(g):
                assert reduce(central_extension(g, omega)) == (g, omega)
            if n >= 6:
                base, omega = reduce(g)
                assert central_extension(base, omega) == g


# ---------------------------------------------------------------- decompose


def test_decompose_model():
    dec = decompose(m0(9))
    assert dec.root == m0(5)
    assert [str(s.omega) for s in dec.steps] == [
        "e1^e5",
        "e1^e6",
        "e1^e7",
        "e1^e8",
    ]
    assert dec.replay() == m0(9)


def test_decompose_g71():
    # a dimension-7 algebra peels off exactly two cocycles on the way to
    # dimension 5; only the top one is nontrivial for g(7,1)
    dec = decompose(from_row("[0, 0, 0, 1, 0, 0]"))
    assert dec.root == m0(5)
    assert len(dec.steps) == 2
    assert dec.steps[0].omega == F("e1^e5", 5)
    assert dec.steps[1].omega == F("e1^e6 + e2^e5 + e3^e4", 6)


def test_decompose_reaches_m2_root():
    dec = decompose(from_row("[0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0]"))
    assert dec.root == m2(5)
    assert dec.replay() == from_row("[0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0]")


def test_decompose_of_root_is_trivial():
    dec = decompose(m2(5))
    assert dec.root == m2(5)
    assert dec.steps == ()


def test_decomposition_replay_rejects_shuffled_steps():
    dec = decompose(m0(8))
    bad = Decomposition(root=dec.root, steps=dec.steps[::-1])
    with pytest.raises(ValueError):
        bad.replay()


def test_decomposition_json():
    dec = decompose(from_row("[0, 0, 0, 1, 0, 0]"))
    payload = json.loads(dec.to_json())
    assert payload == {
        "root": "[0, 0, 0, 0]",
        "omegas": ["e1^e5", "e1^e6 + e2^e5 + e3^e4"],
    }


# ---------------------------------------------------------------- partner


def test_partner_of_models():
    for n in range(5, 13):
        assert partner(m0(n)) == m2(n), n
        assert partner(m2(n)) == m0(n), n


def test_partner_pairs_known_labels():
    g71 = from_row("[0, 0, 0, 1, 0, 0]")
    assert partner(g71) == from_row("[0, 1, 1, 0, 0, 0]")
    assert partner(from_row("[0, 0, 0, 0, 0, 0, 0, 0]")) == m2(9)


def test_partner_is_involution_and_changes_row():
    for n in range(5, 10):
        for g in enumerate_algebras(n):
            p = partner(g)
            assert p.n == n
            assert p.row() != g.row()
            assert partner(p) == g
            assert decompose(p).root != decompose(g).root


def test_partner_preserves_betti():
    for n in range(5, 9):
        for g in enumerate_algebras(n):
            assert betti(g).b == betti(partner(g)).b, g


# -------------------------------------------------------------- ideal witness


def test_codim1_abelian_ideal_examples():
    assert has_codim1_abelian_ideal(m0(5)) is True
    assert has_codim1_abelian_ideal(m2(5)) is False
    assert has_codim1_abelian_ideal(m0(12)) is True
    assert has_codim1_abelian_ideal(m2(9)) is False
    # any nonzero c kills all three candidate hyperplanes
    assert has_codim1_abelian_ideal(from_row("[0, 0, 0, 1, 0, 0]")) is False


def test_extension_step_fields():
    step = ExtensionStep(base=m0(6), omega=F("e1^e6", 6))
    assert step.base == m0(6)
    assert step.omega == F("e1^e6", 6)
