"""Circuit construction, gate counting, and the text format."""

from fractions import Fraction

import pytest

from laughlin.circuit import (
    ANTISYM,
    SYM,
    SYM_REVERSED,
    VARIANTS,
    build_circuit,
    closed_form_counts,
    counts,
    emit_circuit,
    optimality_check,
    parse_circuit,
)


def test_build_n2():
    c = build_circuit(2)
    assert len(c.gates) == 1
    g = c.gates[0]
    assert (g.stage, g.k, g.wires, g.p) == (2, 1, (0, 1), Fraction(1, 2))
    assert len(g.factors) == 1
    w = g.factors[0]
    assert (w.wire_a, w.wire_b, w.i, w.j) == (0, 1, 0, 1)
    assert c.input_digits == (0, 1)


def test_build_n3_gate_order_and_weights():
    c = build_circuit(3)
    got = [(g.stage, g.k, g.p) for g in c.gates]
    assert got == [
        (2, 1, Fraction(1, 2)),
        (3, 2, Fraction(1, 3)),
        (3, 1, Fraction(1, 2)),
    ]
    # stage-3 gates bundle factors (0,2) and (1,2)
    for g in c.gates[1:]:
        assert [(w.i, w.j) for w in g.factors] == [(0, 2), (1, 2)]


def test_build_n5_counts():
    c = build_circuit(5)
    got = counts(c)
    assert (got.v_gates, got.w_factors, got.depth) == (10, 30, 7)


def test_build_bounds():
    with pytest.raises(ValueError):
        build_circuit(1)
    with pytest.raises(ValueError):
        build_circuit(65)
    with pytest.raises(ValueError):
        build_circuit(3, variant="bogus")


@pytest.mark.parametrize("n", range(2, 11))
def test_structural_counts_match_closed_forms(n):
    assert counts(build_circuit(n)) == closed_form_counts(n)


def test_closed_form_examples():
    for n, expect in [(2, (1, 1, 1)), (3, (3, 5, 3)), (7, (21, 91, 11)), (12, (66, 506, 21))]:
        got = closed_form_counts(n)
        assert (got.v_gates, got.w_factors, got.depth) == expect
    assert counts(build_circuit(12)) == closed_form_counts(12)


@pytest.mark.parametrize("n", range(2, 9))
def test_structural_recursion(n):
    smaller = build_circuit(n)
    larger = build_circuit(n + 1)
    overlap = len(smaller.gates)
    assert [(g.stage, g.k) for g in larger.gates[:overlap]] == [
        (g.stage, g.k) for g in smaller.gates
    ]
    new = larger.gates[overlap:]
    assert len(new) == n
    assert [g.stage for g in new] == [n + 1] * n
    assert [g.wires for g in new] == [(k - 1, k) for k in range(n, 0, -1)]


def test_weights_exact_rationals():
    for g in build_circuit(8).gates:
        assert g.p * (g.k + 1) == 1
        for w in g.factors:
            assert isinstance(w.p, Fraction) and w.p * (g.k + 1) == 1


@pytest.mark.parametrize("n", range(3, 11))
def test_depth_telescoping(n):
    assert counts(build_circuit(n)).depth - counts(build_circuit(n - 1)).depth == 2


@pytest.mark.parametrize("n", range(2, 11))
def test_optimality(n):
    assert optimality_check(n)


def test_optimality_bounds():
    with pytest.raises(ValueError):
        optimality_check(11)


def test_variant_structure():
    sym = build_circuit(4, SYM)
    assert sym.input_digits == (0, 1, 2, 3)
    assert all(w.sign == "sym" for g in sym.gates for w in g.factors)

    rev = build_circuit(4, SYM_REVERSED)
    assert rev.input_digits == (3, 2, 1, 0)
    assert all(w.sign == "antisym" for g in rev.gates for w in g.factors)
    # stage s factors (i, s-1) relabel to (n-s, n-1-i)
    stage3 = [g for g in rev.gates if g.stage == 3][0]
    assert [(w.i, w.j) for w in stage3.factors] == [(1, 3), (1, 2)]


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("n", range(2, 11))
def test_text_roundtrip_byte_identical(n, variant):
    text = emit_circuit(build_circuit(n, variant))
    assert emit_circuit(parse_circuit(text)) == text


def test_parse_rejects_weight_mismatch():
    text = emit_circuit(build_circuit(3)).replace("p=1/2", "p=1/3", 1)
    with pytest.raises(ValueError, match="weight"):
        parse_circuit(text)


def test_parse_rejects_malformed():
    good = emit_circuit(build_circuit(3))
    with pytest.raises(ValueError, match="header"):
        parse_circuit("nonsense\n" + good)
    with pytest.raises(ValueError, match="input"):
        parse_circuit("laughlin n=3 variant=antisym\ninput 0 2 1\n")
    with pytest.raises(ValueError, match="wires"):
        parse_circuit(good.replace("wires=0,1", "wires=1,2", 1))
    with pytest.raises(ValueError, match="stage"):
        parse_circuit(good.replace("stage=3", "stage=9"))
    with pytest.raises(ValueError, match="gate line"):
        parse_circuit(good + "w broken\n")
    with pytest.raises(ValueError, match="empty"):
        parse_circuit("\n")
