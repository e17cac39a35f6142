"""Expression grammar tests."""

from __future__ import annotations

import pytest

from braidnil.core import DomainError, collect, comm_gen, identity, mul
from braidnil.expr import ExpressionError, format_terms, parse
from braidnil.torsion import delta, delta_word


def test_cycle_word_expression():
    e = parse("s4 s3 s2^-1 s1^-1", 5).element()
    assert e == delta(0, 5, 5)


def test_order_five_expression():
    e = parse("a[1,2,4] (s4 s3 s2^-1 s1^-1)", 5).element()
    assert e == mul(comm_gen(5, (1, 2, 4)), delta(0, 5, 5))


def test_empty_expression_is_identity():
    assert parse("", 5).element() == identity(5)
    assert parse("   ", 5).element() == identity(5)


def test_capital_s_is_inverse_generator():
    assert parse("S2", 5).element() == parse("s2^-1", 5).element()


def test_powers_and_groups():
    assert parse("(s4 s3 s2^-1 s1^-1)^5", 5).element() == collect(delta_word(0, 5, 5) ** 5)
    assert parse("A[1,2]", 5).element() == parse("s1^2", 5).element()
    assert parse("A[1,2]^0", 5).element() == identity(5)
    assert parse("(s1 s2)^-1 (s1 s2)", 5).element() == identity(5)


def test_pure_atom_equals_its_defining_word():
    for (i, j) in ((1, 2), (1, 3), (2, 5)):
        assert parse(f"A[{i},{j}]", 5).element() == parse(
            " ".join([f"s{k}" for k in range(j - 1, i, -1)] + [f"s{i}^2"] +
                     [f"s{k}^-1" for k in range(i + 1, j)]), 5).element()


def test_whitespace_is_optional():
    assert parse("s1s2", 3).element() == parse("s1 s2", 3).element()


def test_syntax_error_offsets():
    with pytest.raises(ExpressionError) as exc:
        parse("s1 )", 3)
    assert exc.value.offset == 3
    with pytest.raises(ExpressionError) as exc:
        parse("s1 q2", 3)
    assert exc.value.offset == 3
    with pytest.raises(ExpressionError) as exc:
        parse("A[1,2", 3)
    assert exc.value.offset == 5
    with pytest.raises(ExpressionError):
        parse("(s1", 3)


def test_out_of_range_indices_are_domain_errors():
    with pytest.raises(DomainError):
        parse("s5", 3)
    with pytest.raises(DomainError):
        parse("A[1,7]", 5)
    with pytest.raises(DomainError):
        parse("a[1,1,2]", 5)


def test_format_round_trip():
    for text in ("s4 s3 s2^-1 s1^-1", "a[1,2,4] (s4 s3 s2^-1 s1^-1)", "A[2,5]^-3 S1", ""):
        expr = parse(text, 5)
        again = parse(format_terms(expr.terms), 5)
        assert again.element() == expr.element()
