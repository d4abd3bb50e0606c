"""Expression DSL: parsing, precedence, printing, error reporting."""

from fractions import Fraction

import pytest

from qid import ParseError, SignedMonomial, load_registry
from qid.dsl import (AL, MT, Add, Div, Extract, F, Lit, Mul, Neg, Pow, Q, Sub,
                     parse, print_expr)


def test_eta_quotient_ast():
    e = parse("f2^7*f3^2/(f1^6*f4*f6)")
    assert isinstance(e, Div)
    assert e.left == Mul(Pow(F(2), 7), Pow(F(3), 2))


def test_appell_lerch_call():
    e = parse("-(1/q)*AL(q^0, 4, q^3)")
    assert isinstance(e, Mul)
    assert e.right == AL(SignedMonomial(1, 0), 4, SignedMonomial(1, 3))
    assert e.left == Neg(Div(Lit(Fraction(1)), Q()))


def test_precedence_and_associativity():
    assert parse("1+2*3") == Add(Lit(Fraction(1)),
                                 Mul(Lit(Fraction(2)), Lit(Fraction(3))))
    assert parse("8-3-2") == Sub(Sub(Lit(Fraction(8)), Lit(Fraction(3))),
                                 Lit(Fraction(2)))
    assert parse("2*f1^3") == Mul(Lit(Fraction(2)), Pow(F(1), 3))
    assert parse("-q^2") == Neg(Pow(Q(), 2))


def test_rational_literals():
    assert parse("3/4") == Lit(Fraction(3, 4))
    # a powered denominator is not folded into the literal
    assert parse("8/4^2") == Div(Lit(Fraction(8)), Pow(Lit(Fraction(4)), 2))


def test_signed_monomial_arguments():
    e = parse("AL(-q^3, 36, -q^0)")
    assert e == AL(SignedMonomial(-1, 3), 36, SignedMonomial(-1, 0))
    e = parse("MT(B3)")
    assert e == MT("B3")
    e = parse("EXTRACT(MT(B3), 3, 0)")
    assert e == Extract(MT("B3"), 3, 0)


def test_negative_exponents():
    e = parse("f1^-2")
    assert e == Pow(F(1), -2)
    e = parse("AL(q^-12, 36, -q^0)")
    assert e.x == SignedMonomial(1, -12)


def test_syntax_errors():
    for bad in ["q^", "AL(q, 4)", "f1 +", "(f1", "EXTRACT(f1, 3, 5)",
                "MT(Z9)", "1/0", "@", ""]:
        with pytest.raises(ParseError):
            parse(bad)


def test_error_location_and_expectation():
    with pytest.raises(ParseError) as info:
        parse("f1 + %")
    assert info.value.line == 1
    assert info.value.column == 6


def test_round_trip_simple():
    for src in ["f2^7*f3^2/(f1^6*f4*f6)", "-(1/q)*AL(q^0, 4, q^3)",
                "SUBST(EXTRACT(MT(MU2), 3, 1), 2)", "q^2 - 1/2",
                "J(-q, 3)*P(-q^2, 2, 5)"]:
        ast = parse(src)
        assert parse(print_expr(ast)) == ast


def test_round_trip_registry():
    # every expression shipped in the registry reparses identically
    for rec in load_registry():
        for src in (rec.lhs, rec.rhs):
            if not src:
                continue
            ast = parse(src)
            assert parse(print_expr(ast)) == ast, rec.id
