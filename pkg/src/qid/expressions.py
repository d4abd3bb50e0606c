"""The eta-quotient combinations at the heart of the three analytic proofs,
as structured data: each is a sum of terms coeff * q^j * prod f_k^(e_k).

F1, F2, F3 are the lemma combinations that vanish identically; S0/S1,
H0/H1, R0 are their even/odd split components, which contain only
f_1, f_2, f_3, f_4, f_6, f_12 and are therefore amenable to the
(p,k)-parametrization proof as well as to series evaluation.
"""

from __future__ import annotations

from fractions import Fraction

from .qproducts import EtaExpression, eta_expression

F1 = eta_expression([
    (1, 0, {1: -7, 3: 1, 2: 5, 12: 14, 4: -1, 6: -1, 8: -5, 24: -5}),
    (-3, 1, {1: -6, 3: -2, 2: 3, 4: 1, 6: 5, 12: 8, 8: -6, 24: -2}),
    (3, 1, {1: -6, 3: -2, 2: 1, 4: 4, 6: 11, 24: 1, 8: -7, 12: -1}),
    (Fraction(1, 4), 1, {1: -4, 3: -8, 4: 8, 6: 26, 24: 4, 2: -4, 8: -8, 12: -13}),
    (Fraction(3, 2), 1, {1: -8, 3: 4, 2: 6, 12: 11, 6: -4, 8: -6, 24: -2}),
    (-2, 1, {1: -8, 3: 4, 2: 8, 12: 20, 4: -3, 6: -10, 8: -5, 24: -5}),
    (Fraction(-3, 4), 1, {4: 7, 24: 3, 8: -9}),
    (-6, 2, {3: 1, 1: -7, 2: 4, 4: 2, 6: 2, 12: 5, 24: 1, 8: -7}),
    (1, 2, {3: 1, 1: -7, 2: 2, 4: 5, 6: 8, 24: 4, 8: -8, 12: -4}),
    (-2, 2, {1: -5, 3: -5, 4: 6, 6: 17, 24: 4, 2: -1, 8: -8, 12: -7}),
    (Fraction(-1, 2), 3, {1: -8, 3: 4, 2: 5, 4: 3, 12: 2, 24: 4, 6: -1, 8: -8}),
    (-1, 0, {3: 2, 1: -6, 2: 7, 4: -1, 6: -1}),
])

S1 = eta_expression([
    (-2, 3, {2: 31, 3: 7, 12: 14, 1: -21, 4: -18, 6: -12}),
    (16, 3, {2: 19, 3: 1, 12: 8, 1: -19, 4: -8}),
    (4, 3, {2: 22, 3: 6, 12: 12, 1: -18, 4: -12, 6: -9}),
    (-20, 2, {2: 19, 3: 3, 12: 6, 1: -17, 4: -10}),
    (-8, 2, {2: 7, 6: 12, 1: -15, 3: -3}),
    (64, 2, {2: 13, 6: 18, 1: -16, 3: -8, 4: -5, 12: -1}),
    (8, 2, {2: 10, 3: 2, 6: 3, 12: 4, 1: -14, 4: -4}),
    (-48, 2, {2: 16, 6: 9, 12: 2, 1: -18, 3: -2, 4: -6}),
    (Fraction(-1, 2), 1, {2: 31, 6: 12, 1: -23, 3: -3, 4: -16}),
    (-32, 1, {2: 1, 4: 3, 6: 30, 1: -12, 3: -12, 12: -9}),
    (-18, 1, {2: 18, 3: 3, 6: 7, 12: 1, 1: -17, 4: -11}),
    (3, 1, {2: 21, 3: 9, 12: 4, 1: -19, 4: -12, 6: -2}),
    (4, 1, {2: 13, 3: 11, 12: 4, 1: -17, 4: -4, 6: -6}),
    (-34, 1, {2: 7, 6: 12, 1: -13, 3: -1, 4: -2, 12: -2}),
    (3, 1, {2: 28, 3: 7, 12: 5, 1: -21, 4: -15, 6: -3}),
    (24, 1, {2: 4, 4: 2, 6: 21, 1: -14, 3: -6, 12: -6}),
    (-3, 1, {2: 25, 3: 1, 6: 6, 12: 2, 1: -19, 4: -14}),
    (Fraction(-3, 4), 0, {2: 7, 12: 3, 4: -9}),
    (-2, 0, {2: 25, 6: 30, 1: -20, 3: -12, 4: -13, 12: -9}),
    (3, 0, {2: 16, 3: 3, 6: 9, 1: -17, 4: -7, 12: -3}),
    (Fraction(1, 4), 0, {2: 22, 6: 15, 1: -18, 3: -2, 4: -12, 12: -4}),
    (Fraction(3, 2), 0, {2: 28, 6: 21, 1: -22, 3: -6, 4: -14, 12: -6}),
    (3, 0, {2: 15, 6: 16, 1: -16, 4: -9, 12: -5}),
    (4, 0, {2: 7, 3: 2, 6: 12, 1: -14, 4: -1, 12: -5}),
    (-3, 0, {2: 13, 6: 18, 1: -15, 3: -3, 4: -6, 12: -6}),
    (-6, 0, {2: 7, 3: 3, 1: -9}),
])

S0 = eta_expression([
    (16, 4, {2: 10, 3: 6, 12: 12, 1: -14, 4: -4, 6: -9}),
    (32, 4, {2: 7, 3: 1, 12: 8, 1: -15}),
    (-96, 3, {2: 4, 4: 2, 6: 9, 12: 2, 1: -14, 3: -2}),
    (128, 3, {2: 1, 4: 3, 6: 18, 1: -12, 3: -8, 12: -1}),
    (-10, 3, {2: 25, 3: 5, 12: 10, 1: -19, 4: -14, 6: -6}),
    (2, 3, {2: 31, 3: 1, 12: 8, 1: -23, 4: -16}),
    (-6, 2, {2: 28, 6: 9, 12: 2, 1: -22, 3: -2, 4: -14}),
    (8, 2, {2: 25, 6: 18, 1: -20, 3: -8, 4: -13, 12: -1}),
    (12, 2, {2: 16, 3: 7, 12: 5, 1: -17, 4: -7, 6: -3}),
    (2, 2, {2: 22, 3: 2, 6: 3, 12: 4, 1: -18, 4: -12}),
    (12, 2, {2: 9, 3: 9, 12: 4, 1: -15, 4: -4, 6: -2}),
    (-32, 2, {2: 13, 3: 1, 6: 6, 12: 2, 1: -15, 4: -6}),
    (-4, 2, {2: 19, 6: 12, 1: -19, 3: -3, 4: -8}),
    (-72, 2, {2: 6, 3: 3, 6: 7, 12: 1, 1: -13, 4: -3}),
    (-9, 1, {2: 3, 3: 1, 6: 4, 1: -7}),
    (12, 1, {2: 16, 6: 21, 1: -18, 3: -6, 4: -6, 12: -6}),
    (-16, 1, {2: 13, 6: 30, 1: -16, 3: -12, 4: -5, 12: -9}),
    (12, 1, {2: 3, 6: 16, 1: -12, 4: -1, 12: -5}),
    (-6, 1, {2: 19, 6: 12, 1: -17, 3: -1, 4: -10, 12: -2}),
    (12, 1, {2: 4, 3: 3, 4: 1, 6: 9, 1: -13, 12: -3}),
    (1, 1, {2: 10, 6: 15, 1: -14, 3: -2, 4: -4, 12: -4}),
    (-14, 1, {2: 1, 4: 2, 6: 18, 1: -11, 3: -3, 12: -6}),
    (1, 1, {2: 25, 3: 11, 12: 4, 1: -21, 4: -12, 6: -6}),
    (-1, 0, {2: 11, 3: 5, 1: -11, 6: -4}),
    (1, 0, {2: 19, 3: 2, 6: 12, 1: -18, 4: -9, 12: -5}),
])

F2 = eta_expression([
    (2, 1, {1: -3, 3: -3, 4: 2, 6: 11, 24: 2, 2: -2, 8: -2, 12: -5}),
    (2, 1, {3: 3, 1: -5, 2: 3, 12: 7, 4: -2, 6: -4, 8: -1, 24: -1}),
    (Fraction(1, 2), 0, {1: -4, 2: 2, 12: 10, 4: -3, 6: -1, 24: -4}),
    (Fraction(-1, 2), 0, {2: 2, 8: 1, 12: 9, 4: -6, 6: -3, 24: -3}),
    (1, 0, {6: 3, 4: -3}),
    (-1, 0, {3: 2, 1: -6, 2: 4, 4: 1, 6: -1}),
])

H1 = eta_expression([
    (-8, 1, {2: 2, 3: 2, 4: 2, 6: 1, 12: 2, 1: -9}),
    (8, 1, {4: 3, 6: 10, 1: -7, 2: -1, 3: -4, 12: -1}),
    (2, 0, {2: 18, 3: 4, 12: 2, 1: -15, 4: -6, 6: -3}),
    (2, 0, {2: 15, 6: 6, 1: -13, 3: -2, 4: -5, 12: -1}),
    (2, 0, {4: 4, 6: 10, 1: -8, 2: -1, 3: -1, 12: -4}),
    (-6, 0, {2: 9, 3: 3, 1: -12}),
])

H0 = eta_expression([
    (-2, 1, {2: 14, 3: 2, 6: 1, 12: 2, 1: -13, 4: -6}),
    (8, 1, {2: 6, 3: 4, 4: 2, 12: 2, 1: -11, 6: -3}),
    (2, 1, {2: 11, 6: 10, 1: -11, 3: -4, 4: -5, 12: -1}),
    (8, 1, {2: 3, 4: 3, 6: 6, 1: -9, 3: -2, 12: -1}),
    (-9, 1, {2: 5, 3: 1, 6: 4, 1: -10}),
    (Fraction(1, 2), 0, {2: 11, 6: 10, 1: -12, 3: -1, 4: -4, 12: -4}),
    (Fraction(-1, 2), 0, {1: 2, 4: 1, 6: 9, 2: -6, 3: -3, 12: -3}),
    (1, 0, {3: 3, 2: -3}),
    (-1, 0, {2: 13, 3: 5, 1: -14, 6: -4}),
])

F3 = eta_expression([
    (-4, 1, {1: 3, 3: -1, 6: 4, 12: 2, 2: -4, 4: -2}),
    (4, 0, {2: 3, 6: 3, 4: -4}),
    (-4, 0, {1: 2, 3: 2, 6: 4, 2: -4, 4: -1, 12: -1}),
    (1, 0, {1: 4, 3: -4, 6: 13, 2: -7, 12: -4}),
    (-2, 0, {2: 5, 8: 1, 12: 9, 4: -7, 6: -3, 24: -3}),
    (1, 0, {2: 7, 12: 2, 4: -6, 6: -1}),
])

R0 = eta_expression([
    (12, 1, {3: 2, 6: 5, 1: -2, 2: -3}),
    (-4, 1, {2: 7, 3: 6, 12: 4, 1: -6, 4: -4, 6: -5}),
    (4, 1, {3: 5, 4: 2, 12: 2, 1: -3, 2: -2, 6: -2}),
    (4, 0, {1: 3, 3: 3, 2: -4}),
    (-4, 0, {3: 2, 4: 4, 6: 7, 1: -2, 2: -5, 12: -4}),
    (1, 0, {2: 4, 3: 3, 6: 4, 1: -5, 4: -2, 12: -2}),
    (-2, 0, {1: 5, 4: 1, 6: 9, 2: -7, 3: -3, 12: -3}),
    (1, 0, {1: 7, 6: 2, 2: -6, 3: -1}),
])

#: the named split components provable by the (p,k)-parametrization
PARAM_TARGETS: dict[str, EtaExpression] = {
    "S0": S0, "S1": S1, "H0": H0, "H1": H1, "R0": R0,
}

NAMED: dict[str, EtaExpression] = {
    "F1": F1, "F2": F2, "F3": F3, **PARAM_TARGETS,
}


def eta_expression_to_dsl(e: EtaExpression) -> str:
    """Render an EtaExpression in the identity DSL."""
    if not e.terms:
        return "0"
    chunks = []
    for i, t in enumerate(e.terms):
        c = t.coeff
        neg = c < 0
        c = abs(c)
        parts = []
        if c != 1:
            parts.append(str(c.numerator) if c.denominator == 1
                         else f"{c.numerator}/{c.denominator}")
        if t.qpow != 0:
            parts.append("q" if t.qpow == 1 else f"q^{t.qpow}")
        for k, ek in t.exps:
            parts.append(f"f{k}" if ek == 1 else f"f{k}^{ek}")
        if not parts:
            parts.append("1")
        body = "*".join(parts)
        if i == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)
