"""sl2(C) catalog: six subalgebra classes, their complement families, and
the Prop3 outcomes.

Realified basis order: e1, e2, e3, i*e1, i*e2, i*e3 (indices 1..6 below).
"""

from __future__ import annotations

from .model import Basis, ComplementFamily, ExpectedOutcome, FamilyCase, ParamSpec, SubalgebraSpec
from ..poly import P

e = Basis(6)

# i*e_k sits at slot 3+k
ie1, ie2, ie3 = e(4), e(5), e(6)

SUBALGEBRAS = [
    SubalgebraSpec("sl2C", "sl2C.h1", [], [e(1), e(2) + e(3)]),
    SubalgebraSpec("sl2C", "sl2C.h2", [], [ie2 + ie3, e(2) + e(3)]),
    SubalgebraSpec("sl2C", "sl2C.h3", [], [e(3), ie3]),
    SubalgebraSpec("sl2C", "sl2C.h4", [], [e(1)]),
    SubalgebraSpec("sl2C", "sl2C.h5", [], [e(2) + e(3)]),
    SubalgebraSpec("sl2C", "sl2C.h6", [], [e(3)]),
]

FAMILIES = [
    ComplementFamily("sl2C", "sl2C.h1", [FamilyCase([e(2), ie1, ie2, ie3])]),
    ComplementFamily("sl2C", "sl2C.h2", [FamilyCase([e(1), e(2), ie1, ie2])]),
    ComplementFamily("sl2C", "sl2C.h3", [FamilyCase([e(1), e(2), ie1, ie2])]),
    ComplementFamily("sl2C", "sl2C.h4", [FamilyCase([e(2), e(3), ie1, ie2, ie3])]),
    ComplementFamily("sl2C", "sl2C.h5", [FamilyCase([e(1), e(2), ie1, ie2, ie3])]),
    ComplementFamily("sl2C", "sl2C.h6", [FamilyCase([e(1), e(2), ie1, ie2, ie3])]),
]

a = P("a")
b = P("b")

OUTCOMES = [
    ExpectedOutcome("Prop3", "Prop3.h1", "sl2C", "sl2C.h1", "not-reductive",
                    citation="witness [e2+e3, X1] = 2e1 - 2a1(e2+e3)"),
    ExpectedOutcome("Prop3", "Prop3.h2", "sl2C", "sl2C.h2", "not-reductive",
                    citation="witness [e2+e3, Y1] = -2(e2+e3)"),
    ExpectedOutcome("Prop3", "Prop3.h3", "sl2C", "sl2C.h3", "reductive",
                    expected=lambda outer: [e(1), e(2), ie1, ie2], free=[],
                    citation="case 1"),
    ExpectedOutcome("Prop3", "Prop3.h4", "sl2C", "sl2C.h4", "reductive",
                    expected=lambda outer: [e(2), e(3), ie1 + a * e(1), ie2, ie3],
                    free=["a"], citation="case 2, family m_a"),
    ExpectedOutcome("Prop3", "Prop3.h5", "sl2C", "sl2C.h5", "not-reductive",
                    citation="witness [e2+e3, V1] = -2(e2+e3)"),
    ExpectedOutcome("Prop3", "Prop3.h6", "sl2C", "sl2C.h6", "reductive",
                    expected=lambda outer: [e(1), e(2), ie1, ie2, ie3 + b * e(3)],
                    free=["b"], citation="case 3, family m_b"),
]
