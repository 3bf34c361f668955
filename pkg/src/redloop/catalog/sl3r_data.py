"""sl3(R) catalog: the 35 subalgebra classes h1..h35, the complement
parametrization of each classification proof, and the Prop4..Prop7
outcomes."""

from __future__ import annotations

from fractions import Fraction

from .model import Basis, ComplementFamily, ExpectedOutcome, FamilyCase, ParamSpec, SubalgebraSpec
from ..poly import P, Poly

e = Basis(8)
F = Fraction

_a = P("a")
_b = P("b")
_c = P("c")


def _sub(num, params, basis, notes=()):
    return SubalgebraSpec("sl3R", f"sl3R.h{num}", params, basis, notes=list(notes))


SUBALGEBRAS = [
    _sub(1, [ParamSpec("c")], [e(1), e(2), e(6), e(5) + _c * e(8)]),
    _sub(2, [], [e(3), e(5), e(6), e(8)]),
    _sub(3, [], [e(1), e(2), e(6), e(8)]),
    _sub(4, [], [e(2), e(5), e(6), e(8)]),
    _sub(5, [], [e(5), e(6), e(7), e(8)]),
    _sub(6, [], [e(1) - e(3), e(2) - e(4), e(7) - e(6)]),
    _sub(7, [], [e(1) + e(3), e(2) + e(4), e(6) - e(7)]),
    _sub(8, [], [e(5) - e(8), e(6), e(7)]),
    _sub(9, [ParamSpec("a", ("nonneg",))], [_a * (e(5) + e(8)) + e(6) - e(7), e(1), e(2)]),
    _sub(10, [], [e(5) - e(8), e(2) + e(3), e(6)]),
    _sub(11, [], [e(3), e(6), e(8) + e(2)]),
    _sub(12, [], [e(2), e(6), e(5) + e(8) - e(3)]),
    _sub(13, [], [e(1), e(2), e(6)]),
    _sub(14, [], [e(5), e(8), e(6)]),
    _sub(15, [], [e(2), e(5) + e(8), e(6)]),
    _sub(16, [], [e(3), e(6), e(8)]),
    _sub(17, [ParamSpec("b")], [e(2), e(6), (_b - 1) * e(5) + _b * e(8)],
         notes=["listing printed with a trailing comma; transcribed as the three elements shown"]),
    _sub(18, [ParamSpec("c")], [e(3), e(6), e(5) + _c * e(8)]),
    _sub(19, [], [e(6), e(2) + e(3)]),
    _sub(20, [], [e(6), e(2) + e(8)]),
    _sub(21, [], [e(3), e(6) + e(5)]),
    _sub(22, [ParamSpec("a", ("not_in", (0, 1)))], [e(3), e(5) + _a * e(8)]),
    _sub(23, [], [e(5), e(6)]),
    _sub(24, [], [e(2), e(6)]),
    _sub(25, [], [e(6), e(3)]),
    _sub(26, [], [e(5), e(8)]),
    _sub(27, [], [e(6), e(5) + e(8)]),
    _sub(28, [], [e(6), e(8)]),
    _sub(29, [], [e(5) - e(8), e(2) + e(3)]),
    _sub(30, [], [e(5) + e(8), e(6) - e(7)]),
    _sub(31, [ParamSpec("a", ("nonzero",))], [e(5) + _a * e(8)]),
    _sub(32, [], [e(2) + e(8)]),
    _sub(33, [], [e(2) + e(3)]),
    _sub(34, [], [e(6)]),
    _sub(35, [ParamSpec("b", ("nonneg",))], [e(6) - e(7) + _b * (e(5) + e(8))]),
]

_LEADS = {
    1: [3, 4, 7, 8],
    2: [1, 2, 4, 7],
    3: [3, 4, 5, 7],
    4: [1, 3, 4, 7],
    5: [1, 2, 3, 4],
    6: [3, 4, 5, 6, 8],
    7: [3, 4, 5, 6, 8],
    8: [1, 2, 3, 4, 5],
    9: [3, 4, 5, 6, 8],
    10: [1, 2, 4, 5, 7],
    11: [1, 2, 4, 5, 7],
    12: [1, 3, 4, 7, 8],
    13: [3, 4, 5, 7, 8],
    14: [1, 2, 3, 4, 7],
    15: [1, 3, 4, 5, 7],
    16: [1, 2, 4, 5, 7],
    18: [1, 2, 4, 7, 8],
    19: [1, 2, 4, 5, 7, 8],
    20: [1, 2, 3, 4, 5, 7],
    21: [1, 2, 4, 5, 7, 8],
    22: [1, 2, 4, 6, 7, 8],
    23: [1, 2, 3, 4, 7, 8],
    24: [1, 3, 4, 5, 7, 8],
    25: [1, 2, 4, 5, 7, 8],
    26: [1, 2, 3, 4, 6, 7],
    27: [1, 2, 3, 4, 5, 7],
    28: [1, 2, 3, 4, 5, 7],
    29: [1, 2, 4, 5, 6, 7],
    30: [1, 2, 3, 4, 5, 6],
    31: [1, 2, 3, 4, 6, 7, 8],
    32: [1, 3, 4, 5, 6, 7, 8],
    33: [1, 3, 4, 5, 6, 7, 8],
    34: [1, 2, 3, 4, 5, 7, 8],
    35: [1, 2, 3, 4, 5, 7, 8],
}

FAMILIES = [
    ComplementFamily("sl3R", f"sl3R.h{num}", [FamilyCase([e(i) for i in idxs])])
    for num, idxs in _LEADS.items()
] + [
    # the h17 proof splits on b: for b = 0 the span of h17 contains e5, so
    # the complement trades e5 for e8
    ComplementFamily("sl3R", "sl3R.h17", [
        FamilyCase([e(1), e(3), e(4), e(5), e(7)], guard=("b", "nonzero")),
        FamilyCase([e(1), e(3), e(4), e(7), e(8)], guard=("b", "zero")),
    ]),
]


def _nr(prop, num, citation=""):
    return ExpectedOutcome(prop, f"{prop}.h{num}", "sl3R", f"sl3R.h{num}",
                           "not-reductive", citation=citation)


OUTCOMES_PROP4 = [
    _nr("Prop4", 1), _nr("Prop4", 2), _nr("Prop4", 3), _nr("Prop4", 4),
    ExpectedOutcome("Prop4", "Prop4.h5", "sl3R", "sl3R.h5", "reductive",
                    expected=lambda outer: [e(1), e(2), e(3), e(4)],
                    citation="only case, h5 = gl2(R), m5"),
]

OUTCOMES_PROP5 = [
    ExpectedOutcome("Prop5", "Prop5.h6", "sl3R", "sl3R.h6", "reductive",
                    expected=lambda outer: [e(5), e(8), e(1) + e(3), e(2) + e(4), e(7) + e(6)],
                    citation="case 1, h6 = so3(R)"),
    ExpectedOutcome("Prop5", "Prop5.h7", "sl3R", "sl3R.h7", "reductive",
                    expected=lambda outer: [e(5), e(8), e(1) - e(3), e(2) - e(4), e(7) + e(6)],
                    citation="case 2"),
    ExpectedOutcome("Prop5", "Prop5.h8", "sl3R", "sl3R.h8", "reductive",
                    expected=lambda outer: [e(1), e(2), e(3), e(4), e(5) + e(8)],
                    citation="case 3"),
] + [_nr("Prop5", num) for num in range(9, 19)]

OUTCOMES_PROP6 = [
    _nr("Prop6", num) for num in (19, 20, 21, 22, 23, 24, 25)
] + [
    ExpectedOutcome("Prop6", "Prop6.h26", "sl3R", "sl3R.h26", "reductive",
                    expected=lambda outer: [e(1), e(2), e(3), e(4), e(6), e(7)],
                    citation="case 1"),
    _nr("Prop6", 27), _nr("Prop6", 28), _nr("Prop6", 29),
    ExpectedOutcome("Prop6", "Prop6.h30", "sl3R", "sl3R.h30", "reductive",
                    expected=lambda outer: [e(1), e(2), e(3), e(4), e(5) - e(8), e(6) + e(7)],
                    citation="case 2"),
]


def _m31_generic(outer):
    a = outer["a"]
    return [e(1), e(2), e(3), e(4), e(6), e(7),
            e(8) + P("b") * (e(5) + a * e(8))]


def _m31_shift(shift):
    # m for the special values a = -2, -1/2, 1; ``shift`` is e5 + a*e8
    def basis(outer):
        a = outer["a"]
        s = e(5) + a * e(8)
        if a == -2:
            return [e(6), e(7), e(1) + P("b") * s, e(3) + P("c") * s,
                    e(2), e(4), e(8) + P("d") * s]
        if a == F(-1, 2):
            return [e(6), e(7), e(1), e(2) + P("b") * s, e(3),
                    e(4) + P("c") * s, e(8) + P("d") * s]
        if a == 1:
            return [e(1), e(2), e(3), e(4), e(6) + P("b") * s,
                    e(7) + P("c") * s, e(8) + P("d") * s]
        raise ValueError(a)
    return basis


def _m32(outer):
    return [e(1), e(2), e(3), -e(8) + 2 * e(4), e(6), e(7), e(5) + P("d") * e(8)]


def _m35(outer):
    b = outer["b"]
    return [e(1), e(2), e(3), e(4), e(6) + e(7), e(5) - e(8),
            e(8) - 2 * P("c") * e(7) + 2 * b * P("c") * e(8)]


OUTCOMES_PROP7 = [
    ExpectedOutcome("Prop7", "Prop7.h31_1", "sl3R", "sl3R.h31", "reductive",
                    expected=_m31_generic, free=["b"],
                    outer_guard=[("not_in", "a", (0, 1, F(-1, 2), -2))],
                    citation="case 1, family m_b"),
    ExpectedOutcome("Prop7", "Prop7.h31_2", "sl3R", "sl3R.h31", "reductive",
                    expected=_m31_shift("a=-2"), free=["b", "c", "d"],
                    outer_override={"a": F(-2)}, citation="case 2"),
    ExpectedOutcome("Prop7", "Prop7.h31_3", "sl3R", "sl3R.h31", "reductive",
                    expected=_m31_shift("a=-1/2"), free=["b", "c", "d"],
                    outer_override={"a": F(-1, 2)}, citation="case 3"),
    ExpectedOutcome("Prop7", "Prop7.h31_4", "sl3R", "sl3R.h31", "reductive",
                    expected=_m31_shift("a=1"), free=["b", "c", "d"],
                    outer_override={"a": F(1)}, citation="case 4"),
    ExpectedOutcome("Prop7", "Prop7.h32", "sl3R", "sl3R.h32", "reductive",
                    expected=_m32, free=["d"], citation="case 5, family m_d"),
    _nr("Prop7", 33), _nr("Prop7", 34),
    ExpectedOutcome("Prop7", "Prop7.h35", "sl3R", "sl3R.h35", "reductive",
                    expected=_m35, free=["c"], citation="case 6, family m_c"),
]

OUTCOMES = OUTCOMES_PROP4 + OUTCOMES_PROP5 + OUTCOMES_PROP6 + OUTCOMES_PROP7
