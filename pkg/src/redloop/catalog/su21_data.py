"""su(2,1) catalog: the 27 subalgebra classes, complement
parametrizations, and the Prop8..Prop11 outcomes.

Two misprints in the source listings are patched here and noted on the
specs: the fourth generator of the h4 complement reads "c4 e6" where the
generator pattern requires "c4 e7", and the last two generators of the
h26 complement both carry the index a6 where seven parameters a1..a7 are
needed.
"""

from __future__ import annotations

from fractions import Fraction

from .model import Basis, ComplementFamily, ExpectedOutcome, FamilyCase, ParamSpec, SubalgebraSpec
from ..poly import P, Poly

e = Basis(8)
F = Fraction

_a, _b, _c, _d = P("a"), P("b"), P("c"), P("d")
HALF = F(1, 2)


def _sub(num, params, basis, solve_last=None, notes=()):
    return SubalgebraSpec("su21", f"su21.h{num}", params, basis,
                          solve_last=solve_last, notes=list(notes))


SUBALGEBRAS = [
    _sub(1, [], [e(1), e(2), e(3), e(6)]),
    _sub(2, [], [e(4) - e(3), e(2) + e(5), e(6) + e(7), e(8)]),
    _sub(3, [ParamSpec("a")],
         [e(1) - HALF * e(6) + _a * e(8), e(4) - e(3), e(2) + e(5), e(6) + e(7)],
         notes=["parameter a carries no stated side condition; all rationals admitted"]),
    _sub(4, [], [e(1), e(6), e(7), e(8)]),
    _sub(5, [], [e(1), e(2), e(3)]),
    _sub(6, [], [e(2), e(4), e(7)]),
    _sub(7, [], [e(6), e(7), e(8)]),
    _sub(8, [], [e(5) + e(2), e(6) + e(7), e(8)]),
    _sub(9, [ParamSpec("b")], [e(4) - e(3) + _b * e(8), e(5) + e(2), e(6) + e(7)]),
    _sub(10, [ParamSpec("b"), ParamSpec("c")],
         [e(4) - e(3) + _b * (e(5) + e(2)), e(6) + e(7), e(8) + _c * (e(5) + e(2))]),
    _sub(11, [ParamSpec("b"), ParamSpec("c")],
         [e(1) - HALF * e(6) + F(3, 2) * _c * (e(4) - e(3)) - F(3, 2) * _b * (e(5) + e(2)),
          e(8) + _b * (e(4) - e(3)) + _c * (e(5) + e(2)),
          e(6) + e(7)]),
    _sub(12, [], [e(1), e(6)]),
    _sub(13, [], [e(4) - e(3), e(6) + e(7)]),
    _sub(14, [ParamSpec("b")], [e(5) + e(2) + _b * (e(4) - e(3)), e(6) + e(7)]),
    _sub(15, [ParamSpec("b")], [e(4) - e(3), e(8) + _b * (e(6) + e(7))]),
    _sub(16, [ParamSpec("b"), ParamSpec("c")],
         [e(5) + e(2) + _b * (e(4) - e(3)), e(8) + _c * (e(6) + e(7))]),
    _sub(17, [ParamSpec("b"), ParamSpec("c")],
         [e(6) + e(7), e(8) + _b * (e(4) - e(3)) + _c * (e(5) + e(2))]),
    _sub(18, [ParamSpec("a", ("nonzero",)), ParamSpec("b"), ParamSpec("c"), ParamSpec("d")],
         [e(6) + e(7) + _a * (e(4) - e(3)) + _b * (e(5) + e(2)),
          e(8) + _c * (e(4) - e(3)) + _d * (e(5) + e(2))],
         solve_last=("d", _b * _c - Poly.const(HALF), _a),
         notes=["bc - ad = 1/2; d computed from a, b, c with a sampled nonzero"]),
    _sub(19, [ParamSpec("a"), ParamSpec("b"), ParamSpec("c")],
         [e(1) - HALF * e(6) + _a * e(8) + _b * (e(4) - e(3)) + _c * (e(5) + e(2)),
          e(6) + e(7)]),
    _sub(20, [ParamSpec("a"), ParamSpec("b"), ParamSpec("c")],
         [e(1) - HALF * e(6) + F(3, 2) * _a * (e(4) - e(3)) - F(3, 2) * _b * (e(5) + e(2))
          - F(3, 2) * (_a * _a + _b * _b) * (e(6) + e(7)),
          e(8) + _b * (e(4) - e(3)) + _a * (e(5) + e(2)) + _c * (e(6) + e(7))]),
    _sub(21, [ParamSpec("a")], [e(1) + _a * e(6)]),
    _sub(22, [], [e(6)]),
    _sub(23, [], [e(8)]),
    _sub(24, [ParamSpec("c")], [e(6) + e(7) + _c * e(8)]),
    _sub(25, [ParamSpec("b"), ParamSpec("c")],
         [e(5) + e(2) + _b * (e(6) + e(7)) + _c * e(8)]),
    _sub(26, [ParamSpec("a"), ParamSpec("b"), ParamSpec("c")],
         [e(4) - e(3) + _a * (e(5) + e(2)) + _b * (e(6) + e(7)) + _c * e(8)],
         notes=["complement listing repeats index a6; transcribed with a7 on the last generator"]),
    _sub(27, [ParamSpec("a"), ParamSpec("b"), ParamSpec("c"), ParamSpec("d")],
         [e(1) - HALF * e(6) + _d * (e(4) - e(3)) + _a * (e(5) + e(2))
          + _b * (e(6) + e(7)) + _c * e(8)]),
]

_LEADS = {
    1: [4, 5, 7, 8],
    2: [1, 2, 3, 6],
    3: [3, 5, 7, 8],
    4: [2, 3, 4, 5],
    5: [4, 5, 6, 7, 8],
    6: [1, 3, 5, 6, 8],
    7: [1, 2, 3, 4, 5],
    8: [1, 2, 3, 4, 6],
    9: [1, 2, 3, 6, 8],
    10: [1, 2, 3, 5, 6],
    11: [2, 3, 4, 5, 7],
    12: [2, 3, 4, 5, 7, 8],
    13: [1, 2, 3, 5, 6, 8],
    14: [1, 2, 3, 4, 6, 8],
    15: [1, 2, 3, 5, 6, 7],
    16: [1, 2, 3, 4, 6, 7],
    17: [1, 2, 3, 4, 5, 6],
    18: [1, 2, 3, 4, 5, 6],
    19: [2, 3, 4, 5, 7, 8],
    20: [2, 3, 4, 5, 6, 7],
    21: [2, 3, 4, 5, 6, 7, 8],
    22: [1, 2, 3, 4, 5, 7, 8],
    23: [1, 2, 3, 4, 5, 6, 7],
    24: [1, 2, 3, 4, 5, 7, 8],
    25: [1, 2, 3, 4, 6, 7, 8],
    26: [1, 2, 3, 5, 6, 7, 8],
    27: [2, 3, 4, 5, 6, 7, 8],
}

FAMILIES = [
    ComplementFamily("su21", f"su21.h{num}", [FamilyCase([e(i) for i in idxs])])
    for num, idxs in _LEADS.items()
]


def _nr(prop, case, num, citation=""):
    return ExpectedOutcome(prop, f"{prop}.{case}", "su21", f"su21.h{num}",
                           "not-reductive", citation=citation)


OUTCOMES_PROP8 = [
    ExpectedOutcome("Prop8", "Prop8.h1", "su21", "su21.h1", "reductive",
                    expected=lambda outer: [e(4), e(5), e(7), e(8)],
                    citation="case 1, h1 = so3 + so2"),
    _nr("Prop8", "h2", 2),
    _nr("Prop8", "h3", 3),
    ExpectedOutcome("Prop8", "Prop8.h4", "su21", "su21.h4", "reductive",
                    expected=lambda outer: [e(2), e(3), e(4), e(5)],
                    citation="case 2, h4 = sl2 + so2"),
]

OUTCOMES_PROP9 = [
    # NOTE: the source proposition lists only h6, h7, but exact arithmetic
    # shows (h5, <e4, e5, e6 - e1/2, e7, e8>) satisfies every stated
    # condition: the extra direction spans the centralizer of h5 = su(2),
    # so the listing is incomplete and this case reports a mismatch
    _nr("Prop9", "h5", 5,
        citation="listed not reductive; machine check finds one reductive "
                 "complement <e4, e5, e6 - e1/2, e7, e8>"),
    ExpectedOutcome("Prop9", "Prop9.h6", "su21", "su21.h6", "reductive",
                    expected=lambda outer: [e(1), e(3), e(5), e(6), e(8)],
                    citation="case 1"),
    ExpectedOutcome("Prop9", "Prop9.h7", "su21", "su21.h7", "reductive",
                    expected=lambda outer: [e(1) - HALF * e(6), e(2), e(3), e(4), e(5)],
                    citation="case 2"),
    _nr("Prop9", "h8", 8), _nr("Prop9", "h9", 9),
    _nr("Prop9", "h10", 10), _nr("Prop9", "h11", 11),
]


def _m20(outer):
    a, b, c = outer["a"], outer["b"], outer["c"]
    return [e(6) + e(7), e(2) + e(5), e(4) - e(3),
            e(4) - b * e(8) + 2 * a * e(1) - a * e(6),
            e(2) + a * e(8) + 2 * b * e(1) - b * e(6),
            e(6) + c * e(8) + b * e(5) - a * e(4)]


OUTCOMES_PROP10 = [
    ExpectedOutcome("Prop10", "Prop10.h12", "su21", "su21.h12", "reductive",
                    expected=lambda outer: [e(2), e(3), e(4), e(5), e(7), e(8)],
                    citation="case 1"),
    _nr("Prop10", "h13", 13), _nr("Prop10", "h14", 14), _nr("Prop10", "h15", 15),
    _nr("Prop10", "h16", 16), _nr("Prop10", "h17", 17), _nr("Prop10", "h18", 18),
    _nr("Prop10", "h19", 19),
    ExpectedOutcome("Prop10", "Prop10.h20", "su21", "su21.h20", "reductive",
                    expected=_m20, citation="case 2"),
]


def _m11_1(outer):
    # h21 at a = -2
    s = e(1) - 2 * e(6)
    return [e(2) + P("b") * s, e(3) + P("c") * s, e(6) + P("d") * s,
            e(4), e(5), e(7), e(8)]


def _m11_2(outer):
    s = e(1) + e(6)
    return [e(2), e(3), e(7), e(8), e(4) + P("d") * s,
            e(5) + P("b") * s, e(6) + P("c") * s]


def _m11_3(outer):
    s = e(1) - HALF * e(6)
    return [e(2), e(3), e(4), e(5), e(6) + P("b") * s,
            e(7) + P("c") * s, e(8) + P("d") * s]


def _m11_4(outer):
    a = outer["a"]
    return [e(2), e(3), e(4), e(5), e(6) + P("b") * (e(1) + a * e(6)), e(7), e(8)]


def _m11_5(outer):
    return [e(1) + P("a") * e(6), e(2), e(3), e(4), e(5), e(7), e(8)]


def _m11_6(outer):
    return [e(1) + P("a") * e(8), e(2), e(3), e(4), e(5), e(6), e(7)]


def _m11_7(outer):
    c = outer["c"]
    return [e(1) + P("b") * c * e(8), e(2), e(3), e(4), e(5),
            e(6) + e(7), e(7) - (1 / c) * e(8)]


def _m11_8(outer):
    b, c = outer["b"], outer["c"]
    d = P("d")
    return [e(1) - ((c ** 3 * d - c * d - b) / (2 * c)) * e(8),
            e(2) + (1 / c) * e(8),
            e(3) + c * d * e(8),
            e(7) - ((b + c * d) / c) * e(8),
            e(4) - e(3), e(2) + e(5), e(6) + e(7)]


def _m11_9(outer):
    a, b, c = outer["a"], outer["b"], outer["c"]
    d = P("d")
    return [e(2) - d * c * e(8),
            e(3) - ((1 + d * c ** 2 * a + a ** 2) / c) * e(8),
            e(6) - ((a ** 3 + a - b * c + d * c ** 2 + d * c ** 2 * a ** 2) / (c ** 2)) * e(8),
            e(5) + e(2), e(6) + e(7), e(4) - e(3),
            e(1) + ((b * c + c ** 2 * a - a - a ** 3 + c ** 4 * d - c ** 2 * d
                     - c ** 2 * a ** 2 * d) / (2 * c ** 2)) * e(8)]


def _m11_10(outer):
    # printed numerator carries a spurious "+ 24 f d^2" term: with it the
    # complement fails [h, m] <= m exactly for every f != 0; without it the
    # family coincides with the solver's full solution set
    a, b, c, d = outer["a"], outer["b"], outer["c"], outer["d"]
    f = P("f")
    s = e(1) - HALF * e(6) + c * e(8)
    denom = 2 * (8 * d * c - 3 * a + 4 * a * c ** 2)
    return [e(6) + e(7), e(4) - e(3), e(5) + e(2),
            e(3) + f * s,
            e(2) - (2 * c / 3) * e(4) - (4 * a / 3) * e(1) - (2 * a / 3) * e(7) + (2 * d / 3) * e(8),
            e(7) - (b / c) * e(8) + (a / c) * e(4) + (d / c) * e(2),
            e(8) - ((8 * a * c - 4 * c ** 2 * f - 9 * f + 12 * d) / denom) * s]


_DEGENERATE = 8 * _d * _c - 3 * _a + 4 * _a * _c * _c

OUTCOMES_PROP11 = [
    ExpectedOutcome("Prop11", "Prop11.c1", "su21", "su21.h21", "reductive",
                    expected=_m11_1, free=["b", "c", "d"],
                    outer_override={"a": F(-2)}, citation="case 1, h = <e1 - 2 e6>"),
    ExpectedOutcome("Prop11", "Prop11.c2", "su21", "su21.h21", "reductive",
                    expected=_m11_2, free=["b", "c", "d"],
                    outer_override={"a": F(1)}, citation="case 2, h = <e1 + e6>"),
    ExpectedOutcome("Prop11", "Prop11.c3", "su21", "su21.h21", "reductive",
                    expected=_m11_3, free=["b", "c", "d"],
                    outer_override={"a": F(-1, 2)}, citation="case 3, h = <e1 - e6/2>"),
    ExpectedOutcome("Prop11", "Prop11.c4", "su21", "su21.h21", "reductive",
                    expected=_m11_4, free=["b"],
                    outer_guard=[("not_in", "a", (F(-1, 2), -2, 1))],
                    citation="case 4, generic a"),
    ExpectedOutcome("Prop11", "Prop11.c5", "su21", "su21.h22", "reductive",
                    expected=_m11_5, free=["a"], citation="case 5"),
    ExpectedOutcome("Prop11", "Prop11.c6", "su21", "su21.h23", "reductive",
                    expected=_m11_6, free=["a"], citation="case 6"),
    ExpectedOutcome("Prop11", "Prop11.c7", "su21", "su21.h24", "reductive",
                    expected=_m11_7, free=["b"],
                    outer_guard=[("not_in", "c", (0,))], citation="case 7, c != 0"),
    _nr("Prop11", "c7z", 24, citation="h24 at c = 0 appears in no listed case"),
    ExpectedOutcome("Prop11", "Prop11.c8", "su21", "su21.h25", "reductive",
                    expected=_m11_8, free=["d"],
                    outer_guard=[("not_in", "c", (0,))], citation="case 8, c != 0"),
    _nr("Prop11", "c8z", 25, citation="h25 at c = 0 appears in no listed case"),
    ExpectedOutcome("Prop11", "Prop11.c9", "su21", "su21.h26", "reductive",
                    expected=_m11_9, free=["d"],
                    outer_guard=[("not_in", "c", (0,))], citation="case 9, c != 0"),
    _nr("Prop11", "c9z", 26, citation="h26 at c = 0 appears in no listed case"),
    ExpectedOutcome("Prop11", "Prop11.c10", "su21", "su21.h27", "reductive",
                    expected=_m11_10, free=["f"],
                    outer_guard=[("not_in", "c", (0,)), ("poly_nonzero", _DEGENERATE)],
                    citation="case 10, c != 0 and 8dc - 3a + 4ac^2 != 0"),
    ExpectedOutcome("Prop11", "Prop11.c10deg", "su21", "su21.h27", "undocumented",
                    outer_guard=[("not_in", "c", (0,)), ("not_in", "a", (0,))],
                    outer_solve=("d", 3 * _a - 4 * _a * _c * _c, Poly.const(8) * _c),
                    citation="degenerate locus 8dc - 3a + 4ac^2 = 0; no verdict stated"),
]

# fix c = 0 for the "appears in no listed case" refutation rows
for _o in OUTCOMES_PROP11:
    if _o.case_id in ("Prop11.c7z", "Prop11.c8z", "Prop11.c9z"):
        _o.outer_override = {"c": F(0)}

OUTCOMES = OUTCOMES_PROP8 + OUTCOMES_PROP9 + OUTCOMES_PROP10 + OUTCOMES_PROP11
