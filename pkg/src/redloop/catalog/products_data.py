"""sl2+g2 catalog (g2 = sl2(R) or so3(R)): subalgebras h1..h18, complement
parametrizations, and the Prop16 outcomes.

Basis order of both product algebras: (e1,0), (e2,0), (e3,0), (0,eps e1),
(0,eps e2), (0,e3) -- indices 1..6 below.  With this ordering the listed
subalgebras and complements have identical coordinates for both algebras;
only the structure constants of the second summand differ.

Applicability follows the listings: h1..h6, h11..h15 and the k = e1,
e2+e3 variants of h12 exist only in sl2+sl2; h7..h10, h12 with k = e3,
and h16..h18 exist in both.  Accordingly the fourteen reductive families
all occur for sl2+sl2 and families 1..9 also occur for sl2+so3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .model import Basis, ComplementFamily, ExpectedOutcome, FamilyCase, SubalgebraSpec
from ..poly import P

e = Basis(6)

BOTH = ("sl2_plus_sl2", "sl2_plus_so3")
SL2_ONLY = ("sl2_plus_sl2",)

_SUB_DATA = [
    ("h1", SL2_ONLY, [e(3), e(6)]),
    ("h2", SL2_ONLY, [e(3), e(5) + e(6)]),
    ("h3", SL2_ONLY, [e(3), e(4)]),
    ("h4", SL2_ONLY, [e(1), e(4)]),
    ("h5", SL2_ONLY, [e(1), e(5) + e(6)]),
    ("h6", SL2_ONLY, [e(2) + e(3), e(5) + e(6)]),
    ("h7", BOTH, [e(1), e(2) + e(3)]),
    ("h8", BOTH, [e(3)]),
    ("h9", BOTH, [e(1)]),
    ("h10", BOTH, [e(2) + e(3)]),
    ("h11", SL2_ONLY, [e(1) + e(4), e(2) + e(3) + e(5) + e(6)]),
    ("h12k1", SL2_ONLY, [e(1) + e(4), e(2) + e(3)]),
    ("h12k23", SL2_ONLY, [e(1) + e(5) + e(6), e(2) + e(3)]),
    ("h12k3", BOTH, [e(1) + e(6), e(2) + e(3)]),
    ("h13", SL2_ONLY, [e(1) + e(4)]),
    ("h14", SL2_ONLY, [e(1) + e(5) + e(6)]),
    ("h15", SL2_ONLY, [e(2) + e(3) + e(5) + e(6)]),
    ("h16", BOTH, [e(1) + e(6)]),
    ("h17", BOTH, [e(2) + e(3) + e(6)]),
    ("h18", BOTH, [e(3) + e(6)]),
]

_LEADS = {
    "h1": [1, 2, 4, 5],
    "h2": [1, 2, 4, 6],
    "h3": [1, 2, 5, 6],
    "h4": [2, 3, 5, 6],
    "h5": [2, 3, 4, 6],
    "h6": [1, 3, 4, 6],
    "h7": [3, 4, 5, 6],
    "h8": [1, 2, 4, 5, 6],
    "h9": [2, 3, 4, 5, 6],
    "h10": [2, 1, 4, 5, 6],
    "h11": [3, 4, 5, 6],
    "h12k1": [3, 4, 5, 6],
    "h12k23": [3, 4, 5, 6],
    "h12k3": [3, 4, 5, 6],
    "h13": [2, 3, 4, 5, 6],
    "h14": [2, 3, 4, 5, 6],
    "h15": [2, 1, 4, 5, 6],
    "h16": [2, 3, 4, 5, 6],
    "h17": [2, 1, 4, 5, 6],
    "h18": [1, 2, 4, 5, 6],
}


@dataclass
class ProductFamily:
    label: str                # m_a .. m_n as printed
    sub: str                  # subalgebra short id
    algebras: tuple
    basis_fn: object          # outer -> [PVec] (free parameter named as printed)
    free: List[str]
    exhaustive: bool


PROD_FAMILIES = [
    ProductFamily("m_a", "h8", BOTH,
                  lambda outer: [e(1), e(2), e(4), e(5), P("a") * e(3) + e(6)],
                  ["a"], False),
    ProductFamily("m_b", "h8", BOTH,
                  lambda outer: [e(1), e(2), e(4), P("b") * e(3) + e(5), e(6)],
                  ["b"], False),
    ProductFamily("m_c", "h8", BOTH,
                  lambda outer: [e(1), e(2), P("c") * e(3) + e(4), e(5), e(6)],
                  ["c"], False),
    ProductFamily("m_d", "h9", BOTH,
                  lambda outer: [e(2), e(3), e(4), e(5), P("d") * e(1) + e(6)],
                  ["d"], False),
    ProductFamily("m_f", "h9", BOTH,
                  lambda outer: [e(2), e(3), e(4), P("f") * e(1) + e(5), e(6)],
                  ["f"], False),
    ProductFamily("m_g", "h9", BOTH,
                  lambda outer: [e(2), e(3), P("g") * e(1) + e(4), e(5), e(6)],
                  ["g"], False),
    ProductFamily("m_h", "h16", BOTH,
                  lambda outer: [e(2), e(3), e(4), e(5), P("h") * e(1) + (1 + P("h")) * e(6)],
                  ["h"], True),
    ProductFamily("m_k", "h17", BOTH,
                  lambda outer: [e(3) + P("k") * e(6), e(1), e(4), e(5), e(2) + e(3)],
                  ["k"], True),
    ProductFamily("m_l", "h18", BOTH,
                  lambda outer: [P("l") * e(3) + (1 + P("l")) * e(6), e(1), e(2), e(4), e(5)],
                  ["l"], True),
    ProductFamily("m1", "h1", SL2_ONLY,
                  lambda outer: [e(1), e(2), e(4), e(5)], [], True),
    ProductFamily("m3", "h3", SL2_ONLY,
                  lambda outer: [e(1), e(2), e(5), e(6)], [], True),
    ProductFamily("m4", "h4", SL2_ONLY,
                  lambda outer: [e(2), e(3), e(5), e(6)], [], True),
    ProductFamily("m_m", "h13", SL2_ONLY,
                  lambda outer: [e(2), e(3), e(6), e(5), P("m") * e(1) + (1 + P("m")) * e(4)],
                  ["m"], True),
    ProductFamily("m_n", "h14", SL2_ONLY,
                  lambda outer: [e(2), e(3), e(4), e(5) + e(6), P("n") * e(1) + e(5)],
                  ["n"], True),
]


def subalgebras_for(algebra: str) -> List[SubalgebraSpec]:
    out = []
    for short, algs, basis in _SUB_DATA:
        if algebra in algs:
            out.append(SubalgebraSpec(algebra, f"{algebra}.{short}", [], list(basis)))
    return out


def families_for(algebra: str) -> List[ComplementFamily]:
    out = []
    for short, algs, _ in _SUB_DATA:
        if algebra in algs:
            out.append(ComplementFamily(
                algebra, f"{algebra}.{short}",
                [FamilyCase([e(i) for i in _LEADS[short]])]))
    return out


def outcomes_prop16() -> List[ExpectedOutcome]:
    reductive_subs = {f.sub for f in PROD_FAMILIES}
    out = []
    for algebra in BOTH:
        for short, algs, _ in _SUB_DATA:
            if algebra not in algs:
                continue
            fams = [f for f in PROD_FAMILIES if f.sub == short and algebra in f.algebras]
            if not fams:
                out.append(ExpectedOutcome(
                    "Prop16", f"Prop16.{algebra}.{short}", algebra,
                    f"{algebra}.{short}", "not-reductive",
                    citation="appears in no listed case"))
                continue
            for fam in fams:
                out.append(ExpectedOutcome(
                    "Prop16", f"Prop16.{algebra}.{short}.{fam.label}", algebra,
                    f"{algebra}.{short}", "reductive",
                    expected=fam.basis_fn, free=list(fam.free),
                    exhaustive=fam.exhaustive,
                    citation=f"family {fam.label}"))
    assert reductive_subs <= {s for s, _, _ in _SUB_DATA}
    return out


OUTCOMES = outcomes_prop16()
