"""The seven cataloged algebras.

For sl3(R) and su(2,1) the structure constants are derived from the
explicit 3x3 matrix realizations and cross-checked against the hand-typed
multiplication tables; the matrix-derived constants are authoritative and
any disagreement is kept on the algebra's ``table_discrepancies`` metadata.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from ..algebra import AlgebraError, LieAlgebra
from ..reps import MatrixRep
from ..surd import Surd

F = Fraction
I = Surd.i()

Table = Dict[Tuple[int, int], tuple]


def _vec(dim: int, entries: Dict[int, Fraction]) -> tuple:
    v = [F(0)] * dim
    for k, c in entries.items():
        v[k] = F(c)
    return tuple(v)


def _mat(n, entries):
    m = [[Surd() for _ in range(n)] for _ in range(n)]
    for (r, c), val in entries.items():
        m[r][c] = Surd.lift(val) if not isinstance(val, Surd) else val
    return m


# -- 2x2 building blocks ----------------------------------------------------

SL2R_MATS = [
    _mat(2, {(0, 0): 1, (1, 1): -1}),   # e1
    _mat(2, {(0, 1): 1, (1, 0): 1}),    # e2
    _mat(2, {(0, 1): 1, (1, 0): -1}),   # e3
]

SO3_MATS = [
    _mat(2, {(0, 0): I, (1, 1): -I}),   # i*e1
    _mat(2, {(0, 1): I, (1, 0): I}),    # i*e2
    _mat(2, {(0, 1): 1, (1, 0): -1}),   # e3
]

SL2C_MATS = SL2R_MATS + [
    _mat(2, {(0, 0): I, (1, 1): -I}),   # i*e1
    _mat(2, {(0, 1): I, (1, 0): I}),    # i*e2
    _mat(2, {(0, 1): I, (1, 0): -I}),   # i*e3
]

SL3R_MATS = [
    _mat(3, {(0, 1): 1}),               # e1
    _mat(3, {(0, 2): 1}),               # e2
    _mat(3, {(1, 0): 1}),               # e3
    _mat(3, {(2, 0): 1}),               # e4
    _mat(3, {(1, 1): 1, (0, 0): -1}),   # e5
    _mat(3, {(1, 2): 1}),               # e6
    _mat(3, {(2, 1): 1}),               # e7
    _mat(3, {(2, 2): 1, (0, 0): -1}),   # e8
]

SU21_MATS = [
    _mat(3, {(0, 0): -I, (1, 1): I}),               # e1
    _mat(3, {(0, 1): -1, (1, 0): 1}),               # e2
    _mat(3, {(0, 1): -I, (1, 0): -I}),              # e3
    _mat(3, {(0, 2): 1, (2, 0): 1}),                # e4
    _mat(3, {(0, 2): I, (2, 0): -I}),               # e5
    _mat(3, {(1, 1): I, (2, 2): -I}),               # e6
    _mat(3, {(1, 2): 1, (2, 1): 1}),                # e7
    _mat(3, {(1, 2): I, (2, 1): -I}),               # e8
]


def _block_mats(first, second):
    n1 = len(first[0])
    n2 = len(second[0])
    n = n1 + n2
    mats = []
    for m in first:
        entries = {(r, c): m[r][c] for r in range(n1) for c in range(n1) if m[r][c]}
        mats.append(_mat(n, entries))
    for m in second:
        entries = {(r + n1, c + n1): m[r][c] for r in range(n2) for c in range(n2) if m[r][c]}
        mats.append(_mat(n, entries))
    return mats


# -- hand-typed multiplication tables (cross-check only) ---------------------

SL2R_HAND_TABLE: Table = {
    (0, 1): _vec(3, {2: 2}),     # [e1,e2] = 2 e3
    (0, 2): _vec(3, {1: 2}),     # [e1,e3] = 2 e2
    (1, 2): _vec(3, {0: -2}),    # [e3,e2] = 2 e1
}

SL3R_HAND_TABLE: Table = {
    (0, 5): _vec(8, {1: 1}), (1, 4): _vec(8, {1: 1}), (1, 7): _vec(8, {1: 2}),
    (0, 7): _vec(8, {0: 1}), (1, 6): _vec(8, {0: 1}), (0, 4): _vec(8, {0: 2}),
    (3, 5): _vec(8, {2: -1}), (2, 7): _vec(8, {2: -1}), (2, 4): _vec(8, {2: -2}),
    (2, 6): _vec(8, {3: -1}), (3, 4): _vec(8, {3: -1}), (3, 7): _vec(8, {3: -2}),
    (5, 7): _vec(8, {5: 1}), (4, 5): _vec(8, {5: 1}), (1, 2): _vec(8, {5: -1}),
    (0, 3): _vec(8, {6: -1}), (4, 6): _vec(8, {6: -1}), (6, 7): _vec(8, {6: -1}),
    (0, 2): _vec(8, {4: -1}), (1, 3): _vec(8, {7: -1}),
    (5, 6): _vec(8, {4: 1, 7: -1}),
}

SU21_HAND_TABLE: Table = {
    (1, 2): _vec(8, {0: -2}), (3, 4): _vec(8, {0: 2, 5: -2}), (6, 7): _vec(8, {5: -2}),
    (2, 5): _vec(8, {1: -1}), (3, 6): _vec(8, {1: -1}), (4, 7): _vec(8, {1: -1}),
    (0, 2): _vec(8, {1: 2}),
    (1, 5): _vec(8, {2: 1}), (3, 7): _vec(8, {2: 1}), (4, 6): _vec(8, {2: -1}),
    (0, 1): _vec(8, {2: -2}),
    (1, 6): _vec(8, {3: -1}), (2, 7): _vec(8, {3: 1}), (4, 5): _vec(8, {3: 1}),
    (0, 4): _vec(8, {3: 1}),
    (1, 7): _vec(8, {4: -1}), (2, 6): _vec(8, {4: -1}), (3, 5): _vec(8, {4: -1}),
    (0, 3): _vec(8, {4: -1}),
    (1, 3): _vec(8, {6: 1}), (2, 4): _vec(8, {6: 1}), (0, 7): _vec(8, {6: -1}),
    (5, 7): _vec(8, {6: -2}),
    (1, 4): _vec(8, {7: 1}), (2, 3): _vec(8, {7: -1}), (0, 6): _vec(8, {7: 1}),
    (5, 6): _vec(8, {7: 2}),
}


def _cross_check(name: str, derived: Table, hand: Table, dim: int):
    notes = []
    keys = set(derived) | set(hand)
    zero = tuple(F(0) for _ in range(dim))
    for key in sorted(keys):
        d = derived.get(key, zero)
        h = hand.get(key, zero)
        if d != h:
            notes.append(
                f"{name}: table entry [e{key[0] + 1},e{key[1] + 1}] printed as {h}, "
                f"matrix realization gives {d}; matrix form used")
    return notes


# -- closed-form Killing values ----------------------------------------------

def killing_sl2r(c):
    return c[0] ** 2 + c[1] ** 2 - c[2] ** 2


def killing_so3(c):
    return -(c[0] ** 2) - c[1] ** 2 - c[2] ** 2


def killing_su21(c):
    # cross term is -l1*l6: the printed closed form carries -2*l1*l6, but the
    # matrix realization together with k = (1/12) trace(ad ad) = (1/2) trace(XY)
    # forces coefficient -1 (see su21 meta["closed_form_notes"])
    return (-(c[0] ** 2) - c[1] ** 2 - c[2] ** 2 - c[5] ** 2
            + c[3] ** 2 + c[4] ** 2 + c[6] ** 2 + c[7] ** 2
            - c[0] * c[5])


# -- builders ------------------------------------------------------------------

def _build(name, mats, nu, hand_table=None, closed_form=None, real=False, meta=None):
    rep = MatrixRep(name, mats, real=real)
    table = rep.derive_structure()
    meta = dict(meta or {})
    if hand_table is not None:
        meta["table_discrepancies"] = _cross_check(name, table, hand_table, rep.dim)
        meta["hand_table_checked"] = True
    alg = LieAlgebra(name, rep.dim, table, nu, matrix_rep=rep,
                     killing_closed_form=closed_form, meta=meta)
    if alg.jacobi_violations():
        raise AlgebraError(f"{name}: matrix-derived constants violate Jacobi")
    return alg


def _build_sum(name, second_kind):
    second = SO3_MATS if second_kind == "so3" else SL2R_MATS
    eps = "i" if second_kind == "so3" else "1"
    names2 = ["i*e1", "i*e2", "e3"] if second_kind == "so3" else ["e1", "e2", "e3"]
    meta = {
        "epsilon": eps,
        "summands": ("sl2R", second_kind),
        "basis_names": [f"({n},0)" for n in ("e1", "e2", "e3")]
                       + [f"(0,{n})" for n in names2],
    }
    return _build(name, _block_mats(SL2R_MATS, second), F(1, 8),
                  real=(second_kind != "so3"), meta=meta)


def build_algebras() -> Dict[str, LieAlgebra]:
    algs = {
        "sl2R": _build("sl2R", SL2R_MATS, F(1, 8), hand_table=SL2R_HAND_TABLE,
                       closed_form=killing_sl2r, real=True),
        "so3": _build("so3", SO3_MATS, F(1, 8), closed_form=killing_so3,
                      meta={"basis_names": ["i*e1", "i*e2", "e3"]}),
        "sl2C": _build("sl2C", SL2C_MATS, F(1, 16),
                       meta={"basis_names": ["e1", "e2", "e3", "i*e1", "i*e2", "i*e3"],
                             "realified": True}),
        "sl3R": _build("sl3R", SL3R_MATS, F(1, 12), hand_table=SL3R_HAND_TABLE,
                       real=True),
        "su21": _build("su21", SU21_MATS, F(1, 12), hand_table=SU21_HAND_TABLE,
                       closed_form=killing_su21,
                       meta={"closed_form_notes": [
                           "printed Killing form ends in -2*l1*l6; the matrix "
                           "realization with k = (1/12) trace(ad ad) gives cross "
                           "term -l1*l6, so k(e1+e6) = -3, not -4"]}),
        "sl2_plus_sl2": _build_sum("sl2_plus_sl2", "sl2R"),
        "sl2_plus_so3": _build_sum("sl2_plus_so3", "so3"),
    }
    return algs


ALGEBRA_NAMES = ("sl2R", "so3", "sl2C", "sl3R", "su21", "sl2_plus_sl2", "sl2_plus_so3")
