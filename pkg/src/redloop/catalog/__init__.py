"""Embedded ground-truth data: algebras, subalgebra lists, complement
parametrizations, expected classification outcomes, conjugacy witnesses."""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List

from ..algebra import AlgebraError, LieAlgebra
from .algebras import ALGEBRA_NAMES, build_algebras
from .model import ComplementFamily, ExpectedOutcome, SubalgebraSpec
from . import products_data, sl2c_data, sl3r_data, su21_data


@lru_cache(maxsize=1)
def _algebras() -> Dict[str, LieAlgebra]:
    return build_algebras()


def load_algebra(name: str) -> LieAlgebra:
    try:
        return _algebras()[name]
    except KeyError:
        raise AlgebraError(
            f"unknown algebra {name!r}; known: {', '.join(ALGEBRA_NAMES)}") from None


def algebra_names() -> List[str]:
    return list(ALGEBRA_NAMES)


@lru_cache(maxsize=1)
def _subalgebra_index() -> Dict[str, List[SubalgebraSpec]]:
    table: Dict[str, List[SubalgebraSpec]] = {
        "sl2C": list(sl2c_data.SUBALGEBRAS),
        "sl3R": list(sl3r_data.SUBALGEBRAS),
        "su21": list(su21_data.SUBALGEBRAS),
        "sl2_plus_sl2": products_data.subalgebras_for("sl2_plus_sl2"),
        "sl2_plus_so3": products_data.subalgebras_for("sl2_plus_so3"),
    }
    return table


def subalgebras(algebra: str) -> List[SubalgebraSpec]:
    try:
        return list(_subalgebra_index()[algebra])
    except KeyError:
        raise AlgebraError(f"no subalgebra catalog for {algebra!r}") from None


def subalgebra(sid: str) -> SubalgebraSpec:
    algebra = sid.split(".", 1)[0]
    for spec in subalgebras(algebra):
        if spec.sid == sid:
            return spec
    raise AlgebraError(f"unknown subalgebra id {sid!r}")


@lru_cache(maxsize=1)
def _family_index() -> Dict[str, ComplementFamily]:
    fams: Dict[str, ComplementFamily] = {}
    groups = [sl2c_data.FAMILIES, sl3r_data.FAMILIES, su21_data.FAMILIES,
              products_data.families_for("sl2_plus_sl2"),
              products_data.families_for("sl2_plus_so3")]
    for group in groups:
        for fam in group:
            fams[fam.subalgebra_id] = fam
    return fams


def complement_family(algebra: str, sid: str) -> ComplementFamily:
    if not sid.startswith(algebra + "."):
        sid = f"{algebra}.{sid}"
    fam = _family_index().get(sid)
    if fam is None:
        raise AlgebraError(f"no complement family listed for {sid!r}")
    return fam


PROPOSITION_IDS = ("Prop3", "Prop4", "Prop5", "Prop6", "Prop7",
                   "Prop8", "Prop9", "Prop10", "Prop11", "Prop16")


@lru_cache(maxsize=1)
def _outcome_index() -> Dict[str, List[ExpectedOutcome]]:
    table: Dict[str, List[ExpectedOutcome]] = {p: [] for p in PROPOSITION_IDS}
    for outcome in (sl2c_data.OUTCOMES + sl3r_data.OUTCOMES
                    + su21_data.OUTCOMES + products_data.OUTCOMES):
        table[outcome.prop].append(outcome)
    return table


def expected_outcomes(prop_id: str) -> List[ExpectedOutcome]:
    try:
        return list(_outcome_index()[prop_id])
    except KeyError:
        raise AlgebraError(
            f"unknown proposition {prop_id!r}; known: {', '.join(PROPOSITION_IDS)}") from None
