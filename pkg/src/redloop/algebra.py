"""Exact-arithmetic Lie algebra engine.

A Lie algebra is given by rational structure constants on a fixed basis
e_1..e_n; brackets, adjoint maps, Killing forms, subspace operations and
Lie closure are all computed exactly over Q.  Floats appear nowhere in
this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import linalg

Coords = Tuple[Fraction, ...]


class AlgebraError(ValueError):
    pass


class ElementKind(enum.Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC_OR_LOXODROMIC = "hyperbolic-or-loxodromic"


@dataclass(frozen=True)
class ElementClass:
    kind: ElementKind
    killing_value: Fraction


class LieAlgebra:
    """Finite-dimensional real Lie algebra with rational structure constants.

    ``table[(i, j)]`` for i < j holds the coordinates of [e_i, e_j]
    (0-based indices); the antisymmetric completion is implicit.
    """

    def __init__(self, name: str, dim: int,
                 table: Dict[Tuple[int, int], Coords],
                 killing_normalization: Fraction,
                 matrix_rep=None,
                 killing_closed_form: Optional[Callable[[Coords], Fraction]] = None,
                 meta: Optional[dict] = None):
        self.name = name
        self.dim = dim
        self.table = {}
        for (i, j), coords in table.items():
            if i == j:
                raise AlgebraError("diagonal structure entries must be absent")
            coords = tuple(Fraction(c) for c in coords)
            if len(coords) != dim:
                raise AlgebraError("structure entry of wrong length")
            if i > j:
                i, j, coords = j, i, tuple(-c for c in coords)
            if any(coords):
                self.table[(i, j)] = coords
        self.killing_normalization = Fraction(killing_normalization)
        self.matrix_rep = matrix_rep
        self.killing_closed_form = killing_closed_form
        self.meta = dict(meta or {})
        self._zero = tuple(Fraction(0) for _ in range(dim))

    # -- elements ------------------------------------------------------

    def element(self, coords: Sequence) -> "Element":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.dim:
            raise AlgebraError(
                f"{self.name}: expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def zero(self) -> "Element":
        return Element(self, self._zero)

    def basis_element(self, index: int) -> "Element":
        coords = list(self._zero)
        coords[index] = Fraction(1)
        return Element(self, tuple(coords))

    def basis(self) -> List["Element"]:
        return [self.basis_element(i) for i in range(self.dim)]

    # -- structure -----------------------------------------------------

    def structure_vector(self, i: int, j: int) -> Coords:
        if i == j:
            return self._zero
        if i < j:
            return self.table.get((i, j), self._zero)
        vec = self.table.get((j, i))
        if vec is None:
            return self._zero
        return tuple(-c for c in vec)

    def bracket_coords(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Coords:
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                vec = self.structure_vector(i, j)
                if vec is self._zero:
                    continue
                c = xi * yj
                for k, vk in enumerate(vec):
                    if vk:
                        out[k] += c * vk
        return tuple(out)

    def ad_coords(self, x: Sequence[Fraction]) -> linalg.Matrix:
        """Matrix of ad x; column j holds the coordinates of [x, e_j]."""
        cols = []
        for j in range(self.dim):
            ej = [Fraction(0)] * self.dim
            ej[j] = Fraction(1)
            cols.append(self.bracket_coords(x, ej))
        return [list(row) for row in zip(*cols)]

    def killing_coords(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        ax = self.ad_coords(x)
        ay = self.ad_coords(y)
        trace = Fraction(0)
        for i in range(self.dim):
            for k in range(self.dim):
                trace += ax[i][k] * ay[k][i]
        return self.killing_normalization * trace

    # -- invariant checks ------------------------------------------------

    def check_antisymmetry(self) -> bool:
        # stored form only keeps i < j, so antisymmetry holds by construction;
        # the remaining condition is [e_i, e_i] = 0, also structural
        return True

    def jacobi_violations(self) -> List[Tuple[int, int, int]]:
        bad = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                cij = self.structure_vector(i, j)
                for k in range(j + 1, self.dim):
                    total = list(self.bracket_coords(cij, self._basis_coords(k)))
                    cjk = self.structure_vector(j, k)
                    for t, v in enumerate(self.bracket_coords(cjk, self._basis_coords(i))):
                        total[t] += v
                    cki = self.structure_vector(k, i)
                    for t, v in enumerate(self.bracket_coords(cki, self._basis_coords(j))):
                        total[t] += v
                    if any(total):
                        bad.append((i, j, k))
        return bad

    def _basis_coords(self, index: int) -> Coords:
        coords = list(self._zero)
        coords[index] = Fraction(1)
        return tuple(coords)

    def __repr__(self):
        return f"LieAlgebra({self.name}, dim={self.dim})"


@dataclass(frozen=True)
class Element:
    algebra: LieAlgebra
    coords: Coords

    def __add__(self, other: "Element") -> "Element":
        _same_algebra(self, other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        _same_algebra(self, other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __rmul__(self, scalar) -> "Element":
        s = Fraction(scalar)
        return Element(self.algebra, tuple(s * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        names = self.algebra.meta.get("basis_names")
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            name = names[i] if names else f"e{i + 1}"
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        body = "+".join(parts).replace("+-", "-") or "0"
        return f"<{self.algebra.name}: {body}>"


def _same_algebra(*elements) -> LieAlgebra:
    alg = elements[0].algebra
    for e in elements[1:]:
        if e.algebra is not alg:
            raise AlgebraError(
                f"elements of different algebras: {alg.name} vs {e.algebra.name}")
    return alg


# -- operations on elements ----------------------------------------------

def bracket(x: Element, y: Element) -> Element:
    alg = _same_algebra(x, y)
    return Element(alg, alg.bracket_coords(x.coords, y.coords))


def ad_matrix(x: Element) -> linalg.Matrix:
    return x.algebra.ad_coords(x.coords)


def killing(x: Element, y: Element) -> Fraction:
    alg = _same_algebra(x, y)
    return alg.killing_coords(x.coords, y.coords)


def classify(x: Element) -> ElementClass:
    k = killing(x, x)
    if k < 0:
        kind = ElementKind.ELLIPTIC
    elif k == 0:
        kind = ElementKind.PARABOLIC
    else:
        kind = ElementKind.HYPERBOLIC_OR_LOXODROMIC
    return ElementClass(kind, k)


# -- subspaces -------------------------------------------------------------

class Subspace:
    """Subspace of a Lie algebra, stored as a reduced-row-echelon basis.

    Two equal subspaces have identical stored bases, so equality is a pure
    data comparison.
    """

    def __init__(self, algebra: LieAlgebra, vectors: Sequence[Sequence[Fraction]]):
        self.algebra = algebra
        rows = [[Fraction(c) for c in v] for v in vectors]
        for row in rows:
            if len(row) != algebra.dim:
                raise AlgebraError("basis vector of wrong length")
        self.basis_matrix = linalg.row_space_basis(rows) if rows else []

    @staticmethod
    def span(elements: Sequence[Element]) -> "Subspace":
        if not elements:
            raise AlgebraError("cannot infer the algebra of an empty span")
        alg = _same_algebra(*elements)
        return Subspace(alg, [e.coords for e in elements])

    @property
    def dim(self) -> int:
        return len(self.basis_matrix)

    def basis_elements(self) -> List[Element]:
        return [Element(self.algebra, tuple(row)) for row in self.basis_matrix]

    def contains(self, x: Element) -> bool:
        if x.algebra is not self.algebra:
            raise AlgebraError("element from a different algebra")
        return self.contains_coords(x.coords)

    def contains_coords(self, coords: Sequence[Fraction]) -> bool:
        if not any(coords):
            return True
        if not self.basis_matrix:
            return False
        stacked = [list(row) for row in self.basis_matrix] + [list(coords)]
        return linalg.rank(stacked) == self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.algebra is other.algebra and self.basis_matrix == other.basis_matrix

    def __hash__(self):
        return hash((id(self.algebra), tuple(tuple(r) for r in self.basis_matrix)))

    def __repr__(self):
        return f"Subspace({self.algebra.name}, dim={self.dim})"


def lie_closure(s: Subspace) -> Subspace:
    """Smallest subalgebra containing s (iterated bracket-and-span)."""
    alg = s.algebra
    rows = [list(r) for r in s.basis_matrix]
    while True:
        current = linalg.row_space_basis(rows)
        new_rows = [list(r) for r in current]
        added = False
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                br = alg.bracket_coords(current[i], current[j])
                if any(br):
                    stacked = new_rows + [list(br)]
                    if linalg.rank(stacked) > len(linalg.row_space_basis(new_rows)):
                        new_rows.append(list(br))
                        added = True
        if not added:
            return Subspace(alg, current)
        rows = new_rows


def is_subalgebra(s: Subspace) -> bool:
    alg = s.algebra
    basis = s.basis_matrix
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            br = alg.bracket_coords(basis[i], basis[j])
            if not s.contains_coords(br):
                return False
    return True


def direct_sum(h: Subspace, m: Subspace) -> bool:
    if h.algebra is not m.algebra:
        raise AlgebraError("subspaces of different algebras")
    alg = h.algebra
    if h.dim + m.dim != alg.dim:
        return False
    stacked = [list(r) for r in h.basis_matrix] + [list(r) for r in m.basis_matrix]
    return linalg.rank(stacked) == alg.dim


def decompose(x: Element, h: Subspace, m: Subspace) -> Tuple[Coords, Coords]:
    """Write x = m-part + h-part against g = m (+) h; exact.

    Returns the coefficient vectors against m's and h's stored bases.
    """
    if x.algebra is not h.algebra or h.algebra is not m.algebra:
        raise AlgebraError("element and subspaces must share one algebra")
    if not direct_sum(h, m):
        raise AlgebraError("subspaces do not form a direct sum")
    cols = [list(r) for r in m.basis_matrix] + [list(r) for r in h.basis_matrix]
    a = linalg.transpose(cols)
    sol = linalg.solve(a, list(x.coords))
    if sol is None:
        raise AlgebraError("decomposition failed")
    return tuple(sol[:m.dim]), tuple(sol[m.dim:])


# -- structure-constant text format ----------------------------------------

def dump_structure(alg: LieAlgebra) -> str:
    """Text document: header plus one line per nonzero c[i][j][k], 1-indexed."""
    lines = [f"algebra {alg.name}", f"dim {alg.dim}",
             f"killing {alg.killing_normalization}"]
    for i in range(alg.dim):
        for j in range(alg.dim):
            if i == j:
                continue
            vec = alg.structure_vector(i, j)
            for k, c in enumerate(vec):
                if c:
                    lines.append(f"{i + 1} {j + 1} {k + 1} {c}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_structure(text: str) -> LieAlgebra:
    name = None
    dim = None
    killing_norm = None
    entries: Dict[Tuple[int, int], List[Fraction]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "end":
            break
        tokens = line.split()
        if tokens[0] == "algebra":
            name = tokens[1]
        elif tokens[0] == "dim":
            dim = int(tokens[1])
        elif tokens[0] == "killing":
            killing_norm = Fraction(tokens[1])
        else:
            i, j, k = (int(t) for t in tokens[:3])
            c = Fraction(tokens[3])
            if dim is None:
                raise AlgebraError("structure entries before the dim header")
            key = (i - 1, j - 1)
            vec = entries.setdefault(key, [Fraction(0)] * dim)
            vec[k - 1] += c
    if name is None or dim is None or killing_norm is None:
        raise AlgebraError("incomplete structure header")
    table: Dict[Tuple[int, int], Coords] = {}
    for (i, j), vec in entries.items():
        if i < j:
            table[(i, j)] = tuple(vec)
        else:
            mirror = entries.get((j, i))
            if mirror is not None and any(a + b for a, b in zip(mirror, vec)):
                raise AlgebraError(f"antisymmetry violated at ({j + 1},{i + 1})")
            if mirror is None:
                table[(j, i)] = tuple(-c for c in vec)
    alg = LieAlgebra(name, dim, table, killing_norm)
    if alg.jacobi_violations():
        raise AlgebraError(f"Jacobi identity fails for {name}")
    return alg
