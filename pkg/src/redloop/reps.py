"""Matrix realizations of the cataloged algebras.

A realization maps coordinate vectors to n x n matrices.  The exact side
works over Surd scalars (Gaussian rationals plus sqrt(2)); the float side
uses numpy complex matrices and is what the exponential/conjugacy numerics
consume.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .surd import Surd


class PullbackError(ValueError):
    """The matrix does not lie in the realized algebra's image."""


class MatrixRep:
    def __init__(self, name: str, basis_matrices: Sequence[Sequence[Sequence]], real: bool):
        self.name = name
        self.basis = [[[Surd.lift(x) for x in row] for row in mat] for mat in basis_matrices]
        self.dim = len(self.basis)
        self.n = len(self.basis[0])
        self.real = real
        # real linear system for exact pullback: rows indexed by
        # (entry, re/im), columns by basis index
        rows = []
        for r in range(self.n):
            for c in range(self.n):
                rows.append([self.basis[k][r][c].ar for k in range(self.dim)])
                rows.append([self.basis[k][r][c].ai for k in range(self.dim)])
        self._pullback_rows = rows
        self.basis_float = np.array(
            [[[complex(x.to_complex()) for x in row] for row in mat] for mat in self.basis],
            dtype=np.complex128)
        flat = self.basis_float.reshape(self.dim, -1)
        self._pullback_float = np.vstack([flat.real, flat.imag]).T  # (2n^2, dim)

    # -- exact side ----------------------------------------------------

    def to_exact(self, coords: Sequence) -> List[List[Surd]]:
        mat = [[Surd() for _ in range(self.n)] for _ in range(self.n)]
        for k, ck in enumerate(coords):
            ck = Surd.lift(ck) if not isinstance(ck, Surd) else ck
            if ck.is_zero():
                continue
            bk = self.basis[k]
            for r in range(self.n):
                for c in range(self.n):
                    if bk[r][c]:
                        mat[r][c] = mat[r][c] + ck * bk[r][c]
        return mat

    def _solve_real_part(self, entries: List[Tuple[Fraction, Fraction]]) -> Optional[List[Fraction]]:
        rhs = []
        for re, im in entries:
            rhs.append(re)
            rhs.append(im)
        return linalg.solve(self._pullback_rows, rhs)

    def coords_of_exact(self, mat: Sequence[Sequence]) -> List[Surd]:
        """Exact pullback; raises PullbackError if mat leaves the image."""
        m = [[Surd.lift(x) for x in row] for row in mat]
        part_a = [(m[r][c].ar, m[r][c].ai) for r in range(self.n) for c in range(self.n)]
        part_b = [(m[r][c].br, m[r][c].bi) for r in range(self.n) for c in range(self.n)]
        sol_a = self._solve_real_part(part_a)
        if sol_a is None:
            raise PullbackError(f"{self.name}: matrix leaves the algebra image")
        if any(x for row in part_b for x in row):
            sol_b = self._solve_real_part(part_b)
            if sol_b is None:
                raise PullbackError(f"{self.name}: matrix leaves the algebra image")
        else:
            sol_b = [Fraction(0)] * self.dim
        return [Surd(a, 0, b, 0) for a, b in zip(sol_a, sol_b)]

    def bracket_via_matrices(self, x: Sequence, y: Sequence) -> List[Surd]:
        mx = self.to_exact(x)
        my = self.to_exact(y)
        comm = linalg.mat_sub(linalg.mat_mul(mx, my), linalg.mat_mul(my, mx))
        return self.coords_of_exact(comm)

    def derive_structure(self) -> dict:
        """Structure constants implied by the realization."""
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                ei = [Fraction(0)] * self.dim
                ej = [Fraction(0)] * self.dim
                ei[i] = Fraction(1)
                ej[j] = Fraction(1)
                coords = self.bracket_via_matrices(ei, ej)
                vec = []
                for s in coords:
                    if not s.is_rational():
                        raise PullbackError(
                            f"{self.name}: bracket of basis matrices is not rational")
                    vec.append(s.rational_value())
                if any(vec):
                    table[(i, j)] = tuple(vec)
        return table

    # -- float side ------------------------------------------------------

    def to_float(self, coords: Sequence) -> np.ndarray:
        vec = np.array([float(c) for c in coords], dtype=np.float64)
        return np.einsum("k,kij->ij", vec, self.basis_float)

    def coords_of_float(self, mat: np.ndarray) -> Tuple[np.ndarray, float]:
        """Least-squares pullback; returns (coords, residual sup-norm)."""
        flat = np.asarray(mat, dtype=np.complex128).reshape(-1)
        rhs = np.concatenate([flat.real, flat.imag])
        sol, *_ = np.linalg.lstsq(self._pullback_float, rhs, rcond=None)
        resid = np.abs(self._pullback_float @ sol - rhs).max()
        return sol, float(resid)
