from __future__ import annotations

"""
Exact symmetric integer matrices (intersection forms).

Diagonalisation is a congruence T^T·M·T = D over the rationals using
`fractions.Fraction`; determinants go through sympy's `DomainMatrix` over
ZZ (fraction-free, arbitrary precision). No floating point anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from pretzelslice.core.errors import ConsistencyError, PretzelError

FracMatrix = List[List[Fraction]]


@dataclass(frozen=True)
class Diagonalization:
    """Result of a symmetric congruence reduction.

    `transform` is T (row-major) and `diagonal` the entries of T^T·M·T.
    """

    diagonal: Tuple[Fraction, ...]
    transform: Tuple[Tuple[Fraction, ...], ...]

    @property
    def signature(self) -> int:
        return sum(1 for d in self.diagonal if d > 0) - sum(1 for d in self.diagonal if d < 0)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


class IntSymMatrix:
    """Dense symmetric matrix over Python integers."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[int]]) -> None:
        data = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(data)
        if n == 0:
            raise PretzelError("an intersection form needs dimension ≥ 1")
        for i, row in enumerate(data):
            if len(row) != n:
                raise PretzelError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if data[i][j] != data[j][i]:
                    raise PretzelError(f"matrix is not symmetric at ({i}, {j})")
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> "IntSymMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntSymMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IntSymMatrix({[list(r) for r in self._rows]!r})"

    def determinant(self) -> int:
        dm = DomainMatrix([[ZZ(v) for v in row] for row in self._rows], (self.dimension, self.dimension), ZZ)
        return int(dm.det())

    def diagonalize(self, *, verify: bool = True) -> Diagonalization:
        """Congruence-diagonalise over Q.

        Zero pivots are handled by a symmetric swap, or, when the whole
        remaining diagonal vanishes, by folding a hyperbolic pair into a
        nonzero pivot. With `verify` the identity T^T·M·T = D is checked
        exactly before returning.
        """
        n = self.dimension
        m: FracMatrix = [[Fraction(v) for v in row] for row in self._rows]
        # Columns of t are the new basis vectors expressed in the old basis.
        t: FracMatrix = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

        def swap(i: int, j: int) -> None:
            m[i], m[j] = m[j], m[i]
            for row in m:
                row[i], row[j] = row[j], row[i]
            for row in t:
                row[i], row[j] = row[j], row[i]

        def add_multiple(dst: int, src: int, factor: Fraction) -> None:
            # column dst += factor * column src, then the same on rows
            for row in m:
                if row[src]:
                    row[dst] += factor * row[src]
            src_row, dst_row = m[src], m[dst]
            for c in range(n):
                if src_row[c]:
                    dst_row[c] += factor * src_row[c]
            for row in t:
                if row[src]:
                    row[dst] += factor * row[src]

        k = 0
        while k < n:
            pivot = next((i for i in range(k, n) if m[i][i] != 0), None)
            if pivot is None:
                partner = next(
                    ((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0),
                    None,
                )
                if partner is None:
                    break
                i, j = partner
                # Hyperbolic pair: e_i + e_j has norm 2·m[i][j] ≠ 0.
                add_multiple(i, j, Fraction(1))
                pivot = i
            if pivot != k:
                swap(k, pivot)
            piv = m[k][k]
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    add_multiple(i, k, -m[i][k] / piv)
            k += 1

        diag = tuple(m[i][i] for i in range(n))
        result = Diagonalization(diagonal=diag, transform=tuple(tuple(r) for r in t))
        if verify:
            self.check_congruence(result)
        return result

    def check_congruence(self, d: Diagonalization) -> None:
        """Raise ConsistencyError unless T^T·M·T equals the reported diagonal."""
        n = self.dimension
        t = d.transform
        # Sparse columns of T and M: {row: value}.
        t_cols = [{a: t[a][j] for a in range(n) if t[a][j]} for j in range(n)]
        m_cols = [{a: self._rows[a][b] for a in range(n) if self._rows[a][b]} for b in range(n)]
        for j in range(n):
            mt: dict = {}
            for b, tv in t_cols[j].items():
                for a, mv in m_cols[b].items():
                    mt[a] = mt.get(a, 0) + mv * tv
            for i in range(j, n):
                acc = sum((tv * mt[a] for a, tv in t_cols[i].items() if a in mt), Fraction(0))
                expected = d.diagonal[i] if i == j else 0
                if acc != expected:
                    raise ConsistencyError(f"congruence check failed at ({i}, {j}): {acc} != {expected}")


def signature_and_rank(m: IntSymMatrix, *, verify: bool = True) -> Tuple[int, int]:
    d = m.diagonalize(verify=verify)
    return d.signature, d.rank


def is_positive_definite(m: IntSymMatrix, *, verify: bool = True) -> bool:
    sig, rank = signature_and_rank(m, verify=verify)
    return sig == rank == m.dimension


def gram_matrix(columns: Sequence[Sequence[int]]) -> IntSymMatrix:
    """B^T·B for the integer matrix whose columns are given."""
    return IntSymMatrix(
        [[sum(x * y for x, y in zip(u, v)) for v in columns] for u in columns]
    )
