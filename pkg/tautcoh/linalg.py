# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright 2021 The tautcoh developers.
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License version 3 as published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Exact rational linear algebra."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from tautcoh import errors
from tautcoh.graded import BasisSpace

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RationalMatrix:
    """A dense matrix with exact rational entries in row-major order."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise errors.InvalidMatrix(f"negative shape {self.rows}x{self.cols}")

        entries = tuple(_to_fraction(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise errors.InvalidMatrix(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Scalar]], cols: int = 0
    ) -> "RationalMatrix":
        """Create a matrix from a list of rows.

        :param cols: The column count, only used when there are no rows.
        """
        if rows:
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise errors.InvalidMatrix("rows have different lengths")
        return cls(len(rows), cols, tuple(x for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        """Create a zero matrix."""
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        """Create an identity matrix."""
        return cls(
            size,
            size,
            tuple(Fraction(int(i == j)) for i in range(size) for j in range(size)),
        )

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        row, col = index
        return self.entries[row * self.cols + col]

    def row(self, index: int) -> Vector:
        """Return a row as a tuple."""
        return self.entries[index * self.cols : (index + 1) * self.cols]

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Multiply the matrix by a column vector.

        :raise InvalidMatrix: If the vector length doesn't match the columns.
        """
        if len(vector) != self.cols:
            raise errors.InvalidMatrix(
                f"vector of length {len(vector)} applied to {self.cols} columns"
            )
        values = [_to_fraction(x) for x in vector]
        return tuple(
            sum((a * b for a, b in zip(self.row(i), values) if a and b), Fraction(0))
            for i in range(self.rows)
        )

    def to_domain_matrix(self) -> DomainMatrix:
        """Convert to a sympy matrix over the rationals."""
        return DomainMatrix(
            [
                [QQ(x.numerator, x.denominator) for x in self.row(i)]
                for i in range(self.rows)
            ],
            (self.rows, self.cols),
            QQ,
        )


def _to_fraction(value: Scalar) -> Fraction:
    if isinstance(value, float):
        raise errors.InvalidMatrix(f"floating point entry {value!r}")
    return Fraction(value)


def rank(m: RationalMatrix) -> int:
    """Return the rank of a matrix over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0

    result = m.to_domain_matrix().rank()
    logger.debug("rank of %dx%d matrix: %d", m.rows, m.cols, result)
    return result


def kernel_basis(m: RationalMatrix) -> List[Vector]:
    """Return a basis of the kernel of a matrix.

    Vectors come from the reduced row echelon form, one per free column in
    increasing column order, so results are reproducible.
    """
    if m.cols == 0:
        return []

    if m.rows == 0:
        identity = RationalMatrix.identity(m.cols)
        return [identity.row(i) for i in range(m.cols)]

    nullspace = m.to_domain_matrix().nullspace().to_Matrix()
    vectors = [
        tuple(Fraction(int(x.p), int(x.q)) for x in nullspace.row(i))
        for i in range(nullspace.rows)
    ]
    logger.debug("kernel of %dx%d matrix: dimension %d", m.rows, m.cols, len(vectors))
    return vectors


@dataclass(frozen=True)
class LinearMapData:
    """A matrix together with the bases it maps between.

    Columns are indexed by the domain basis and rows by the codomain basis.
    """

    matrix: RationalMatrix
    domain: BasisSpace
    codomain: BasisSpace

    def __post_init__(self):
        shape = (self.matrix.rows, self.matrix.cols)
        if shape != (len(self.codomain), len(self.domain)):
            raise errors.InvalidLinearMap(
                f"matrix is {self.matrix.rows}x{self.matrix.cols} but bases have "
                f"sizes {len(self.codomain)} and {len(self.domain)}"
            )

        for i, target in enumerate(self.codomain):
            for j, source in enumerate(self.domain):
                if self.matrix[i, j] and target.degree != source.degree:
                    raise errors.InvalidLinearMap(
                        f"entry ({target.label}, {source.label}) pairs degrees "
                        f"{target.degree} and {source.degree}"
                    )

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Apply the map to a vector in domain coordinates."""
        return self.matrix.apply(vector)

    @property
    def rank(self) -> int:
        """Return the rank of the map."""
        return rank(self.matrix)
