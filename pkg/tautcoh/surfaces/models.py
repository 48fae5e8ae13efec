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

"""Surface and line bundle data consumed by the formulas."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from tautcoh import errors
from tautcoh.graded import BasisSpace, GradedDim
from tautcoh.linalg import RationalMatrix
from tautcoh.slots import Slot, untwisted

logger = logging.getLogger(__name__)

# Surfaces have cohomology in degrees 0, 1 and 2.
SURFACE_MAX_DEGREE = 2

UNIT_BASIS = BasisSpace.from_labels(["1"])

Term = Tuple[int, Fraction]
SlotTriple = Tuple[Slot, Slot, Slot]


@dataclass(frozen=True)
class LineBundleData:
    """Cohomology of a line bundle on a surface.

    :param name: The bundle name.
    :param h: The graded dimensions of its cohomology.
    :param basis: An optional basis of global sections.
    """

    name: str
    h: GradedDim
    basis: Optional[BasisSpace] = None

    def __post_init__(self):
        if self.h.top_degree > SURFACE_MAX_DEGREE:
            raise errors.InvalidDims(
                f"support beyond degree {SURFACE_MAX_DEGREE}: {self.h.as_list()}",
                slot=self.name,
            )

        if self.basis is None:
            return

        if not self.basis.is_concentrated_in_degree_zero():
            raise errors.InvalidBasis(f"sections of {self.name!r} must have degree 0")
        if len(self.basis) != self.h[0]:
            raise errors.InvalidBasis(
                f"{self.name!r} has h0={self.h[0]} but {len(self.basis)} basis elements"
            )


@dataclass(frozen=True)
class MultTable:
    """Structure constants of a bilinear product ``left x right -> target``.

    ``coeffs[(i, j)]`` lists the nonzero terms ``(k, c)`` of the product of
    ``left[i]`` and ``right[j]``; missing pairs multiply to zero.
    """

    left: BasisSpace
    right: BasisSpace
    target: BasisSpace
    coeffs: Dict[Tuple[int, int], Tuple[Term, ...]] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[Tuple[int, int], Tuple[Term, ...]] = {}
        for (i, j), terms in self.coeffs.items():
            if not (0 <= i < len(self.left) and 0 <= j < len(self.right)):
                raise errors.InvalidMultTable(f"factor index ({i}, {j}) out of range")
            kept = []
            for k, value in terms:
                if not 0 <= k < len(self.target):
                    raise errors.InvalidMultTable(f"target index {k} out of range")
                value = Fraction(value)
                if value:
                    kept.append((k, value))
            if kept:
                cleaned[(i, j)] = tuple(kept)
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_entries(
        cls,
        left: BasisSpace,
        right: BasisSpace,
        target: BasisSpace,
        entries: Iterable[Tuple[int, int, int, Union[int, Fraction]]],
    ) -> "MultTable":
        """Create a table from ``(i, j, k, c)`` entries, summing repeats."""
        accumulated: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for i, j, k, value in entries:
            terms = accumulated.setdefault((i, j), {})
            terms[k] = terms.get(k, Fraction(0)) + Fraction(value)
        coeffs = {
            pair: tuple(sorted(terms.items())) for pair, terms in accumulated.items()
        }
        return cls(left, right, target, coeffs)

    @classmethod
    def unit(cls, basis: BasisSpace) -> "MultTable":
        """Create the product of the constant section ``1`` with ``basis``."""
        coeffs = {(0, j): ((j, Fraction(1)),) for j in range(len(basis))}
        return cls(UNIT_BASIS, basis, basis, coeffs)

    def product(self, i: int, j: int) -> Tuple[Term, ...]:
        """Return the terms of the product of ``left[i]`` and ``right[j]``."""
        return self.coeffs.get((i, j), ())

    def multiply(
        self, x: Sequence[Fraction], y: Sequence[Fraction]
    ) -> Tuple[Fraction, ...]:
        """Multiply two vectors given in coordinates of the factor bases."""
        result = [Fraction(0)] * len(self.target)
        for (i, j), terms in self.coeffs.items():
            weight = x[i] * y[j]
            if not weight:
                continue
            for k, value in terms:
                result[k] += weight * value
        return tuple(result)

    def as_matrix(self) -> RationalMatrix:
        """Return the flattened matrix of ``left ⊗ right -> target``.

        Column ``i * len(right) + j`` holds the product of ``left[i]`` and
        ``right[j]``.
        """
        cols = len(self.left) * len(self.right)
        rows = [[Fraction(0)] * cols for _ in range(len(self.target))]
        for (i, j), terms in self.coeffs.items():
            for k, value in terms:
                rows[k][i * len(self.right) + j] = value
        return RationalMatrix.from_rows(rows, cols=cols)


@dataclass(frozen=True)
class SurfaceData:
    """The line bundles and products known on a surface.

    :param name: The surface name.
    :param bundles: Line bundle data for each provided slot.
    :param mults: Multiplication tables keyed by ``(left, right, target)``.
    :param trivial_twist: Whether ``A`` is the structure sheaf. Twisted
        slots then resolve to their untwisted counterparts.
    """

    name: str
    bundles: Dict[Slot, LineBundleData]
    mults: Dict[SlotTriple, MultTable] = field(default_factory=dict)
    trivial_twist: bool = False

    def __post_init__(self):
        structure = self.bundles.get(Slot.O)
        if structure is None:
            raise errors.MissingSlot(Slot.O.value, surface_name=self.name)
        if structure.h[0] != 1:
            raise errors.InvalidDims(
                f"h0 must be 1 for a connected surface, got {structure.h.as_list()}",
                slot=Slot.O.value,
            )

        for (left, right, target), table in self.mults.items():
            pairs = ((left, table.left), (right, table.right), (target, table.target))
            for slot, basis in pairs:
                if self.basis(slot) != basis:
                    raise errors.BasisMismatch(
                        f"table for ({left.value}, {right.value}) -> {target.value} "
                        f"does not use the basis of slot {slot.value!r}"
                    )

    def _resolve(self, slot: Slot) -> Slot:
        if slot not in self.bundles and self.trivial_twist:
            return untwisted(slot)
        return slot

    def has_slot(self, slot: Slot) -> bool:
        """Whether the slot is defined, directly or through a trivial twist."""
        return self._resolve(slot) in self.bundles

    def bundle(self, slot: Slot) -> LineBundleData:
        """Return the data of a slot.

        :raise MissingSlot: If the slot is not defined.
        """
        resolved = self._resolve(slot)
        try:
            return self.bundles[resolved]
        except KeyError:
            raise errors.MissingSlot(slot.value, surface_name=self.name)

    def h(self, slot: Slot) -> GradedDim:
        """Return the cohomology dimensions of a slot."""
        return self.bundle(slot).h

    def basis(self, slot: Slot) -> BasisSpace:
        """Return the basis of global sections of a slot.

        :raise MissingBasis: If the slot has no basis.
        """
        data = self.bundle(slot)
        if data.basis is not None:
            return data.basis
        if self._resolve(slot) == Slot.O:
            return UNIT_BASIS
        raise errors.MissingBasis(slot.value, surface_name=self.name)

    def mult(self, left: Slot, right: Slot, target: Slot) -> MultTable:
        """Return the multiplication table ``left x right -> target``.

        With a trivial twist, products by ``A = O`` are the unit product.

        :raise MissingMultTable: If no table is available.
        """
        table = self.mults.get((left, right, target))
        if table is not None:
            return table

        if (
            self._resolve(left) == Slot.O
            and self.has_slot(right)
            and self._resolve(right) == self._resolve(target)
        ):
            logger.debug("using unit product for %s x %s", left.value, right.value)
            return MultTable.unit(self.basis(right))

        raise errors.MissingMultTable(left.value, right.value, surface_name=self.name)
