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

"""Graded super vector spaces at dimension and explicit-basis level.

Degrees are cohomological degrees; the parity of a degree decides whether
a basis element behaves as even (symmetric algebra) or odd (exterior
algebra) in symmetric powers.
"""

import itertools
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import Poly, symbols

from tautcoh import errors

logger = logging.getLogger(__name__)

_z, _t = symbols("z t")


@dataclass(frozen=True)
class GradedDim:
    """The dimension profile of a graded vector space.

    Trailing zeros are stripped on construction, so two instances compare
    equal iff they agree in every degree.

    :param dims: Dimensions indexed by degree, starting at degree 0.
    """

    dims: Tuple[int, ...] = ()

    def __post_init__(self):
        values = tuple(self.dims)
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise errors.InvalidDims(f"entry {value!r} is not an integer")
            if value < 0:
                raise errors.InvalidDims(f"entry {value} is negative")

        while values and values[-1] == 0:
            values = values[:-1]

        object.__setattr__(self, "dims", values)

    @classmethod
    def of(cls, *dims: int) -> "GradedDim":
        """Create a GradedDim from its dimensions in degrees 0, 1, ..."""
        return cls(tuple(dims))

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.dims):
            return self.dims[degree]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def __repr__(self) -> str:
        return f"GradedDim({list(self.as_list())})"

    @property
    def top_degree(self) -> int:
        """Return the highest degree with nonzero dimension, or -1 if zero."""
        return len(self.dims) - 1

    @property
    def total(self) -> int:
        """Return the total dimension."""
        return sum(self.dims)

    def is_zero(self) -> bool:
        """Whether the space is zero in every degree."""
        return not self.dims

    def as_list(self, width: Optional[int] = None) -> List[int]:
        """Return the dimensions as a list.

        :param width: Pad with zeros to at least this many degrees. The
            zero space is rendered as ``[0]`` when no width is given.
        """
        values = list(self.dims)
        size = max(width or 1, len(values))
        return values + [0] * (size - len(values))


@dataclass(frozen=True)
class BasisElement:
    """A labeled basis vector of a graded vector space."""

    label: str
    degree: int

    @property
    def is_odd(self) -> bool:
        """Whether the element has odd parity."""
        return self.degree % 2 == 1


@dataclass(frozen=True)
class BasisSpace:
    """An explicit ordered basis, each element carrying a degree.

    :param elements: The ordered basis elements. Labels must be distinct.
    """

    elements: Tuple[BasisElement, ...] = ()
    _index: Dict[str, int] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        index: Dict[str, int] = {}
        for position, element in enumerate(elements):
            if element.degree < 0:
                raise errors.InvalidBasis(
                    f"element {element.label!r} has negative degree {element.degree}"
                )
            if element.label in index:
                raise errors.InvalidBasis(f"label {element.label!r} is repeated")
            index[element.label] = position
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_labels(cls, labels: Iterable[str], degree: int = 0) -> "BasisSpace":
        """Create a basis with all elements in the same degree."""
        return cls(tuple(BasisElement(label, degree) for label in labels))

    @classmethod
    def from_dims(cls, dims: GradedDim, prefix: str = "e") -> "BasisSpace":
        """Create a generic basis realising the given dimensions.

        Elements are labeled ``<prefix><degree>_<i>`` and ordered by degree.
        """
        elements = [
            BasisElement(f"{prefix}{degree}_{i}", degree)
            for degree, count in enumerate(dims)
            for i in range(count)
        ]
        return cls(tuple(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[BasisElement]:
        return iter(self.elements)

    def __getitem__(self, position: int) -> BasisElement:
        return self.elements[position]

    def __contains__(self, label: object) -> bool:
        return label in self._index

    @property
    def labels(self) -> Tuple[str, ...]:
        """Return the element labels in basis order."""
        return tuple(element.label for element in self.elements)

    @property
    def dims(self) -> GradedDim:
        """Return the number of basis elements in each degree."""
        counts: Dict[int, int] = {}
        for element in self.elements:
            counts[element.degree] = counts.get(element.degree, 0) + 1
        top = max(counts, default=-1)
        return GradedDim(tuple(counts.get(d, 0) for d in range(top + 1)))

    def index(self, label: str) -> int:
        """Return the position of the element with the given label.

        :raise InvalidBasis: If there is no such element.
        """
        try:
            return self._index[label]
        except KeyError:
            raise errors.InvalidBasis(f"label {label!r} is not in the basis")

    def is_concentrated_in_degree_zero(self) -> bool:
        """Whether every element has degree 0."""
        return all(element.degree == 0 for element in self.elements)


@dataclass(frozen=True)
class SymMonomial:
    """A basis monomial of a super-symmetric power.

    Labels are kept in basis order: ``even_part`` may repeat labels,
    ``odd_part`` never does.
    """

    even_part: Tuple[str, ...]
    odd_part: Tuple[str, ...]
    degree: int

    @property
    def size(self) -> int:
        """Return the number of factors."""
        return len(self.even_part) + len(self.odd_part)

    @property
    def label(self) -> str:
        """Return a printable label, ``1`` for the empty monomial."""
        factors = self.even_part + self.odd_part
        return "*".join(factors) if factors else "1"


def sum_dims(a: GradedDim, b: GradedDim) -> GradedDim:
    """Return the dimensions of a direct sum."""
    size = max(len(a.dims), len(b.dims))
    return GradedDim(tuple(a[i] + b[i] for i in range(size)))


def tensor_dims(a: GradedDim, b: GradedDim) -> GradedDim:
    """Return the dimensions of a graded tensor product (Künneth)."""
    if a.is_zero() or b.is_zero():
        return GradedDim()

    result = [0] * (len(a.dims) + len(b.dims) - 1)
    for p, a_p in enumerate(a.dims):
        for q, b_q in enumerate(b.dims):
            result[p + q] += a_p * b_q
    return GradedDim(tuple(result))


def shift_dims(a: GradedDim, shift: int) -> GradedDim:
    """Move every dimension up by ``shift`` degrees."""
    if shift < 0:
        raise errors.InvalidParameter("shift", shift, message="must be nonnegative")
    if a.is_zero():
        return a
    return GradedDim((0,) * shift + a.dims)


def quotient_dims(big: GradedDim, small: GradedDim) -> GradedDim:
    """Return the dimensions of a quotient by a degreewise injective embedding.

    :raise NegativeQuotient: If ``small`` exceeds ``big`` in some degree.
    """
    size = max(len(big.dims), len(small.dims))
    for degree in range(size):
        if big[degree] < small[degree]:
            raise errors.NegativeQuotient(
                big=big.as_list(), small=small.as_list(), degree=degree
            )
    return GradedDim(tuple(big[i] - small[i] for i in range(size)))


def euler_char(a: GradedDim) -> int:
    """Return the alternating sum of dimensions."""
    return sum(value if degree % 2 == 0 else -value for degree, value in enumerate(a))


def super_sym_dims(k: int, a: GradedDim) -> GradedDim:
    """Return the dimensions of the k-th super-symmetric power.

    Even degrees contribute a symmetric algebra, odd degrees an exterior
    algebra. The result is the coefficient of ``z^k`` in the product of
    ``(1 - z t^i)^(-a_i)`` over even ``i`` and ``(1 + z t^i)^(a_i)`` over
    odd ``i``, read as a polynomial in ``t``.

    :raise InvalidParameter: If ``k`` is negative.
    """
    if k < 0:
        raise errors.InvalidParameter("k", k, message="must be nonnegative")

    series = Poly(1, _z, _t, domain="ZZ")
    for degree, count in enumerate(a):
        if count == 0:
            continue
        if degree % 2 == 0:
            coeffs = {(j, degree * j): comb(count + j - 1, j) for j in range(k + 1)}
        else:
            coeffs = {(j, degree * j): comb(count, j) for j in range(min(count, k) + 1)}
        factor = Poly.from_dict(coeffs, _z, _t, domain="ZZ")
        series = _truncate(series * factor, k)

    result: Dict[int, int] = {}
    for (z_degree, t_degree), coeff in series.terms():
        if z_degree == k:
            result[t_degree] = int(coeff)

    top = max(result, default=-1)
    return GradedDim(tuple(result.get(d, 0) for d in range(top + 1)))


def _truncate(series: Poly, k: int) -> Poly:
    kept = {monom: coeff for monom, coeff in series.terms() if monom[0] <= k}
    if not kept:
        return Poly(0, _z, _t, domain="ZZ")
    return Poly.from_dict(kept, _z, _t, domain="ZZ")


def enumerate_sym_basis(k: int, v: BasisSpace) -> List[SymMonomial]:
    """List the monomial basis of the k-th super-symmetric power of ``v``.

    Monomials are ordered lexicographically by basis position; odd
    elements never repeat.

    :raise InvalidParameter: If ``k`` is negative.
    """
    if k < 0:
        raise errors.InvalidParameter("k", k, message="must be nonnegative")

    monomials: List[SymMonomial] = []
    for positions in itertools.combinations_with_replacement(range(len(v)), k):
        monomial = _monomial_from_positions(positions, v)
        if monomial is not None:
            monomials.append(monomial)

    logger.debug("S^%d of %d elements: %d monomials", k, len(v), len(monomials))
    return monomials


def _monomial_from_positions(
    positions: Sequence[int], v: BasisSpace
) -> Optional[SymMonomial]:
    """Build a monomial from sorted basis positions, None if an odd repeats."""
    even: List[str] = []
    odd: List[str] = []
    degree = 0
    previous = -1
    for position in positions:
        element = v[position]
        if element.is_odd:
            if position == previous:
                return None
            odd.append(element.label)
        else:
            even.append(element.label)
        degree += element.degree
        previous = position
    return SymMonomial(tuple(even), tuple(odd), degree)


def canonicalize(
    labels: Sequence[str], basis: BasisSpace
) -> Tuple[int, Optional[SymMonomial]]:
    """Bring a product of basis elements to canonical form.

    Odd factors are sorted by basis position, picking up the Koszul sign of
    the sorting permutation; even factors commute freely.

    :return: The sign and the canonical monomial, or ``(0, None)`` if an
        odd factor repeats.
    """
    positions = [basis.index(label) for label in labels]
    odd_positions = [p for p in positions if basis[p].is_odd]
    if len(set(odd_positions)) != len(odd_positions):
        return 0, None

    inversions = sum(
        1
        for i in range(len(odd_positions))
        for j in range(i + 1, len(odd_positions))
        if odd_positions[i] > odd_positions[j]
    )
    sign = -1 if inversions % 2 else 1

    return sign, _monomial_from_positions(sorted(positions), basis)


def tensor_basis(a: BasisSpace, b: BasisSpace) -> BasisSpace:
    """Return the product basis of ``a ⊗ b`` in row-major order."""
    return BasisSpace(
        tuple(
            BasisElement(f"{x.label}|{y.label}", x.degree + y.degree)
            for x in a
            for y in b
        )
    )
