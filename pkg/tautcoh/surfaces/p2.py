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

"""Line bundles on the projective plane with monomial bases."""

import functools
import logging
from math import comb
from typing import Dict, List, Tuple

from tautcoh import errors
from tautcoh.graded import BasisSpace, GradedDim
from tautcoh.slots import Slot
from tautcoh.surfaces.models import LineBundleData, MultTable, SurfaceData

logger = logging.getLogger(__name__)

_VARIABLES = ("U", "V", "W")

Exponents = Tuple[int, int, int]


@functools.lru_cache(maxsize=None)
def monomials(d: int) -> Tuple[Exponents, ...]:
    """Return the exponents of degree-d monomials in graded lex order.

    The order is ``U^d, U^(d-1)V, U^(d-1)W, ..., W^d``; there are none for
    negative ``d``.
    """
    return tuple(
        (a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)
    )


def monomial_label(exponents: Exponents) -> str:
    """Return a label such as ``U^2V``, or ``1`` for the constant."""
    parts = []
    for variable, exponent in zip(_VARIABLES, exponents):
        if exponent == 1:
            parts.append(variable)
        elif exponent > 1:
            parts.append(f"{variable}^{exponent}")
    return "".join(parts) or "1"


def h0(d: int) -> int:
    """Return the dimension of global sections of O(d)."""
    return comb(d + 2, 2) if d >= 0 else 0


def h2(d: int) -> int:
    """Return the top cohomology dimension of O(d), dual to sections of O(-3-d)."""
    return comb(-d - 1, 2) if d <= -3 else 0


def p2_basis(d: int) -> BasisSpace:
    """Return the monomial basis of sections of O(d)."""
    return BasisSpace.from_labels(monomial_label(m) for m in monomials(d))


def p2_line_bundle(d: int) -> LineBundleData:
    """Return the cohomology of O(d) on the projective plane."""
    return LineBundleData(
        name=f"O({d})",
        h=GradedDim.of(h0(d), 0, h2(d)),
        basis=p2_basis(d),
    )


def p2_mult_table(a: int, b: int) -> MultTable:
    """Return the monomial product of sections of O(a) and O(b).

    :raise InvalidParameter: If a degree is negative.
    """
    for name, value in (("a", a), ("b", b)):
        if value < 0:
            raise errors.InvalidParameter(name, value, message="must be nonnegative")

    target_index: Dict[Exponents, int] = {m: k for k, m in enumerate(monomials(a + b))}
    entries: List[Tuple[int, int, int, int]] = []
    for i, x in enumerate(monomials(a)):
        for j, y in enumerate(monomials(b)):
            product = (x[0] + y[0], x[1] + y[1], x[2] + y[2])
            entries.append((i, j, target_index[product], 1))

    return MultTable.from_entries(p2_basis(a), p2_basis(b), p2_basis(a + b), entries)


def p2_surface(d: int, e: int) -> SurfaceData:
    """Return the projective plane with ``L = O(d)`` and ``A = O(e)``.

    Every slot carries its monomial basis, and the product of sections of
    ``A`` and ``L2A`` is always attached; it is empty when a factor has no
    sections.
    """
    degrees = {
        Slot.O: 0,
        Slot.L: d,
        Slot.L2: 2 * d,
        Slot.A: e,
        Slot.LA: d + e,
        Slot.L2A: 2 * d + e,
        Slot.L2A2: 2 * d + 2 * e,
    }
    bundles = {slot: p2_line_bundle(degree) for slot, degree in degrees.items()}

    if e >= 0 and 2 * d + e >= 0:
        product = p2_mult_table(e, 2 * d + e)
    else:
        product = MultTable(p2_basis(e), p2_basis(2 * d + e), p2_basis(2 * d + 2 * e))
    mults = {(Slot.A, Slot.L2A, Slot.L2A2): product}

    logger.debug("projective plane with L=O(%d), A=O(%d)", d, e)
    return SurfaceData(
        name=f"P2(d={d},e={e})",
        bundles=bundles,
        mults=mults,
        trivial_twist=(e == 0),
    )
