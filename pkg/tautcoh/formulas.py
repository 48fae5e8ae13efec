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

"""Cohomology of symmetric powers of tautological bundles."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from tautcoh import errors
from tautcoh.decomposition import Decomposition, Provenance, Summand
from tautcoh.graded import (
    GradedDim,
    euler_char,
    quotient_dims,
    shift_dims,
    sum_dims,
    super_sym_dims,
    tensor_dims,
)
from tautcoh.kernel_map import twisted_kernel
from tautcoh.slots import Slot
from tautcoh.surfaces.models import SURFACE_MAX_DEGREE, SurfaceData

logger = logging.getLogger(__name__)

GROUND_FIELD = GradedDim.of(1)

RESIDUAL_LABEL = "K*"


def _check_support(name: str, dims: GradedDim) -> None:
    if dims.top_degree > SURFACE_MAX_DEGREE:
        raise errors.BadDegreeSupport(
            name=name, dims=dims.as_list(), max_degree=SURFACE_MAX_DEGREE
        )


def _check_structure_sheaf(h_o: GradedDim) -> None:
    _check_support("hO", h_o)
    if h_o[0] != 1:
        raise errors.InvalidDims(
            f"h0 must be 1 for a connected surface, got {h_o.as_list()}",
            slot=Slot.O.value,
        )


def _check_n(n: int, allowed: Optional[Sequence[int]] = None) -> None:
    if n < 2:
        raise errors.InvalidParameter("n", n, message="must be at least 2")
    if allowed and n not in allowed:
        raise errors.InvalidParameter(
            "n", n, message="must be one of " + ", ".join(str(x) for x in allowed)
        )


def coh_sk_taut(
    n: int, k: int, h_a: GradedDim, h_la: Optional[GradedDim] = None
) -> Decomposition:
    """Return the cohomology of ``S^k L^[n] ⊗ D_A`` for ``k`` in 0, 1.

    It is ``S^{n-k}H*(A) ⊗ S^k H*(L⊗A)``; ``h_la`` is ignored for ``k = 0``.

    :raise InvalidParameter: If ``n < 2`` or ``k`` is not 0 or 1.
    :raise BadDegreeSupport: If inputs live beyond degree 2.
    """
    _check_n(n)
    if k not in (0, 1):
        raise errors.InvalidParameter("k", k, message="must be 0 or 1")

    _check_support("hA", h_a)
    if k == 1:
        if h_la is None:
            raise errors.InvalidParameter("hLA", None, message="required for k=1")
        _check_support("hLA", h_la)
        second = h_la
    else:
        second = GROUND_FIELD

    dims = tensor_dims(super_sym_dims(n - k, h_a), second)
    return Decomposition(
        summands=(Summand(f"S^{n - k}H*(A)⊗S^{k}H*(LA)", dims),),
        provenance=Provenance.SK_TAUT,
    )


def coh_s2_n2(h_o: GradedDim, h_l: GradedDim, h_l2: GradedDim) -> Decomposition:
    """Return the cohomology of ``S^2 L^[2]``.

    It splits as ``S^2 H*(L) ⊕ (H*(O)/C) ⊗ H*(L²)``.
    """
    _check_structure_sheaf(h_o)
    _check_support("hL", h_l)
    _check_support("hL2", h_l2)

    return Decomposition(
        summands=(
            Summand("S^2H*(L)", super_sym_dims(2, h_l)),
            Summand(
                "(H*(O)/C)⊗H*(L2)",
                tensor_dims(quotient_dims(h_o, GROUND_FIELD), h_l2),
            ),
        ),
        provenance=Provenance.S2_N2,
    )


def coh_s2_n3(h_o: GradedDim, h_l: GradedDim, h_l2: GradedDim) -> Decomposition:
    """Return the cohomology of ``S^2 L^[3]``.

    It splits as ``H*(O) ⊗ S^2 H*(L) ⊕ (S^2 H*(O)/H*(O)) ⊗ H*(L²)``.

    :raise NegativeQuotient: If ``S^2 H*(O)`` does not dominate ``H*(O)``.
    """
    _check_structure_sheaf(h_o)
    _check_support("hL", h_l)
    _check_support("hL2", h_l2)

    return Decomposition(
        summands=(
            Summand("H*(O)⊗S^2H*(L)", tensor_dims(h_o, super_sym_dims(2, h_l))),
            Summand(
                "(S^2H*(O)/H*(O))⊗H*(L2)",
                tensor_dims(quotient_dims(super_sym_dims(2, h_o), h_o), h_l2),
            ),
        ),
        provenance=Provenance.S2_N3,
    )


def coh_s2_conjecture(
    n: int, h_o: GradedDim, h_l: GradedDim, h_l2: GradedDim
) -> Decomposition:
    """Return the conjectural cohomology of ``S^2 L^[n]`` for any ``n``.

    The summands are ``S^{n-2}H*(O) ⊗ S^2 H*(L)`` and
    ``(S^{n-1}H*(O)/S^{n-2}H*(O)) ⊗ H*(L²)``. The result is flagged as
    conjectural even where it agrees with a proved formula.

    :raise NegativeQuotient: If ``S^{n-1}H*(O)`` does not dominate
        ``S^{n-2}H*(O)`` in some degree.
    """
    _check_n(n)
    _check_structure_sheaf(h_o)
    _check_support("hL", h_l)
    _check_support("hL2", h_l2)

    lower = super_sym_dims(n - 2, h_o)
    upper = super_sym_dims(n - 1, h_o)
    return Decomposition(
        summands=(
            Summand(
                f"S^{n - 2}H*(O)⊗S^2H*(L)",
                tensor_dims(lower, super_sym_dims(2, h_l)),
            ),
            Summand(
                f"(S^{n - 1}H*(O)/S^{n - 2}H*(O))⊗H*(L2)",
                tensor_dims(quotient_dims(upper, lower), h_l2),
            ),
        ),
        provenance=Provenance.S2_CONJECTURE,
    )


def euler_K_twisted(  # pylint: disable=invalid-name
    n: int, h_a: GradedDim, h_l2a: GradedDim, h_l2a2: GradedDim
) -> int:
    """Return the Euler characteristic of the residual ``K*``.

    ``K*`` is the kernel part of the long exact sequence
    ``K^i -> middle^i -> right^i -> K^{i+1}``, so its Euler characteristic
    is ``χ(middle) - χ(right)``.

    :raise InvalidParameter: If ``n`` is not 2 or 3.
    """
    _check_n(n, allowed=(2, 3))
    for name, dims in (("hA", h_a), ("hL2A", h_l2a), ("hL2A2", h_l2a2)):
        _check_support(name, dims)

    return euler_char(super_sym_dims(n - 1, h_a)) * euler_char(h_l2a) - euler_char(
        super_sym_dims(n - 2, h_a)
    ) * euler_char(h_l2a2)


@dataclass(frozen=True)
class LesTerms:
    """Cohomology of the terms of the sequence defining ``S^2 L^[n]``.

    ``0 -> S^2 L^[n] -> D_2 ⊕ (L²)^[n] -> boundary -> 0``, twisted by ``A``
    when requested.
    """

    n: int
    twisted: bool
    d2: GradedDim
    line: GradedDim
    boundary: GradedDim

    @property
    def conjectural(self) -> bool:
        """Whether the term formulas are conjectural in positive degrees."""
        return self.n >= 4

    @property
    def euler(self) -> int:
        """Return the Euler characteristic the sequence forces on ``S^2 L^[n]``."""
        return euler_char(self.d2) + euler_char(self.line) - euler_char(self.boundary)


def les_terms(n: int, surface: SurfaceData, twisted: bool = False) -> LesTerms:
    """Return the cohomology of the terms of the defining exact sequence.

    ``D_2 = S^{n-2}H*(A) ⊗ S^2 H*(L⊗A)``,
    ``(L²)^[n] = S^{n-1}H*(A) ⊗ H*(L²⊗A)`` and the boundary term is
    ``S^{n-2}H*(A) ⊗ H*(L²⊗A²)``, with ``A = O`` when untwisted.

    :raise MissingSlot: If the surface lacks a needed slot.
    """
    _check_n(n)
    if twisted:
        a, la, l2a, l2a2 = Slot.A, Slot.LA, Slot.L2A, Slot.L2A2
    else:
        a, la, l2a, l2a2 = Slot.O, Slot.L, Slot.L2, Slot.L2

    h_a = surface.h(a)
    terms = LesTerms(
        n=n,
        twisted=twisted,
        d2=tensor_dims(super_sym_dims(n - 2, h_a), super_sym_dims(2, surface.h(la))),
        line=tensor_dims(super_sym_dims(n - 1, h_a), surface.h(l2a)),
        boundary=tensor_dims(super_sym_dims(n - 2, h_a), surface.h(l2a2)),
    )
    logger.debug(
        "sequence terms on %s (n=%d, twisted=%s): %s, %s, %s",
        surface.name,
        n,
        twisted,
        terms.d2.as_list(),
        terms.line.as_list(),
        terms.boundary.as_list(),
    )
    return terms


@dataclass(frozen=True)
class TwistedBounds:
    """The twisted decomposition with its residual ``K*`` constrained.

    :param decomposition: The canonical summand, followed by ``K*`` when
        the residual is determined.
    :param middle: The middle term of the sequence containing ``K*``.
    :param right: The right term of the sequence containing ``K*``.
    :param residual_euler: The Euler characteristic of ``K*``.
    :param upper: Degreewise upper bounds ``middle^i + right^{i-1}``.
    :param lower0: Lower bound for ``K^0``.
    :param kernel0: The exact ``K^0`` from the section map, if computable.
    :param residual: The exact ``K*`` when it is determined.
    """

    decomposition: Decomposition
    middle: GradedDim
    right: GradedDim
    residual_euler: int
    upper: GradedDim
    lower0: int
    kernel0: Optional[int] = None
    residual: Optional[GradedDim] = None

    @property
    def exact(self) -> bool:
        """Whether the residual is determined degreewise."""
        return self.residual is not None


def coh_s2_twisted_bounds(n: int, surface: SurfaceData) -> TwistedBounds:
    """Return the twisted decomposition for ``n`` in 2, 3 with bounds on ``K*``.

    The canonical summand ``S^{n-2}H*(A) ⊗ S^2 H*(L⊗A)`` is exact. The
    residual is reported by its Euler characteristic and bounds, and
    exactly, as a second summand, when the twist is trivial or the sequence
    collapses to degree 0.

    :raise InvalidParameter: If ``n`` is not 2 or 3.
    :raise MissingSlot: If the surface lacks a needed slot.
    """
    _check_n(n, allowed=(2, 3))
    terms = les_terms(n, surface, twisted=True)
    middle, right = terms.line, terms.boundary

    residual_euler = euler_K_twisted(
        n, surface.h(Slot.A), surface.h(Slot.L2A), surface.h(Slot.L2A2)
    )
    upper = sum_dims(middle, shift_dims(right, 1))
    lower0 = max(0, middle[0] - right[0])

    kernel0 = _try_kernel0(n, surface)
    residual = None
    if surface.trivial_twist:
        residual = _untwisted_residual(n, surface)
    elif kernel0 is not None:
        if middle.top_degree <= 0 and right.top_degree <= 0:
            residual = GradedDim.of(kernel0, kernel0 - residual_euler)
        else:
            upper = GradedDim((kernel0, *upper.as_list()[1:]))
            lower0 = kernel0

    if residual is not None:
        upper = residual
        lower0 = residual[0]

    provenance = Provenance.S2_TWISTED_N2 if n == 2 else Provenance.S2_TWISTED_N3
    summands = [Summand(f"S^{n - 2}H*(A)⊗S^2H*(LA)", terms.d2)]
    if residual is not None:
        summands.append(Summand(RESIDUAL_LABEL, residual))
    decomposition = Decomposition(summands=tuple(summands), provenance=provenance)
    return TwistedBounds(
        decomposition=decomposition,
        middle=middle,
        right=right,
        residual_euler=residual_euler,
        upper=upper,
        lower0=lower0,
        kernel0=kernel0,
        residual=residual,
    )


def _try_kernel0(n: int, surface: SurfaceData) -> Optional[int]:
    try:
        return twisted_kernel(n, surface).kernel_dim
    except (errors.MissingBasis, errors.MissingMultTable) as err:
        logger.debug("no exact kernel on %s: %s", surface.name, err.brief)
        return None


def _untwisted_residual(n: int, surface: SurfaceData) -> GradedDim:
    h_o = surface.h(Slot.O)
    if n == 2:
        quotient = quotient_dims(h_o, GROUND_FIELD)
    else:
        quotient = quotient_dims(super_sym_dims(2, h_o), h_o)
    return tensor_dims(quotient, surface.h(Slot.L2))
