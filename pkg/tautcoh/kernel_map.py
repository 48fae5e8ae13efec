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

"""Global sections of twisted symmetric squares via an explicit kernel.

Sections of ``S^2 L^[n] ⊗ D_A`` split as ``S^{n-2}H0(A) ⊗ S^2 H0(L⊗A)``
plus the kernel ``K0`` of the map

    S^{n-1}H0(A) ⊗ H0(L²⊗A) -> S^{n-2}H0(A) ⊗ H0(L²⊗A²)

sending ``u^{n-1} ⊗ α`` to ``(n-1) u^{n-2} ⊗ uα``. On the monomial basis
the map is the derivation removing one factor at a time and multiplying
it into ``α``.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from tautcoh import errors
from tautcoh.decomposition import Decomposition, Provenance, Summand
from tautcoh.graded import (
    BasisElement,
    BasisSpace,
    GradedDim,
    SymMonomial,
    canonicalize,
    enumerate_sym_basis,
    super_sym_dims,
    tensor_basis,
    tensor_dims,
)
from tautcoh.linalg import LinearMapData, RationalMatrix, rank
from tautcoh.slots import Slot
from tautcoh.surfaces.models import MultTable, SurfaceData

logger = logging.getLogger(__name__)

KERNEL_LABEL = "K0"


@dataclass(frozen=True)
class KernelReport:
    """Dimensions of an explicit linear map and its kernel."""

    linear_map: LinearMapData
    kernel_dim: int
    domain_dim: int
    codomain_dim: int
    rank: int

    def __post_init__(self):
        if self.kernel_dim != self.domain_dim - self.rank:
            raise errors.InvalidLinearMap("kernel dimension disagrees with rank")
        if self.rank > min(self.domain_dim, self.codomain_dim):
            raise errors.InvalidLinearMap("rank exceeds the matrix size")

    @classmethod
    def from_map(cls, linear_map: LinearMapData) -> "KernelReport":
        """Compute the rank and kernel dimension of a map."""
        map_rank = rank(linear_map.matrix)
        domain_dim = len(linear_map.domain)
        return cls(
            linear_map=linear_map,
            kernel_dim=domain_dim - map_rank,
            domain_dim=domain_dim,
            codomain_dim=len(linear_map.codomain),
            rank=map_rank,
        )


def _monomial_space(monomials: Sequence[SymMonomial]) -> BasisSpace:
    return BasisSpace(tuple(BasisElement(m.label, m.degree) for m in monomials))


def _require_degree_zero(name: str, basis: BasisSpace) -> None:
    if not basis.is_concentrated_in_degree_zero():
        raise errors.BadDegreeSupport(
            name=name, dims=basis.dims.as_list(), max_degree=0
        )


def build_map_2515(
    n: int, v: BasisSpace, w: BasisSpace, m: BasisSpace, mu: MultTable
) -> LinearMapData:
    """Return the matrix of ``S^{n-1}V ⊗ W -> S^{n-2}V ⊗ M``.

    A basis monomial ``u_1 ... u_{n-1} ⊗ α`` maps to the sum over positions
    ``p`` of ``u_1 ... û_p ... u_{n-1} ⊗ μ(u_p, α)``. The remaining factors are
    brought to canonical form, carrying their Koszul sign. Domain and codomain
    bases are the tensor bases of the lexicographic monomial bases with
    ``W`` and ``M``.

    :raise InvalidParameter: If ``n < 2``.
    :raise BadDegreeSupport: If a basis has elements of positive degree.
    :raise BasisMismatch: If ``mu`` is not a product ``V x W -> M``.
    """
    if n < 2:
        raise errors.InvalidParameter("n", n, message="must be at least 2")

    for name, basis in (("V", v), ("W", w), ("M", m)):
        _require_degree_zero(name, basis)

    for name, expected, actual in (
        ("left", v, mu.left),
        ("right", w, mu.right),
        ("target", m, mu.target),
    ):
        if expected != actual:
            raise errors.BasisMismatch(f"the {name} basis of the product differs")

    sources = enumerate_sym_basis(n - 1, v)
    targets = enumerate_sym_basis(n - 2, v)
    target_index: Dict[SymMonomial, int] = {t: i for i, t in enumerate(targets)}

    domain = tensor_basis(_monomial_space(sources), w)
    codomain = tensor_basis(_monomial_space(targets), m)

    cells: Dict[Tuple[int, int], Fraction] = {}
    for s, source in enumerate(sources):
        factors = source.even_part
        for p, factor in enumerate(factors):
            sign, remainder = canonicalize(factors[:p] + factors[p + 1 :], v)
            if remainder is None:
                continue
            rest = target_index[remainder]
            i = v.index(factor)
            for j in range(len(w)):
                col = s * len(w) + j
                for k, value in mu.product(i, j):
                    row = rest * len(m) + k
                    cells[(row, col)] = (
                        cells.get((row, col), Fraction(0)) + sign * value
                    )

    rows = [[Fraction(0)] * len(domain) for _ in range(len(codomain))]
    for (row, col), value in cells.items():
        rows[row][col] = value

    logger.debug(
        "map for n=%d: %d x %d, %d nonzero entries",
        n,
        len(codomain),
        len(domain),
        sum(1 for value in cells.values() if value),
    )
    return LinearMapData(
        matrix=RationalMatrix.from_rows(rows, cols=len(domain)),
        domain=domain,
        codomain=codomain,
    )


def power_vector(
    k: int, coeffs: Sequence[Fraction], basis: BasisSpace
) -> Tuple[Fraction, ...]:
    """Return the coordinates of ``u^k`` for ``u = Σ coeffs[i] basis[i]``.

    Coordinates refer to ``enumerate_sym_basis(k, basis)``; each monomial
    gets its multinomial coefficient times the matching product of
    coefficients.

    :raise BadDegreeSupport: If the basis has elements of positive degree.
    """
    _require_degree_zero("basis", basis)
    if len(coeffs) != len(basis):
        raise errors.InvalidParameter(
            "coeffs", list(coeffs), message=f"expected {len(basis)} coordinates"
        )

    result: List[Fraction] = []
    for monomial in enumerate_sym_basis(k, basis):
        multiplicities = Counter(monomial.even_part)
        value = Fraction(factorial(k))
        for label, power in multiplicities.items():
            coeff = Fraction(coeffs[basis.index(label)])
            value = value / factorial(power) * coeff**power
        result.append(value)
    return tuple(result)


def kron(x: Sequence[Fraction], y: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Return the coordinates of ``x ⊗ y`` in a row-major tensor basis."""
    return tuple(Fraction(a) * Fraction(b) for a in x for b in y)


def twisted_kernel(n: int, surface: SurfaceData) -> KernelReport:
    """Compute the kernel of the section map of a surface.

    :raise MissingSlot: If a needed slot is missing.
    :raise MissingBasis: If a needed slot has no section basis.
    :raise MissingMultTable: If the product ``A x L2A -> L2A2`` is missing.
    """
    linear_map = build_map_2515(
        n,
        surface.basis(Slot.A),
        surface.basis(Slot.L2A),
        surface.basis(Slot.L2A2),
        surface.mult(Slot.A, Slot.L2A, Slot.L2A2),
    )
    return KernelReport.from_map(linear_map)


def sections_s2_twisted(
    n: int, surface: SurfaceData
) -> Tuple[Decomposition, KernelReport]:
    """Return global sections of ``S^2 L^[n] ⊗ D_A`` and the kernel report.

    :raise InvalidParameter: If ``n < 2``.
    """
    if n < 2:
        raise errors.InvalidParameter("n", n, message="must be at least 2")

    h_a = GradedDim.of(surface.h(Slot.A)[0])
    h_la = GradedDim.of(surface.h(Slot.LA)[0])
    canonical = tensor_dims(super_sym_dims(n - 2, h_a), super_sym_dims(2, h_la))

    report = twisted_kernel(n, surface)
    logger.debug(
        "sections on %s for n=%d: canonical %s, kernel %d",
        surface.name,
        n,
        canonical.as_list(),
        report.kernel_dim,
    )

    decomposition = Decomposition(
        summands=(
            Summand(f"S^{n - 2}H0(A)⊗S^2H0(LA)", canonical),
            Summand(KERNEL_LABEL, GradedDim.of(report.kernel_dim)),
        ),
        provenance=Provenance.S2_SECTIONS_TWISTED,
    )
    return decomposition, report
