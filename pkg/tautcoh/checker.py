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

"""Consistency checks of the formulas against independent computations.

Every check is deterministic and compares exact values. Checks run in the
calling thread, one after the other.
"""

import enum
import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from tautcoh import errors
from tautcoh.formulas import (
    coh_s2_conjecture,
    coh_s2_n2,
    coh_s2_n3,
    coh_s2_twisted_bounds,
    euler_K_twisted,
    les_terms,
)
from tautcoh.graded import (
    BasisSpace,
    GradedDim,
    enumerate_sym_basis,
    euler_char,
    quotient_dims,
    super_sym_dims,
)
from tautcoh.kernel_map import (
    build_map_2515,
    kron,
    power_vector,
    sections_s2_twisted,
    twisted_kernel,
)
from tautcoh.linalg import kernel_basis, rank
from tautcoh.slots import Slot
from tautcoh.surfaces import (
    SurfaceData,
    p2_line_bundle,
    p2_mult_table,
    p2_surface,
    preset_surface,
)
from tautcoh.surfaces.p2 import p2_basis

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42


@dataclass(frozen=True)
class CheckOutcome:
    """The result of a single check.

    :param name: The check name and its parameters.
    :param passed: Whether the expected and actual values agree exactly.
    :param details: Expected and actual values, and the first degree where
        they differ.
    """

    name: str
    passed: bool
    details: str


@enum.unique
class Suite(str, enum.Enum):
    """Named collections of checks."""

    DEFAULT = "default"
    FULL = "full"

    def __repr__(self):
        return f"{self.__class__.__name__}.{self.name}"


@dataclass(frozen=True)
class _SuiteBounds:
    sym_total: int
    sym_k: int
    samples: int
    n_max: int
    d_max: int
    power_samples: int
    p2_degrees: range


_DEFAULT_BOUNDS = _SuiteBounds(
    sym_total=6,
    sym_k=4,
    samples=100,
    n_max=6,
    d_max=3,
    power_samples=5,
    p2_degrees=range(-6, 7),
)

_FULL_BOUNDS = _SuiteBounds(
    sym_total=7,
    sym_k=5,
    samples=500,
    n_max=8,
    d_max=4,
    power_samples=20,
    p2_degrees=range(-9, 10),
)

_TWISTED_SLOTS = (Slot.A, Slot.LA, Slot.L2A, Slot.L2A2)


def compare_dims(name: str, expected: GradedDim, actual: GradedDim) -> CheckOutcome:
    """Compare two dimension profiles degreewise."""
    width = max(len(expected.dims), len(actual.dims), 1)
    details = f"expected {expected.as_list(width)}, got {actual.as_list(width)}"
    for degree in range(width):
        if expected[degree] != actual[degree]:
            details += f"; first difference in degree {degree}"
            return CheckOutcome(name, False, details)
    return CheckOutcome(name, True, details)


def compare_values(name: str, expected: object, actual: object) -> CheckOutcome:
    """Compare two exact values."""
    return CheckOutcome(name, expected == actual, f"expected {expected}, got {actual}")


def _dims_with_support(max_degree: int, max_total: int) -> Iterable[GradedDim]:
    for dims in itertools.product(range(max_total + 1), repeat=max_degree + 1):
        if sum(dims) <= max_total:
            yield GradedDim(dims)


def check_sym_enumeration(
    max_total_dim: int, max_k: int, max_degree: int = 4
) -> List[CheckOutcome]:
    """Compare basis enumeration with the generating function.

    One outcome per dimension profile supported in ``0..max_degree`` with
    total at most ``max_total_dim``, and per ``k`` up to ``max_k``.
    """
    for name, value in (("max_total_dim", max_total_dim), ("max_k", max_k)):
        if value < 0:
            raise errors.InvalidParameter(name, value, message="must be nonnegative")

    outcomes = []
    for dims in _dims_with_support(max_degree, max_total_dim):
        basis = BasisSpace.from_dims(dims)
        for k in range(max_k + 1):
            counts = [0] * (k * max(dims.top_degree, 0) + 1)
            for monomial in enumerate_sym_basis(k, basis):
                counts[monomial.degree] += 1
            outcomes.append(
                compare_dims(
                    f"sym_enumeration[{dims.as_list()},k={k}]",
                    super_sym_dims(k, dims),
                    GradedDim(tuple(counts)),
                )
            )
    return outcomes


def _random_dims(rng: random.Random, first: Optional[int] = None) -> GradedDim:
    values = [rng.randint(0, 4) for _ in range(3)]
    if first is not None:
        values[0] = first
    return GradedDim(tuple(values))


def check_conjecture_specialization(
    samples: int, seed: int = DEFAULT_SEED
) -> List[CheckOutcome]:
    """Compare the conjectural formula with the theorems at n=2 and n=3.

    Inputs are random with entries in ``0..4`` and ``h0(O) = 1``.
    """
    if samples < 1:
        raise errors.InvalidParameter("samples", samples, message="must be positive")

    rng = random.Random(seed)
    outcomes = []
    for sample in range(samples):
        h_o = _random_dims(rng, first=1)
        h_l = _random_dims(rng)
        h_l2 = _random_dims(rng)
        for n, theorem in ((2, coh_s2_n2), (3, coh_s2_n3)):
            outcomes.append(
                compare_dims(
                    f"conjecture_specialization[{sample},n={n}]",
                    theorem(h_o, h_l, h_l2).total,
                    coh_s2_conjecture(n, h_o, h_l, h_l2).total,
                )
            )
    return outcomes


def check_twisted_reduces_trivial(n_max: int, d_max: int) -> List[CheckOutcome]:
    """Check that the kernel vanishes on the plane with trivial twist."""
    if n_max < 2:
        raise errors.InvalidParameter("n_max", n_max, message="must be at least 2")
    if d_max < 0:
        raise errors.InvalidParameter("d_max", d_max, message="must be nonnegative")

    outcomes = []
    for n in range(2, n_max + 1):
        for d in range(d_max + 1):
            decomposition, report = sections_s2_twisted(n, p2_surface(d, 0))
            expected = comb(comb(d + 2, 2) + 1, 2)
            actual = (report.kernel_dim, decomposition.total[0])
            outcomes.append(
                compare_values(
                    f"twisted_reduces_trivial[n={n},d={d}]", (0, expected), actual
                )
            )
    return outcomes


def check_two_routes_n2(d_max: int, e_max: int) -> List[CheckOutcome]:
    """Compare the explicit kernel with the Euler characteristic route at n=2."""
    for name, value in (("d_max", d_max), ("e_max", e_max)):
        if value < 0:
            raise errors.InvalidParameter(name, value, message="must be nonnegative")

    outcomes = []
    for d in range(d_max + 1):
        for e in range(e_max + 1):
            surface = p2_surface(d, e)
            expected = euler_K_twisted(
                2, surface.h(Slot.A), surface.h(Slot.L2A), surface.h(Slot.L2A2)
            )
            actual = twisted_kernel(2, surface).kernel_dim
            outcomes.append(
                compare_values(f"two_routes_n2[d={d},e={e}]", expected, actual)
            )
    return outcomes


def check_les_euler(surfaces: Sequence[SurfaceData]) -> List[CheckOutcome]:
    """Compare the theorems with the Euler characteristic of the exact sequence.

    For n=2 the theorem is also compared with ``χ(S^2 H*(L)) + χ(H*(O)/C) χ(L²)``.
    """
    outcomes = []
    for surface in surfaces:
        h_o, h_l, h_l2 = surface.h(Slot.O), surface.h(Slot.L), surface.h(Slot.L2)

        theorem = coh_s2_n2(h_o, h_l, h_l2).euler
        direct = euler_char(super_sym_dims(2, h_l)) + euler_char(
            quotient_dims(h_o, GradedDim.of(1))
        ) * euler_char(h_l2)
        sequence = les_terms(2, surface).euler
        outcomes.append(
            compare_values(
                f"les_euler[{surface.name},n=2]", (theorem, theorem), (direct, sequence)
            )
        )

        theorem = coh_s2_n3(h_o, h_l, h_l2).euler
        outcomes.append(
            compare_values(
                f"les_euler[{surface.name},n=3]", theorem, les_terms(3, surface).euler
            )
        )
    return outcomes


def check_les_exactness(surfaces: Sequence[SurfaceData]) -> List[CheckOutcome]:
    """Check ``χ(K) - χ(middle) + χ(right) = 0`` for the twisted sequences.

    When ``K*`` is known exactly its Euler characteristic must match too.
    """
    outcomes = []
    for surface in surfaces:
        for n in (2, 3):
            bounds = coh_s2_twisted_bounds(n, surface)
            alternating = (
                bounds.residual_euler
                - euler_char(bounds.middle)
                + euler_char(bounds.right)
            )
            expected = [0]
            actual = [alternating]
            if bounds.residual is not None:
                expected.append(bounds.residual_euler)
                actual.append(euler_char(bounds.residual))
            outcomes.append(
                compare_values(f"les_exactness[{surface.name},n={n}]", expected, actual)
            )
    return outcomes


def check_koszul_anchor() -> List[CheckOutcome]:
    """Check the linear syzygies of the plane: 3 relations among 9 products."""
    matrix = p2_mult_table(1, 1).as_matrix()
    vectors = kernel_basis(matrix)
    killed = all(not any(matrix.apply(v)) for v in vectors)
    return [
        compare_values("koszul_anchor[kernel]", 3, len(vectors)),
        compare_values("koszul_anchor[rank]", 6, rank(matrix)),
        compare_values("koszul_anchor[killed]", True, killed),
    ]


def check_pure_power(
    samples: int, seed: int = DEFAULT_SEED, n_values: Iterable[int] = range(2, 6)
) -> List[CheckOutcome]:
    """Check that ``u^{n-1} ⊗ α`` maps to ``(n-1) u^{n-2} ⊗ uα``.

    Sections ``u`` and ``α`` are random integer combinations of monomials
    on the plane.
    """
    if samples < 1:
        raise errors.InvalidParameter("samples", samples, message="must be positive")

    rng = random.Random(seed)
    outcomes = []
    for n in n_values:
        for sample in range(samples):
            a, b = rng.randint(0, 1), rng.randint(0, 2)
            v, w = p2_basis(a), p2_basis(b)
            mu = p2_mult_table(a, b)
            u = [Fraction(rng.randint(-3, 3)) for _ in range(len(v))]
            alpha = [Fraction(rng.randint(-3, 3)) for _ in range(len(w))]

            linear_map = build_map_2515(n, v, w, mu.target, mu)
            image = linear_map.apply(kron(power_vector(n - 1, u, v), alpha))
            expected = tuple(
                (n - 1) * x
                for x in kron(power_vector(n - 2, u, v), mu.multiply(u, alpha))
            )
            outcomes.append(
                CheckOutcome(
                    f"pure_power[n={n},{sample},a={a},b={b}]",
                    image == expected,
                    f"{sum(1 for x, y in zip(image, expected) if x != y)} "
                    f"of {len(expected)} coordinates differ",
                )
            )
    return outcomes


def check_p2_model(
    d_range: Iterable[int] = range(-6, 7), ab_max: int = 3, assoc_max: int = 2
) -> List[CheckOutcome]:
    """Check duality, Riemann-Roch, surjectivity and associativity on the plane."""
    outcomes = []
    for d in d_range:
        h = p2_line_bundle(d).h
        dual = p2_line_bundle(-3 - d).h
        outcomes.append(compare_values(f"p2_serre_duality[d={d}]", dual[2], h[0]))
        outcomes.append(
            compare_values(
                f"p2_riemann_roch[d={d}]", (d + 1) * (d + 2) // 2, euler_char(h)
            )
        )

    for a in range(ab_max + 1):
        for b in range(ab_max + 1):
            outcomes.append(
                compare_values(
                    f"p2_surjectivity[a={a},b={b}]",
                    comb(a + b + 2, 2),
                    rank(p2_mult_table(a, b).as_matrix()),
                )
            )

    for a, b, c in itertools.product(range(assoc_max + 1), repeat=3):
        outcomes.append(
            compare_values(
                f"p2_associativity[{a},{b},{c}]", True, _associative(a, b, c)
            )
        )
    return outcomes


def _unit_vectors(size: int) -> List[List[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def _associative(a: int, b: int, c: int) -> bool:
    ab, bc = p2_mult_table(a, b), p2_mult_table(b, c)
    ab_c, a_bc = p2_mult_table(a + b, c), p2_mult_table(a, b + c)
    for x in _unit_vectors(len(ab.left)):
        for y in _unit_vectors(len(ab.right)):
            xy = ab.multiply(x, y)
            for z in _unit_vectors(len(bc.right)):
                if ab_c.multiply(xy, z) != a_bc.multiply(x, bc.multiply(y, z)):
                    return False
    return True


def sample_surfaces() -> List[SurfaceData]:
    """Return the surfaces the Euler checks run on by default."""
    return [
        preset_surface(
            "rational_qpg0",
            {Slot.L: GradedDim.of(3, 0, 0), Slot.L2: GradedDim.of(6, 0, 0)},
        ),
        preset_surface(
            "K3", {Slot.L: GradedDim.of(8, 0, 0), Slot.L2: GradedDim.of(26, 0, 0)}
        ),
        preset_surface(
            "abelian", {Slot.L: GradedDim.of(4, 0, 0), Slot.L2: GradedDim.of(16, 0, 0)}
        ),
    ]


def run_suite(
    name: str = Suite.DEFAULT.value, surfaces: Sequence[SurfaceData] = ()
) -> List[CheckOutcome]:
    """Run a named collection of checks.

    :param name: ``default`` or ``full``; the full suite widens all bounds.
    :param surfaces: Additional surfaces for the Euler checks.

    :raise InvalidParameter: If the suite name is not known.
    """
    try:
        suite = Suite(name)
    except ValueError:
        raise errors.InvalidParameter(
            "suite", name, message="must be one of " + ", ".join(s.value for s in Suite)
        )

    bounds = _FULL_BOUNDS if suite == Suite.FULL else _DEFAULT_BOUNDS
    euler_surfaces = [
        *sample_surfaces(),
        *(s for s in surfaces if s.has_slot(Slot.L) and s.has_slot(Slot.L2)),
    ]
    twisted_surfaces = [
        s for s in euler_surfaces if all(s.has_slot(slot) for slot in _TWISTED_SLOTS)
    ]
    twisted_surfaces.extend([p2_surface(1, 1), p2_surface(2, 1)])

    runs: List[Tuple[str, Callable[[], List[CheckOutcome]]]] = [
        (
            "sym_enumeration",
            lambda: check_sym_enumeration(bounds.sym_total, bounds.sym_k),
        ),
        (
            "conjecture_specialization",
            lambda: check_conjecture_specialization(bounds.samples),
        ),
        (
            "twisted_reduces_trivial",
            lambda: check_twisted_reduces_trivial(bounds.n_max, bounds.d_max),
        ),
        (
            "two_routes_n2",
            lambda: check_two_routes_n2(bounds.d_max, bounds.d_max),
        ),
        ("koszul_anchor", check_koszul_anchor),
        ("pure_power", lambda: check_pure_power(bounds.power_samples)),
        ("les_euler", lambda: check_les_euler(euler_surfaces)),
        ("les_exactness", lambda: check_les_exactness(twisted_surfaces)),
        ("p2_model", lambda: check_p2_model(bounds.p2_degrees)),
    ]

    outcomes: List[CheckOutcome] = []
    for check_name, run in runs:
        logger.debug("running %s", check_name)
        results = run()
        logger.debug(
            "%s: %d of %d passed",
            check_name,
            sum(1 for r in results if r.passed),
            len(results),
        )
        outcomes.extend(results)
    return outcomes
