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

"""Machine and human readable query results."""

import json
from typing import List, Optional, Sequence

from pydantic import BaseModel, root_validator

from tautcoh.checker import CheckOutcome
from tautcoh.decomposition import Decomposition
from tautcoh.formulas import TwistedBounds
from tautcoh.kernel_map import KernelReport
from tautcoh.utils.formatting_utils import format_table, pad_dims

CONJECTURAL_MARKER = "CONJECTURAL"

# Degrees 0..4 hold the symmetric square of surface cohomology.
_MIN_WIDTH = 5


class _Model(BaseModel):
    class Config:
        """Pydantic model configuration."""

        extra = "forbid"
        allow_mutation = False


class QueryEcho(_Model):
    """The query a report answers."""

    mode: str
    n: Optional[int] = None
    k: Optional[int] = None
    surface: Optional[str] = None
    suite: Optional[str] = None


class SummandReport(_Model):
    """A labeled summand with its dimensions."""

    label: str
    dims: List[int]


class KernelSummary(_Model):
    """Sizes of the section map and its kernel."""

    domain_dim: int
    codomain_dim: int
    rank: int
    kernel_dim: int


class ResidualReport(_Model):
    """What is known about the residual ``K*`` of a twisted decomposition."""

    euler: int
    middle: List[int]
    right: List[int]
    upper: List[int]
    lower0: int
    kernel0: Optional[int] = None
    exact: Optional[List[int]] = None


class OutcomeReport(_Model):
    """The outcome of a single check."""

    name: str
    passed: bool
    details: str


class Report(_Model):
    """The result of a query."""

    query: QueryEcho
    provenance: Optional[str] = None
    conjectural: bool = False
    summands: List[SummandReport] = []
    total: List[int] = []
    euler: Optional[int] = None
    kernel: Optional[KernelSummary] = None
    residual: Optional[ResidualReport] = None
    checks: List[OutcomeReport] = []

    # pylint: disable=no-self-argument,no-self-use
    @root_validator(skip_on_failure=True)
    def validate_total(cls, values):
        """Check that the total is the degreewise sum of the summands."""
        summands = values.get("summands") or []
        if summands:
            width = max(len(values["total"]), *(len(s.dims) for s in summands))
            expected = [
                sum(pad_dims(s.dims, width)[i] for s in summands) for i in range(width)
            ]
            assert pad_dims(values["total"], width) == expected, (
                f"total {values['total']} is not the sum of the summands"
            )
        return values

    # pylint: enable=no-self-argument,no-self-use

    @classmethod
    def from_decomposition(
        cls,
        query: QueryEcho,
        decomposition: Decomposition,
        *,
        kernel: Optional[KernelReport] = None,
        bounds: Optional[TwistedBounds] = None,
    ) -> "Report":
        """Create a report of a decomposition."""
        total = decomposition.total
        width = max(
            _MIN_WIDTH,
            len(total.dims),
            *(len(s.dims.dims) for s in decomposition.summands),
        )

        kernel_summary = None
        if kernel is not None:
            kernel_summary = KernelSummary(
                domain_dim=kernel.domain_dim,
                codomain_dim=kernel.codomain_dim,
                rank=kernel.rank,
                kernel_dim=kernel.kernel_dim,
            )

        residual = None
        if bounds is not None:
            residual = ResidualReport(
                euler=bounds.residual_euler,
                middle=bounds.middle.as_list(),
                right=bounds.right.as_list(),
                upper=bounds.upper.as_list(),
                lower0=bounds.lower0,
                kernel0=bounds.kernel0,
                exact=bounds.residual.as_list() if bounds.residual else None,
            )

        return cls(
            query=query,
            provenance=decomposition.provenance.value,
            conjectural=decomposition.conjectural,
            summands=[
                SummandReport(label=s.label, dims=s.dims.as_list(width))
                for s in decomposition.summands
            ],
            total=total.as_list(width),
            euler=decomposition.euler,
            kernel=kernel_summary,
            residual=residual,
        )

    @classmethod
    def from_euler(cls, query: QueryEcho, euler: int) -> "Report":
        """Create a report of a single Euler characteristic."""
        return cls(query=query, euler=euler)

    @classmethod
    def from_outcomes(
        cls, query: QueryEcho, outcomes: Sequence[CheckOutcome]
    ) -> "Report":
        """Create a report of check outcomes."""
        return cls(
            query=query,
            checks=[
                OutcomeReport(name=o.name, passed=o.passed, details=o.details)
                for o in outcomes
            ],
        )

    @property
    def failed(self) -> List[OutcomeReport]:
        """Return the failed checks."""
        return [check for check in self.checks if not check.passed]

    def to_json(self) -> str:
        """Return the machine readable form, identical for identical reports."""
        return json.dumps(self.dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        """Return the human readable form."""
        echo = self.query
        heading = [f"mode: {echo.mode}"]
        for name in ("surface", "n", "k", "suite"):
            value = getattr(echo, name)
            if value is not None:
                heading.append(f"{name}: {value}")
        lines = ["  ".join(heading)]

        if self.conjectural:
            lines.append(f"{CONJECTURAL_MARKER}: this result is not proved")

        if self.summands:
            width = len(self.total)
            rows = [[s.label, *s.dims] for s in self.summands]
            rows.append(["total", *self.total])
            lines.append(format_table(["degree", *range(width)], rows))

        if self.euler is not None:
            lines.append(f"euler characteristic: {self.euler}")

        if self.kernel is not None:
            k = self.kernel
            lines.append(
                f"kernel: {k.kernel_dim} (map {k.codomain_dim}x{k.domain_dim}, "
                f"rank {k.rank})"
            )

        if self.residual is not None:
            lines.extend(_residual_lines(self.residual))

        if self.checks:
            lines.extend(_check_lines(self.checks, self.failed))

        return "\n".join(lines) + "\n"


def _residual_lines(residual: ResidualReport) -> List[str]:
    lines = [f"residual K*: euler characteristic {residual.euler}"]
    if residual.exact is not None:
        lines.append(f"  exact: {residual.exact}")
    else:
        lines.append(f"  upper bounds: {residual.upper}")
        lines.append(f"  K^0 at least {residual.lower0}")
    if residual.kernel0 is not None:
        lines.append(f"  K^0 from the section map: {residual.kernel0}")
    return lines


def _check_lines(
    checks: Sequence[OutcomeReport], failed: Sequence[OutcomeReport]
) -> List[str]:
    lines = [f"FAIL {c.name}: {c.details}" for c in failed]
    lines.append(f"{len(checks) - len(failed)} of {len(checks)} checks passed")
    return lines
