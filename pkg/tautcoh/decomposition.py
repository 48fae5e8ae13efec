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

"""Direct sum decompositions of cohomology."""

import enum
import functools
from dataclasses import dataclass
from typing import Tuple

from tautcoh.graded import GradedDim, euler_char, sum_dims


@enum.unique
class Provenance(enum.Enum):
    """The result a decomposition comes from."""

    SK_TAUT = "sk_taut"
    S2_N2 = "s2_n2"
    S2_N3 = "s2_n3"
    S2_SECTIONS_TWISTED = "s2_sections_twisted"
    S2_TWISTED_N2 = "s2_twisted_n2"
    S2_TWISTED_N3 = "s2_twisted_n3"
    S2_CONJECTURE = "s2_conjecture"

    def __repr__(self):
        return f"{self.__class__.__name__}.{self.name}"

    @property
    def conjectural(self) -> bool:
        """Whether the result is conjectural rather than proved."""
        return self == Provenance.S2_CONJECTURE


@dataclass(frozen=True)
class Summand:
    """A labeled direct summand."""

    label: str
    dims: GradedDim


@dataclass(frozen=True)
class Decomposition:
    """A cohomology space written as a direct sum of labeled summands."""

    summands: Tuple[Summand, ...]
    provenance: Provenance

    @property
    def total(self) -> GradedDim:
        """Return the pointwise sum of the summands."""
        return functools.reduce(
            sum_dims, (s.dims for s in self.summands), GradedDim()
        )

    @property
    def conjectural(self) -> bool:
        """Whether the decomposition is conjectural."""
        return self.provenance.conjectural

    @property
    def euler(self) -> int:
        """Return the Euler characteristic of the total."""
        return euler_char(self.total)

    def summand(self, label: str) -> Summand:
        """Return the summand with the given label."""
        for item in self.summands:
            if item.label == label:
                return item
        raise KeyError(label)
