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

import pytest

from tautcoh.decomposition import Decomposition, Provenance, Summand
from tautcoh.graded import GradedDim


def test_provenance_conjectural():
    assert [p for p in Provenance if p.conjectural] == [Provenance.S2_CONJECTURE]
    assert repr(Provenance.S2_N2) == "Provenance.S2_N2"


class TestDecomposition:
    """Summands and their totals."""

    decomposition = Decomposition(
        summands=(
            Summand("first", GradedDim.of(36, 0, 36)),
            Summand("second", GradedDim.of(26, 0, 26, 0, 26)),
        ),
        provenance=Provenance.S2_N3,
    )

    def test_total(self):
        assert self.decomposition.total == GradedDim.of(62, 0, 62, 0, 26)

    def test_euler(self):
        assert self.decomposition.euler == 150

    def test_not_conjectural(self):
        assert not self.decomposition.conjectural

    def test_summand(self):
        assert self.decomposition.summand("second").dims[4] == 26

    def test_missing_summand(self):
        with pytest.raises(KeyError):
            self.decomposition.summand("third")

    def test_empty(self):
        empty = Decomposition(summands=(), provenance=Provenance.S2_CONJECTURE)
        assert empty.total.is_zero()
        assert empty.conjectural
