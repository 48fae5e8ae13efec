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

from tautcoh import checker, errors
from tautcoh.decomposition import Decomposition, Provenance, Summand
from tautcoh.graded import GradedDim
from tautcoh.slots import Slot
from tautcoh.surfaces import p2_surface, preset_surface

G = GradedDim.of


def _all_passed(outcomes):
    return all(outcome.passed for outcome in outcomes)


class TestCompare:
    """Outcome construction."""

    def test_dims_equal(self):
        outcome = checker.compare_dims("same", G(1, 0, 1), G(1, 0, 1))
        assert outcome.passed
        assert outcome.details == "expected [1, 0, 1], got [1, 0, 1]"

    def test_dims_differ(self):
        outcome = checker.compare_dims("differ", G(1, 0, 1), G(1, 1))
        assert not outcome.passed
        assert outcome.details == (
            "expected [1, 0, 1], got [1, 1, 0]; first difference in degree 1"
        )

    def test_values(self):
        assert checker.compare_values("same", 3, 3).passed
        outcome = checker.compare_values("differ", 3, 4)
        assert not outcome.passed
        assert outcome.details == "expected 3, got 4"


def test_sym_enumeration():
    outcomes = checker.check_sym_enumeration(2, 3, max_degree=2)
    assert len(outcomes) == 40
    assert _all_passed(outcomes)


def test_sym_enumeration_negative_bound():
    with pytest.raises(errors.InvalidParameter):
        checker.check_sym_enumeration(-1, 2)


def test_conjecture_specialization():
    outcomes = checker.check_conjecture_specialization(5)
    assert len(outcomes) == 10
    assert _all_passed(outcomes)
    assert outcomes[0].name == "conjecture_specialization[0,n=2]"


def test_conjecture_specialization_deterministic():
    first = checker.check_conjecture_specialization(3, seed=7)
    second = checker.check_conjecture_specialization(3, seed=7)
    assert first == second


def test_conjecture_specialization_detects_mismatch(mocker):
    wrong = Decomposition(
        summands=(Summand("wrong", G(0, 1)),), provenance=Provenance.S2_CONJECTURE
    )
    mocker.patch("tautcoh.checker.coh_s2_conjecture", return_value=wrong)
    outcomes = checker.check_conjecture_specialization(2)
    assert not any(outcome.passed for outcome in outcomes)
    assert "first difference in degree 0" in outcomes[0].details


def test_twisted_reduces_trivial():
    outcomes = checker.check_twisted_reduces_trivial(3, 1)
    assert [o.name for o in outcomes] == [
        "twisted_reduces_trivial[n=2,d=0]",
        "twisted_reduces_trivial[n=2,d=1]",
        "twisted_reduces_trivial[n=3,d=0]",
        "twisted_reduces_trivial[n=3,d=1]",
    ]
    assert _all_passed(outcomes)


def test_two_routes_n2():
    outcomes = checker.check_two_routes_n2(1, 1)
    assert len(outcomes) == 4
    assert _all_passed(outcomes)


def test_les_euler():
    outcomes = checker.check_les_euler(checker.sample_surfaces())
    assert len(outcomes) == 6
    assert _all_passed(outcomes)


def test_les_euler_missing_slot():
    surface = preset_surface("K3", {Slot.L: G(8)})
    with pytest.raises(errors.MissingSlot):
        checker.check_les_euler([surface])


def test_les_exactness():
    outcomes = checker.check_les_exactness([p2_surface(1, 1), p2_surface(1, 0)])
    assert len(outcomes) == 4
    assert _all_passed(outcomes)


def test_koszul_anchor():
    outcomes = checker.check_koszul_anchor()
    assert [o.name for o in outcomes] == [
        "koszul_anchor[kernel]",
        "koszul_anchor[rank]",
        "koszul_anchor[killed]",
    ]
    assert _all_passed(outcomes)


def test_pure_power():
    outcomes = checker.check_pure_power(2, n_values=(2, 3))
    assert len(outcomes) == 4
    assert _all_passed(outcomes)


def test_p2_model():
    outcomes = checker.check_p2_model(range(-4, 3), ab_max=1, assoc_max=1)
    assert len(outcomes) == 26
    assert _all_passed(outcomes)


class TestRunSuite:
    """Suite selection and surface routing."""

    _checks = [
        "check_sym_enumeration",
        "check_conjecture_specialization",
        "check_twisted_reduces_trivial",
        "check_two_routes_n2",
        "check_koszul_anchor",
        "check_pure_power",
        "check_les_euler",
        "check_les_exactness",
        "check_p2_model",
    ]

    @pytest.fixture
    def mocks(self, mocker):
        return {
            name: mocker.patch(f"tautcoh.checker.{name}", return_value=[])
            for name in self._checks
        }

    def test_unknown_suite(self):
        with pytest.raises(errors.InvalidParameter) as raised:
            checker.run_suite("quick")
        assert raised.value.brief == (
            "Invalid value 'quick' for parameter 'suite': "
            "must be one of default, full."
        )

    def test_all_checks_run(self, mocks):
        assert checker.run_suite() == []
        for mock in mocks.values():
            mock.assert_called_once()

    @pytest.mark.parametrize(
        "tc_suite,tc_samples", [("default", 100), ("full", 500)]
    )
    def test_bounds(self, mocks, tc_suite, tc_samples):
        checker.run_suite(tc_suite)
        mocks["check_conjecture_specialization"].assert_called_once_with(tc_samples)

    def test_extra_surfaces(self, mocks):
        extra = p2_surface(1, 1)
        partial = preset_surface("K3", {Slot.L: G(8)})
        checker.run_suite("default", [extra, partial])

        (euler_surfaces,), _ = mocks["check_les_euler"].call_args
        assert [s.name for s in euler_surfaces] == [
            "rational_qpg0",
            "K3",
            "abelian",
            extra.name,
        ]

        (twisted_surfaces,), _ = mocks["check_les_exactness"].call_args
        assert extra in twisted_surfaces
        assert partial not in twisted_surfaces

    def test_outcomes_collected(self, mocks):
        failed = checker.CheckOutcome("broken", False, "expected 1, got 2")
        mocks["check_koszul_anchor"].return_value = [failed]
        assert checker.run_suite() == [failed]
