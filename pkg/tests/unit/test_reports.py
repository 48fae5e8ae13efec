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

import json

import pytest
from pydantic import ValidationError

from tautcoh.checker import CheckOutcome
from tautcoh.formulas import coh_s2_conjecture, coh_s2_n2, coh_s2_twisted_bounds
from tautcoh.graded import GradedDim
from tautcoh.kernel_map import sections_s2_twisted
from tautcoh.reports import QueryEcho, Report, SummandReport
from tautcoh.surfaces import p2_surface

G = GradedDim.of


@pytest.fixture
def k3_report():
    echo = QueryEcho(mode="s2_n2", n=2, surface="K3")
    return Report.from_decomposition(echo, coh_s2_n2(G(1, 0, 1), G(8), G(26)))


class TestDecompositionReport:
    """Reports of decompositions."""

    def test_fields(self, k3_report):
        assert k3_report.provenance == "s2_n2"
        assert not k3_report.conjectural
        assert k3_report.total == [36, 0, 26, 0, 0]
        assert [s.dims for s in k3_report.summands] == [
            [36, 0, 0, 0, 0],
            [0, 0, 26, 0, 0],
        ]
        assert k3_report.euler == 62
        assert not k3_report.failed

    def test_json(self, k3_report):
        content = k3_report.to_json()
        assert content.endswith("}\n")
        assert content == k3_report.to_json()
        data = json.loads(content)
        assert data["query"] == {
            "mode": "s2_n2",
            "n": 2,
            "k": None,
            "surface": "K3",
            "suite": None,
        }
        assert data["total"] == [36, 0, 26, 0, 0]
        assert data["summands"][1]["label"] == "(H*(O)/C)⊗H*(L2)"

    def test_json_round_trip(self, k3_report):
        parsed = Report.parse_raw(k3_report.to_json())
        assert parsed == k3_report
        assert parsed.to_json() == k3_report.to_json()

    def test_text(self, k3_report):
        lines = k3_report.to_text().splitlines()
        assert lines[0] == "mode: s2_n2  surface: K3  n: 2"
        assert lines[1].split() == ["degree", "0", "1", "2", "3", "4"]
        assert lines[2].split() == ["S^2H*(L)", "36", "0", "0", "0", "0"]
        assert lines[4].split() == ["total", "36", "0", "26", "0", "0"]
        assert lines[5] == "euler characteristic: 62"
        assert "CONJECTURAL" not in k3_report.to_text()

    def test_conjectural(self):
        echo = QueryEcho(mode="s2_conjecture", n=4, surface="K3")
        decomposition = coh_s2_conjecture(4, G(1, 0, 1), G(8), G(26))
        report = Report.from_decomposition(echo, decomposition)
        assert report.conjectural
        assert report.total == [36, 0, 36, 0, 36, 0, 26]
        lines = report.to_text().splitlines()
        assert lines[1] == "CONJECTURAL: this result is not proved"

    def test_kernel(self):
        surface = p2_surface(1, 1)
        echo = QueryEcho(mode="sections_twisted", n=2, surface=surface.name)
        decomposition, kernel = sections_s2_twisted(2, surface)
        report = Report.from_decomposition(echo, decomposition, kernel=kernel)
        assert report.total == [36, 0, 0, 0, 0]
        assert report.kernel.kernel_dim == 15
        assert "kernel: 15 (map 15x30, rank 15)" in report.to_text()

    def test_residual(self):
        surface = p2_surface(1, 1)
        echo = QueryEcho(mode="twisted_bounds", n=2, surface=surface.name)
        bounds = coh_s2_twisted_bounds(2, surface)
        report = Report.from_decomposition(
            echo, bounds.decomposition, bounds=bounds
        )
        assert report.residual.exact == [15]
        assert [s.label for s in report.summands] == ["S^0H*(A)⊗S^2H*(LA)", "K*"]
        assert report.total[0] == 36
        assert report.residual.euler == 15
        text = report.to_text()
        assert "residual K*: euler characteristic 15\n  exact: [15]\n" in text
        assert "  K^0 from the section map: 15" in text

    def test_total_mismatch(self):
        with pytest.raises(ValidationError):
            Report(
                query=QueryEcho(mode="s2_n2"),
                summands=[SummandReport(label="a", dims=[1, 0])],
                total=[2],
            )


def test_euler_report():
    report = Report.from_euler(QueryEcho(mode="euler_K", n=2, surface="K3"), 26)
    assert report.to_text() == (
        "mode: euler_K  surface: K3  n: 2\neuler characteristic: 26\n"
    )


def test_outcomes_report():
    outcomes = [
        CheckOutcome("fine", True, "expected 1, got 1"),
        CheckOutcome("broken", False, "expected 1, got 2"),
    ]
    report = Report.from_outcomes(QueryEcho(mode="check", suite="default"), outcomes)
    assert [check.name for check in report.failed] == ["broken"]
    assert report.to_text() == (
        "mode: check  suite: default\n"
        "FAIL broken: expected 1, got 2\n"
        "1 of 2 checks passed\n"
    )
