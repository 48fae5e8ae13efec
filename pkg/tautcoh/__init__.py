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

"""Graded dimension calculus for tautological bundles on Hilbert schemes."""

__version__ = "0.1.0"  # noqa: F401

from .decomposition import Decomposition, Provenance, Summand  # noqa: F401
from .formulas import (  # noqa: F401
    coh_s2_conjecture,
    coh_s2_n2,
    coh_s2_n3,
    coh_s2_twisted_bounds,
    coh_sk_taut,
    euler_K_twisted,
    les_terms,
)
from .graded import BasisSpace, GradedDim, SymMonomial  # noqa: F401
from .kernel_map import KernelReport, build_map_2515, sections_s2_twisted  # noqa: F401
from .linalg import LinearMapData, RationalMatrix  # noqa: F401
from .slots import Slot  # noqa: F401
