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

"""Line bundle slots of a surface description."""

import enum
from typing import Dict


@enum.unique
class Slot(str, enum.Enum):
    """Named line bundles a surface description may provide.

    Twisted slots involve the determinant twist ``A``.
    """

    O = "O"  # noqa: E741
    L = "L"
    L2 = "L2"
    A = "A"
    LA = "LA"
    L2A = "L2A"
    L2A2 = "L2A2"

    def __repr__(self):
        return f"{self.__class__.__name__}.{self.name}"


# Slot a twisted slot resolves to when A = O.
UNTWISTED_SLOT: Dict[Slot, Slot] = {
    Slot.A: Slot.O,
    Slot.LA: Slot.L,
    Slot.L2A: Slot.L2,
    Slot.L2A2: Slot.L2,
}


def untwisted(slot: Slot) -> Slot:
    """Return the slot ``slot`` is isomorphic to when the twist is trivial."""
    return UNTWISTED_SLOT.get(slot, slot)
