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

"""Surfaces described by cohomology dimensions only."""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from tautcoh import errors
from tautcoh.graded import BasisSpace, GradedDim
from tautcoh.slots import Slot
from tautcoh.surfaces.models import (
    UNIT_BASIS,
    LineBundleData,
    MultTable,
    SlotTriple,
    SurfaceData,
)

logger = logging.getLogger(__name__)

CUSTOM = "custom"

PRESET_STRUCTURE_SHEAF: Dict[str, GradedDim] = {
    "rational_qpg0": GradedDim.of(1, 0, 0),
    "K3": GradedDim.of(1, 0, 1),
    "abelian": GradedDim.of(1, 2, 1),
}

MultEntry = Tuple[int, int, int, Union[int, Fraction]]


def preset_names() -> List[str]:
    """Return the accepted preset names."""
    return [*PRESET_STRUCTURE_SHEAF, CUSTOM]


def preset_surface(
    name: str,
    bundle_dims: Mapping[Slot, GradedDim],
    *,
    bases: Optional[Mapping[Slot, BasisSpace]] = None,
    mult_entries: Optional[Mapping[SlotTriple, Iterable[MultEntry]]] = None,
    trivial_twist: Optional[bool] = None,
    surface_name: Optional[str] = None,
) -> SurfaceData:
    """Create a surface from a preset and per-slot cohomology dimensions.

    Presets fix the cohomology of ``O``. For ``custom`` it must be given as
    the ``O`` entry of ``bundle_dims``. Slots without a basis get generic
    section labels such as ``L2_0``.

    :param name: One of the preset names or ``custom``.
    :param bundle_dims: Dimensions of the provided slots.
    :param bases: Optional section bases, keyed by slot.
    :param mult_entries: Optional ``(i, j, k, c)`` structure constants, keyed
        by ``(left, right, target)`` slots.
    :param trivial_twist: Whether ``A = O``; defaults to ``A`` being absent.
    :param surface_name: The name of the surface, defaults to the preset name.

    :raise UnknownPreset: If the preset name is not known.
    :raise InvalidDims: If the dimensions of ``O`` contradict the preset.
    """
    dims = dict(bundle_dims)

    if name in PRESET_STRUCTURE_SHEAF:
        fixed = PRESET_STRUCTURE_SHEAF[name]
        given = dims.get(Slot.O)
        if given is not None and given != fixed:
            raise errors.InvalidDims(
                f"preset {name!r} has {fixed.as_list()}, got {given.as_list()}",
                slot=Slot.O.value,
            )
        dims[Slot.O] = fixed
    elif name == CUSTOM:
        if Slot.O not in dims:
            raise errors.InvalidDims(
                "a custom surface must provide it", slot=Slot.O.value
            )
    else:
        raise errors.UnknownPreset(name, known=preset_names())

    if trivial_twist is None:
        trivial_twist = Slot.A not in dims

    bases = dict(bases or {})
    bundles: Dict[Slot, LineBundleData] = {}
    for slot, h in dims.items():
        basis = bases.get(slot)
        if basis is None:
            basis = _generic_basis(slot, h)
        bundles[slot] = LineBundleData(name=slot.value, h=h, basis=basis)

    surface = SurfaceData(
        name=surface_name or name, bundles=bundles, trivial_twist=trivial_twist
    )
    if not mult_entries:
        return surface

    mults = {
        (left, right, target): MultTable.from_entries(
            surface.basis(left), surface.basis(right), surface.basis(target), entries
        )
        for (left, right, target), entries in mult_entries.items()
    }
    logger.debug("surface %r with %d multiplication tables", name, len(mults))
    return SurfaceData(
        name=surface.name,
        bundles=bundles,
        mults=mults,
        trivial_twist=trivial_twist,
    )


def _generic_basis(slot: Slot, h: GradedDim) -> BasisSpace:
    if slot == Slot.O and h[0] == 1:
        return UNIT_BASIS
    return BasisSpace.from_labels(f"{slot.value}_{i}" for i in range(h[0]))
