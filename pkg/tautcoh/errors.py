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

"""Tautcoh errors."""

import dataclasses
from typing import Any, Dict, List, Optional, Sequence

from tautcoh.utils import formatting_utils


@dataclasses.dataclass(repr=True)
class TautcohError(Exception):
    """Unexpected error.

    :param brief: Brief description of error.
    :param details: Detailed information.
    :param resolution: Recommendation, if any.
    """

    brief: str
    details: Optional[str] = None
    resolution: Optional[str] = None

    def __str__(self) -> str:
        components = [self.brief]

        if self.details:
            components.append(self.details)

        if self.resolution:
            components.append(self.resolution)

        return "\n".join(components)


class InvalidDims(TautcohError):
    """A graded dimension vector is malformed or out of range.

    :param message: The error message.
    :param slot: The bundle slot holding the dimensions, if any.
    """

    def __init__(self, message: str, *, slot: Optional[str] = None):
        self.message = message
        self.slot = slot
        if slot:
            brief = f"Invalid dimensions for slot {slot!r}: {message}."
        else:
            brief = f"Invalid dimensions: {message}."
        resolution = "Dimensions must be nonnegative integers indexed by degree."

        super().__init__(brief=brief, resolution=resolution)


class NegativeQuotient(TautcohError):
    """A quotient was requested where the subspace is larger in some degree.

    :param big: The dimensions of the ambient space.
    :param small: The dimensions of the subspace.
    :param degree: The first degree where the subspace is too large.
    """

    def __init__(self, *, big: Sequence[int], small: Sequence[int], degree: int):
        self.big = list(big)
        self.small = list(small)
        self.degree = degree
        brief = (
            "Cannot form quotient: subspace exceeds ambient space "
            f"in degree {degree}."
        )
        details = f"ambient={self.big}, subspace={self.small}"
        resolution = "The embedding must be injective in every degree."

        super().__init__(brief=brief, details=details, resolution=resolution)


class BadDegreeSupport(TautcohError):
    """Cohomology dimensions are supported beyond the allowed degree.

    :param name: The name of the offending input.
    :param dims: The offending dimensions.
    :param max_degree: The highest allowed degree.
    """

    def __init__(self, *, name: str, dims: Sequence[int], max_degree: int):
        self.name = name
        self.dims = list(dims)
        self.max_degree = max_degree
        brief = f"Input {name!r} has support beyond degree {max_degree}."
        details = f"{name}={self.dims}"
        resolution = "Cohomology of a surface lives in degrees 0, 1 and 2."

        super().__init__(brief=brief, details=details, resolution=resolution)


class InvalidBasis(TautcohError):
    """A basis is malformed.

    :param message: The error message.
    """

    def __init__(self, message: str):
        self.message = message
        brief = f"Invalid basis: {message}."

        super().__init__(brief=brief)


class BasisMismatch(TautcohError):
    """Bases supplied to an operation do not agree with each other.

    :param message: The error message.
    """

    def __init__(self, message: str):
        self.message = message
        brief = f"Basis mismatch: {message}."
        resolution = "Make sure the multiplication table uses the bundle bases."

        super().__init__(brief=brief, resolution=resolution)


class InvalidMatrix(TautcohError):
    """A matrix was built with inconsistent shape or entries.

    :param message: The error message.
    """

    def __init__(self, message: str):
        self.message = message
        brief = f"Invalid matrix: {message}."

        super().__init__(brief=brief)


class InvalidLinearMap(TautcohError):
    """A linear map does not match its bases or does not preserve degrees.

    :param message: The error message.
    """

    def __init__(self, message: str):
        self.message = message
        brief = f"Invalid linear map: {message}."

        super().__init__(brief=brief)


class InvalidMultTable(TautcohError):
    """A multiplication table refers to basis elements that don't exist.

    :param message: The error message.
    """

    def __init__(self, message: str):
        self.message = message
        brief = f"Invalid multiplication table: {message}."
        resolution = "Structure constants must index existing basis elements."

        super().__init__(brief=brief, resolution=resolution)


class MissingSlot(TautcohError):
    """A computation needs a bundle slot that the surface doesn't define.

    :param slot: The missing slot name.
    :param surface_name: The surface name.
    """

    def __init__(self, slot: str, *, surface_name: str):
        self.slot = slot
        self.surface_name = surface_name
        brief = f"Surface {surface_name!r} does not define bundle slot {slot!r}."
        resolution = f"Add slot {slot!r} to the surface description."

        super().__init__(brief=brief, resolution=resolution)


class MissingBasis(TautcohError):
    """A computation needs an explicit basis of global sections.

    :param slot: The slot without a basis.
    :param surface_name: The surface name.
    """

    def __init__(self, slot: str, *, surface_name: str):
        self.slot = slot
        self.surface_name = surface_name
        brief = f"Slot {slot!r} of surface {surface_name!r} has no basis of sections."
        resolution = "Use the 'p2' shortcut or provide a basis for the slot."

        super().__init__(brief=brief, resolution=resolution)


class MissingMultTable(TautcohError):
    """A computation needs a multiplication table that is not available.

    :param left: The left factor slot.
    :param right: The right factor slot.
    :param surface_name: The surface name.
    """

    def __init__(self, left: str, right: str, *, surface_name: str):
        self.left = left
        self.right = right
        self.surface_name = surface_name
        brief = (
            f"Surface {surface_name!r} has no multiplication table "
            f"for slots {left!r} and {right!r}."
        )
        resolution = "Use the 'p2' shortcut or provide the table in 'mults'."

        super().__init__(brief=brief, resolution=resolution)


class UnknownPreset(TautcohError):
    """A surface preset name is not known.

    :param name: The unknown preset name.
    :param known: The valid preset names.
    """

    def __init__(self, name: str, *, known: List[str]):
        self.name = name
        self.known = known
        brief = f"Surface preset {name!r} is not defined."
        presets = formatting_utils.humanize_list(known, "or")
        resolution = f"Valid presets are {presets}."

        super().__init__(brief=brief, resolution=resolution)


class InvalidParameter(TautcohError):
    """A numeric parameter is out of its allowed range.

    :param name: The parameter name.
    :param value: The rejected value.
    :param message: Description of the allowed range.
    """

    def __init__(self, name: str, value: Any, *, message: str):
        self.name = name
        self.value = value
        self.message = message
        brief = f"Invalid value {value!r} for parameter {name!r}: {message}."

        super().__init__(brief=brief)


class InvalidQuery(TautcohError):
    """A query is missing fields required by its mode.

    :param message: The error message.
    """

    def __init__(self, message: str):
        self.message = message
        brief = f"Invalid query: {message}."
        resolution = "Review the query section of the configuration."

        super().__init__(brief=brief, resolution=resolution)


class ConfigParseError(TautcohError):
    """The configuration document could not be parsed or validated.

    :param filename: The configuration file name.
    :param message: The error message.
    """

    def __init__(self, *, filename: str, message: str):
        self.filename = filename
        self.message = message
        brief = f"Configuration {filename!r} is invalid."
        details = message
        resolution = f"Review {filename!r} and make sure it follows the schema."

        super().__init__(brief=brief, details=details, resolution=resolution)

    @classmethod
    def from_validation_error(
        cls, *, filename: str, error_list: List[Dict[str, Any]]
    ) -> "ConfigParseError":
        """Create a ConfigParseError from a pydantic error list."""
        formatted_errors: List[str] = []

        for error in error_list:
            loc = error.get("loc")
            msg = error.get("msg")

            if not (loc and msg) or not isinstance(loc, tuple):
                continue

            fields = ",".join([repr(entry) for entry in loc])
            formatted_errors.append(f"{fields}: {msg}")

        return cls(filename=filename, message="\n".join(formatted_errors))
