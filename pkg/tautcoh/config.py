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

"""Configuration documents describing a surface and a query.

Documents are JSON or YAML, for example::

    {"surface": {"name": "K3",
                 "bundles": {"L": {"h": [8, 0, 0]}, "L2": {"h": [26, 0, 0]}}},
     "query": {"mode": "s2_n2"}}
"""

import enum
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from pydantic import (
    BaseModel,
    Field,
    StrictInt,
    StrictStr,
    ValidationError,
    root_validator,
    validator,
)

from tautcoh import errors
from tautcoh.graded import BasisSpace, GradedDim
from tautcoh.slots import Slot
from tautcoh.surfaces import SurfaceData, p2_surface, preset_surface
from tautcoh.surfaces.presets import CUSTOM, PRESET_STRUCTURE_SHEAF

logger = logging.getLogger(__name__)


@enum.unique
class Mode(str, enum.Enum):
    """What a query computes."""

    SK_TAUT = "sk_taut"
    S2_N2 = "s2_n2"
    S2_N3 = "s2_n3"
    S2_CONJECTURE = "s2_conjecture"
    SECTIONS_TWISTED = "sections_twisted"
    EULER_K = "euler_K"
    TWISTED_BOUNDS = "twisted_bounds"
    CHECK = "check"

    def __repr__(self):
        return f"{self.__class__.__name__}.{self.name}"

    @property
    def fixed_n(self) -> Optional[int]:
        """Return the only value of ``n`` the mode accepts, if any."""
        return {Mode.S2_N2: 2, Mode.S2_N3: 3}.get(self)


class _Spec(BaseModel):
    class Config:
        """Pydantic model configuration."""

        validate_assignment = True
        extra = "forbid"
        allow_mutation = False
        allow_population_by_field_name = True

    def marshal(self) -> Dict[str, Any]:
        """Create a dictionary containing the specification data."""
        return self.dict(by_alias=True, exclude_none=True)


class BundleSpec(_Spec):
    """Cohomology of a line bundle and optional section labels."""

    h: List[StrictInt]
    basis: Optional[List[str]] = None

    # pylint: disable=no-self-argument,no-self-use
    @validator("h", each_item=True)
    def validate_nonnegative(cls, item):
        """Check that dimensions are nonnegative."""
        assert item >= 0, "dimensions must be nonnegative"
        return item

    # pylint: enable=no-self-argument,no-self-use

    @property
    def dims(self) -> GradedDim:
        """Return the dimensions as a GradedDim."""
        return GradedDim(tuple(self.h))


# An entry ``[i, j, k, c]`` with an integer or fraction string coefficient.
MultEntry = Tuple[StrictInt, StrictInt, StrictInt, Union[StrictInt, StrictStr]]


class MultSpec(_Spec):
    """Structure constants ``[i, j, k, c]`` of a product of sections."""

    left: Slot
    right: Slot
    target: Slot
    entries: List[MultEntry]

    # pylint: disable=no-self-argument,no-self-use
    @validator("entries", each_item=True)
    def validate_coefficient(cls, item):
        """Check that the coefficient is an exact rational number."""
        try:
            Fraction(item[3])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"coefficient {item[3]!r} is not a rational number")
        return item

    # pylint: enable=no-self-argument,no-self-use

    def fraction_entries(self) -> List[Tuple[int, int, int, Fraction]]:
        """Return the entries with exact rational coefficients."""
        return [(i, j, k, Fraction(c)) for i, j, k, c in self.entries]


class P2Spec(_Spec):
    """The projective plane with ``L = O(d)`` and ``A = O(e)``."""

    d: StrictInt
    e: StrictInt = 0


class SurfaceSpec(_Spec):
    """A surface given by a preset, explicit data or the plane shortcut."""

    name: str = CUSTOM
    preset: Optional[str] = None
    h_o: Optional[List[StrictInt]] = Field(None, alias="hO")
    bundles: Dict[Slot, BundleSpec] = {}
    mults: List[MultSpec] = []
    trivial_twist: Optional[bool] = None
    p2: Optional[P2Spec] = None

    # pylint: disable=no-self-argument,no-self-use
    @root_validator(skip_on_failure=True)
    def validate_p2_exclusive(cls, values):
        """Check that the plane shortcut is not mixed with explicit data."""
        if values.get("p2") is not None:
            assert not values.get("bundles"), "'p2' cannot be combined with 'bundles'"
            assert not values.get("mults"), "'p2' cannot be combined with 'mults'"
        return values

    # pylint: enable=no-self-argument,no-self-use

    @property
    def preset_name(self) -> str:
        """Return the preset to use, the name itself when it is a preset."""
        if self.preset:
            return self.preset
        return self.name if self.name in PRESET_STRUCTURE_SHEAF else CUSTOM

    def to_surface(self) -> SurfaceData:
        """Create the described surface."""
        if self.p2 is not None:
            return p2_surface(self.p2.d, self.p2.e)

        dims = {slot: spec.dims for slot, spec in self.bundles.items()}
        if self.h_o is not None:
            given = GradedDim(tuple(self.h_o))
            if Slot.O in dims and dims[Slot.O] != given:
                raise errors.InvalidDims(
                    "'hO' and bundle 'O' disagree", slot=Slot.O.value
                )
            dims[Slot.O] = given

        bases = {
            slot: BasisSpace.from_labels(spec.basis)
            for slot, spec in self.bundles.items()
            if spec.basis is not None
        }
        mult_entries = {
            (m.left, m.right, m.target): m.fraction_entries() for m in self.mults
        }
        logger.debug("surface %r from preset %r", self.name, self.preset_name)
        return preset_surface(
            self.preset_name,
            dims,
            bases=bases,
            mult_entries=mult_entries,
            trivial_twist=self.trivial_twist,
            surface_name=self.name,
        )


class QuerySpec(_Spec):
    """What to compute on the surface."""

    mode: Mode
    n: Optional[StrictInt] = None
    k: Optional[StrictInt] = None

    def merged(
        self, *, mode: Optional[str], n: Optional[int], k: Optional[int]
    ) -> "QuerySpec":
        """Return a copy with command line overrides applied."""
        data = self.dict()
        if mode is not None:
            data["mode"] = mode
        if n is not None:
            data["n"] = n
        if k is not None:
            data["k"] = k
        return QuerySpec(**data)

    def resolved(self) -> "QuerySpec":
        """Return the query with mode-implied fields filled in.

        :raise InvalidQuery: If fields required by the mode are missing.
        """
        n = self.n
        fixed = self.mode.fixed_n
        if fixed is not None:
            if n is not None and n != fixed:
                raise errors.InvalidQuery(
                    f"mode {self.mode.value!r} requires n={fixed}, got n={n}"
                )
            n = fixed

        if self.mode != Mode.CHECK and n is None:
            raise errors.InvalidQuery(f"mode {self.mode.value!r} requires 'n'")

        if self.mode == Mode.SK_TAUT and self.k not in (0, 1):
            raise errors.InvalidQuery(
                f"mode 'sk_taut' requires 'k' to be 0 or 1, got {self.k!r}"
            )

        return QuerySpec(mode=self.mode, n=n, k=self.k)


class ConfigSpec(_Spec):
    """A configuration document."""

    surface: Optional[SurfaceSpec] = None
    query: Optional[QuerySpec] = None

    @classmethod
    def unmarshal(cls, data: Dict[str, Any]) -> "ConfigSpec":
        """Create and populate a new ``ConfigSpec`` object from dictionary data.

        :param data: The dictionary data to unmarshal.

        :return: The newly created object.

        :raise TypeError: If data is not a dictionary.
        """
        if not isinstance(data, dict):
            raise TypeError("configuration data is not a dictionary")

        return cls(**data)


def load_config(path: Union[str, Path]) -> ConfigSpec:
    """Read and validate a configuration document.

    :raise ConfigParseError: If the document can't be parsed or validated.
    :raise OSError: If the file can't be read.
    """
    filename = str(path)
    with open(path) as config_file:
        try:
            data = yaml.safe_load(config_file)
        except yaml.YAMLError as err:
            raise errors.ConfigParseError(filename=filename, message=str(err))

    try:
        return ConfigSpec.unmarshal(data)
    except TypeError as err:
        raise errors.ConfigParseError(filename=filename, message=str(err))
    except ValidationError as err:
        raise errors.ConfigParseError.from_validation_error(
            filename=filename, error_list=err.errors()
        )
