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

import itertools
from math import comb

import pytest

from tautcoh import errors
from tautcoh.graded import (
    BasisElement,
    BasisSpace,
    GradedDim,
    canonicalize,
    enumerate_sym_basis,
    euler_char,
    quotient_dims,
    shift_dims,
    sum_dims,
    super_sym_dims,
    tensor_basis,
    tensor_dims,
)

G = GradedDim.of


def _counts(monomials):
    counts = {}
    for monomial in monomials:
        counts[monomial.degree] = counts.get(monomial.degree, 0) + 1
    top = max(counts, default=-1)
    return GradedDim(tuple(counts.get(d, 0) for d in range(top + 1)))


class TestGradedDim:
    """GradedDim normalization and accessors."""

    def test_trailing_zeros_stripped(self):
        assert G(3, 0, 0) == G(3)
        assert G(0, 0) == GradedDim()
        assert G(3, 0, 5).dims == (3, 0, 5)

    def test_negative_entry(self):
        with pytest.raises(errors.InvalidDims) as raised:
            G(1, -1)
        assert raised.value.brief == "Invalid dimensions: entry -1 is negative."

    def test_non_integer_entry(self):
        with pytest.raises(errors.InvalidDims):
            GradedDim((1, 0.5))

    def test_getitem_beyond_support(self):
        dims = G(1, 2)
        assert dims[0] == 1
        assert dims[1] == 2
        assert dims[7] == 0
        assert dims[-1] == 0

    def test_accessors(self):
        dims = G(1, 2, 1)
        assert dims.total == 4
        assert dims.top_degree == 2
        assert GradedDim().top_degree == -1
        assert GradedDim().is_zero()

    @pytest.mark.parametrize(
        "tc_dims,tc_width,tc_result",
        [
            (GradedDim(), None, [0]),
            (G(1), 3, [1, 0, 0]),
            (G(1, 0, 1), 2, [1, 0, 1]),
        ],
    )
    def test_as_list(self, tc_dims, tc_width, tc_result):
        assert tc_dims.as_list(tc_width) == tc_result


class TestBasisSpace:
    """Explicit bases."""

    def test_dims(self):
        basis = BasisSpace(
            (BasisElement("a", 0), BasisElement("b", 2), BasisElement("c", 0))
        )
        assert basis.dims == G(2, 0, 1)
        assert len(basis) == 3
        assert basis.index("b") == 1
        assert "c" in basis
        assert basis.labels == ("a", "b", "c")

    def test_repeated_label(self):
        with pytest.raises(errors.InvalidBasis) as raised:
            BasisSpace.from_labels(["x", "y", "x"])
        assert raised.value.brief == "Invalid basis: label 'x' is repeated."

    def test_negative_degree(self):
        with pytest.raises(errors.InvalidBasis):
            BasisSpace((BasisElement("x", -1),))

    def test_unknown_label(self):
        with pytest.raises(errors.InvalidBasis):
            BasisSpace.from_labels(["x"]).index("y")

    def test_from_dims(self):
        basis = BasisSpace.from_dims(G(2, 0, 1))
        assert basis.labels == ("e0_0", "e0_1", "e2_0")
        assert basis.dims == G(2, 0, 1)

    def test_degree_zero(self):
        assert BasisSpace.from_labels(["x", "y"]).is_concentrated_in_degree_zero()
        assert not BasisSpace.from_dims(G(1, 1)).is_concentrated_in_degree_zero()


@pytest.mark.parametrize(
    "tc_a,tc_b,tc_result",
    [
        (G(1, 0, 1), G(0, 2), G(1, 2, 1)),
        (G(0), G(0), G(0)),
        (G(3), G(0, 0, 5), G(3, 0, 5)),
    ],
)
def test_sum_dims(tc_a, tc_b, tc_result):
    assert sum_dims(tc_a, tc_b) == tc_result


@pytest.mark.parametrize(
    "tc_a,tc_b,tc_result",
    [
        (G(1, 0, 1), G(2), G(2, 0, 2)),
        (G(1, 1), G(1, 1), G(1, 2, 1)),
        (G(0), G(3, 1), G(0)),
    ],
)
def test_tensor_dims(tc_a, tc_b, tc_result):
    assert tensor_dims(tc_a, tc_b) == tc_result


def test_tensor_dims_commutative_associative():
    a, b, c = G(1, 2), G(0, 1, 3), G(2, 0, 1)
    assert tensor_dims(a, b) == tensor_dims(b, a)
    assert tensor_dims(tensor_dims(a, b), c) == tensor_dims(a, tensor_dims(b, c))


@pytest.mark.parametrize(
    "tc_k,tc_dims,tc_result",
    [
        (2, G(1, 0, 1), G(1, 0, 1, 0, 1)),
        (2, G(0, 2, 0), G(0, 0, 1)),
        (0, G(4, 3, 2), G(1)),
        (0, GradedDim(), G(1)),
        (3, G(0, 2), GradedDim()),
        (3, G(2), G(4)),
        (2, G(1, 1), G(1, 1)),
        (2, G(1, 2, 1), G(1, 2, 2, 2, 1)),
        (1, G(5, 1, 0), G(5, 1)),
    ],
)
def test_super_sym_dims(tc_k, tc_dims, tc_result):
    assert super_sym_dims(tc_k, tc_dims) == tc_result


def test_super_sym_dims_negative_k():
    with pytest.raises(errors.InvalidParameter):
        super_sym_dims(-1, G(1))


@pytest.mark.parametrize("tc_dim", range(5))
@pytest.mark.parametrize("tc_k", range(5))
def test_super_sym_dims_even_and_odd_totals(tc_dim, tc_k):
    even_total = comb(tc_dim + tc_k - 1, tc_k) if tc_dim else int(tc_k == 0)
    assert super_sym_dims(tc_k, G(0, 0, tc_dim)).total == even_total
    assert super_sym_dims(tc_k, G(0, tc_dim)).total == comb(tc_dim, tc_k)


def test_super_sym_euler_specialization():
    # Setting t = -1 leaves (1 - z)^(-χ), whose z^k coefficient is C(χ+k-1, k).
    for dims in (G(1, 0, 1), G(3, 1), G(2, 2), G(1, 3)):
        chi = euler_char(dims)
        for k in range(5):
            expected = comb(chi + k - 1, k) if chi > 0 else (-1) ** k * comb(-chi, k)
            assert euler_char(super_sym_dims(k, dims)) == expected


class TestEnumerateSymBasis:
    """Monomial bases of super-symmetric powers."""

    def test_even_elements(self):
        basis = BasisSpace((BasisElement("e0", 0), BasisElement("e2", 2)))
        monomials = enumerate_sym_basis(2, basis)
        assert [m.label for m in monomials] == ["e0*e0", "e0*e2", "e2*e2"]
        assert [m.degree for m in monomials] == [0, 2, 4]

    def test_odd_elements(self):
        basis = BasisSpace((BasisElement("a", 1), BasisElement("b", 1)))
        monomials = enumerate_sym_basis(2, basis)
        assert len(monomials) == 1
        assert monomials[0].odd_part == ("a", "b")
        assert monomials[0].even_part == ()
        assert monomials[0].degree == 2

    def test_first_power(self):
        basis = BasisSpace.from_dims(G(2, 1, 1))
        monomials = enumerate_sym_basis(1, basis)
        assert [m.label for m in monomials] == list(basis.labels)

    def test_zeroth_power(self):
        monomials = enumerate_sym_basis(0, BasisSpace.from_dims(G(2, 1)))
        assert len(monomials) == 1
        assert monomials[0].label == "1"
        assert monomials[0].size == 0

    def test_negative_k(self):
        with pytest.raises(errors.InvalidParameter):
            enumerate_sym_basis(-1, BasisSpace())

    def test_agrees_with_generating_function(self):
        for dims in itertools.product(range(3), repeat=5):
            if sum(dims) > 4:
                continue
            graded = GradedDim(dims)
            basis = BasisSpace.from_dims(graded)
            for k in range(4):
                assert _counts(enumerate_sym_basis(k, basis)) == super_sym_dims(
                    k, graded
                )


@pytest.mark.parametrize(
    "tc_big,tc_small,tc_result",
    [
        (G(1, 0, 1), G(1), G(0, 0, 1)),
        (G(1), G(1), GradedDim()),
        (G(1, 0, 1, 0, 1), G(1, 0, 1), G(0, 0, 0, 0, 1)),
    ],
)
def test_quotient_dims(tc_big, tc_small, tc_result):
    assert quotient_dims(tc_big, tc_small) == tc_result


def test_quotient_dims_negative():
    with pytest.raises(errors.NegativeQuotient) as raised:
        quotient_dims(G(1, 2), G(1, 0, 1))
    assert raised.value.degree == 2
    assert raised.value.big == [1, 2]
    assert raised.value.small == [1, 0, 1]


@pytest.mark.parametrize(
    "tc_dims,tc_result",
    [(G(1, 0, 1), 2), (G(1, 2, 1), 0), (GradedDim(), 0), (G(0, 3), -3)],
)
def test_euler_char(tc_dims, tc_result):
    assert euler_char(tc_dims) == tc_result


def test_euler_char_additive_and_multiplicative():
    a, b = G(1, 2, 1), G(3, 0, 4)
    assert euler_char(sum_dims(a, b)) == euler_char(a) + euler_char(b)
    assert euler_char(tensor_dims(a, b)) == euler_char(a) * euler_char(b)


def test_shift_dims():
    assert shift_dims(G(1, 2), 2) == G(0, 0, 1, 2)
    assert shift_dims(GradedDim(), 3) == GradedDim()
    assert shift_dims(G(4), 0) == G(4)
    with pytest.raises(errors.InvalidParameter):
        shift_dims(G(1), -1)


class TestCanonicalize:
    """Koszul canonical forms of products."""

    basis = BasisSpace(
        (BasisElement("a", 1), BasisElement("b", 1), BasisElement("e", 0))
    )

    def test_odd_swap_sign(self):
        sign, monomial = canonicalize(["b", "a"], self.basis)
        assert sign == -1
        assert monomial.odd_part == ("a", "b")

    def test_mixed(self):
        sign, monomial = canonicalize(["b", "e", "a"], self.basis)
        assert sign == -1
        assert monomial.even_part == ("e",)
        assert monomial.odd_part == ("a", "b")
        assert monomial.degree == 2

    def test_odd_square_vanishes(self):
        assert canonicalize(["a", "e", "a"], self.basis) == (0, None)

    def test_even_square(self):
        sign, monomial = canonicalize(["e", "e"], self.basis)
        assert sign == 1
        assert monomial.even_part == ("e", "e")


def test_tensor_basis():
    a = BasisSpace.from_labels(["x", "y"])
    b = BasisSpace((BasisElement("p", 0), BasisElement("q", 1)))
    result = tensor_basis(a, b)
    assert result.labels == ("x|p", "x|q", "y|p", "y|q")
    assert [e.degree for e in result] == [0, 1, 0, 1]
    assert result.dims == tensor_dims(a.dims, b.dims)
