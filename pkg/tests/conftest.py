"""Shared desk-scale code instances used across the suite."""

import pytest

from mixedcyclic.codespace import AlphabetProfile
from mixedcyclic.generators import StructuredGenerators
from mixedcyclic.modring import Poly


def make_generators(alphas, a_lists, l_lists, allow_nonstandard=False):
    """Build StructuredGenerators from plain coefficient lists.

    a_lists[i-1] = [a_{i0}, ..., a_{i,i-1}] ascending powers over Z/2^i;
    l_lists[i-2] = [l_{i1}, ..., l_{i,i-1}] written at level i.
    """
    profile = AlphabetProfile(alphas, allow_nonstandard=allow_nonstandard)
    a_layers = tuple(
        tuple(Poly(tuple(coeffs), i) for coeffs in layer)
        for i, layer in enumerate(a_lists, start=1)
    )
    l_mix = tuple(
        tuple(Poly(tuple(coeffs), i) for coeffs in mix)
        for i, mix in enumerate(l_lists, start=2)
    )
    return StructuredGenerators(profile, a_layers, l_mix)


@pytest.fixture
def binary7():
    """n=1: the even-weight-generating binary cyclic code <1+x> of length 7."""
    return make_generators([7], [[[1, 1]]], [])


@pytest.fixture
def toy2():
    """n=2 on lengths (3,3): a_1 = 1+x, a_2 = (x^2+x+1) + 2*1, l_21 = 1."""
    return make_generators([3, 3], [[[1, 1]], [[1, 1, 1], [1]]], [[[1]]])


@pytest.fixture
def example855():
    """The published three-level example on lengths (8, 5, 5)."""
    return make_generators(
        [8, 5, 5],
        [[[1, 0, 1]], [[3, 0, 2], [3]], [[3, 2], [3], [3, 0, 2]]],
        [[[1, 1]], [[1, 1], [0, 3]]],
    )


@pytest.fixture
def tower111():
    """n=3 on lengths (1,1,1): components collapse to residues; code {0,2} x {0,2,4,6}."""
    return make_generators(
        [1, 1, 1],
        [[[1, 1]], [[3, 1], [1]], [[7, 1], [1], [1]]],
        [[[0]], [[0], [0]]],
    )
