"""The ambient module: mixed-alphabet vectors, the cyclic shift, and the
polynomial picture.

A codeword over the profile (alpha_1, ..., alpha_n) has n blocks, block i
holding alpha_i residues mod 2^i.  Blocks are always ordered Z2 first
through Z2^n last, and the canonical text form writes blocks separated by
"|" with comma-separated coordinates ("1,0|0,1,2").  Under the coordinate
<-> coefficient bijection the simultaneous right rotation of all blocks is
exactly multiplication by x, which is what makes shift-closed subgroups
into polynomial modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .modring import Poly


class ProfileMismatch(ValueError):
    """Codewords over different profiles cannot be combined."""


class BudgetExceeded(RuntimeError):
    """A scan or enumeration would exceed the caller-supplied budget."""


@dataclass(frozen=True)
class AlphabetProfile:
    """Shape (n; alpha_1..alpha_n) of the ambient module.

    The standing assumption gcd(i, alpha_i) = 1 is checked at construction;
    pass allow_nonstandard=True to keep a violating profile, which is then
    tagged nonstandard so reports can propagate the warning.
    """

    alphas: tuple
    nonstandard: bool = field(default=False, compare=False)

    def __init__(self, alphas, allow_nonstandard=False):
        alphas = tuple(int(a) for a in alphas)
        if not alphas or any(a < 1 for a in alphas):
            raise ValueError("profile needs n >= 1 positive block lengths")
        bad = [i for i, a in enumerate(alphas, start=1) if math.gcd(i, a) != 1]
        if bad and not allow_nonstandard:
            raise ValueError(
                f"gcd(i, alpha_i) != 1 at level(s) {bad}; "
                "pass allow_nonstandard=True to keep this profile"
            )
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "nonstandard", bool(bad))

    @property
    def n(self):
        return len(self.alphas)

    def alpha(self, i):
        """Block length at level i (1-based)."""
        return self.alphas[i - 1]

    def levels(self):
        return range(1, self.n + 1)

    def shift_order(self):
        return math.lcm(*self.alphas)

    def total_coordinates(self):
        return sum(self.alphas)

    def space_size_exponent(self):
        """log2 of the ambient module size, sum of i*alpha_i."""
        return sum(i * a for i, a in enumerate(self.alphas, start=1))


@dataclass(frozen=True)
class Codeword:
    """One element of the ambient module: block i is alpha_i residues mod 2^i."""

    profile: AlphabetProfile
    components: tuple

    def __post_init__(self):
        comps = []
        for i, block in enumerate(self.components, start=1):
            mod = 1 << i
            block = tuple(c % mod for c in block)
            if len(block) != self.profile.alpha(i):
                raise ValueError(f"block {i} must have length {self.profile.alpha(i)}")
            comps.append(block)
        if len(comps) != self.profile.n:
            raise ValueError("component count must equal n")
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def zero(cls, profile):
        return cls(profile, tuple((0,) * a for a in profile.alphas))

    def block(self, i):
        return self.components[i - 1]

    def is_zero(self):
        return all(all(c == 0 for c in b) for b in self.components)

    def __add__(self, other):
        if self.profile != other.profile:
            raise ProfileMismatch("profiles differ")
        return Codeword(
            self.profile,
            tuple(
                tuple(a + b for a, b in zip(x, y))
                for x, y in zip(self.components, other.components)
            ),
        )

    def __neg__(self):
        return Codeword(self.profile, tuple(tuple(-c for c in b) for b in self.components))

    def __sub__(self, other):
        return self + (-other)

    def int_scale(self, c):
        """Integer scalar multiple, reduced per block modulus."""
        return Codeword(self.profile, tuple(tuple(c * v for v in b) for b in self.components))

    def flat(self):
        """All coordinates in block order, as one tuple (the dedup key)."""
        return tuple(c for b in self.components for c in b)

    def to_text(self):
        return "|".join(",".join(str(c) for c in b) for b in self.components)

    @classmethod
    def from_text(cls, profile, text):
        blocks = [tuple(int(c) for c in part.split(",")) if part else () for part in text.split("|")]
        return cls(profile, tuple(blocks))


@dataclass(frozen=True)
class PolyTuple:
    """The polynomial picture: block i read as a polynomial of degree < alpha_i."""

    profile: AlphabetProfile
    polys: tuple

    def __post_init__(self):
        for i, p in enumerate(self.polys, start=1):
            if p.k != i:
                raise ValueError(f"component {i} must live over Z/2^{i}")
            d = p.degree()
            if d is not None and d >= self.profile.alpha(i):
                raise ValueError(f"component {i} degree exceeds alpha_{i} - 1")
        if len(self.polys) != self.profile.n:
            raise ValueError("component count must equal n")

    def poly(self, i):
        return self.polys[i - 1]


def to_polys(v: Codeword) -> PolyTuple:
    """Coordinate j of block i becomes the x^j coefficient of component i."""
    return PolyTuple(v.profile, tuple(Poly(b, i) for i, b in enumerate(v.components, start=1)))


def from_polys(u: PolyTuple) -> Codeword:
    comps = []
    for i, p in enumerate(u.polys, start=1):
        a = u.profile.alpha(i)
        comps.append(tuple(p.coeff(e) for e in range(a)))
    return Codeword(u.profile, tuple(comps))


def cyclic_shift(v: Codeword) -> Codeword:
    """Rotate every block right by one position, simultaneously."""
    return Codeword(v.profile, tuple(b[-1:] + b[:-1] for b in v.components))


def add_codewords(u: Codeword, v: Codeword) -> Codeword:
    return u + v


def scalar_action(d: Poly, u: PolyTuple) -> PolyTuple:
    """Act by a scalar polynomial: component i gets (d mod 2^i) * u_i.

    The scalar may be written at any level; its coefficients are read
    modulo 2^i per component, and each product is folded by x^alpha_i = 1.
    """
    out = []
    for i, p in enumerate(u.polys, start=1):
        di = d.at_level(i)
        out.append((di * p).reduce_cyclic(u.profile.alpha(i)))
    return PolyTuple(u.profile, tuple(out))


def scalar_action_codeword(d: Poly, v: Codeword) -> Codeword:
    return from_polys(scalar_action(d, to_polys(v)))


def _coordinate_moduli(profile):
    out = []
    for i, a in enumerate(profile.alphas, start=1):
        out.extend([1 << i] * a)
    return out


def _from_flat(profile, flat):
    comps = []
    pos = 0
    for a in profile.alphas:
        comps.append(tuple(flat[pos : pos + a]))
        pos += a
    return Codeword(profile, tuple(comps))


def all_codewords(profile):
    """Iterate the whole ambient module in canonical lexicographic order."""
    import itertools

    ranges = [range(m) for m in _coordinate_moduli(profile)]
    for flat in itertools.product(*ranges):
        yield _from_flat(profile, flat)


def iter_space_range(profile, start, stop):
    """Positions [start, stop) of the canonical ambient-module order.

    The order treats the first coordinate as most significant, matching
    all_codewords, so contiguous index ranges are coordinate-prefix
    partitions and concatenating them preserves the canonical order.
    """
    moduli = _coordinate_moduli(profile)
    total = 1 << profile.space_size_exponent()
    stop = min(stop, total)
    if start >= stop:
        return
    flat = []
    rem = start
    for m in reversed(moduli):
        flat.append(rem % m)
        rem //= m
    flat.reverse()
    for _ in range(start, stop):
        yield _from_flat(profile, flat)
        for pos in range(len(flat) - 1, -1, -1):
            flat[pos] += 1
            if flat[pos] < moduli[pos]:
                break
            flat[pos] = 0
