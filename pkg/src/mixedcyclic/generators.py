"""Structured generator families, their divisibility conditions, and cofactors.

A code over the profile (alpha_1..alpha_n) is presented by one generator
tuple per level:

    level i: (l_{i1}, ..., l_{i,i-1}, a_i, 0, ..., 0),
    a_i = sum_j 2^j a_{ij} mod 2^i,

with the a-layers forming a divisibility chain into x^alpha_i - 1 and the
mixing polynomials l tied to lower levels by degree bounds and two
compatibility conditions.  The validator checks, with witnesses:

    (i)   a_{i,i-1} | ... | a_{i0} | x^alpha_i - 1   mod 2^i
    (ii)  deg l_{i+1,1} < deg a_1  and  deg l_{i+1,i} < deg a_{i0}
    (iii) a_i | h_{i+1,i} * l_{i+1,i}                mod 2^i
    (iv)  a_{i-1} | d_i*l_{i,i-1} - h_{i+1,i}*l_{i+1,i-1}  mod 2^(i-1)

where h_{ij} is the cofactor with a_{ij}*h_{ij} = x^alpha_i - 1, and d_i
is the witness produced by (iii).

Divisibility over Z/2^k is witness-based.  A unit-leading divisor gets the
plain division algorithm (unique quotient); otherwise, or when plain
division leaves a remainder, a witness is sought in the cyclic quotient
ring.  The annihilator cofactors h are the one exception: their right-hand
side x^alpha - 1 is the quotient ring's zero, so falling back there would
make the check vacuous, and the plain-ring verdict is final for
unit-leading layers.

Non-monic layers are supported and never normalised; layers that are
units of the polynomial ring (odd constant term, all higher coefficients
even) are flagged, because for them the spanning-set row counts implied
by the formal degrees diverge from the witness degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .modring import Poly, divides_witness, poly_divmod_unit_lead


class NotADivisor(ArithmeticError):
    """A required cofactor does not exist; identifies the failing spot."""

    def __init__(self, level, index, role, detail=""):
        self.level = level
        self.index = index
        self.role = role
        msg = f"not a divisor: {role} at (i={level}, j={index})"
        super().__init__(msg + (f": {detail}" if detail else ""))


class MixingSolveError(ArithmeticError):
    """No mixing certificate at (j, i) despite a passing validation."""

    def __init__(self, j, i):
        self.j = j
        self.i = i
        super().__init__(f"no solution for mixing certificate at (j={j}, i={i})")


@dataclass(frozen=True)
class StructuredGenerators:
    """The triangular generator data (a-layers and mixing polynomials).

    a_layers[i-1] holds (a_{i0}, ..., a_{i,i-1}) over Z/2^i.  l_mix[i-2]
    holds (l_{i1}, ..., l_{i,i-1}) written at level i; each l_{ij} is read
    modulo 2^j when it lands in component j.  A zero a-layer is rejected:
    an absent layer is expressed as x^alpha_i - 1, which is zero in the
    quotient but keeps a cofactor.
    """

    profile: object
    a_layers: tuple
    l_mix: tuple

    def __post_init__(self):
        n = self.profile.n
        if len(self.a_layers) != n:
            raise ValueError("need one a-layer tuple per level")
        for i, layer in enumerate(self.a_layers, start=1):
            if len(layer) != i:
                raise ValueError(f"level {i} needs exactly {i} a-layers")
            for j, p in enumerate(layer):
                if p.k != i:
                    raise ValueError(f"a[{i}][{j}] must live over Z/2^{i}")
                if p.is_zero():
                    raise ValueError(
                        f"a[{i}][{j}] is zero; use x^alpha-1 for an absent layer"
                    )
                if p.degree() > self.profile.alpha(i):
                    raise ValueError(f"a[{i}][{j}] degree exceeds alpha_{i}")
        if len(self.l_mix) != max(n - 1, 0):
            raise ValueError("need mixing polynomials for levels 2..n")
        for i, mix in enumerate(self.l_mix, start=2):
            if len(mix) != i - 1:
                raise ValueError(f"level {i} needs {i - 1} mixing polynomials")
            for j, p in enumerate(mix, start=1):
                if p.k != i:
                    raise ValueError(f"l[{i}][{j}] must be written at level {i}")
                d = p.degree()
                if d is not None and d >= self.profile.alpha(j):
                    raise ValueError(
                        f"l[{i}][{j}] degree must stay below alpha_{j}"
                    )

    def a(self, i, j):
        return self.a_layers[i - 1][j]

    def l(self, i, j):
        """Mixing polynomial of generator i sitting in component j (j < i)."""
        return self.l_mix[i - 2][j - 1]

    def a_total(self, i):
        """a_i = sum_j 2^j a_{ij}, reduced mod 2^i."""
        total = Poly.zero(i)
        for j in range(i):
            total = total + self.a(i, j).scale(1 << j)
        return total

    def generator_tuple(self, i):
        """Generator i as a polynomial tuple of the ambient module."""
        from .codespace import PolyTuple

        polys = []
        for c in range(1, self.profile.n + 1):
            if c < i:
                p = self.l(i, c).at_level(c).reduce_cyclic(self.profile.alpha(c))
            elif c == i:
                p = self.a_total(i).reduce_cyclic(self.profile.alpha(i))
            else:
                p = Poly.zero(c)
            polys.append(p)
        return PolyTuple(self.profile, tuple(polys))

    def generator_codeword(self, i):
        from .codespace import from_polys

        return from_polys(self.generator_tuple(i))

    def generator_codewords(self):
        return [self.generator_codeword(i) for i in self.profile.levels()]

    def unit_layers(self):
        """(i, j) of positive-degree layers that are units of Z/2^i[x].

        For these (odd constant term, even higher coefficients, degree
        >= 1) the witness cofactor degrees diverge from the formal
        degrees, so reports flag them.  Odd constants are units too, but
        their cofactors behave like ordinary exact divisions.
        """
        out = []
        for i in self.profile.levels():
            for j in range(i):
                p = self.a(i, j)
                if (p.degree() > 0 and p.coeff(0) % 2 == 1
                        and all(c % 2 == 0 for c in p.coeffs[1:])):
                    out.append((i, j))
        return out


def _divide_element(a: Poly, rhs: Poly, alpha: int):
    """Witness q with q*a = rhs, plain ring first, quotient ring fallback.

    A unit-leading divisor is tried with plain division (the quotient is
    then unique); if the remainder is nonzero, or the divisor is not
    unit-leading, a witness is sought modulo x^alpha - 1.
    """
    if rhs.is_zero():
        return Poly.zero(a.k)
    if a.has_unit_lead() and rhs.degree() >= a.degree():
        q, r = poly_divmod_unit_lead(rhs, a)
        if r.is_zero():
            return q
    return divides_witness(a, rhs, alpha=alpha)


def _derive_h(a: Poly, alpha: int):
    """Cofactor h with a*h = x^alpha - 1, or None.

    Plain-ring division for unit-leading a (no quotient fallback: the
    right-hand side is the quotient ring's zero, so the fallback would
    accept everything); quotient-ring witness otherwise.
    """
    target = Poly.x_to_alpha_minus_1(alpha, a.k)
    if a.has_unit_lead():
        if a.degree() > alpha:
            return None
        q, r = poly_divmod_unit_lead(target, a)
        return q if r.is_zero() else None
    return divides_witness(a, target, alpha=alpha)


@dataclass(frozen=True)
class Cofactors:
    """Witness cofactors plus the formal row-count degrees.

    h[(i, j)] satisfies a_{ij}*h = x^alpha_i - 1 (in the plain ring for
    unit-leading layers, in the cyclic quotient otherwise); m[(i, j)]
    satisfies a_{ij}*m = a_{i,j-1}; d[i] witnesses condition (iii).

    h_rows/m_rows carry the spanning-set block sizes, taken from formal
    degree differences (alpha_i - deg a_{i0}, deg a_{i,j-1} - deg a_{ij});
    for unit-leading layers these equal the witness degrees.  Negative
    differences are clamped to empty blocks and recorded as warnings.
    """

    h: dict
    m: dict
    d: dict
    h_rows: dict
    m_rows: dict
    warnings: tuple = field(default_factory=tuple)


def derive_cofactors(g: StructuredGenerators) -> Cofactors:
    """All cofactors for a generator family; raises NotADivisor on a gap."""
    profile = g.profile
    h, m, d = {}, {}, {}
    h_rows, m_rows = {}, {}
    warnings = []

    for i in profile.levels():
        alpha = profile.alpha(i)
        for j in range(i):
            a = g.a(i, j)
            hij = _derive_h(a, alpha)
            if hij is None:
                raise NotADivisor(i, j, "a | x^alpha - 1")
            h[(i, j)] = hij
            h_rows[(i, j)] = alpha - a.degree()
        for j in range(1, i):
            a = g.a(i, j)
            target = g.a(i, j - 1)
            mij = _divide_element(a, target, alpha)
            if mij is None:
                raise NotADivisor(i, j, "a_{ij} | a_{i,j-1}")
            m[(i, j)] = mij
            diff = target.degree() - a.degree()
            if diff < 0:
                warnings.append(
                    {"code": "clamped_block", "level": i, "index": j,
                     "detail": f"formal degree difference {diff} clamped to 0"}
                )
                diff = 0
            m_rows[(i, j)] = diff

    for i in range(1, profile.n):
        rhs = h[(i + 1, i)].at_level(i) * g.l(i + 1, i).at_level(i)
        di = _divide_element(g.a_total(i), rhs, profile.alpha(i))
        if di is None:
            raise NotADivisor(i, None, "a_i | h_{i+1,i} * l_{i+1,i}")
        d[i] = di

    for (i, j) in g.unit_layers():
        warnings.append(
            {"code": "unit_layer", "level": i, "index": j,
             "detail": "layer is a unit polynomial; row counts follow formal degrees"}
        )
    return Cofactors(h, m, d, h_rows, m_rows, tuple(warnings))


@dataclass(frozen=True)
class ConditionEntry:
    condition: str  # "i" | "ii" | "iii" | "iv"
    level: int
    index: int | None
    passed: bool
    note: str

    def line(self):
        where = f"i={self.level}" + ("" if self.index is None else f" j={self.index}")
        verdict = "PASS" if self.passed else "FAIL"
        return f"condition ({self.condition}) {where}: {verdict} [{self.note}]"


@dataclass(frozen=True)
class ValidationReport:
    entries: tuple
    profile_nonstandard: bool
    warnings: tuple
    notes: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    def failing_conditions(self):
        return sorted({e.condition for e in self.entries if not e.passed})

    def to_lines(self):
        lines = [e.line() for e in self.entries]
        for note in self.notes:
            lines.append(f"note: {note}")
        for w in self.warnings:
            lines.append(f"warning: {w['code']} " +
                         " ".join(f"{k}={v}" for k, v in w.items() if k != "code"))
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return lines

    def to_payload(self):
        return {
            "entries": [
                {"condition": e.condition, "level": e.level, "index": e.index,
                 "passed": e.passed, "note": e.note}
                for e in self.entries
            ],
            "notes": list(self.notes),
            "overall": self.passed,
            "profile_nonstandard": self.profile_nonstandard,
            "warnings": [dict(w) for w in self.warnings],
        }


def _fmt(p):
    return str(p)


def validate_generators(g: StructuredGenerators, extend_iv=False) -> ValidationReport:
    """Check conditions (i)-(iv) with witnesses; failures become entries."""
    profile = g.profile
    entries = []
    notes = []
    warnings = []
    h = {}
    d = {}

    # (i): the divisibility chain per level, outermost link first
    for i in profile.levels():
        alpha = profile.alpha(i)
        for j in range(i - 1, 0, -1):
            w = _divide_element(g.a(i, j), g.a(i, j - 1), alpha)
            entries.append(ConditionEntry(
                "i", i, j, w is not None,
                f"a[{i}][{j}] | a[{i}][{j - 1}]"
                + (f": m = {_fmt(w)}" if w is not None else "")))
        w = _derive_h(g.a(i, 0), alpha)
        if w is not None:
            h[(i, 0)] = w
        entries.append(ConditionEntry(
            "i", i, 0, w is not None,
            f"a[{i}][0] | x^{alpha}-1" + (f": h = {_fmt(w)}" if w is not None else "")))
        for j in range(1, i):
            w = _derive_h(g.a(i, j), alpha)
            if w is not None:
                h[(i, j)] = w

    # (ii): degree bounds on the first and last mixing polynomial
    # (the two clauses coincide at i = 1, so emit that check once)
    deg_a1 = g.a(1, 0).degree()
    for i in range(1, profile.n):
        l_first = g.l(i + 1, 1)
        d1 = l_first.degree()
        ok = l_first.is_zero() or d1 < deg_a1
        entries.append(ConditionEntry(
            "ii", i, 1, ok, f"deg l[{i + 1}][1] < deg a[1][0] ({d1} vs {deg_a1})"))
        if i == 1:
            continue
        l_last = g.l(i + 1, i)
        dl = l_last.degree()
        da = g.a(i, 0).degree()
        ok = l_last.is_zero() or dl < da
        entries.append(ConditionEntry(
            "ii", i, i, ok, f"deg l[{i + 1}][{i}] < deg a[{i}][0] ({dl} vs {da})"))

    # (iii): a_i divides h_{i+1,i} * l_{i+1,i}; the witness is d_i
    for i in range(1, profile.n):
        hi = h.get((i + 1, i))
        if hi is None:
            entries.append(ConditionEntry(
                "iii", i, None, False, f"h[{i + 1}][{i}] unavailable (condition (i) failed)"))
            continue
        rhs = hi.at_level(i) * g.l(i + 1, i).at_level(i)
        w = _divide_element(g.a_total(i), rhs, profile.alpha(i))
        if w is not None:
            d[i] = w
        entries.append(ConditionEntry(
            "iii", i, None, w is not None,
            f"a_{i} | h[{i + 1}][{i}]*l[{i + 1}][{i}]"
            + (f": d = {_fmt(w)}" if w is not None else "")))

    # (iv): adjacent compatibility through d_i, for i = 2..n-1 as printed
    for i in range(2, profile.n):
        hi = h.get((i + 1, i))
        if i not in d or hi is None:
            entries.append(ConditionEntry(
                "iv", i, None, False, f"d_{i} unavailable (condition (iii) failed)"))
            continue
        k = i - 1
        bracket = (d[i].at_level(k) * g.l(i, i - 1).at_level(k)
                   - hi.at_level(k) * g.l(i + 1, i - 1).at_level(k))
        w = _divide_element(g.a_total(k), bracket, profile.alpha(k))
        entries.append(ConditionEntry(
            "iv", i, None, w is not None,
            f"a_{k} | d_{i}*l[{i}][{i - 1}] - h[{i + 1}][{i}]*l[{i + 1}][{i - 1}]"
            + (f": witness = {_fmt(w)}" if w is not None else "")))
    if extend_iv:
        notes.append(
            f"condition (iv) extension to i={profile.n} is vacuous: "
            "it would reference generator data one level above n"
        )

    if profile.nonstandard:
        warnings.append({"code": "nonstandard_profile",
                         "detail": "gcd(i, alpha_i) = 1 fails at some level"})
    for (i, j) in g.unit_layers():
        warnings.append(
            {"code": "unit_layer", "level": i, "index": j,
             "detail": "layer is a unit polynomial; row counts follow formal degrees"})

    entries.sort(key=lambda e: (e.condition, e.level, -1 if e.index is None else e.index))
    return ValidationReport(tuple(entries), profile.nonstandard, tuple(warnings), tuple(notes))


def mixing_certificates(g: StructuredGenerators, c: Cofactors, i: int):
    """The family f_{ji} (j = i-1..1) tying generator i's mixing row to
    lower generators:

        l_{ij} * h_{i,i-1} = a_j * f_{ji} + sum_{k=j+1}^{i-1} l_{kj} * f_{ki}

    Built descending: f_{i-1,i} is d_{i-1}, then each lower f is solved
    from the remaining right-hand side.  A missing solution is surfaced
    as MixingSolveError, never patched.
    """
    if not 2 <= i <= g.profile.n:
        raise ValueError("level must satisfy 2 <= i <= n")
    h_top = c.h[(i, i - 1)]
    f = {i - 1: c.d[i - 1]}
    for j in range(i - 2, 0, -1):
        rhs = g.l(i, j).at_level(j) * h_top.at_level(j)
        for k in range(j + 1, i):
            rhs = rhs - g.l(k, j).at_level(j) * f[k].at_level(j)
        w = _divide_element(g.a_total(j), rhs, g.profile.alpha(j))
        if w is None:
            raise MixingSolveError(j, i)
        f[j] = w
    return f


def mixing_identity_holds(g: StructuredGenerators, c: Cofactors, i: int, f: dict):
    """Re-multiply the mixing identity in each component's quotient ring."""
    h_top = c.h[(i, i - 1)]
    for j in range(1, i):
        alpha = g.profile.alpha(j)
        lhs = (g.l(i, j).at_level(j) * h_top.at_level(j)).reduce_cyclic(alpha)
        rhs = g.a_total(j) * f[j].at_level(j)
        for k in range(j + 1, i):
            rhs = rhs + g.l(k, j).at_level(j) * f[k].at_level(j)
        if lhs != rhs.reduce_cyclic(alpha):
            return False
    return True
