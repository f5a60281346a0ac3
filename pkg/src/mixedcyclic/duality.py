"""Weighted inner product, orthogonality, and brute-force duals.

The pairing weights block i by 2^(n-i) so that every block contributes
mod 2^n:  u.v = sum_i 2^(n-i) <u_i, v_i> mod 2^n.  The dual of a code is
computed by scanning the whole ambient module at desk scale; membership
is tested against a spanning family (each generator together with all of
its shifts), which suffices because the pairing is biadditive and every
code element is an integer combination of generator shifts.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .codespace import (
    BudgetExceeded,
    Codeword,
    ProfileMismatch,
    cyclic_shift,
    iter_space_range,
)


def inner_product(u: Codeword, v: Codeword):
    """Weighted dot product, reduced mod 2^n."""
    if u.profile != v.profile:
        raise ProfileMismatch("profiles differ")
    n = u.profile.n
    total = 0
    for i in range(1, n + 1):
        s = sum(a * b for a, b in zip(u.block(i), v.block(i)))
        total += (1 << (n - i)) * s
    return total % (1 << n)


def shift_adjoint_check(u: Codeword, v: Codeword):
    """Whether T^(k-1)(v) . u == v . T(u), with k the joint shift order."""
    w = v
    for _ in range(v.profile.shift_order() - 1):
        w = cyclic_shift(w)
    return inner_product(w, u) == inner_product(v, cyclic_shift(u))


@dataclass(frozen=True)
class DualResult:
    dual_codewords: tuple  # canonical lexicographic order
    source_count: int | None
    cyclic_flag: bool

    @property
    def dual_count(self):
        return len(self.dual_codewords)


def spanning_family(generators):
    """Generators and all their shifts: enough to test orthogonality to C."""
    family = []
    seen = set()
    for g in generators:
        w = g
        for _ in range(g.profile.shift_order()):
            if w.flat() not in seen:
                seen.add(w.flat())
                family.append(w)
            w = cyclic_shift(w)
    return family


def brute_force_dual(generators, profile, budget=1 << 20, source_count=None,
                     check_full=None, threads=1):
    """Scan the ambient module for the dual of the code the generators span.

    The scan splits into coordinate-prefix ranges filtered independently
    (threads caps the workers) and merged in range order, so the result
    is canonical regardless of the worker count.  check_full, when given an
    explicit enumeration of the code, re-tests every kept vector against
    every codeword (debug mode).
    """
    total = 1 << profile.space_size_exponent()
    if total > budget:
        raise BudgetExceeded(
            f"ambient module has 2^{profile.space_size_exponent()} elements, budget {budget}"
        )
    family = spanning_family(generators)

    def scan(rng):
        return [
            v for v in iter_space_range(profile, *rng)
            if all(inner_product(u, v) == 0 for u in family)
        ]

    workers = max(1, min(threads, total))
    step = (total + workers - 1) // workers
    chunks = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(scan, chunks))
    else:
        parts = [scan(rng) for rng in chunks]
    dual = [v for part in parts for v in part]
    if check_full is not None:
        full = list(check_full)
        dual = [v for v in dual if all(inner_product(u, v) == 0 for u in full)]
    keys = {v.flat() for v in dual}
    cyclic = all(cyclic_shift(v).flat() in keys for v in dual)
    return DualResult(tuple(dual), source_count, cyclic)
