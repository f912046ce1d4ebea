"""The extended product on hyperspaces, shifts, and maps induced by carrier maps.

For a groupoid (X, *) the product of hyperspaces U and V contains A exactly
when {x : x^-1 A in V} belongs to U, where x^-1 A = {y : x * y in A}. The
equivalent base form (upward closure of all unions of x * V_x over x in a
member of U) is implemented separately and kept exponential on purpose: it
is the independent oracle the fast form is checked against.
"""

from __future__ import annotations

import functools
import itertools

from .errors import BudgetExceeded, InputError
from .groupoids import Groupoid, is_homomorphism
from .hyperspaces import Hyperspace, generate

VIA_BASE_BUDGET = 10 ** 6


@functools.lru_cache(maxsize=32)
def _preimage_table(g: Groupoid) -> tuple[tuple[int, ...], ...]:
    """pre[x][A] = mask of {y : x * y in A}."""
    n, nsub = g.n, 1 << g.n
    out = []
    for x in range(n):
        sing = [0] * n
        for y in range(n):
            sing[g.table[x][y]] |= 1 << y
        row = [0] * nsub
        for a in range(1, nsub):
            low = a & -a
            row[a] = row[a ^ low] | sing[low.bit_length() - 1]
        out.append(tuple(row))
    return tuple(out)


@functools.lru_cache(maxsize=32)
def _image_table(g: Groupoid) -> tuple[tuple[int, ...], ...]:
    """img[x][A] = mask of x * A = {x * y : y in A}."""
    n, nsub = g.n, 1 << g.n
    out = []
    for x in range(n):
        sing = [1 << g.table[x][y] for y in range(n)]
        row = [0] * nsub
        for a in range(1, nsub):
            low = a & -a
            row[a] = row[a ^ low] | sing[low.bit_length() - 1]
        out.append(tuple(row))
    return tuple(out)


def preimage_shift(g: Groupoid, x: int, mask: int) -> int:
    """The set {y : x * y in A}; may be empty."""
    if not 0 <= x < g.n:
        raise InputError(f"element index {x} out of range [0, {g.n})")
    if not 0 <= mask < (1 << g.n):
        raise InputError(f"subset mask {mask} out of range")
    return _preimage_table(g)[x][mask]


def image_shift(g: Groupoid, x: int, mask: int) -> int:
    """The set x * A = {x * y : y in A}."""
    if not 0 <= x < g.n:
        raise InputError(f"element index {x} out of range [0, {g.n})")
    if not 0 < mask < (1 << g.n):
        raise InputError(f"subset mask {mask} out of range or empty")
    return _image_table(g)[x][mask]


def _require_carrier(g: Groupoid, *hs: Hyperspace) -> None:
    for h in hs:
        if h.n != g.n:
            raise InputError(f"carrier mismatch: groupoid has {g.n}, hyperspace {h.n}")


def left_shift(g: Groupoid, a: int, f: Hyperspace) -> Hyperspace:
    """a * F, generated by the images a * M of the minimal sets of F."""
    _require_carrier(g, f)
    img = _image_table(g)
    if not 0 <= a < g.n:
        raise InputError(f"element index {a} out of range [0, {g.n})")
    return generate(g.n, [img[a][m] for m in f.minimal_sets()])


def selector_count(u: Hyperspace, v: Hyperspace) -> int:
    """Number of selector families product_via_base would enumerate."""
    m = len(v.minimal_sets())
    return sum(m ** bin(um).count("1") for um in u.minimal_sets())


def product(g: Groupoid, u: Hyperspace, v: Hyperspace) -> Hyperspace:
    """U o V = {A : {x : x^-1 A in V} in U}."""
    _require_carrier(g, u, v)
    pre = _preimage_table(g)
    n, ub, vb = g.n, u.bits, v.bits
    w = 0
    for a in range(1, 1 << n):
        s = 0
        for x in range(n):
            if (vb >> pre[x][a]) & 1:
                s |= 1 << x
        if (ub >> s) & 1:
            w |= 1 << a
    return Hyperspace._raw(n, w)


def product_transform(g: Groupoid, v: Hyperspace) -> list[int]:
    """t[A] = mask {x : x^-1 A in V}, so that (U o V).bits gathers U.bits at t.

    The right translation by V is the same subset-gather for every U; batch
    table builders exploit this.
    """
    _require_carrier(g, v)
    pre = _preimage_table(g)
    n, vb = g.n, v.bits
    out = [0] * (1 << n)
    for a in range(1, 1 << n):
        s = 0
        for x in range(n):
            if (vb >> pre[x][a]) & 1:
                s |= 1 << x
        out[a] = s
    return out


def product_via_base(g: Groupoid, u: Hyperspace, v: Hyperspace,
                     budget: int = VIA_BASE_BUDGET) -> Hyperspace:
    """Oracle form of the product: closure of all unions of x * V_x.

    U ranges over the minimal sets of U and each V_x independently over the
    minimal sets of V; all selector families are enumerated exactly. Refuses
    instances whose selector count exceeds `budget`.
    """
    _require_carrier(g, u, v)
    count = selector_count(u, v)
    if count > budget:
        raise BudgetExceeded(
            f"product_via_base would enumerate {count} selector families "
            f"(budget {budget})")
    img = _image_table(g)
    vmins = v.minimal_sets()
    base = []
    for um in u.minimal_sets():
        xs = [i for i in range(g.n) if (um >> i) & 1]
        for choice in itertools.product(vmins, repeat=len(xs)):
            acc = 0
            for x, vx in zip(xs, choice):
                acc |= img[x][vx]
            base.append(acc)
    return generate(g.n, base)


def induced_map(mapping, g1: Groupoid, g2: Groupoid, f: Hyperspace,
                require_homomorphism: bool = False) -> Hyperspace:
    """Push a hyperspace forward along a carrier map (generate over images)."""
    _require_carrier(g1, f)
    mapping = list(mapping)
    if len(mapping) != g1.n or any(not 0 <= m < g2.n for m in mapping):
        raise InputError("mapping must send the first carrier into the second")
    if require_homomorphism and not is_homomorphism(g1, g2, mapping):
        raise InputError("mapping is not a homomorphism")
    base = []
    for m in f.minimal_sets():
        img = 0
        for i in range(g1.n):
            if (m >> i) & 1:
                img |= 1 << mapping[i]
        base.append(img)
    return generate(g2.n, base)
