"""Inclusion hyperspaces over a finite carrier.

An inclusion hyperspace is a non-empty, upward-closed family of non-empty
subsets of the carrier {0, .., n-1}. A subset is an n-bit mask; a hyperspace
is a 2^n-bit membership vector indexed by mask value (bit A set iff the
subset with mask A belongs to the family). The vector is the canonical
identity: equality, hashing, and all report ordering compare it directly.

The bit at position 0 (the empty set) is permanently zero, and the bit at
position 2^n - 1 (the full carrier) is permanently one.
"""

from __future__ import annotations

from typing import Iterator

from .errors import InputError
from .groupoids import MAX_CARRIER, MAX_ENUM_CARRIER


def subset_mask(n: int, elements) -> int:
    """Mask for a collection of element indices."""
    m = 0
    for e in elements:
        if not 0 <= e < n:
            raise InputError(f"element index {e} out of range [0, {n})")
        m |= 1 << e
    return m


def mask_elements(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def _check_carrier(n: int) -> None:
    if not 1 <= n <= MAX_CARRIER:
        raise InputError(f"carrier size must be in [1, {MAX_CARRIER}], got {n}")


class Hyperspace:
    """Immutable monotone family of non-empty subsets of an n-element carrier."""

    __slots__ = ("n", "bits", "_mins")

    def __init__(self, n: int, bits: int):
        _check_carrier(n)
        full = (1 << n) - 1
        if bits & 1:
            raise InputError("the empty set cannot be a member")
        if not (bits >> full) & 1:
            raise InputError("the full carrier must be a member (family non-empty)")
        if bits >> (1 << n):
            raise InputError("membership vector has bits beyond 2^n positions")
        for a in range(1, full):
            if (bits >> a) & 1:
                for i in range(n):
                    if not (a >> i) & 1 and not (bits >> (a | (1 << i))) & 1:
                        raise InputError(
                            f"family not upward closed: {a:b} in, {a | (1 << i):b} out")
        self.n = n
        self.bits = bits
        self._mins = None

    @classmethod
    def _raw(cls, n: int, bits: int) -> "Hyperspace":
        """Trusted constructor skipping the monotonicity scan."""
        h = object.__new__(cls)
        h.n = n
        h.bits = bits
        h._mins = None
        return h

    # -- membership ---------------------------------------------------------

    def __contains__(self, mask: int) -> bool:
        return bool((self.bits >> mask) & 1)

    def members(self) -> Iterator[int]:
        """All member masks in ascending mask order."""
        bits = self.bits
        for a in range(1, 1 << self.n):
            if (bits >> a) & 1:
                yield a

    def member_count(self) -> int:
        return bin(self.bits).count("1")

    def minimal_sets(self) -> tuple[int, ...]:
        """The canonical antichain base: inclusion-minimal members, ascending."""
        if self._mins is None:
            bits = self.bits
            mins = []
            for a in range(1, 1 << self.n):
                if (bits >> a) & 1 and all(
                        not (bits >> (a ^ (1 << i))) & 1
                        for i in range(self.n) if (a >> i) & 1):
                    mins.append(a)
            self._mins = tuple(mins)
        return self._mins

    def support(self) -> int:
        """Union of the minimal sets (the smallest carrier subset the family lives on)."""
        s = 0
        for m in self.minimal_sets():
            s |= m
        return s

    # -- lattice and transversality -----------------------------------------

    def __and__(self, other: "Hyperspace") -> "Hyperspace":
        if self.n != other.n:
            raise InputError("carrier mismatch")
        return Hyperspace._raw(self.n, self.bits & other.bits)

    def __or__(self, other: "Hyperspace") -> "Hyperspace":
        if self.n != other.n:
            raise InputError("carrier mismatch")
        return Hyperspace._raw(self.n, self.bits | other.bits)

    def transversal(self) -> "Hyperspace":
        """Sets meeting every member: E in F^T iff the complement of E is not in F."""
        nsub = 1 << self.n
        comp = ~self.bits & ((1 << nsub) - 1)
        # bit A of the result is bit (full - A) of comp, i.e. the reversed string
        rev = format(comp, f"0{nsub}b")[::-1]
        return Hyperspace._raw(self.n, int(rev, 2))

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Hyperspace)
                and self.n == other.n and self.bits == other.bits)

    def __hash__(self):
        return hash((self.n, self.bits))

    def __lt__(self, other: "Hyperspace"):
        return (self.n, self.bits) < (other.n, other.bits)

    def __repr__(self):
        sets = ",".join("{" + ",".join(map(str, mask_elements(m))) + "}"
                        for m in self.minimal_sets())
        return f"<{sets}>"


# -- constructors -------------------------------------------------------------

def generate(n: int, base) -> Hyperspace:
    """Upward closure of a base: A is a member iff some base set is a subset of A."""
    _check_carrier(n)
    base = list(base)
    if not base:
        raise InputError("base must contain at least one set")
    nsub = 1 << n
    seed = 0
    for b in base:
        if b == 0:
            raise InputError("base sets must be non-empty")
        if not 0 < b < nsub:
            raise InputError(f"base mask {b} out of range")
        seed |= 1 << b
    bits = 0
    for a in range(1, nsub):
        if (seed >> a) & 1:
            bits |= 1 << a
            continue
        for i in range(n):
            if (a >> i) & 1 and (bits >> (a ^ (1 << i))) & 1:
                bits |= 1 << a
                break
    return Hyperspace._raw(n, bits)


def principal(n: int, x: int) -> Hyperspace:
    """The principal ultrafilter of a point: all sets containing x."""
    _check_carrier(n)
    if not 0 <= x < n:
        raise InputError(f"element index {x} out of range [0, {n})")
    return generate(n, [1 << x])


def smallest(n: int) -> Hyperspace:
    """min G(X) = {X}."""
    _check_carrier(n)
    full = (1 << n) - 1
    return Hyperspace._raw(n, 1 << full)


def largest(n: int) -> Hyperspace:
    """max G(X) = all non-empty subsets."""
    _check_carrier(n)
    nsub = 1 << n
    return Hyperspace._raw(n, ((1 << nsub) - 1) & ~1)


# -- spec-surface wrappers ----------------------------------------------------

def lattice_combine(op: str, u: Hyperspace, v: Hyperspace) -> Hyperspace:
    if op == "meet":
        return u & v
    if op == "join":
        return u | v
    raise InputError(f"unknown lattice op {op!r}; use 'meet' or 'join'")


def meet(u: Hyperspace, v: Hyperspace) -> Hyperspace:
    return u & v


def join(u: Hyperspace, v: Hyperspace) -> Hyperspace:
    return u | v


def transversal(f: Hyperspace) -> Hyperspace:
    return f.transversal()


def minimal_sets(f: Hyperspace) -> tuple[int, ...]:
    return f.minimal_sets()


def support(f: Hyperspace) -> int:
    return f.support()


# -- exhaustive enumeration ----------------------------------------------------

def iter_upset_bits(n: int, prefix_bits: int | None = None,
                    next_mask: int | None = None) -> Iterator[int]:
    """Membership vectors of all hyperspaces on n points, ascending.

    Masks are decided from 2^n - 2 down to 1 (the full carrier is preset,
    the empty set excluded), absent branch before present; a mask may be
    included only when all its immediate supersets already are. This emits
    every upward-closed family exactly once in ascending vector order.

    `prefix_bits`/`next_mask` resume from a partial assignment where all
    masks above `next_mask` were already decided into `prefix_bits`; used
    to shard the enumeration across workers.
    """
    full = (1 << n) - 1
    imm_sup = [[m | (1 << i) for i in range(n) if not (m >> i) & 1]
               for m in range(full)]
    if prefix_bits is None:
        prefix_bits = 1 << full
        next_mask = full - 1
    stack = [(next_mask, prefix_bits)]
    while stack:
        m, bits = stack.pop()
        while m >= 1:
            if all((bits >> s) & 1 for s in imm_sup[m]):
                stack.append((m - 1, bits | (1 << m)))
            m -= 1
        yield bits


def enumerate_all(n: int) -> Iterator[Hyperspace]:
    """Every inclusion hyperspace on n points, in ascending canonical order."""
    if not 1 <= n <= MAX_ENUM_CARRIER:
        raise InputError(
            f"full enumeration supports carrier sizes 1..{MAX_ENUM_CARRIER}, got {n}")
    for bits in iter_upset_bits(n):
        yield Hyperspace._raw(n, bits)


def enumeration_shards(n: int, depth: int) -> list[tuple[int, int]]:
    """Partial assignments (prefix_bits, next_mask) after `depth` decisions.

    Returned in ascending prefix order, so concatenating shard outputs in
    list order preserves the global ascending enumeration order.
    """
    full = (1 << n) - 1
    depth = max(0, min(depth, full - 1))
    shards = [((1 << full), full - 1)]
    for _ in range(depth):
        nxt = []
        for bits, m in shards:
            if m < 1:
                nxt.append((bits, m))
                continue
            nxt.append((bits, m - 1))
            if all((bits >> (m | (1 << i))) & 1 for i in range(n) if not (m >> i) & 1):
                nxt.append((bits | (1 << m), m - 1))
        shards = sorted(nxt)
    return shards


# -- CLI literal syntax ---------------------------------------------------------

def format_hyperspace(f: Hyperspace, names) -> str:
    """Render minimal sets in literal syntax, e.g. `<[0,1],[2]>`."""
    parts = []
    for m in f.minimal_sets():
        parts.append("[" + ",".join(names[i] for i in mask_elements(m)) + "]")
    return "<" + ",".join(parts) + ">"


def parse_hyperspace(text: str, n: int, names) -> Hyperspace:
    """Parse the literal syntax back into a hyperspace over the given carrier."""
    s = text.strip()
    if not (s.startswith("<") and s.endswith(">")):
        raise InputError(f"hyperspace literal must look like <[..],[..]>: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise InputError("hyperspace literal needs at least one base set")
    pos = {name: i for i, name in enumerate(names)}
    base = []
    i = 0
    while i < len(body):
        if body[i] != "[":
            raise InputError(f"expected '[' at position {i} in {text!r}")
        j = body.find("]", i)
        if j < 0:
            raise InputError(f"unclosed '[' in {text!r}")
        mask = 0
        for tok in body[i + 1:j].split(","):
            tok = tok.strip()
            if tok not in pos:
                raise InputError(f"unknown element {tok!r} in {text!r}")
            mask |= 1 << pos[tok]
        if mask == 0:
            raise InputError(f"empty base set in {text!r}")
        base.append(mask)
        i = j + 1
        if i < len(body):
            if body[i] != ",":
                raise InputError(f"expected ',' between sets in {text!r}")
            i += 1
            if i == len(body):
                raise InputError(f"trailing ',' in {text!r}")
    return generate(n, base)
