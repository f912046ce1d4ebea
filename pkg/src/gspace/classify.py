"""Membership predicates for the distinguished families and class censuses.

k-linked: every at most k members share a point (checked on minimal sets).
centered: all members share a point. filter: closed under intersection,
which on a finite carrier means a single minimal set; ultrafilters are the
principal hyperspaces. Maximality is decided by single-set extensions: the
classes here are closed under unions of chains, so a family is maximal iff
no one additional set keeps the property (asserted against the brute-force
definition in the tests).
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass, field

from .errors import InputError
from .groupoids import MAX_ENUM_CARRIER, Groupoid
from .hyperspaces import Hyperspace, enumeration_shards, generate, iter_upset_bits
from .products import _image_table, _preimage_table

CLASS_TOKENS = ("all", "filters", "ultrafilters", "linked", "centered",
                "maxlinked", "shiftinv")


def _intersect(masks) -> int:
    acc = -1
    for m in masks:
        acc &= m
    return acc


def is_k_linked(f: Hyperspace, k: int) -> bool:
    """Every subfamily of at most k members has a common point."""
    if k < 1:
        raise InputError("k must be at least 1")
    mins = f.minimal_sets()
    t = min(k, len(mins))
    return all(_intersect(c) != 0 for c in itertools.combinations(mins, t))


def is_centered(f: Hyperspace) -> bool:
    return _intersect(f.minimal_sets()) != 0


def is_filter(f: Hyperspace) -> bool:
    return len(f.minimal_sets()) == 1


def is_ultrafilter(f: Hyperspace) -> bool:
    mins = f.minimal_sets()
    return len(mins) == 1 and bin(mins[0]).count("1") == 1


def is_self_transversal(f: Hyperspace) -> bool:
    return f.bits == f.transversal().bits


def is_maximal_k_linked(f: Hyperspace, k: int) -> bool:
    """k-linked with no single-set extension staying k-linked.

    Adding A keeps the family k-linked iff A meets every intersection of
    at most k-1 minimal sets; subfamilies avoiding A were k-linked already.
    """
    if not is_k_linked(f, k):
        return False
    mins = f.minimal_sets()
    t = min(k - 1, len(mins))
    inters = [_intersect(c) & ((1 << f.n) - 1)
              for c in itertools.combinations(mins, t)]
    bits = f.bits
    for a in range(1, 1 << f.n):
        if (bits >> a) & 1:
            continue
        if all(i & a for i in inters):
            return False
    return True


def is_shift_invariant(g: Groupoid, f: Hyperspace) -> bool:
    """x * A and x^-1 A stay in the family for every member A and every x."""
    if f.n != g.n:
        raise InputError(f"carrier mismatch: groupoid has {g.n}, hyperspace {f.n}")
    img, pre = _image_table(g), _preimage_table(g)
    bits = f.bits
    for m in f.minimal_sets():
        for x in range(g.n):
            if not (bits >> img[x][m]) & 1:
                return False
            if not (bits >> pre[x][m]) & 1:
                return False
    return True


@dataclass
class ClassFlags:
    """Classification of one hyperspace; shift_invariant is None without a groupoid."""
    linked_up_to: int
    centered: bool
    filter: bool
    ultrafilter: bool
    maximal_k_linked: dict[int, bool]
    self_transversal: bool
    shift_invariant: bool | None = field(default=None)


def classify(f: Hyperspace, g: Groupoid | None = None) -> ClassFlags:
    n = f.n
    linked_up_to = 1
    for k in range(2, n + 1):
        if not is_k_linked(f, k):
            break
        linked_up_to = k
    return ClassFlags(
        linked_up_to=linked_up_to,
        centered=is_centered(f),
        filter=is_filter(f),
        ultrafilter=is_ultrafilter(f),
        maximal_k_linked={k: is_maximal_k_linked(f, k) for k in range(2, n + 1)},
        self_transversal=is_self_transversal(f),
        shift_invariant=None if g is None else is_shift_invariant(g, f),
    )


# -- class censuses --------------------------------------------------------------

def maximal_linked_families(n: int) -> list[Hyperspace]:
    """All maximal 2-linked hyperspaces, ascending.

    Characterization used: an upward-closed family is maximal linked iff it
    contains exactly one of A, X - A for every subset A. The search decides
    complementary pairs with monotone propagation; much faster than filtering
    the full census (which it matches on small carriers, see tests).
    """
    if not 1 <= n <= MAX_ENUM_CARRIER:
        raise InputError(
            f"maximal linked enumeration supports carrier sizes 1..{MAX_ENUM_CARRIER}")
    full = (1 << n) - 1
    nsub = 1 << n
    imm_sup = [[m | (1 << i) for i in range(n) if not (m >> i) & 1]
               for m in range(nsub)]
    imm_sub = [[m ^ (1 << i) for i in range(n) if (m >> i) & 1]
               for m in range(nsub)]
    pairs = sorted({(min(a, full ^ a), max(a, full ^ a)) for a in range(1, full)})
    IN, OUT = 1, 2
    state = [0] * nsub
    state[0] = OUT
    state[full] = IN
    out: list[Hyperspace] = []

    def assign(a: int, val: int, trail: list[int]) -> bool:
        stack = [(a, val)]
        while stack:
            s, v = stack.pop()
            if state[s] == v:
                continue
            if state[s] != 0:
                return False
            state[s] = v
            trail.append(s)
            stack.append((full ^ s, IN + OUT - v))
            nbrs = imm_sup[s] if v == IN else imm_sub[s]
            for t in nbrs:
                stack.append((t, v))
        return True

    def walk(i: int) -> None:
        if i == len(pairs):
            bits = 0
            for m in range(1, nsub):
                if state[m] == IN:
                    bits |= 1 << m
            out.append(Hyperspace._raw(n, bits))
            return
        a, b = pairs[i]
        if state[a] != 0:
            walk(i + 1)
            return
        for side in (a, b):
            trail: list[int] = []
            if assign(side, IN, trail):
                walk(i + 1)
            for t in trail:
                state[t] = 0

    walk(0)
    out.sort()
    return out


def _class_predicate(token: str, k: int | None, g: Groupoid | None):
    if token == "all":
        return lambda f: True
    if token == "centered":
        return is_centered
    if token == "linked":
        if k is None or k < 2:
            raise InputError("linked:k needs k >= 2")
        return lambda f: is_k_linked(f, k)
    if token == "maxlinked":
        if k is None or k < 2:
            raise InputError("maxlinked:k needs k >= 2")
        return lambda f: is_maximal_k_linked(f, k)
    if token == "shiftinv":
        if g is None:
            raise InputError("shiftinv needs a groupoid")
        return lambda f: is_shift_invariant(g, f)
    raise InputError(f"unknown class token {token!r}")


def parse_class_token(spec: str) -> tuple[str, int | None]:
    """Split a CLI class token like `linked:3` into (name, k)."""
    name, _, karg = spec.partition(":")
    if name not in CLASS_TOKENS:
        raise InputError(f"unknown class {spec!r}; tokens: "
                         "all|filters|ultrafilters|linked:k|centered|maxlinked:k|shiftinv")
    if name in ("linked", "maxlinked"):
        if not karg:
            raise InputError(f"class {name} needs a bound, e.g. {name}:2")
        try:
            k = int(karg)
        except ValueError:
            raise InputError(f"bad k in class token {spec!r}") from None
        return name, k
    if karg:
        raise InputError(f"class {name} takes no bound")
    return name, None


def _filter_shard(args):
    n, prefix_bits, next_mask, token, k, gkey = args
    g = Groupoid(*gkey) if gkey is not None else None
    pred = _class_predicate(token, k, g)
    return [bits for bits in iter_upset_bits(n, prefix_bits, next_mask)
            if pred(Hyperspace._raw(n, bits))]


def enumerate_class(g: Groupoid, token: str, k: int | None = None,
                    workers: int = 1) -> list[Hyperspace]:
    """All members of a distinguished class, canonically ordered.

    Filters and ultrafilters are produced directly (every filter on a finite
    carrier is the closure of one set); maximal 2-linked via the pair search
    above; everything else by predicate filtering of the full census, sharded
    across `workers` processes when asked.
    """
    n = g.n
    if n > MAX_ENUM_CARRIER:
        raise InputError(f"class enumeration needs carrier <= {MAX_ENUM_CARRIER}")
    if token == "filters":
        return sorted(generate(n, [a]) for a in range(1, 1 << n))
    if token == "ultrafilters":
        return sorted(generate(n, [1 << x]) for x in range(n))
    if token == "maxlinked" and k == 2:
        return maximal_linked_families(n)
    if token == "maxlinked" and (k or 0) >= 3 and n > 5:
        raise InputError("maximal-k-linked censuses with k >= 3 need carrier <= 5")
    pred = _class_predicate(token, k, g)
    if workers <= 1:
        return [Hyperspace._raw(n, b) for b in iter_upset_bits(n)
                if pred(Hyperspace._raw(n, b))]
    shards = enumeration_shards(n, depth=max(2, workers.bit_length() + 1))
    gkey = None if token != "shiftinv" else (g.names, g.table, g.name)
    args = [(n, bits, nm, token, k, gkey) for bits, nm in shards]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        chunks = pool.map(_filter_shard, args)
    return [Hyperspace._raw(n, b) for chunk in chunks for b in chunk]


def census_count(n: int) -> int:
    """Number of inclusion hyperspaces on n points."""
    return sum(1 for _ in iter_upset_bits(n))
