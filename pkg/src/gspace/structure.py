"""Semigroup-theoretic analysis of G(X) and its sub-semigroups.

Everything here works on an explicit SemigroupView (element list plus
composition table). Cancelability, zeros, ideals and the like are decided
by brute force on the table; the classical characterizations then become
checkable statements in the test suite instead of implementation shortcuts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .classify import is_shift_invariant, maximal_linked_families
from .errors import BudgetExceeded, InputError
from .groupoids import Groupoid
from .hyperspaces import (Hyperspace, enumerate_all, generate, largest,
                          principal, smallest)
from .products import _image_table, _preimage_table, product

SECTION_BUDGET = 10 ** 7
_BATCH_THRESHOLD = 2_000_000


@dataclass(frozen=True)
class SemigroupView:
    """A finite magma extracted from G(X): elements and their composition table.

    Quotient views carry labels instead of hyperspace elements; `table`
    entries index the element list, -1 marking a product that escaped.
    """
    groupoid: Groupoid
    elements: tuple[Hyperspace, ...] | None
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    closed: bool
    escape: Optional[tuple[int, int, Hyperspace]] = None

    @property
    def size(self) -> int:
        return len(self.table)

    def is_associative(self) -> bool:
        if not self.closed:
            raise InputError("associativity needs a closed view")
        t = self.table
        rng = range(self.size)
        return all(t[t[i][j]][k] == t[i][t[j][k]]
                   for i in rng for j in rng for k in rng)

    def index_of(self, h: Hyperspace) -> int:
        if self.elements is None:
            raise InputError("quotient views have no hyperspace elements")
        try:
            return self.elements.index(h)
        except ValueError:
            raise InputError(f"{h!r} is not an element of this view") from None


def subsemigroup_view(g: Groupoid, elements) -> SemigroupView:
    """Composition table over the given hyperspaces; flags the first escape."""
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise InputError("view elements must be distinct")
    for h in elements:
        if h.n != g.n:
            raise InputError("carrier mismatch in view elements")
    m = len(elements)
    if m == 0:
        raise InputError("view needs at least one element")
    if m * m * (1 << g.n) >= _BATCH_THRESHOLD and g.n <= 6:
        from ._batch import build_table
        table, escape = build_table(g, list(elements))
    else:
        index = {h.bits: i for i, h in enumerate(elements)}
        table = []
        escape = None
        for i, u in enumerate(elements):
            row = []
            for j, v in enumerate(elements):
                p = product(g, u, v)
                k = index.get(p.bits, -1)
                if k < 0 and escape is None:
                    escape = (i, j, p)
                row.append(k)
            table.append(row)
    closed = escape is None
    return SemigroupView(
        groupoid=g,
        elements=elements,
        labels=tuple(repr(h) for h in elements),
        table=tuple(tuple(r) for r in table),
        closed=closed,
        escape=escape)


def full_view(g: Groupoid) -> SemigroupView:
    """The view of all of G(X); carrier-capped by enumeration limits."""
    return subsemigroup_view(g, sorted(enumerate_all(g.n)))


# -- special elements --------------------------------------------------------

@dataclass(frozen=True)
class SpecialElements:
    idempotents: tuple[int, ...]
    left_zeros: tuple[int, ...]
    right_zeros: tuple[int, ...]
    zeros: tuple[int, ...]
    identity: int | None
    left_cancelable: tuple[int, ...]
    right_cancelable: tuple[int, ...]


def special_elements(view: SemigroupView) -> SpecialElements:
    if not view.closed:
        raise InputError("special_elements needs a closed view")
    t = view.table
    m = view.size
    rng = range(m)
    idem = tuple(i for i in rng if t[i][i] == i)
    lz = tuple(i for i in rng if all(t[i][j] == i for j in rng))
    rz = tuple(i for i in rng if all(t[j][i] == i for j in rng))
    zeros = tuple(i for i in lz if i in rz)
    ident = next((e for e in rng if all(t[e][x] == x == t[x][e] for x in rng)), None)
    lc = tuple(i for i in rng if len(set(t[i])) == m)
    rc = tuple(j for j in rng if len({t[i][j] for i in rng}) == m)
    return SpecialElements(idem, lz, rz, zeros, ident, lc, rc)


def center(view: SemigroupView) -> tuple[int, ...]:
    """Elements commuting with every element of the view."""
    if not view.closed:
        raise InputError("center needs a closed view")
    t = view.table
    rng = range(view.size)
    return tuple(i for i in rng if all(t[i][j] == t[j][i] for j in rng))


def center_of_gx(g: Groupoid, samples: int = 200, seed: int = 7) -> list[Hyperspace]:
    """Center of the full G(X) semigroup for a quasigroup carrier.

    Runs the extremal-element criterion instead of materializing G(X): an
    element commuting with min and max G(X) must be principal, so only the
    principal hyperspaces are candidates; a principal commutes with
    everything iff its point is central in X. Random non-principal samples
    double-check the criterion on the way.
    """
    if not g.quasigroup:
        raise InputError("the extremal-element criterion needs a quasigroup")
    rnd = random.Random(seed)
    xcenter = set(g.center())
    out = []
    probes = [smallest(g.n), largest(g.n)] + [principal(g.n, x) for x in range(g.n)]
    for _ in range(samples):
        base = [rnd.randrange(1, 1 << g.n) for _ in range(rnd.randint(1, 3))]
        probes.append(generate(g.n, base))
    for c in range(g.n):
        p = principal(g.n, c)
        if c not in xcenter:
            continue
        if all(product(g, p, q) == product(g, q, p) for q in probes):
            out.append(p)
    return out


# -- shift-invariant core -------------------------------------------------------

def shift_invariant_core(g: Groupoid, fallback_limit: int = 200_000) -> list[Hyperspace]:
    """All shift-invariant hyperspaces (the right zeros of G(X)), ascending.

    Shift-invariance is a per-member condition, so the invariant families are
    exactly the unions of reachability closures (close each subset under
    supersets, x * A, and x^-1 A; a closure hitting the empty set poisons
    every family containing its seed). Falls back to census filtering if the
    union lattice grows past `fallback_limit`.
    """
    n = g.n
    if n > 6:
        raise InputError("shift-invariant core needs carrier <= 6")
    img, pre = _image_table(g), _preimage_table(g)
    nsub = 1 << n
    closures = set()
    for seed in range(1, nsub):
        seen = 1 << seed
        stack = [seed]
        poisoned = False
        while stack:
            a = stack.pop()
            nxt = [img[x][a] for x in range(n)] + [pre[x][a] for x in range(n)]
            nxt += [a | (1 << i) for i in range(n) if not (a >> i) & 1]
            for b in nxt:
                if b == 0:
                    poisoned = True
                    stack = []
                    break
                if not (seen >> b) & 1:
                    seen |= 1 << b
                    stack.append(b)
        if not poisoned:
            closures.add(seen)
    families = {0}
    for c in sorted(closures):
        families |= {f | c for f in families}
        if len(families) > fallback_limit:
            return [f for f in enumerate_all(n) if is_shift_invariant(g, f)]
    families.discard(0)
    return sorted(Hyperspace._raw(n, b) for b in families)


# -- ideals ----------------------------------------------------------------------

def _principal_two_sided_ideal(t, x: int) -> frozenset[int]:
    m = len(t)
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for s in range(m):
            for p in (t[s][y], t[y][s]):
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
    return frozenset(seen)


def minimal_ideal(view: SemigroupView) -> tuple[int, ...]:
    """The kernel: smallest two-sided ideal of an associative closed view.

    Computed by descending through principal two-sided ideals until none of
    the members generates a strictly smaller one; a minimal principal
    two-sided ideal is the intersection of them all (tested directly on
    small views).
    """
    if not view.closed:
        raise InputError("minimal_ideal needs a closed view")
    if not view.is_associative():
        raise InputError(
            "minimal_ideal needs an associative view; use the one-sided reports")
    t = view.table
    current = _principal_two_sided_ideal(t, 0)
    changed = True
    while changed:
        changed = False
        for y in current:
            cand = _principal_two_sided_ideal(t, y)
            if len(cand) < len(current):
                current = cand
                changed = True
                break
    return tuple(sorted(current))


def _minimal_among(ideals) -> list[tuple[int, ...]]:
    distinct = sorted(set(ideals), key=lambda s: (len(s), sorted(s)))
    out = []
    for i, s in enumerate(distinct):
        if not any(o < s for o in distinct[:i]):
            out.append(tuple(sorted(s)))
    return sorted(out)


def minimal_left_ideals(view: SemigroupView) -> list[tuple[int, ...]]:
    """Inclusion-minimal principal left ideals {x} u S*x."""
    if not view.closed:
        raise InputError("minimal_left_ideals needs a closed view")
    t = view.table
    m = view.size
    ideals = [frozenset({x} | {t[s][x] for s in range(m)}) for x in range(m)]
    return _minimal_among(ideals)


def minimal_right_ideals(view: SemigroupView) -> list[tuple[int, ...]]:
    if not view.closed:
        raise InputError("minimal_right_ideals needs a closed view")
    t = view.table
    m = view.size
    ideals = [frozenset({x} | {t[x][s] for s in range(m)}) for x in range(m)]
    return _minimal_among(ideals)


# -- orbits and quotients ----------------------------------------------------------

@dataclass(frozen=True)
class OrbitDecomposition:
    view: SemigroupView
    orbits: tuple[tuple[int, ...], ...]     # element indices, each sorted
    orbit_of: tuple[int, ...]               # element index -> orbit index
    representatives: tuple[int, ...]        # canonical member per orbit
    quotient: SemigroupView


def orbits(g: Groupoid, elements) -> OrbitDecomposition:
    """Right-action orbit partition and the induced quotient semigroup.

    Requires a group carrier, a product-closed element set that is closed
    under right shifts by points, and verifies quotient well-definedness
    (representatives shifted on the left land in the expected orbit) instead
    of assuming it.
    """
    if not g.is_group():
        raise InputError("orbit decomposition needs a group carrier")
    view = subsemigroup_view(g, elements)
    if not view.closed:
        i, j, p = view.escape
        raise InputError(f"element set not closed under the product: "
                         f"{view.labels[i]} o {view.labels[j]} = {p!r}")
    elems = view.elements
    index = {h.bits: i for i, h in enumerate(elems)}
    m = len(elems)
    points = [principal(g.n, h) for h in range(g.n)]
    shift = []  # shift[i][h] = index of elems[i] o <h>
    for i, u in enumerate(elems):
        row = []
        for ph in points:
            p = product(g, u, ph)
            k = index.get(p.bits, -1)
            if k < 0:
                raise InputError(f"element set not closed under right shifts: "
                                 f"{view.labels[i]} o point -> {p!r}")
            row.append(k)
        shift.append(row)
    orbit_of = [-1] * m
    orbs = []
    for i in range(m):
        if orbit_of[i] >= 0:
            continue
        members = sorted(set(shift[i]) | {i})
        oi = len(orbs)
        for x in members:
            orbit_of[x] = oi
        orbs.append(tuple(members))
    reps = tuple(o[0] for o in orbs)
    t = view.table
    qtab = [[orbit_of[t[a][b]] for b in reps] for a in reps]
    # well-definedness: shifting the left factor must not move the product's orbit
    for ia, a in enumerate(reps):
        for ib, b in enumerate(reps):
            want = qtab[ia][ib]
            for ha in shift[a]:
                if orbit_of[t[ha][b]] != want:
                    raise InputError(
                        "quotient multiplication ill-defined: the orbit "
                        "relation is not a congruence (the carrier must be "
                        "a commutative group for point shifts to slide past "
                        "the left factor)")
    quotient = SemigroupView(
        groupoid=g,
        elements=None,
        labels=tuple(f"orbit({view.labels[r]})" for r in reps),
        table=tuple(tuple(r) for r in qtab),
        closed=True)
    return OrbitDecomposition(
        view=view,
        orbits=tuple(orbs),
        orbit_of=tuple(orbit_of),
        representatives=reps,
        quotient=quotient)


# -- transversal sections -----------------------------------------------------------

@dataclass(frozen=True)
class SectionSearch:
    decomposition: OrbitDecomposition
    sections: tuple[tuple[int, ...], ...]   # element indices, sorted per section
    nodes: int


def find_sections(g: Groupoid, elements, budget: int = SECTION_BUDGET) -> SectionSearch:
    """All product-closed systems of one representative per orbit.

    Such a system is exactly the image of a homomorphic section of the
    quotient map. Backtracking over orbits (smallest first) with forced
    propagation: once two representatives are chosen, their product pins the
    representative of its own orbit. Node count is capped by `budget`.
    """
    dec = orbits(g, elements)
    t = dec.view.table
    orbit_of = dec.orbit_of
    order = sorted(range(len(dec.orbits)),
                   key=lambda oi: (len(dec.orbits[oi]), dec.orbits[oi][0]))
    chosen: dict[int, int] = {}
    sections: list[tuple[int, ...]] = []
    nodes = 0

    def propagate(new_elems: list[int]) -> tuple[list[int], bool]:
        nonlocal nodes
        trail: list[int] = []
        stack = list(new_elems)
        while stack:
            x = stack.pop()
            for y in list(chosen.values()):
                for p in (t[x][y], t[y][x]):
                    nodes += 1
                    if nodes > budget:
                        raise BudgetExceeded(
                            f"section search exceeded {budget} nodes")
                    o = orbit_of[p]
                    cur = chosen.get(o)
                    if cur is None:
                        chosen[o] = p
                        trail.append(o)
                        stack.append(p)
                    elif cur != p:
                        return trail, False
        return trail, True

    def walk(pos: int) -> None:
        nonlocal nodes
        while pos < len(order) and order[pos] in chosen:
            pos += 1
        if pos == len(order):
            sections.append(tuple(sorted(chosen.values())))
            return
        oi = order[pos]
        for cand in dec.orbits[oi]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"section search exceeded {budget} nodes")
            chosen[oi] = cand
            trail, ok = propagate([cand])
            if ok:
                walk(pos + 1)
            for o in trail:
                del chosen[o]
            del chosen[oi]

    walk(0)
    for sec in sections:
        assert len({orbit_of[x] for x in sec}) == len(dec.orbits)
        assert all(t[a][b] in sec for a in sec for b in sec)
    return SectionSearch(decomposition=dec, sections=tuple(sorted(sections)), nodes=nodes)


def section_view(search: SectionSearch, section: tuple[int, ...]) -> SemigroupView:
    """A found section as its own closed SemigroupView."""
    dec = search.decomposition
    elems = [dec.view.elements[i] for i in section]
    return subsemigroup_view(dec.view.groupoid, elems)


# -- isomorphism -----------------------------------------------------------------

def _refine_colors(t) -> list[int]:
    m = len(t)
    colors = [int(t[i][i] == i) for i in range(m)]
    for _ in range(m):
        sigs = [
            (colors[i],
             tuple(sorted((colors[j], colors[t[i][j]], colors[t[j][i]])
                          for j in range(m))))
            for i in range(m)
        ]
        palette = {s: c for c, s in enumerate(sorted(set(sigs)))}
        nxt = [palette[s] for s in sigs]
        if nxt == colors:
            break
        colors = nxt
    return colors


def are_isomorphic(v1: SemigroupView, v2: SemigroupView) -> tuple[int, ...] | None:
    """A table-preserving bijection as a tuple (i -> image index), or None."""
    if not (v1.closed and v2.closed):
        raise InputError("isomorphism search needs closed views")
    t1, t2 = v1.table, v2.table
    m = len(t1)
    if len(t2) != m:
        return None
    c1, c2 = _refine_colors(t1), _refine_colors(t2)
    if sorted(c1) != sorted(c2):
        return None
    candidates = [[j for j in range(m) if c2[j] == c1[i]] for i in range(m)]
    order = sorted(range(m), key=lambda i: len(candidates[i]))
    image = [-1] * m
    used = [False] * m

    def extend(pos: int) -> bool:
        if pos == m:
            return True
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            image[i] = j
            used[j] = True
            ok = True
            for k in order[:pos + 1]:
                a, b = image[t1[i][k]], image[t1[k][i]]
                if (a >= 0 and t2[image[i]][image[k]] != a) or \
                   (b >= 0 and t2[image[k]][image[i]] != b):
                    ok = False
                    break
            if ok and extend(pos + 1):
                return True
            used[j] = False
            image[i] = -1
        return False

    if extend(0):
        return tuple(image)
    return None


# -- right cancelability certificates -----------------------------------------------

@dataclass(frozen=True)
class CancelCertificate:
    right_cancelable: bool | None   # None when no scope was available
    scope: str                      # what the brute-force ran over
    translates_distinct: bool       # the points x o F are pairwise distinct
    disjoint_family: tuple[int, ...] | None  # S_x per point, or None


def right_cancelable_certificate(g: Groupoid, f: Hyperspace,
                                 within: SemigroupView | None = None) -> CancelCertificate:
    """Brute-force right cancelability plus the two classical conditions.

    (a) injectivity of Y -> Y o F over all of G(X) (carrier <= 4) or over a
    supplied sub-semigroup; (b) pairwise distinctness of the point shifts
    x o F; (c) existence of sets S_x in F n F^T with pairwise disjoint
    translates x * S_x, found by exhaustive backtracking.
    """
    if f.n != g.n:
        raise InputError("carrier mismatch")
    if within is not None:
        pool = list(within.elements)
        scope = f"subsemigroup({len(pool)})"
    elif g.n <= 4:
        pool = list(enumerate_all(g.n))
        scope = "G(X)"
    else:
        pool = None
        scope = "skipped (carrier > 4 and no sub-semigroup supplied)"
    cancelable = None
    if pool is not None:
        seen = {}
        cancelable = True
        for y in pool:
            p = product(g, y, f).bits
            if p in seen:
                cancelable = False
                break
            seen[p] = y
    shifts = [product(g, principal(g.n, x), f).bits for x in range(g.n)]
    translates_distinct = len(set(shifts)) == g.n
    img = _image_table(g)
    inter = f & f.transversal()
    members = list(inter.members())
    family: tuple[int, ...] | None = None
    chosen: list[int] = []

    def search(x: int, used: int) -> bool:
        nonlocal family
        if x == g.n:
            family = tuple(chosen)
            return True
        for s in members:
            tr = img[x][s]
            if tr & used:
                continue
            chosen.append(s)
            if search(x + 1, used | tr):
                return True
            chosen.pop()
        return False

    search(0, 0)
    return CancelCertificate(
        right_cancelable=cancelable,
        scope=scope,
        translates_distinct=translates_distinct,
        disjoint_family=family)


def lambda_view(g: Groupoid) -> SemigroupView:
    """The maximal-linked families of the carrier as a closed view."""
    return subsemigroup_view(g, maximal_linked_families(g.n))
