"""Finite lattices: construction, a catalog of named instances, structural
predicates, join-irreducible posets, grid embeddings and basic binomials.

A lattice is held as an immutable object with precomputed order bitmasks and
full meet/join tables, so every predicate below is a cheap table walk.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass
from itertools import combinations

from .monomials import Binomial, Monomial

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class LatticeError(ValueError):
    """Base class for lattice construction and validation failures."""


class DuplicateName(LatticeError):
    pass


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NotPure(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class UnknownName(LatticeError):
    pass


class RedundantCovers(LatticeError):
    pass


class Lattice:
    """A finite lattice given by its (transitively reduced) cover relation.

    Attributes:
        elements: element names in their fixed construction order
        covers:   reduced cover pairs (lower, upper)
        rank:     element -> longest-chain rank, present iff the lattice is pure
    """

    __slots__ = ("elements", "covers", "rank", "_idx", "_up", "_down",
                 "_meet", "_join", "_lower", "_upper")

    def __init__(self, elements, covers, up, down, meet, join, lower, upper, rank):
        self.elements = elements
        self.covers = covers
        self.rank = rank
        self._idx = {name: i for i, name in enumerate(elements)}
        self._up = up
        self._down = down
        self._meet = meet
        self._join = join
        self._lower = lower
        self._upper = upper

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"Lattice({len(self.elements)} elements)"

    def index(self, a: str) -> int:
        try:
            return self._idx[a]
        except KeyError:
            raise UnknownName(f"unknown element {a!r}") from None

    def leq(self, a: str, b: str) -> bool:
        return bool(self._up[self.index(a)] >> self.index(b) & 1)

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def meet(self, a: str, b: str) -> str:
        return self.elements[self._meet[self.index(a)][self.index(b)]]

    def join(self, a: str, b: str) -> str:
        return self.elements[self._join[self.index(a)][self.index(b)]]

    @property
    def bottom(self) -> str:
        for i, mask in enumerate(self._down):
            if mask == 1 << i:
                return self.elements[i]
        raise AssertionError("lattice without bottom")

    @property
    def top(self) -> str:
        for i, mask in enumerate(self._up):
            if mask == 1 << i:
                return self.elements[i]
        raise AssertionError("lattice without top")

    @property
    def is_pure(self) -> bool:
        return self.rank is not None

    def lower_covers(self, a: str) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in self._lower[self.index(a)])

    def upper_covers(self, a: str) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in self._upper[self.index(a)])

    def interval(self, x: str, y: str) -> tuple[str, ...]:
        """All elements z with x <= z <= y, in element order."""
        both = self._up[self.index(x)] & self._down[self.index(y)]
        return tuple(e for i, e in enumerate(self.elements) if both >> i & 1)

    # Index-level accessors for the algorithmic modules.

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def meet_index(self, i: int, j: int) -> int:
        return self._meet[i][j]

    def join_index(self, i: int, j: int) -> int:
        return self._join[i][j]


def build_lattice(elements, covers, *, normalize: bool = False) -> Lattice:
    """Build a Lattice from element names and cover pairs (lower, upper).

    The cover set must be transitively reduced; pass normalize=True to accept
    redundant pairs with a warning.  Raises DuplicateName, NotAPoset (cycle),
    NotALattice (missing bound or meet/join) or RedundantCovers.
    """
    elements = tuple(elements)
    if not elements:
        raise NotALattice("a lattice needs at least one element")
    if len(set(elements)) != len(elements):
        raise DuplicateName("element names must be distinct")
    idx = {name: i for i, name in enumerate(elements)}
    n = len(elements)

    pairs = []
    for lower, upper in covers:
        if lower not in idx or upper not in idx:
            raise LatticeError(f"cover ({lower!r}, {upper!r}) references unknown element")
        if lower == upper:
            raise NotAPoset(f"cover ({lower!r}, {upper!r}) relates an element to itself")
        pairs.append((idx[lower], idx[upper]))

    succ = [set() for _ in range(n)]
    for i, j in pairs:
        succ[i].add(j)

    # Kahn topological sort; a leftover node means a cycle.
    indeg = [0] * n
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    topo = []
    while queue:
        i = queue.pop()
        topo.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    if len(topo) != n:
        raise NotAPoset("cover relation contains a cycle")

    up = [1 << i for i in range(n)]
    for i in reversed(topo):
        for j in succ[i]:
            up[i] |= up[j]
    down = [1 << i for i in range(n)]
    for i in range(n):
        mask = up[i]
        for j in range(n):
            if mask >> j & 1:
                down[j] |= 1 << i

    reduced = set()
    for i in range(n):
        for j in range(n):
            if i != j and up[i] >> j & 1:
                between = up[i] & down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    reduced.add((i, j))
    given = set(pairs)
    if given != reduced:
        if not normalize:
            raise RedundantCovers(
                "cover set is not transitively reduced; pass normalize=True to accept")
        warnings.warn("normalizing non-reduced cover set", stacklevel=2)

    minimal = [i for i in range(n) if down[i] == 1 << i]
    maximal = [i for i in range(n) if up[i] == 1 << i]
    full = (1 << n) - 1
    if len(minimal) != 1 or up[minimal[0]] != full:
        raise NotALattice("no unique minimal element below all others")
    if len(maximal) != 1 or down[maximal[0]] != full:
        raise NotALattice("no unique maximal element above all others")

    # z is the join of (a, b) exactly when its up-set equals the intersection
    # of theirs; the analogous fact for down-sets yields meets.
    by_up = {mask: i for i, mask in enumerate(up)}
    by_down = {mask: i for i, mask in enumerate(down)}
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            z = by_up.get(up[i] & up[j])
            if z is None:
                raise NotALattice(
                    f"elements {elements[i]!r} and {elements[j]!r} have no join")
            join[i][j] = join[j][i] = z
            w = by_down.get(down[i] & down[j])
            if w is None:
                raise NotALattice(
                    f"elements {elements[i]!r} and {elements[j]!r} have no meet")
            meet[i][j] = meet[j][i] = w

    lower = [tuple(sorted(i for i, jj in reduced if jj == j)) for j in range(n)]
    upper = [tuple(sorted(j for ii, j in reduced if ii == i)) for i in range(n)]

    height = [0] * n
    for i in topo:
        for j in upper[i]:
            height[j] = max(height[j], height[i] + 1)
    pure = all(height[j] == height[i] + 1 for (i, j) in reduced)
    rank = {elements[i]: height[i] for i in range(n)} if pure else None

    cover_names = tuple(sorted((elements[i], elements[j]) for i, j in reduced))
    return Lattice(elements, cover_names, tuple(up), tuple(down),
                   tuple(tuple(row) for row in meet),
                   tuple(tuple(row) for row in join),
                   tuple(lower), tuple(upper), rank)


def longest_chain_ranks(lattice: Lattice) -> dict[str, int]:
    """Longest-chain rank from the bottom, defined for any lattice."""
    height = {e: 0 for e in lattice.elements}
    covers_up: dict[str, list[str]] = {e: [] for e in lattice.elements}
    indeg = {e: 0 for e in lattice.elements}
    for lo, hi in lattice.covers:
        covers_up[lo].append(hi)
        indeg[hi] += 1
    queue = [e for e in lattice.elements if indeg[e] == 0]
    while queue:
        e = queue.pop()
        for f in covers_up[e]:
            height[f] = max(height[f], height[e] + 1)
            indeg[f] -= 1
            if indeg[f] == 0:
                queue.append(f)
    return height


# ---------------------------------------------------------------------------
# Catalog


def _chain(k: int) -> Lattice:
    names = [f"x{i}" for i in range(k + 1)]
    return build_lattice(names, [(names[i], names[i + 1]) for i in range(k)])


def _boolean(k: int) -> Lattice:
    names = [format(s, f"0{k}b") for s in range(1 << k)]
    names.sort(key=lambda s: (s.count("1"), s))
    covers = []
    for s in range(1 << k):
        for bit in range(k):
            if not s >> bit & 1:
                covers.append((format(s, f"0{k}b"), format(s | 1 << bit, f"0{k}b")))
    return build_lattice(names, covers)


def _divisor(n: int) -> Lattice:
    divs = sorted(d for d in range(1, n + 1) if n % d == 0)
    names = [str(d) for d in divs]
    covers = []
    for a in divs:
        for b in divs:
            if b % a == 0 and b != a:
                if not any(c != a and c != b and c % a == 0 and b % c == 0 for c in divs):
                    covers.append((str(a), str(b)))
    return build_lattice(names, covers)


def _grid(m: int, n: int) -> Lattice:
    names = [f"g{i}_{j}" for i in range(m) for j in range(n)]
    covers = []
    for i in range(m):
        for j in range(n):
            if i + 1 < m:
                covers.append((f"g{i}_{j}", f"g{i + 1}_{j}"))
            if j + 1 < n:
                covers.append((f"g{i}_{j}", f"g{i}_{j + 1}"))
    return build_lattice(names, covers)


_FIXED_CATALOG = {
    # Figure names from the source lattices: a is the top in all four.
    "diamond": ("abcde", [("b", "a"), ("c", "a"), ("d", "a"),
                          ("e", "b"), ("e", "c"), ("e", "d")]),
    "pentagon": ("abcde", [("b", "a"), ("d", "a"), ("c", "b"),
                           ("e", "c"), ("e", "d")]),
    "b3": ("abcdefgh", [("b", "a"), ("c", "a"), ("d", "a"),
                        ("e", "b"), ("f", "b"), ("e", "c"), ("g", "c"),
                        ("f", "d"), ("g", "d"),
                        ("h", "e"), ("h", "f"), ("h", "g")]),
    "c2": ("abcdefg", [("b", "a"), ("c", "a"), ("d", "b"), ("d", "c"),
                       ("e", "d"), ("f", "d"), ("g", "e"), ("g", "f")]),
}


def catalog(name: str) -> Lattice:
    """Return a named lattice.

    Accepted names: diamond, pentagon, b3, c2, chain:k, boolean:k,
    divisor:n, grid:MxN.
    """
    if name in _FIXED_CATALOG:
        elements, covers = _FIXED_CATALOG[name]
        return build_lattice(list(elements), covers)
    head, sep, arg = name.partition(":")
    if not sep:
        raise UnknownName(f"unknown lattice name {name!r}")
    try:
        if head == "chain":
            k = int(arg)
            if k < 0:
                raise ValueError
            return _chain(k)
        if head == "boolean":
            k = int(arg)
            if k < 1:
                raise ValueError
            return _boolean(k)
        if head == "divisor":
            n = int(arg)
            if n < 1:
                raise ValueError
            return _divisor(n)
        if head == "grid":
            m_s, x, n_s = arg.partition("x")
            if not x:
                raise ValueError
            m, n = int(m_s), int(n_s)
            if m < 1 or n < 1:
                raise ValueError
            return _grid(m, n)
    except ValueError:
        raise UnknownName(f"invalid parameter in lattice name {name!r}") from None
    raise UnknownName(f"unknown lattice name {name!r}")


CATALOG_PATTERNS = ("diamond", "pentagon", "b3", "c2")


# ---------------------------------------------------------------------------
# Structural predicates


def is_modular(lattice: Lattice) -> bool:
    """Exhaustive check of the modular law: x <= b implies x v (a ^ b) = (x v a) ^ b."""
    n = len(lattice)
    up = lattice._up
    meet = lattice._meet
    join = lattice._join
    for x in range(n):
        for b in range(n):
            if not up[x] >> b & 1:
                continue
            jx = join[x]
            for a in range(n):
                if jx[meet[a][b]] != meet[jx[a]][b]:
                    return False
    return True


def is_distributive(lattice: Lattice) -> bool:
    """Exhaustive check of x ^ (y v z) = (x ^ y) v (x ^ z) over all triples."""
    n = len(lattice)
    meet = lattice._meet
    join = lattice._join
    ok = True
    for x in range(n):
        mx = meet[x]
        for y in range(n):
            for z in range(n):
                if mx[join[y][z]] != join[mx[y]][mx[z]]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    # The dual law is equivalent in any lattice; cross-check both it and the
    # "modular with no diamond sublattice" characterization.
    dual = True
    for x in range(n):
        jx = join[x]
        for y in range(n):
            for z in range(n):
                if jx[meet[y][z]] != meet[jx[y]][jx[z]]:
                    dual = False
                    break
            if not dual:
                break
        if not dual:
            break
    assert ok == dual, "distributive law and its dual disagree"
    assert ok == (is_modular(lattice) and find_sublattice(lattice, "diamond") is None)
    return ok


def modular_rank_law(lattice: Lattice, ranks: dict[str, int] | None = None) -> bool:
    """Check rank(p) + rank(q) == rank(p ^ q) + rank(p v q) for all pairs.

    Uses the lattice's own rank function unless an explicit rank map is given;
    non-pure lattices without an explicit map raise NotPure.
    """
    if ranks is None:
        if lattice.rank is None:
            raise NotPure("rank law needs a pure lattice or an explicit rank map")
        ranks = lattice.rank
    r = [ranks[e] for e in lattice.elements]
    n = len(lattice)
    meet = lattice._meet
    join = lattice._join
    for i in range(n):
        for j in range(i + 1, n):
            if r[i] + r[j] != r[meet[i][j]] + r[join[i][j]]:
                return False
    return True


def cut_edges(lattice: Lattice) -> list[tuple[str, str]]:
    """Pairs (a, b) with rank(b) = rank(a) + 1 whose two rank levels are singletons."""
    if lattice.rank is None:
        raise NotPure("cut edges are defined for pure lattices")
    levels: dict[int, list[str]] = {}
    for e, r in lattice.rank.items():
        levels.setdefault(r, []).append(e)
    out = []
    for r in range(max(levels)):
        lo, hi = levels[r], levels.get(r + 1, [])
        if len(lo) == 1 and len(hi) == 1:
            a, b = lo[0], hi[0]
            assert lattice.leq(a, b)
            out.append((a, b))
    return out


def basic_binomials(lattice: Lattice) -> list[Binomial]:
    """One binomial a*b - (a v b)(a ^ b) per unordered incomparable pair.

    Comparable pairs would give the zero binomial and are omitted; the output
    is sorted by element order of the pair.
    """
    out = []
    elems = lattice.elements
    for i, j in combinations(range(len(elems)), 2):
        a, b = elems[i], elems[j]
        if lattice.comparable(a, b):
            continue
        lhs = Monomial.product([a, b])
        rhs = Monomial.product([lattice.join(a, b), lattice.meet(a, b)])
        out.append(Binomial(lhs, rhs))
    return out


# ---------------------------------------------------------------------------
# Sublattice search


def _embedding_plan(pattern: Lattice) -> list[tuple[str, tuple[str, str, str] | None]]:
    """Order the pattern's elements so meet/join-forced ones follow their operands.

    Returns (element, None) for free choices and (element, (op, x, y)) when the
    element equals x op y for already-placed x, y.
    """
    placed: list[str] = []
    plan: list[tuple[str, tuple[str, str, str] | None]] = []
    remaining = list(pattern.elements)
    while remaining:
        forced = None
        for z in remaining:
            for x, y in combinations(placed, 2):
                if pattern.meet(x, y) == z:
                    forced = (z, ("meet", x, y))
                    break
                if pattern.join(x, y) == z:
                    forced = (z, ("join", x, y))
                    break
            if forced:
                break
        if forced is None:
            # Free choice: prefer the element most constrained by placed ones.
            z = max(remaining,
                    key=lambda e: (sum(pattern.comparable(e, p) for p in placed),
                                   -pattern.elements.index(e)))
            forced = (z, None)
        plan.append(forced)
        placed.append(forced[0])
        remaining.remove(forced[0])
    return plan


def find_sublattice(lattice: Lattice, pattern: str) -> dict[str, str] | None:
    """Search for a sublattice of `lattice` isomorphic to a named pattern.

    Returns a map pattern element -> lattice element whose image is closed
    under the ambient meet and join, or None.  Patterns: diamond, pentagon,
    b3, c2.
    """
    if pattern not in CATALOG_PATTERNS:
        raise UnknownName(f"unknown sublattice pattern {pattern!r}")
    pat = catalog(pattern)
    if len(pat) > len(lattice):
        return None
    plan = _embedding_plan(pat)
    image: dict[str, str] = {}
    used: set[str] = set()

    def consistent(z: str, w: str) -> bool:
        for x, img in image.items():
            if pat.leq(x, z) != lattice.leq(img, w):
                return False
            if pat.leq(z, x) != lattice.leq(w, img):
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(plan):
            # Final safety net: verify every pairwise meet and join transports.
            for x, y in combinations(pat.elements, 2):
                if image[pat.meet(x, y)] != lattice.meet(image[x], image[y]):
                    return False
                if image[pat.join(x, y)] != lattice.join(image[x], image[y]):
                    return False
            return True
        z, how = plan[k]
        if how is not None:
            op, x, y = how
            w = (lattice.meet if op == "meet" else lattice.join)(image[x], image[y])
            if w in used or not consistent(z, w):
                return False
            image[z] = w
            used.add(w)
            if extend(k + 1):
                return True
            del image[z]
            used.discard(w)
            return False
        for w in lattice.elements:
            if w in used or not consistent(z, w):
                continue
            image[z] = w
            used.add(w)
            if extend(k + 1):
                return True
            del image[z]
            used.discard(w)
        return False

    if extend(0):
        return dict(image)
    return None


# ---------------------------------------------------------------------------
# Birkhoff machinery and grid embeddings


@dataclass(frozen=True)
class SubPoset:
    """An induced subposet: elements in ambient order plus the strict relation."""

    elements: tuple[str, ...]
    less: frozenset[tuple[str, str]]

    def leq(self, x: str, y: str) -> bool:
        return x == y or (x, y) in self.less

    def __len__(self) -> int:
        return len(self.elements)


def count_downsets(poset: SubPoset) -> int:
    below: dict[str, frozenset[str]] = {
        e: frozenset(x for x in poset.elements if poset.leq(x, e)) for e in poset.elements}
    above: dict[str, frozenset[str]] = {
        e: frozenset(x for x in poset.elements if poset.leq(e, x)) for e in poset.elements}
    memo: dict[frozenset[str], int] = {}

    def count(alive: frozenset[str]) -> int:
        if not alive:
            return 1
        got = memo.get(alive)
        if got is not None:
            return got
        x = next(iter(sorted(alive)))
        total = count(alive - above[x]) + count(alive - below[x])
        memo[alive] = total
        return total

    return count(frozenset(poset.elements))


def join_irreducibles(lattice: Lattice) -> SubPoset:
    """Induced poset of elements with exactly one lower cover.

    Requires a distributive lattice; the Birkhoff count of downsets is
    asserted to equal the lattice size.
    """
    if not is_distributive(lattice):
        raise NotDistributive("join-irreducibles are used for distributive lattices only")
    elems = tuple(e for e in lattice.elements if len(lattice.lower_covers(e)) == 1)
    less = frozenset((x, y) for x in elems for y in elems
                     if x != y and lattice.leq(x, y))
    poset = SubPoset(elems, less)
    assert count_downsets(poset) == len(lattice), "Birkhoff downset count mismatch"
    return poset


def _has_wide_antichain(poset: SubPoset) -> bool:
    elems = poset.elements
    for x, y, z in combinations(elems, 3):
        if (not poset.leq(x, y) and not poset.leq(y, x)
                and not poset.leq(x, z) and not poset.leq(z, x)
                and not poset.leq(y, z) and not poset.leq(z, y)):
            return True
    return False


def _two_chain_partition(poset: SubPoset) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Split a width <= 2 poset into at most two chains (Dilworth via matching)."""
    elems = poset.elements
    n = len(elems)
    succ = [[j for j in range(n) if i != j and poset.leq(elems[i], elems[j])]
            for i in range(n)]
    match_to: list[int | None] = [None] * n  # right side: j -> i

    def augment(i: int, seen: set[int]) -> bool:
        for j in succ[i]:
            if j in seen:
                continue
            seen.add(j)
            if match_to[j] is None or augment(match_to[j], seen):
                match_to[j] = i
                return True
        return False

    for i in range(n):
        augment(i, set())

    next_of: dict[int, int] = {}
    has_prev = set()
    for j, i in enumerate(match_to):
        if i is not None:
            next_of[i] = j
            has_prev.add(j)
    chains = []
    for i in range(n):
        if i in has_prev:
            continue
        chain = [i]
        while chain[-1] in next_of:
            chain.append(next_of[chain[-1]])
        chains.append(tuple(elems[k] for k in chain))
    if len(chains) > 2:
        raise AssertionError("chain partition wider than the checked width")
    chains.sort(key=lambda ch: elems.index(ch[0]) if ch else n)
    first = chains[0] if chains else ()
    second = chains[1] if len(chains) > 1 else ()
    return first, second


@dataclass(frozen=True)
class PlanarEmbedding:
    """Coordinates of a lattice inside the componentwise-ordered grid."""

    coords: dict[str, tuple[int, int]]
    m: int
    n: int


def planar_embedding(lattice: Lattice) -> PlanarEmbedding | None:
    """Embed a distributive lattice whose join-irreducible poset has width <= 2.

    Each element maps to the pair of sizes of its join-irreducible downset
    intersected with the two chains; returns None when no such embedding exists.
    """
    if not is_distributive(lattice):
        return None
    poset = join_irreducibles(lattice)
    if _has_wide_antichain(poset):
        return None
    chain1, chain2 = _two_chain_partition(poset)
    coords = {}
    for e in lattice.elements:
        i = sum(1 for v in chain1 if lattice.leq(v, e))
        j = sum(1 for v in chain2 if lattice.leq(v, e))
        coords[e] = (i, j)
    m = max(i for i, _ in coords.values())
    n = max(j for _, j in coords.values())

    assert len(set(coords.values())) == len(lattice)
    assert coords[lattice.bottom] == (0, 0)
    for a in lattice.elements:
        for b in lattice.elements:
            cw = coords[a][0] <= coords[b][0] and coords[a][1] <= coords[b][1]
            assert cw == lattice.leq(a, b)
    for a in lattice.elements:
        for b in lattice.elements:
            ca, cb = coords[a], coords[b]
            assert coords[lattice.meet(a, b)] == (min(ca[0], cb[0]), min(ca[1], cb[1]))
            assert coords[lattice.join(a, b)] == (max(ca[0], cb[0]), max(ca[1], cb[1]))
    return PlanarEmbedding(coords, m, n)


# ---------------------------------------------------------------------------
# Products and file format


def product_lattice(left: Lattice, right: Lattice,
                    namer=lambda x, y: f"{x}_{y}") -> Lattice:
    """Componentwise product; covers change exactly one coordinate by a cover."""
    names = {}
    elements = []
    for x in left.elements:
        for y in right.elements:
            name = namer(x, y)
            names[(x, y)] = name
            elements.append(name)
    covers = []
    for (lo, hi) in left.covers:
        for y in right.elements:
            covers.append((names[(lo, y)], names[(hi, y)]))
    for x in left.elements:
        for (lo, hi) in right.covers:
            covers.append((names[(x, lo)], names[(x, hi)]))
    return build_lattice(elements, covers)


def lattice_to_dict(lattice: Lattice) -> dict:
    return {"elements": list(lattice.elements),
            "covers": [list(c) for c in lattice.covers]}


def lattice_from_dict(data: dict, *, normalize: bool = False) -> Lattice:
    if not isinstance(data, dict):
        raise LatticeError("lattice file must hold a JSON object")
    elements = data.get("elements")
    covers = data.get("covers")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise LatticeError('"elements" must be a list of strings')
    if not isinstance(covers, list):
        raise LatticeError('"covers" must be a list of [lower, upper] pairs')
    for e in elements:
        if not _NAME_RE.match(e):
            raise LatticeError(f"element name {e!r} must match [A-Za-z0-9_]+")
    pair_list = []
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            raise LatticeError(f"bad cover entry {c!r}")
        pair_list.append((c[0], c[1]))
    return build_lattice(elements, pair_list, normalize=normalize)


def load_lattice(path: str, *, normalize: bool = False) -> Lattice:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LatticeError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return lattice_from_dict(data, normalize=normalize)
